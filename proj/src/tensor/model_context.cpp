#include "hecke/model_context.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hecke {

  ModelContext::ModelContext(TraceParams params, std::size_t slots, std::vector<int> padding)
      : params_(std::move(params)), slots_(slots), padding_(std::move(padding)) {
    WeightFunction const weights(params_);
    if (slots_ == 0) {
      throw std::invalid_argument("the tensor model needs at least one slot");
    }
    std::vector<SymbolTable::Binding> bindings{{"sqrt_q", params_.q}};
    for (std::size_t k = 0; k < weights.size(); ++k) {
      bindings.push_back({"sqrt_a" + std::to_string(k + 1), weights.weights()[k]});
    }
    table_ = SymbolTable::make(std::move(bindings));
    sqrt_q_ = RootRing::sqrt_of(table_, 0);

    support_ = weights.support();
    for (int extra : padding_) {
      if (extra == 0 || std::find(support_.begin(), support_.end(), extra) != support_.end()) {
        throw std::invalid_argument("padding index " + std::to_string(extra)
                                    + " must be nonzero and outside the weighted support");
      }
      support_.push_back(extra);
    }
    std::sort(support_.begin(), support_.end());
    for (int index : support_) {
      Rational const w = weights.weight(index);
      weights_.push_back(w);
      if (w.is_zero()) {
        sqrt_weights_.emplace_back(table_, Rational(0));
      } else {
        sqrt_weights_.push_back(RootRing::sqrt_of(table_, weights.position(index) + 1));
      }
    }
  }

  std::size_t ModelContext::position(int index) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), index);
    if (it == support_.end() || *it != index) {
      throw std::out_of_range("index " + std::to_string(index) + " is outside the model support");
    }
    return static_cast<std::size_t>(it - support_.begin());
  }

  ModelContext ModelContext::with_slots(std::size_t slots) const {
    return ModelContext(params_, slots, padding_);
  }

}  // namespace hecke
