#include "hecke/tensor_state.hpp"

#include <sstream>

namespace hecke {

  namespace {
    void print_indices(std::ostream& os, std::vector<int> const& idx) {
      os << '[';
      for (std::size_t k = 0; k < idx.size(); ++k) {
        os << (k ? "," : "") << idx[k];
      }
      os << ']';
    }
  }  // namespace

  void TensorState::add(PureTensor const& basis, RootRing const& coeff) {
    if (coeff.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(basis, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  TensorState& TensorState::operator+=(TensorState const& rhs) {
    for (auto const& [basis, coeff] : rhs.terms_) {
      add(basis, coeff);
    }
    return *this;
  }

  TensorState& TensorState::operator*=(Rational const& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [basis, coeff] : terms_) {
      coeff *= scalar;
    }
    return *this;
  }

  std::string TensorState::dump() const {
    std::ostringstream os;
    for (auto const& [basis, coeff] : terms_) {
      os << "I=";
      print_indices(os, basis.v);
      os << " J=";
      print_indices(os, basis.w);
      os << " coeff=" << coeff << '\n';
    }
    return os.str();
  }

  RootRing inner(TensorState const& a, TensorState const& b) {
    TensorState const& small = a.size() <= b.size() ? a : b;
    TensorState const& large = a.size() <= b.size() ? b : a;
    RootRing sum;
    for (auto const& [basis, coeff] : small.terms()) {
      auto it = large.terms().find(basis);
      if (it != large.terms().end()) {
        sum += coeff * it->second;
      }
    }
    return sum;
  }

}  // namespace hecke
