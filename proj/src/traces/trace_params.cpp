#include "hecke/trace_params.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hecke {

  namespace {
    void check_sequence(std::vector<Rational> const& seq, char const* name) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].sign() < 0) {
          throw ParamError(std::string(name) + "_" + std::to_string(i + 1)
                           + " is negative: " + seq[i].to_string());
        }
        if (i > 0 && seq[i] > seq[i - 1]) {
          throw ParamError(std::string(name) + " must be nonincreasing");
        }
      }
    }
  }  // namespace

  TraceParams TraceParams::make(Rational q, std::vector<Rational> alpha, std::vector<Rational> beta,
                                Rational gamma) {
    TraceParams p{std::move(q), std::move(alpha), std::move(beta), std::move(gamma)};
    p.validate();
    return p;
  }

  void TraceParams::validate() const {
    if (q.sign() <= 0) {
      throw ParamError("q must be positive, got " + q.to_string());
    }
    check_sequence(alpha, "alpha");
    check_sequence(beta, "beta");
    if (gamma.sign() < 0) {
      throw ParamError("gamma is negative: " + gamma.to_string());
    }
    Rational total = gamma;
    for (auto const& a : alpha) {
      total += a;
    }
    for (auto const& b : beta) {
      total += b;
    }
    if (!total.is_one()) {
      throw ParamError("sum(alpha) + sum(beta) + gamma must equal 1; it is " + total.to_string()
                       + " (sum - 1 = " + (total - Rational(1)).to_string() + ")");
    }
  }

  std::string TraceParams::to_json() const {
    auto list = [](std::vector<Rational> const& v) {
      nlohmann::json out = nlohmann::json::array();
      for (auto const& r : v) {
        out.push_back(r.to_string());
      }
      return out;
    };
    nlohmann::ordered_json j;
    j["q"] = q.to_string();
    j["alpha"] = list(alpha);
    j["beta"] = list(beta);
    j["gamma"] = gamma.to_string();
    return j.dump();
  }

  TraceParams TraceParams::from_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParamError(std::string("malformed parameter record: ") + e.what());
    }
    auto scalar = [](nlohmann::json const& v) {
      if (v.is_string()) {
        return Rational::parse(v.get<std::string>());
      }
      if (v.is_number_integer()) {
        return Rational(v.get<long>());
      }
      throw ParamError("parameter values must be rational strings such as \"1/2\"");
    };
    auto list = [&](char const* key) {
      std::vector<Rational> out;
      if (j.contains(key)) {
        for (auto const& v : j.at(key)) {
          out.push_back(scalar(v));
        }
      }
      return out;
    };
    if (!j.is_object() || !j.contains("q")) {
      throw ParamError("parameter record needs at least a \"q\" field");
    }
    return make(scalar(j.at("q")), list("alpha"), list("beta"),
                j.contains("gamma") ? scalar(j.at("gamma")) : Rational(0));
  }

  std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      out.push_back(Rational::parse(item));
    }
    return out;
  }

  WeightFunction::WeightFunction(TraceParams const& params) {
    if (!params.gamma.is_zero()) {
      throw ParamError("the tensor model requires gamma = 0, got " + params.gamma.to_string());
    }
    for (std::size_t j = params.beta.size(); j-- > 0;) {
      if (!params.beta[j].is_zero()) {
        support_.push_back(-static_cast<int>(j + 1));
        weights_.push_back(params.beta[j]);
      }
    }
    for (std::size_t j = 0; j < params.alpha.size(); ++j) {
      if (!params.alpha[j].is_zero()) {
        support_.push_back(static_cast<int>(j + 1));
        weights_.push_back(params.alpha[j]);
      }
    }
  }

  Rational WeightFunction::weight(int index) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), index);
    if (it == support_.end() || *it != index) {
      return Rational(0);
    }
    return weights_[static_cast<std::size_t>(it - support_.begin())];
  }

  std::size_t WeightFunction::position(int index) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), index);
    if (it == support_.end() || *it != index) {
      throw std::out_of_range("index " + std::to_string(index) + " is not in the support");
    }
    return static_cast<std::size_t>(it - support_.begin());
  }

}  // namespace hecke
