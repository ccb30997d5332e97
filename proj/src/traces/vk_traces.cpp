#include "hecke/vk_traces.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace hecke {

  namespace {
    void require_q_not_one(TraceParams const& params) {
      if (params.q.is_one()) {
        throw ParamError("the closed formula has a removable singularity at q = 1; "
                         "use the Thoma evaluation instead");
      }
    }

    void require_gamma_zero(TraceParams const& params) {
      if (!params.gamma.is_zero()) {
        throw ParamError("this evaluation is only defined for gamma = 0, got gamma = "
                         + params.gamma.to_string());
      }
    }

    Rational factorial(unsigned n) {
      Rational out = 1;
      for (unsigned k = 2; k <= n; ++k) {
        out *= Rational(static_cast<long>(k));
      }
      return out;
    }

    // Visits every vector (e_0, ..., e_{slots-1}) of naturals with sum `total`.
    void for_each_composition(std::size_t total, std::size_t slots,
                              std::function<void(std::vector<unsigned> const&)> const& visit) {
      std::vector<unsigned> parts(slots, 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t left) {
        if (at + 1 == slots) {
          parts[at] = static_cast<unsigned>(left);
          visit(parts);
          return;
        }
        for (std::size_t e = 0; e <= left; ++e) {
          parts[at] = static_cast<unsigned>(e);
          rec(at + 1, left - e);
        }
      };
      if (slots == 0) {
        if (total == 0) {
          visit(parts);
        }
        return;
      }
      rec(0, total);
    }
  }  // namespace

  std::size_t MultiplicityVector::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      w += k * counts[k];
    }
    return w;
  }

  Rational super_newton(std::size_t k, TraceParams const& params) {
    if (k == 0) {
      throw std::invalid_argument("super-Newton sums start at k = 1");
    }
    int const e = static_cast<int>(k);
    Rational sum = 0;
    for (auto const& a : params.alpha) {
      sum += a.pow(e);
    }
    Rational beta_sum = 0;
    for (auto const& b : params.beta) {
      beta_sum += b.pow(e);
    }
    return k % 2 == 1 ? sum + beta_sum : sum - beta_sum;
  }

  std::vector<MultiplicityVector> enumerate_multiplicities(std::size_t m) {
    if (m == 0) {
      throw std::invalid_argument("enumerate_multiplicities needs m >= 1");
    }
    std::vector<MultiplicityVector> out;
    MultiplicityVector current{std::vector<unsigned>(m + 1, 0)};
    // choose mu_k for k = m, m-1, ..., 1 against the remaining weight
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
      if (k == 1) {
        current.counts[1] = static_cast<unsigned>(left);
        out.push_back(current);
        return;
      }
      for (std::size_t mu = 0; mu * k <= left; ++mu) {
        current.counts[k] = static_cast<unsigned>(mu);
        rec(k - 1, left - mu * k);
      }
      current.counts[k] = 0;
    };
    rec(m, m);
    return out;
  }

  Rational vk_zeta_m(std::size_t m, TraceParams const& params) {
    require_q_not_one(params);
    if (m == 0) {
      throw std::invalid_argument("zeta_m needs m >= 1");
    }
    Rational const& q = params.q;
    std::vector<Rational> newton(m + 1);
    for (std::size_t k = 2; k <= m; ++k) {
      newton[k] = super_newton(k, params);
    }
    Rational sum = 0;
    for (auto const& mu : enumerate_multiplicities(m)) {
      Rational term = 1;
      for (std::size_t k = 1; k <= m; ++k) {
        unsigned const mk = mu[k];
        if (mk == 0) {
          continue;
        }
        int const e = static_cast<int>(mk);
        term *= (q.pow(static_cast<int>(k)) - 1).pow(e);
        term /= Rational(static_cast<long>(k)).pow(e) * factorial(mk);
        if (k >= 2) {
          term *= newton[k].pow(e);
        }
      }
      sum += term;
    }
    return sum / (q - 1);
  }

  Rational thoma_value(std::size_t m, TraceParams const& params) {
    if (m == 0) {
      throw std::invalid_argument("zeta_m needs m >= 1");
    }
    return m == 1 ? Rational(1) : super_newton(m, params);
  }

  Rational trace_zeta_lambda(PartitionSpec const& nu, TraceParams const& params) {
    Rational out = 1;
    for (std::size_t part : nu.parts()) {
      out *= params.q.is_one() ? thoma_value(part, params) : vk_zeta_m(part, params);
    }
    return out;
  }

  PowerSeries generating_series(TraceParams const& params, std::size_t order) {
    require_gamma_zero(params);
    Rational const& q = params.q;
    PowerSeries out = PowerSeries::one(order);
    for (auto const& b : params.beta) {
      if (!b.is_zero()) {
        out = series_mul(out, series_linear_fraction(b * q, b, order));
      }
    }
    for (auto const& a : params.alpha) {
      if (!a.is_zero()) {
        out = series_mul(out, series_linear_fraction(-a, -(a * q), order));
      }
    }
    return out;
  }

  PowerSeries series_from_traces(TraceParams const& params, std::size_t order) {
    require_gamma_zero(params);
    require_q_not_one(params);
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = 1;
    Rational const scale = params.q - 1;
    for (std::size_t m = 1; m <= order; ++m) {
      coeffs[m] = scale * (m == 1 ? Rational(1) : vk_zeta_m(m, params));
    }
    return PowerSeries(order, std::move(coeffs));
  }

  Rational delta_eigenvalue(std::span<int const> indices, Rational const& q) {
    if (indices.empty()) {
      throw std::invalid_argument("delta needs a nonempty tuple");
    }
    Rational out = 1;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] == 0) {
        throw std::invalid_argument("delta tuple entries must be nonzero");
      }
      if (k == 0) {
        continue;
      }
      int const prev = indices[k - 1];
      int const cur = indices[k];
      if (cur < prev) {
        throw std::invalid_argument("delta tuple must be nondecreasing");
      }
      // one factor per adjacent pair, exactly the diagonal part of R
      if (cur > prev) {
        out *= q - 1;
      } else if (cur < 0) {
        out = -out;
      } else {
        out *= q;
      }
    }
    return out;
  }

  Rational zeta_direct_sum(std::size_t m, TraceParams const& params) {
    require_gamma_zero(params);
    if (m == 0) {
      throw std::invalid_argument("zeta_m needs m >= 1");
    }
    WeightFunction const weights(params);
    std::size_t const s = weights.size();
    Rational sum = 0;
    // nondecreasing tuples over the support <-> multisets of size m
    std::vector<int> tuple(m);
    std::function<void(std::size_t, std::size_t, Rational const&)> rec =
        [&](std::size_t at, std::size_t min_pos, Rational const& weight) {
          if (at == m) {
            sum += delta_eigenvalue(tuple, params.q) * weight;
            return;
          }
          for (std::size_t p = min_pos; p < s; ++p) {
            tuple[at] = weights.support()[p];
            rec(at + 1, p, weight * weights.weights()[p]);
          }
        };
    rec(0, 0, Rational(1));
    return sum;
  }

  Rational zeta_grouped_sum(std::size_t m, TraceParams const& params) {
    require_gamma_zero(params);
    require_q_not_one(params);
    if (m == 0) {
      throw std::invalid_argument("zeta_m needs m >= 1");
    }
    Rational const& q = params.q;
    std::vector<Rational> bases;    // -beta_i, then q alpha_j
    std::vector<Rational> factors;  // (1 - q), then (1 - 1/q)
    for (auto const& b : params.beta) {
      if (!b.is_zero()) {
        bases.push_back(-b);
        factors.push_back(Rational(1) - q);
      }
    }
    for (auto const& a : params.alpha) {
      if (!a.is_zero()) {
        bases.push_back(q * a);
        factors.push_back(Rational(1) - q.inverse());
      }
    }
    Rational sum = 0;
    for_each_composition(m, bases.size(), [&](std::vector<unsigned> const& exps) {
      Rational term = 1;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0) {
          term *= bases[i].pow(static_cast<int>(exps[i])) * factors[i];
        }
      }
      sum += term;
    });
    return sum / (q - 1);
  }

  Rational zeta_via_diagonal(std::size_t m, TraceParams const& params) {
    Rational const direct = zeta_direct_sum(m, params);
    Rational const grouped = zeta_grouped_sum(m, params);
    if (direct != grouped) {
      throw std::logic_error("diagonal sums disagree for m = " + std::to_string(m) + ": "
                             + direct.to_string() + " vs " + grouped.to_string());
    }
    return direct;
  }

}  // namespace hecke
