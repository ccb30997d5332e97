#include "hecke/power_series.hpp"

#include <stdexcept>
#include <string>

namespace hecke {

  namespace {
    void require_same_order(PowerSeries const& a, PowerSeries const& b) {
      if (a.order() != b.order()) {
        throw std::invalid_argument("power series truncation orders differ: "
                                    + std::to_string(a.order()) + " vs "
                                    + std::to_string(b.order()));
      }
    }
  }  // namespace

  PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

  PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != order + 1) {
      throw std::invalid_argument("power series of order " + std::to_string(order) + " needs "
                                  + std::to_string(order + 1) + " coefficients");
    }
  }

  PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  PowerSeries series_mul(PowerSeries const& a, PowerSeries const& b) {
    require_same_order(a, b);
    std::size_t const m = a.order();
    std::vector<Rational> out(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      if (a[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; i + j <= m; ++j) {
        out[i + j] += a[i] * b[j];
      }
    }
    return PowerSeries(m, std::move(out));
  }

  PowerSeries series_add(PowerSeries const& a, PowerSeries const& b) {
    require_same_order(a, b);
    std::vector<Rational> out = a.coefficients();
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] += b[k];
    }
    return PowerSeries(a.order(), std::move(out));
  }

  PowerSeries series_linear_fraction(Rational const& b, Rational const& c, std::size_t order) {
    std::vector<Rational> out(order + 1);
    out[0] = 1;
    // degree k >= 1: (-c)^(k-1) (b - c)
    Rational term = b - c;
    Rational const ratio = -c;
    for (std::size_t k = 1; k <= order; ++k) {
      out[k] = term;
      term *= ratio;
    }
    return PowerSeries(order, std::move(out));
  }

  std::ostream& operator<<(std::ostream& os, PowerSeries const& s) {
    os << '[';
    for (std::size_t k = 0; k <= s.order(); ++k) {
      os << (k ? ", " : "") << s[k];
    }
    return os << ']';
  }

}  // namespace hecke
