#ifndef HECKE_POWER_SERIES_HPP
#define HECKE_POWER_SERIES_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

  /// Formal power series in z truncated at a fixed order M: exactly the
  /// coefficients of z^0 .. z^M are stored. Series of different orders never
  /// combine silently.
  class PowerSeries {
   public:
    /// The zero series of order `order`.
    explicit PowerSeries(std::size_t order);
    /// Throws std::invalid_argument unless coefficients.size() == order + 1.
    PowerSeries(std::size_t order, std::vector<Rational> coefficients);

    /// The constant series 1.
    static PowerSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    Rational const& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::vector<Rational> const& coefficients() const { return coeffs_; }

    friend bool operator==(PowerSeries const&, PowerSeries const&) = default;

   private:
    std::vector<Rational> coeffs_;
  };

  /// Cauchy product truncated at the common order; throws
  /// std::invalid_argument on mismatched orders.
  PowerSeries series_mul(PowerSeries const& a, PowerSeries const& b);

  /// Coefficientwise sum; same order rule as series_mul.
  PowerSeries series_add(PowerSeries const& a, PowerSeries const& b);

  /// Expansion of (1 + b z) / (1 + c z) to order M.
  PowerSeries series_linear_fraction(Rational const& b, Rational const& c, std::size_t order);

  std::ostream& operator<<(std::ostream& os, PowerSeries const& s);

}  // namespace hecke

#endif  // HECKE_POWER_SERIES_HPP
