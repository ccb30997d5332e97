#ifndef HECKE_POLYNOMIAL_HPP
#define HECKE_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

  /// Univariate polynomial in the Hecke parameter q with rational
  /// coefficients, lowest degree first. Trailing zeros are always trimmed, so
  /// the zero polynomial has an empty coefficient list.
  class QPolynomial {
   public:
    QPolynomial() = default;
    QPolynomial(Rational constant);  // NOLINT: constants promote implicitly
    explicit QPolynomial(std::vector<Rational> coefficients);

    /// The indeterminate q itself.
    static QPolynomial q();

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(std::size_t k) const;
    std::vector<Rational> const& coefficients() const { return coeffs_; }

    Rational evaluate(Rational const& at) const;

    /// "[c0,c1,...]" with rationals in "p/q" form.
    std::string to_string() const;

    QPolynomial& operator+=(QPolynomial const& rhs);
    QPolynomial& operator-=(QPolynomial const& rhs);
    QPolynomial& operator*=(QPolynomial const& rhs);

    friend QPolynomial operator+(QPolynomial lhs, QPolynomial const& rhs) { return lhs += rhs; }
    friend QPolynomial operator-(QPolynomial lhs, QPolynomial const& rhs) { return lhs -= rhs; }
    friend QPolynomial operator*(QPolynomial const& lhs, QPolynomial const& rhs);
    QPolynomial operator-() const;

    friend bool operator==(QPolynomial const&, QPolynomial const&) = default;

   private:
    void trim();

    std::vector<Rational> coeffs_;
  };

  std::ostream& operator<<(std::ostream& os, QPolynomial const& p);

}  // namespace hecke

#endif  // HECKE_POLYNOMIAL_HPP
