#ifndef HECKE_RATIONAL_HPP
#define HECKE_RATIONAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hecke {

  /// Arbitrary-precision rational number, always kept in lowest terms with a
  /// positive denominator. Thin value wrapper over GMP's mpq_class.
  class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic literals
    Rational(long num, long den);
    Rational(mpz_class const& num, mpz_class const& den);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    mpq_class const& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational pow(int exponent) const;
    Rational inverse() const;
    Rational abs() const;

    /// Exact square root when the value is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(Rational const& rhs);
    Rational& operator-=(Rational const& rhs);
    Rational& operator*=(Rational const& rhs);
    Rational& operator/=(Rational const& rhs);

    friend Rational operator+(Rational lhs, Rational const& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, Rational const& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, Rational const& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, Rational const& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(Rational const& a, Rational const& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
      int c = cmp(a.value_, b.value_);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class value_{0};
  };

  std::ostream& operator<<(std::ostream& os, Rational const& r);

}  // namespace hecke

#endif  // HECKE_RATIONAL_HPP
