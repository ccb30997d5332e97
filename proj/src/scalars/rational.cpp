#include "hecke/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

  namespace {
    bool parse_integer(std::string_view text, mpz_class& out) {
      if (text.empty()) {
        return false;
      }
      std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
      if (start == text.size()) {
        return false;
      }
      for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          return false;
        }
      }
      std::string digits(text[0] == '+' ? text.substr(1) : text);
      return out.set_str(digits, 10) == 0;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational::Rational(mpz_class const& num, mpz_class const& den) {
    if (den == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    value_.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    if (slash == std::string_view::npos) {
      if (!parse_integer(text, num)) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
      }
    } else {
      auto den_text = trim(text.substr(slash + 1));
      if (!parse_integer(trim(text.substr(0, slash)), num) || !parse_integer(den_text, den)
          || den_text.front() == '-') {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
      }
    }
    return Rational(num, den);
  }

  Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
      return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
  }

  Rational Rational::inverse() const {
    if (is_zero()) {
      throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
  }

  Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

  std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) {
      return std::nullopt;
    }
    mpz_class const& num = value_.get_num();
    mpz_class const& den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
  }

  std::string Rational::to_string() const {
    if (is_integer()) {
      return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& Rational::operator+=(Rational const& rhs) {
    value_ += rhs.value_;
    return *this;
  }

  Rational& Rational::operator-=(Rational const& rhs) {
    value_ -= rhs.value_;
    return *this;
  }

  Rational& Rational::operator*=(Rational const& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  Rational& Rational::operator/=(Rational const& rhs) {
    if (rhs.is_zero()) {
      throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
  }

  Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

  std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.to_string(); }

}  // namespace hecke
