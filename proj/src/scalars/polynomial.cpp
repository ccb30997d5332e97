#include "hecke/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

  QPolynomial::QPolynomial(Rational constant) {
    if (!constant.is_zero()) {
      coeffs_.push_back(std::move(constant));
    }
  }

  QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  QPolynomial QPolynomial::q() { return QPolynomial(std::vector<Rational>{0, 1}); }

  std::optional<std::size_t> QPolynomial::degree() const {
    if (coeffs_.empty()) {
      return std::nullopt;
    }
    return coeffs_.size() - 1;
  }

  Rational QPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational QPolynomial::evaluate(Rational const& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + *it;
    }
    return acc;
  }

  std::string QPolynomial::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      os << (k ? "," : "") << coeffs_[k];
    }
    os << ']';
    return os.str();
  }

  void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
      coeffs_.pop_back();
    }
  }

  QPolynomial& QPolynomial::operator+=(QPolynomial const& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
      coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
  }

  QPolynomial& QPolynomial::operator-=(QPolynomial const& rhs) { return *this += -rhs; }

  QPolynomial& QPolynomial::operator*=(QPolynomial const& rhs) {
    *this = *this * rhs;
    return *this;
  }

  QPolynomial operator*(QPolynomial const& lhs, QPolynomial const& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
      return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return QPolynomial(std::move(out));
  }

  QPolynomial QPolynomial::operator-() const {
    QPolynomial out = *this;
    for (auto& c : out.coeffs_) {
      c = -c;
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, QPolynomial const& p) { return os << p.to_string(); }

}  // namespace hecke
