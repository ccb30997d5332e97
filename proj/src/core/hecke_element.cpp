#include "hecke/hecke_element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

  HeckeElement::HeckeElement(std::size_t rank) : rank_(std::max<std::size_t>(rank, 1)) {}

  HeckeElement HeckeElement::unit(std::size_t rank) {
    HeckeElement x(rank);
    x.terms_.emplace(Permutation(x.rank_), QPolynomial(Rational(1)));
    return x;
  }

  HeckeElement HeckeElement::basis(Permutation const& w, QPolynomial coeff) {
    HeckeElement x(w.rank());
    x.add_term(w.promoted(x.rank_), coeff);
    return x;
  }

  HeckeElement HeckeElement::generator(std::size_t m, std::size_t rank) {
    return basis(Permutation::simple(m, rank));
  }

  QPolynomial HeckeElement::coefficient(Permutation const& w) const {
    if (w.rank() > rank_) {
      return {};
    }
    auto it = terms_.find(w.promoted(rank_));
    return it == terms_.end() ? QPolynomial() : it->second;
  }

  void HeckeElement::add_term(Permutation const& w, QPolynomial const& coeff) {
    if (w.rank() != rank_) {
      throw std::invalid_argument("basis permutation rank " + std::to_string(w.rank())
                                  + " does not match element rank " + std::to_string(rank_));
    }
    if (coeff.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  HeckeElement HeckeElement::promoted(std::size_t rank) const {
    if (rank < rank_) {
      throw std::invalid_argument("cannot demote a Hecke element");
    }
    if (rank == rank_) {
      return *this;
    }
    HeckeElement out(rank);
    for (auto const& [w, c] : terms_) {
      out.terms_.emplace(w.promoted(rank), c);
    }
    return out;
  }

  std::string HeckeElement::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto const& [w, c] : terms_) {
      os << (first ? "" : ",") << '(' << w << ',' << c << ')';
      first = false;
    }
    os << ']';
    return os.str();
  }

  HeckeElement& HeckeElement::operator+=(HeckeElement const& rhs) {
    std::size_t const n = std::max(rank_, rhs.rank_);
    if (n > rank_) {
      *this = promoted(n);
    }
    HeckeElement const other = rhs.promoted(n);
    for (auto const& [w, c] : other.terms_) {
      add_term(w, c);
    }
    return *this;
  }

  HeckeElement& HeckeElement::operator-=(HeckeElement const& rhs) {
    return *this += rhs * QPolynomial(Rational(-1));
  }

  HeckeElement& HeckeElement::operator*=(QPolynomial const& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) {
      c *= scalar;
    }
    return *this;
  }

  bool operator==(HeckeElement const& x, HeckeElement const& y) {
    std::size_t const n = std::max(x.rank_, y.rank_);
    return x.promoted(n).terms_ == y.promoted(n).terms_;
  }

  HeckeElement gen_mul_left(std::size_t m, HeckeElement const& x) {
    if (m < 1 || m + 1 > x.rank()) {
      throw std::out_of_range("generator index " + std::to_string(m) + " out of range for rank "
                              + std::to_string(x.rank()));
    }
    QPolynomial const q = QPolynomial::q();
    QPolynomial const q_minus_one = q - QPolynomial(Rational(1));
    HeckeElement out(x.rank());
    for (auto const& [w, c] : x.terms()) {
      Permutation const sw = w.left_simple(m);
      if (!w.has_left_descent(m)) {
        out.add_term(sw, c);
      } else {
        out.add_term(w, q_minus_one * c);
        out.add_term(sw, q * c);
      }
    }
    return out;
  }

  HeckeElement mul(HeckeElement const& x, HeckeElement const& y) {
    std::size_t const n = std::max(x.rank(), y.rank());
    HeckeElement const right = y.promoted(n);
    HeckeElement const left = x.promoted(n);
    HeckeElement out(n);
    for (auto const& [w, c] : left.terms()) {
      auto const word = reduced_word(w);
      HeckeElement partial = right;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        partial = gen_mul_left(*it, partial);
      }
      out += partial * c;
    }
    return out;
  }

  HeckeElement operator*(HeckeElement const& x, HeckeElement const& y) { return mul(x, y); }

  HeckeElement star(HeckeElement const& x) {
    // coefficients are real polynomials in a real q, so conjugation is trivial
    return transpose(x);
  }

  HeckeElement transpose(HeckeElement const& x) {
    HeckeElement out(x.rank());
    for (auto const& [w, c] : x.terms()) {
      out.add_term(w.inverse(), c);
    }
    return out;
  }

  HeckeElement zeta_interval(std::size_t lambda, std::size_t mu) {
    if (lambda < 1 || mu < lambda) {
      throw std::invalid_argument("zeta_interval needs 1 <= lambda <= mu");
    }
    Permutation w(mu);
    for (std::size_t m = lambda; m < mu; ++m) {
      w = Permutation::simple(m, mu) * w;
    }
    return HeckeElement::basis(w);
  }

  HeckeElement zeta_lambda(PartitionSpec const& nu) {
    std::size_t const n = std::max<std::size_t>(nu.size(), 1);
    HeckeElement out = HeckeElement::unit(n);
    std::size_t start = 1;
    for (std::size_t end : nu.partial_sums()) {
      out = mul(zeta_interval(start, end), out);
      start = end + 1;
    }
    return out;
  }

  HeckeElement zeta_m(std::size_t m) { return zeta_interval(1, m); }

  std::ostream& operator<<(std::ostream& os, HeckeElement const& x) { return os << x.to_string(); }

}  // namespace hecke
