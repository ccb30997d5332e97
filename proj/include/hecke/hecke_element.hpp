#ifndef HECKE_HECKE_ELEMENT_HPP
#define HECKE_HECKE_ELEMENT_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "hecke/partition.hpp"
#include "hecke/permutation.hpp"
#include "hecke/polynomial.hpp"

namespace hecke {

  /// Element of the Iwahori-Hecke algebra H_n(q) in the T-basis, with
  /// coefficients kept as polynomials in q. An element of rank n is also an
  /// element of every H_m, m >= n, via promotion; equality and products
  /// promote automatically.
  class HeckeElement {
   public:
    using Terms = std::map<Permutation, QPolynomial>;

    explicit HeckeElement(std::size_t rank = 1);

    static HeckeElement unit(std::size_t rank = 1);
    static HeckeElement basis(Permutation const& w, QPolynomial coeff = Rational(1));
    /// T_{s_m} in H_rank.
    static HeckeElement generator(std::size_t m, std::size_t rank);

    std::size_t rank() const { return rank_; }
    Terms const& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    QPolynomial coefficient(Permutation const& w) const;
    void add_term(Permutation const& w, QPolynomial const& coeff);

    HeckeElement promoted(std::size_t rank) const;

    /// List of (permutation, coefficient list) pairs.
    std::string to_string() const;

    HeckeElement& operator+=(HeckeElement const& rhs);
    HeckeElement& operator-=(HeckeElement const& rhs);
    HeckeElement& operator*=(QPolynomial const& scalar);

    friend HeckeElement operator+(HeckeElement lhs, HeckeElement const& rhs) { return lhs += rhs; }
    friend HeckeElement operator-(HeckeElement lhs, HeckeElement const& rhs) { return lhs -= rhs; }
    friend HeckeElement operator*(HeckeElement lhs, QPolynomial const& s) { return lhs *= s; }
    friend HeckeElement operator*(QPolynomial const& s, HeckeElement rhs) { return rhs *= s; }
    friend HeckeElement operator*(HeckeElement const& x, HeckeElement const& y);

    friend bool operator==(HeckeElement const& x, HeckeElement const& y);

   private:
    std::size_t rank_;
    Terms terms_;
  };

  /// T_{s_m} * X, from T_s T_w = T_{sw} when l(sw) > l(w) and
  /// T_s T_w = (q-1) T_w + q T_{sw} otherwise. Throws std::out_of_range
  /// unless 1 <= m <= rank(X) - 1.
  HeckeElement gen_mul_left(std::size_t m, HeckeElement const& x);

  HeckeElement mul(HeckeElement const& x, HeckeElement const& y);

  /// Anti-linear anti-involution with sigma_m^* = sigma_m; on rational
  /// coefficients it maps T_w to T_{w^-1}.
  HeckeElement star(HeckeElement const& x);

  /// Linear anti-involution with sigma_m^t = sigma_m.
  HeckeElement transpose(HeckeElement const& x);

  /// sigma_{mu-1} sigma_{mu-2} ... sigma_lambda, the unit when lambda == mu.
  HeckeElement zeta_interval(std::size_t lambda, std::size_t mu);

  /// Product of one descending cycle block per part of `nu`, block j acting
  /// on the positions lambda_{j-1}+1 .. lambda_j.
  HeckeElement zeta_lambda(PartitionSpec const& nu);

  /// zeta_interval(1, m).
  HeckeElement zeta_m(std::size_t m);

  std::ostream& operator<<(std::ostream& os, HeckeElement const& x);

}  // namespace hecke

#endif  // HECKE_HECKE_ELEMENT_HPP
