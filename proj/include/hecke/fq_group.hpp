#ifndef HECKE_FQ_GROUP_HPP
#define HECKE_FQ_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke/permutation.hpp"

namespace hecke::fq {

  /// n x n matrix over the prime field F_p, row-major entries in 0..p-1.
  class FqMatrix {
   public:
    FqMatrix(unsigned p, std::size_t n, std::vector<unsigned> entries);

    static FqMatrix identity(unsigned p, std::size_t n);
    /// Matrix of e_i -> e_{w(i)}, so that P_u P_v = P_{uv}.
    static FqMatrix permutation(Permutation const& w, unsigned p);
    /// Matrix whose entries are the base-p digits of `code` (first entry most
    /// significant).
    static FqMatrix from_code(unsigned p, std::size_t n, std::uint64_t code);

    unsigned prime() const { return p_; }
    std::size_t size() const { return n_; }
    unsigned at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    std::vector<unsigned> const& entries() const { return entries_; }
    std::uint64_t code() const;

    unsigned determinant() const;
    bool is_invertible() const { return determinant() != 0; }
    bool is_upper_triangular() const;
    /// Throws std::domain_error for singular matrices.
    FqMatrix inverse() const;

    /// "[[1,0],[1,1]]"
    std::string to_string() const;

    friend FqMatrix operator*(FqMatrix const& a, FqMatrix const& b);
    friend bool operator==(FqMatrix const&, FqMatrix const&) = default;

   private:
    unsigned p_;
    std::size_t n_;
    std::vector<unsigned> entries_;
  };

  bool is_prime(unsigned p);

  /// Largest p^{n^2} the enumerators accept.
  inline constexpr std::uint64_t enumeration_limit = 10'000'000;

  /// Every invertible n x n matrix over F_p, in code order. Throws
  /// std::invalid_argument for composite p or when p^{n^2} exceeds the limit.
  std::vector<FqMatrix> enumerate_gl(std::size_t n, unsigned p);

  /// The invertible upper-triangular matrices, in code order.
  std::vector<FqMatrix> borel_subgroup(std::size_t n, unsigned p);

  /// |GL(n, p)| = prod_{k<n} (p^n - p^k) and |B| = (p-1)^n p^{n(n-1)/2}.
  std::uint64_t gl_order(std::size_t n, unsigned p);
  std::uint64_t borel_order(std::size_t n, unsigned p);

  /// GL(n, F_p) with elements numbered 0..|G|-1 and O(n) products through
  /// precomputed row-vector times element tables.
  class FiniteGL {
   public:
    static std::shared_ptr<FiniteGL const> make(std::size_t n, unsigned p);

    std::size_t n() const { return n_; }
    unsigned p() const { return p_; }
    std::size_t order() const { return elements_.size(); }
    FqMatrix const& element(std::size_t i) const { return elements_.at(i); }
    std::vector<std::size_t> const& borel() const { return borel_; }
    std::size_t identity() const { return identity_; }

    /// Throws std::invalid_argument for matrices outside the group.
    std::size_t index_of(FqMatrix const& g) const;
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

   private:
    FiniteGL(std::size_t n, unsigned p);

    std::size_t n_;
    unsigned p_;
    std::size_t row_codes_;                  // p^n
    std::vector<FqMatrix> elements_;
    std::vector<std::int32_t> index_by_code_;  // p^{n^2} entries, -1 when singular
    std::vector<std::uint32_t> row_times_;     // [row code][element] -> row code
    std::vector<std::uint32_t> row_code_of_;   // [element * n + row]
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> borel_;
    std::size_t identity_ = 0;
  };

  using GroupPtr = std::shared_ptr<FiniteGL const>;

}  // namespace hecke::fq

#endif  // HECKE_FQ_GROUP_HPP
