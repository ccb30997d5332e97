#ifndef HECKE_FQ_CONVOLUTION_HPP
#define HECKE_FQ_CONVOLUTION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hecke/fq_group.hpp"
#include "hecke/permutation.hpp"
#include "hecke/rational.hpp"

namespace hecke::fq {

  /// Double cosets B w B, one per permutation w of rank n.
  struct BruhatTable {
    GroupPtr group;
    std::map<Permutation, std::vector<std::size_t>> cells;
    std::vector<Permutation> cell_of;  // indexed by group element

    std::vector<std::size_t> const& cell(Permutation const& w) const;
    /// First element of the cell in group order.
    std::size_t representative(Permutation const& w) const { return cell(w).front(); }
  };

  /// Enumerates B P_w B for every w. Throws std::logic_error if the cells
  /// overlap or miss an element.
  BruhatTable bruhat_table(GroupPtr const& group);

  /// Finitely supported rational function on GL(n, p); zero values are not
  /// stored.
  class BiInvFunction {
   public:
    explicit BiInvFunction(GroupPtr group);

    static BiInvFunction indicator(GroupPtr group, std::vector<std::size_t> const& elements);

    GroupPtr const& group() const { return group_; }
    std::map<std::size_t, Rational> const& values() const { return values_; }
    Rational value(std::size_t element) const;
    Rational value(FqMatrix const& g) const { return value(group_->index_of(g)); }
    std::size_t support_size() const { return values_.size(); }

    void set(std::size_t element, Rational const& v);
    BiInvFunction& operator+=(BiInvFunction const& rhs);
    BiInvFunction& operator*=(Rational const& c);

    /// True when the function is constant on every cell of `table`.
    bool is_bi_invariant(BruhatTable const& table) const;
    /// Coefficients on cell indicators; requires bi-invariance
    /// (std::logic_error otherwise). Zero coefficients are omitted.
    std::map<Permutation, Rational> cell_coefficients(BruhatTable const& table) const;
    /// One line per nonzero cell: "w=[..] rep=[[..]] coeff=..".
    std::string dump(BruhatTable const& table) const;

    friend bool operator==(BiInvFunction const& a, BiInvFunction const& b);

   private:
    GroupPtr group_;
    std::map<std::size_t, Rational> values_;
  };

  BiInvFunction operator+(BiInvFunction a, BiInvFunction const& b);

  /// (f*g)(x) = |B|^{-1} sum_y f(y) g(y^{-1} x). Throws std::invalid_argument
  /// when f and g live on different groups.
  BiInvFunction convolve(BiInvFunction const& f, BiInvFunction const& g);

  BiInvFunction borel_indicator(GroupPtr const& group);
  BiInvFunction cell_indicator(BruhatTable const& table, Permutation const& w);

  /// Indicator of B s_m B. Throws std::out_of_range unless 1 <= m <= n-1.
  BiInvFunction sigma_element(BruhatTable const& table, std::size_t m);

  struct StructureMismatch {
    Permutation u;
    Permutation v;
    Permutation w;
    Rational expected;
    Rational actual;
  };

  struct StructureReport {
    std::size_t n = 0;
    unsigned p = 0;
    bool group_order_ok = false;
    bool borel_order_ok = false;
    bool cell_count_ok = false;
    bool cell_sizes_ok = false;
    bool closure_ok = false;  // every product constant on cells
    std::size_t pairs_checked = 0;
    std::vector<StructureMismatch> mismatches;

    bool passed() const {
      return group_order_ok && borel_order_ok && cell_count_ok && cell_sizes_ok && closure_ok
             && mismatches.empty();
    }
  };

  /// Convolves every pair of cell indicators and compares the cell expansion
  /// with the T-basis product evaluated at q = p.
  StructureReport structure_constants_check(BruhatTable const& table);
  StructureReport structure_constants_check(std::size_t n, unsigned p);

}  // namespace hecke::fq

#endif  // HECKE_FQ_CONVOLUTION_HPP
