#ifndef HECKE_AV_OPERATOR_HPP
#define HECKE_AV_OPERATOR_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/model_context.hpp"
#include "hecke/tensor_model.hpp"

namespace hecke {

  /// Operator sum_sigma T(sigma) D(Phi_sigma) on one index row of the tensor
  /// model: D(Phi) multiplies eta[I; J] by Phi(I), T(sigma) moves entry k of I
  /// to position sigma(k). Tables are dense over S^n, indexed by the tuple's
  /// base-|S| code over support positions (first slot most significant).
  class AVOperator {
   public:
    using Table = std::vector<RootRing>;

    AVOperator(std::size_t slots, std::size_t support_size);

    /// T(e) D(1).
    static AVOperator identity(ModelContext const& ctx);
    /// T(sigma) D(phi).
    static AVOperator term(ModelContext const& ctx, Permutation const& sigma, Table phi);
    /// R_{j(j+1)} as Q + D: T(e) D(diag part) + T(s_j) D(-sqrt q on unequal pairs).
    static AVOperator generator(ModelContext const& ctx, std::size_t j);

    std::size_t slots() const { return slots_; }
    std::size_t support_size() const { return support_size_; }
    std::size_t table_size() const { return table_size_; }
    std::map<Permutation, Table> const& terms() const { return terms_; }

    void add_term(Permutation const& sigma, Table const& phi);

    /// Composition (this after rhs), kept in T-then-D form via
    /// D(Phi) T(tau) = T(tau) D(Phi o tau).
    AVOperator compose(AVOperator const& rhs) const;
    AVOperator& operator+=(AVOperator const& rhs);
    AVOperator& operator*=(RootRing const& scalar);

    /// sum D(Phi_sigma) T(sigma^{-1}) rewritten in T-then-D form.
    AVOperator transposed() const;

    TensorState apply(ModelContext const& ctx, Side side, TensorState const& state) const;

    /// Tuple code of support positions.
    std::size_t encode(std::vector<std::size_t> const& positions) const;
    std::vector<std::size_t> decode(std::size_t code) const;
    /// Code of the tuple sigma . I, where (sigma . I)_k = I_{sigma^{-1}(k)}.
    std::size_t permute_code(Permutation const& sigma, std::size_t code) const;

    friend bool operator==(AVOperator const&, AVOperator const&) = default;

   private:
    std::size_t slots_;
    std::size_t support_size_;
    std::size_t table_size_;
    std::map<Permutation, Table> terms_;
  };

  /// The image of X under sigma_j -> R_{j(j+1)}, composed generator by
  /// generator along reduced words.
  AVOperator av_normal_form(ModelContext const& ctx, HeckeElement const& x);

  /// sum_sigma sum_{I in Omega(sigma)} Phi_sigma(I) prod_k a_{i_k}, with
  /// Omega(sigma) the tuples constant on the cycles of sigma. Equals
  /// <op Xi, Xi>. Throws std::logic_error on an irrational result.
  Rational trace_via_omega(ModelContext const& ctx, AVOperator const& op);

}  // namespace hecke

#endif  // HECKE_AV_OPERATOR_HPP
