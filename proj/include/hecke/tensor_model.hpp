#ifndef HECKE_TENSOR_MODEL_HPP
#define HECKE_TENSOR_MODEL_HPP

#include <cstddef>
#include <vector>

#include "hecke/hecke_element.hpp"
#include "hecke/model_context.hpp"
#include "hecke/tensor_state.hpp"

namespace hecke {

  /// Which tensor factors an operator acts on: the V-indices (left copy of
  /// the algebra) or the W-indices (right copy).
  enum class Side { left, right };

  /// Xi = xi^{(x) n}: coefficient prod_k sqrt(a_{i_k}) on eta[I; I] for all
  /// I in S^n. Unit norm.
  TensorState build_xi(ModelContext const& ctx);

  /// R acting on positions j, j+1 of the chosen index row. On a pair (a, b):
  /// a == b < 0 gives -1, a == b > 0 gives q, and a != b gives
  /// -sqrt(q) (b, a) plus (q-1) (a, b) when a < b. Throws std::out_of_range
  /// unless 1 <= j <= n-1.
  TensorState r_apply(ModelContext const& ctx, std::size_t j, Side side, TensorState const& state);

  /// Only the diagonal part D of R (the swap part Q dropped).
  TensorState d_apply(ModelContext const& ctx, std::size_t j, Side side, TensorState const& state);

  /// The representation sigma_j -> R_{j(j+1)} extended linearly over the
  /// T-basis via reduced words, with q evaluated at ctx.q(). Throws
  /// std::out_of_range when rank(X) > n.
  TensorState lift_hecke_apply(ModelContext const& ctx, HeckeElement const& x, Side side,
                               TensorState const& state);

  /// <X^{(l)} Xi, Xi> as an element of the square-root ring.
  RootRing matrix_element_exact(ModelContext const& ctx, HeckeElement const& x);

  /// <X^{(l)} Xi, Xi>. Throws std::logic_error if any square-root component
  /// survives (trace values are rational).
  Rational matrix_element(ModelContext const& ctx, HeckeElement const& x);

  /// <D_{(m-1)m} ... D_{12} Xi, Xi> using only diagonal operators. Requires
  /// m <= n.
  Rational diagonal_path_zeta(ModelContext const& ctx, std::size_t m);

  /// Square matrix over the square-root ring, row-major.
  struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<RootRing> entries;

    RootRing& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    RootRing const& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }

    static DenseMatrix zero(std::size_t dim);
    static DenseMatrix identity(std::size_t dim);

    friend bool operator==(DenseMatrix const&, DenseMatrix const&) = default;
  };

  DenseMatrix operator*(DenseMatrix const& a, DenseMatrix const& b);
  DenseMatrix operator+(DenseMatrix const& a, DenseMatrix const& b);
  DenseMatrix operator*(RootRing const& s, DenseMatrix const& a);

  /// R on the truncated V (x) V, assembled from its matrix-unit sums. Basis
  /// vector v_a (x) v_b has index pos(a) * s + pos(b).
  DenseMatrix dense_r_matrix(ModelContext const& ctx);

  /// R acting on factors j, j+1 of V^{(x) factors} (identity elsewhere).
  DenseMatrix dense_r_on_factors(ModelContext const& ctx, std::size_t j, std::size_t factors);

}  // namespace hecke

#endif  // HECKE_TENSOR_MODEL_HPP
