#ifndef HECKE_GRAM_HPP
#define HECKE_GRAM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/model_context.hpp"
#include "hecke/permutation.hpp"
#include "hecke/rational.hpp"

namespace hecke {

  using RationalMatrix = std::vector<std::vector<Rational>>;

  struct LdltResult {
    std::vector<Rational> pivots;
    bool psd = false;
    /// First column whose elimination witnessed indefiniteness, if any.
    std::optional<std::size_t> failed_at;
  };

  /// Exact symmetric elimination without pivoting. A zero pivot is allowed
  /// only when the rest of its column in the current Schur complement is zero;
  /// the matrix is PSD iff that holds and every pivot is >= 0. Throws
  /// std::invalid_argument for non-square or non-symmetric input.
  LdltResult ldlt(RationalMatrix const& matrix);

  struct GnsGram {
    std::vector<Permutation> basis;  // T-basis order of rows and columns
    RationalMatrix entries;          // G[u][v] = chi(T_v^* T_u)
  };

  /// Gram matrix of <A, B> = chi(B^* A) on the T-basis of H_rank, with chi
  /// evaluated as the tensor-model matrix element. Requires rank <= slots.
  GnsGram gns_gram(ModelContext const& ctx, std::size_t rank);

}  // namespace hecke

#endif  // HECKE_GRAM_HPP
