#include "hecke/gram.hpp"

#include <stdexcept>

#include "hecke/hecke_element.hpp"
#include "hecke/tensor_model.hpp"

namespace hecke {

  LdltResult ldlt(RationalMatrix const& matrix) {
    std::size_t const n = matrix.size();
    for (auto const& row : matrix) {
      if (row.size() != n) {
        throw std::invalid_argument("ldlt needs a square matrix");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (matrix[i][j] != matrix[j][i]) {
          throw std::invalid_argument("ldlt needs a symmetric matrix");
        }
      }
    }
    RationalMatrix work = matrix;
    LdltResult result;
    result.psd = true;
    for (std::size_t k = 0; k < n; ++k) {
      Rational const pivot = work[k][k];
      result.pivots.push_back(pivot);
      if (pivot.sign() < 0) {
        result.psd = false;
        result.failed_at = result.failed_at.value_or(k);
        continue;
      }
      if (pivot.is_zero()) {
        for (std::size_t i = k + 1; i < n; ++i) {
          if (!work[i][k].is_zero()) {
            result.psd = false;
            result.failed_at = result.failed_at.value_or(k);
            break;
          }
        }
        continue;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        if (work[i][k].is_zero()) {
          continue;
        }
        Rational const factor = work[i][k] / pivot;
        for (std::size_t j = k + 1; j < n; ++j) {
          work[i][j] -= factor * work[k][j];
        }
      }
    }
    return result;
  }

  GnsGram gns_gram(ModelContext const& ctx, std::size_t rank) {
    if (rank > ctx.slots()) {
      throw std::out_of_range("Gram rank exceeds the number of model slots");
    }
    GnsGram gram;
    gram.basis = all_permutations(rank);
    std::size_t const d = gram.basis.size();
    gram.entries.assign(d, std::vector<Rational>(d));
    for (std::size_t u = 0; u < d; ++u) {
      HeckeElement const tu = HeckeElement::basis(gram.basis[u]);
      for (std::size_t v = 0; v < d; ++v) {
        HeckeElement const tv_star = star(HeckeElement::basis(gram.basis[v]));
        gram.entries[u][v] = matrix_element(ctx, mul(tv_star, tu));
      }
    }
    return gram;
  }

}  // namespace hecke
