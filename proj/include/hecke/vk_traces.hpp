#ifndef HECKE_VK_TRACES_HPP
#define HECKE_VK_TRACES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hecke/partition.hpp"
#include "hecke/power_series.hpp"
#include "hecke/rational.hpp"
#include "hecke/trace_params.hpp"

namespace hecke {

  /// Multiplicities mu_k of cycle lengths k; counts()[k] = mu_k, index 0 unused.
  struct MultiplicityVector {
    std::vector<unsigned> counts;

    unsigned operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    /// sum_k k * mu_k
    std::size_t weight() const;

    friend bool operator==(MultiplicityVector const&, MultiplicityVector const&) = default;
  };

  /// p_k(alpha, beta) = sum alpha_i^k + (-1)^(k+1) sum beta_i^k.
  Rational super_newton(std::size_t k, TraceParams const& params);

  /// Every multiplicity vector with sum_k k mu_k = m, each once (one per
  /// partition of m).
  std::vector<MultiplicityVector> enumerate_multiplicities(std::size_t m);

  /// chi(zeta_m) by the partition-sum closed formula. Throws ParamError for
  /// q = 1; use thoma_value there.
  Rational vk_zeta_m(std::size_t m, TraceParams const& params);

  /// prod_j chi(zeta_{nu_j}); at q = 1 the factors come from thoma_value.
  Rational trace_zeta_lambda(PartitionSpec const& nu, TraceParams const& params);

  /// The q = 1 limit: 1 for m = 1 and p_m(alpha, beta) for m >= 2.
  Rational thoma_value(std::size_t m, TraceParams const& params);

  /// Product over nonzero beta_i of (1 + beta_i q z)/(1 + beta_i z) and over
  /// nonzero alpha_j of (1 - alpha_j z)/(1 - alpha_j q z), to order M.
  /// Throws ParamError for gamma != 0.
  PowerSeries generating_series(TraceParams const& params, std::size_t order);

  /// 1 + (q-1)(z + sum_{m=2..M} chi(zeta_m) z^m) with chi from vk_zeta_m.
  PowerSeries series_from_traces(TraceParams const& params, std::size_t order);

  /// Eigenvalue of D_{(m-1)m} ... D_{12} on a basis tensor whose first m
  /// V-indices are `indices`: (-1)^{sum(mu_k - 1)} q^{sum(nu_l - 1)} (q-1)^{u+v-1}
  /// for u distinct negative entries of multiplicities mu_k and v distinct
  /// positive entries of multiplicities nu_l. Throws std::invalid_argument
  /// for empty, unsorted or zero-containing tuples.
  Rational delta_eigenvalue(std::span<int const> indices, Rational const& q);

  /// sum over nondecreasing support tuples I of delta(I) prod a_{i_k}.
  Rational zeta_direct_sum(std::size_t m, TraceParams const& params);

  /// The same value grouped by exponent vectors: 1/(q-1) times the sum over
  /// (phi, psi) with |phi| + |psi| = m of
  /// prod (-beta_i)^phi_i (1-q)^[phi_i>0] prod (q alpha_j)^psi_j (1-1/q)^[psi_j>0].
  Rational zeta_grouped_sum(std::size_t m, TraceParams const& params);

  /// Evaluates both diagonal sums, throws std::logic_error if they disagree,
  /// and returns the common value. Requires gamma = 0 and q != 1.
  Rational zeta_via_diagonal(std::size_t m, TraceParams const& params);

}  // namespace hecke

#endif  // HECKE_VK_TRACES_HPP
