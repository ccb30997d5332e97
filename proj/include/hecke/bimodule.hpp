#ifndef HECKE_BIMODULE_HPP
#define HECKE_BIMODULE_HPP

#include <span>
#include <string>
#include <vector>

#include "hecke/gram.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/model_context.hpp"

namespace hecke {

  struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // witness on failure, value summary on success
  };

  /// <A^{(l)} B^{(l)} Xi, Xi> == <B^{(l)} A^{(l)} Xi, Xi>, applied operator by
  /// operator rather than through the algebra product.
  CheckResult check_trace_property(ModelContext const& ctx, HeckeElement const& a,
                                   HeckeElement const& b);

  /// X^{(r)} Xi == (X^t)^{(l)} Xi as states.
  CheckResult check_transpose_identity(ModelContext const& ctx, HeckeElement const& x);

  /// <A^{(l)} B^{(r)} Xi, C^{(l)} D^{(r)} Xi> == chi(C^* A B^t (D^*)^t), the right
  /// side evaluated as a left matrix element.
  CheckResult check_bimodule_gram(ModelContext const& ctx, HeckeElement const& a,
                                  HeckeElement const& b, HeckeElement const& c,
                                  HeckeElement const& d);

  /// lift(X, left) and lift(Y, right) commute on Xi.
  CheckResult check_left_right_commute(ModelContext const& ctx, HeckeElement const& x,
                                       HeckeElement const& y);

  struct GramCheck {
    GnsGram gram;
    LdltResult factorization;
    CheckResult result;
  };

  /// GNS Gram matrix of H_rank with its exact LDL^T verdict.
  GramCheck check_gns_positivity(ModelContext const& ctx, std::size_t rank);

  struct BimoduleReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
  };

  /// Runs the trace property on all sample pairs, the transpose identity on
  /// every sample, the bimodule Gram identity on cyclic quadruples of samples
  /// and GNS positivity on H_3 (when the context has at least 3 slots).
  BimoduleReport bimodule_checks(ModelContext const& ctx, std::span<HeckeElement const> samples);

}  // namespace hecke

#endif  // HECKE_BIMODULE_HPP
