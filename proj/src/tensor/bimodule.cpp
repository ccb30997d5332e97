#include "hecke/bimodule.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/tensor_model.hpp"

namespace hecke {

  namespace {
    CheckResult compare(std::string name, RootRing const& lhs, RootRing const& rhs,
                        std::string const& witness) {
      CheckResult r{std::move(name), lhs == rhs, {}};
      if (r.passed) {
        r.detail = lhs.to_string();
      } else {
        r.detail = witness + ": " + lhs.to_string() + " != " + rhs.to_string();
      }
      return r;
    }
  }  // namespace

  CheckResult check_trace_property(ModelContext const& ctx, HeckeElement const& a,
                                   HeckeElement const& b) {
    TensorState const xi = build_xi(ctx);
    auto ab = lift_hecke_apply(ctx, a, Side::left, lift_hecke_apply(ctx, b, Side::left, xi));
    auto ba = lift_hecke_apply(ctx, b, Side::left, lift_hecke_apply(ctx, a, Side::left, xi));
    RootRing const lhs = inner(ab, xi);
    RootRing const rhs = inner(ba, xi);
    CheckResult r = compare("trace property <AB Xi,Xi> = <BA Xi,Xi>", lhs, rhs,
                            "A=" + a.to_string() + " B=" + b.to_string());
    if (r.passed && !lhs.rational_part().pure) {
      r.passed = false;
      r.detail = "irrational trace value " + lhs.to_string();
    }
    return r;
  }

  CheckResult check_transpose_identity(ModelContext const& ctx, HeckeElement const& x) {
    TensorState const xi = build_xi(ctx);
    TensorState const right = lift_hecke_apply(ctx, x, Side::right, xi);
    TensorState const left = lift_hecke_apply(ctx, transpose(x), Side::left, xi);
    CheckResult r{"transpose identity X^(r) Xi = (X^t)^(l) Xi", right == left, {}};
    r.detail = r.passed ? std::to_string(right.size()) + " terms"
                        : "X=" + x.to_string() + ": states differ";
    return r;
  }

  CheckResult check_bimodule_gram(ModelContext const& ctx, HeckeElement const& a,
                                  HeckeElement const& b, HeckeElement const& c,
                                  HeckeElement const& d) {
    TensorState const xi = build_xi(ctx);
    auto lhs_state = lift_hecke_apply(ctx, a, Side::left, lift_hecke_apply(ctx, b, Side::right, xi));
    auto rhs_state = lift_hecke_apply(ctx, c, Side::left, lift_hecke_apply(ctx, d, Side::right, xi));
    RootRing const lhs = inner(lhs_state, rhs_state);
    HeckeElement const product = star(c) * a * transpose(b) * transpose(star(d));
    RootRing const rhs(matrix_element(ctx, product));
    return compare("bimodule Gram identity", lhs, rhs,
                   "A=" + a.to_string() + " B=" + b.to_string() + " C=" + c.to_string()
                       + " D=" + d.to_string());
  }

  CheckResult check_left_right_commute(ModelContext const& ctx, HeckeElement const& x,
                                       HeckeElement const& y) {
    TensorState const xi = build_xi(ctx);
    auto lr = lift_hecke_apply(ctx, x, Side::left, lift_hecke_apply(ctx, y, Side::right, xi));
    auto rl = lift_hecke_apply(ctx, y, Side::right, lift_hecke_apply(ctx, x, Side::left, xi));
    CheckResult r{"left/right commutation", lr == rl, {}};
    r.detail = r.passed ? std::to_string(lr.size()) + " terms"
                        : "X=" + x.to_string() + " Y=" + y.to_string();
    return r;
  }

  GramCheck check_gns_positivity(ModelContext const& ctx, std::size_t rank) {
    GramCheck out{gns_gram(ctx, rank), {}, {}};
    out.factorization = ldlt(out.gram.entries);
    std::ostringstream pivots;
    for (std::size_t k = 0; k < out.factorization.pivots.size(); ++k) {
      pivots << (k ? " " : "") << out.factorization.pivots[k];
    }
    out.result = CheckResult{"GNS Gram positivity on H_" + std::to_string(rank),
                             out.factorization.psd, "pivots " + pivots.str()};
    return out;
  }

  bool BimoduleReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }

  BimoduleReport bimodule_checks(ModelContext const& ctx, std::span<HeckeElement const> samples) {
    BimoduleReport report;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (std::size_t j = i; j < samples.size(); ++j) {
        report.checks.push_back(check_trace_property(ctx, samples[i], samples[j]));
      }
      report.checks.push_back(check_transpose_identity(ctx, samples[i]));
    }
    std::size_t const k = samples.size();
    for (std::size_t i = 0; i < k; ++i) {
      report.checks.push_back(check_bimodule_gram(ctx, samples[i], samples[(i + 1) % k],
                                                  samples[(i + 2) % k], samples[(i + 3) % k]));
    }
    if (ctx.slots() >= 3) {
      report.checks.push_back(check_gns_positivity(ctx, 3).result);
    }
    return report;
  }

}  // namespace hecke
