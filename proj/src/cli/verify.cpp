#include <algorithm>
#include <random>
#include <sstream>

#include "hecke/av_operator.hpp"
#include "hecke/cli.hpp"
#include "hecke/fq_convolution.hpp"
#include "hecke/gram.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/model_context.hpp"
#include "hecke/tensor_model.hpp"
#include "hecke/vk_traces.hpp"

namespace hecke::cli {

  namespace {
    using Checks = std::vector<CheckResult>;

    std::string join(std::vector<Rational> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : ",") + x.to_string();
      }
      return out;
    }

    std::string label(TraceParams const& p) {
      return "[q=" + p.q.to_string() + " alpha=" + join(p.alpha) + " beta=" + join(p.beta) + "]";
    }

    CheckResult check(std::string name, bool passed, std::string detail = {}) {
      return CheckResult{std::move(name), passed, std::move(detail)};
    }

    std::vector<TraceParams> builtin_sets() {
      std::vector<TraceParams> out;
      for (Rational q : {Rational(2), Rational(3), Rational(1, 2)}) {
        out.push_back(TraceParams::make(q, {Rational(1)}, {}));
        out.push_back(TraceParams::make(q, {}, {Rational(1)}));
        out.push_back(TraceParams::make(q, {Rational(1, 2), Rational(1, 2)}, {}));
        out.push_back(TraceParams::make(q, {Rational(1, 2)}, {Rational(1, 2)}));
        out.push_back(TraceParams::make(q, {Rational(2, 3), Rational(1, 6)}, {Rational(1, 6)}));
      }
      return out;
    }

    std::size_t factorial(std::size_t n) {
      std::size_t out = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        out *= k;
      }
      return out;
    }

    // ---- hecke ----

    void hecke_suite(Checks& out) {
      QPolynomial const q = QPolynomial::q();
      for (std::size_t n = 2; n <= 5; ++n) {
        HeckeElement const one = HeckeElement::unit(n);
        std::string witness;
        for (std::size_t m = 1; m < n && witness.empty(); ++m) {
          HeckeElement const s = HeckeElement::generator(m, n);
          if (!((s + one) * (s - one * q)).is_zero()) {
            witness = "(s" + std::to_string(m) + "+1)(s" + std::to_string(m) + "-q) != 0";
          }
          if (m + 1 < n) {
            HeckeElement const t = HeckeElement::generator(m + 1, n);
            if (!(s * t * s == t * s * t)) {
              witness = "braid fails at m=" + std::to_string(m);
            }
          }
          for (std::size_t l = m + 2; l < n; ++l) {
            HeckeElement const u = HeckeElement::generator(l, n);
            if (!(s * u == u * s)) {
              witness = "s" + std::to_string(m) + " s" + std::to_string(l) + " do not commute";
            }
          }
        }
        out.push_back(check("hecke.relations.rank" + std::to_string(n), witness.empty(), witness));

        std::mt19937 rng(static_cast<unsigned>(100 + n));
        std::uniform_int_distribution<std::size_t> gen(1, n - 1);
        std::string closure;
        for (int trial = 0; trial < 20 && closure.empty(); ++trial) {
          HeckeElement x = one;
          for (int k = 0; k < 6; ++k) {
            x = x * HeckeElement::generator(gen(rng), n);
          }
          if (x.rank() != n || x.support_size() > factorial(n)) {
            closure = "product left the T-basis: " + x.to_string();
          }
        }
        out.push_back(check("hecke.closure.rank" + std::to_string(n), closure.empty(), closure));
      }

      HeckeElement const a = HeckeElement::generator(1, 3) * HeckeElement::generator(2, 3) * HeckeElement::generator(1, 3);
      HeckeElement const b = HeckeElement::generator(2, 3) * HeckeElement::generator(1, 3) * HeckeElement::generator(2, 3);
      bool words_agree = a == b;
      std::mt19937 rng(7);
      auto const perms = all_permutations(3);
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      bool anti = true;
      for (int trial = 0; trial < 10; ++trial) {
        HeckeElement x(3), y(3);
        for (int k = 0; k < 3; ++k) {
          x.add_term(perms[pick(rng)], Rational(static_cast<long>(k + 1)));
          y.add_term(perms[pick(rng)], Rational(static_cast<long>(2 - k)));
        }
        words_agree = words_agree && a * y == b * y;
        anti = anti && star(x * y) == star(y) * star(x) && star(star(x)) == x;
      }
      out.push_back(check("hecke.matsumoto", words_agree));
      out.push_back(check("hecke.star_anti_automorphism", anti));
    }

    // ---- rmatrix ----

    TensorState basis_state(ModelContext const& ctx, std::vector<std::size_t> const& pos) {
      PureTensor t;
      for (std::size_t k : pos) {
        t.v.push_back(ctx.support()[k]);
        t.w.push_back(ctx.support()[k]);
      }
      TensorState s;
      s.add(t, RootRing(1));
      return s;
    }

    void rmatrix_suite(TraceParams const& p, Checks& out) {
      ModelContext const ctx(p, 3);
      std::string const tag = label(p);
      if (ctx.support_size() <= 3) {
        DenseMatrix const r = dense_r_matrix(ctx);
        DenseMatrix const id = DenseMatrix::identity(r.dim);
        out.push_back(check("rmatrix.quadratic" + tag, r * r == RootRing(ctx.q() - 1) * r + RootRing(ctx.q()) * id,
                            "dense " + std::to_string(r.dim) + "x" + std::to_string(r.dim)));
        DenseMatrix const r12 = dense_r_on_factors(ctx, 1, 3);
        DenseMatrix const r23 = dense_r_on_factors(ctx, 2, 3);
        out.push_back(check("rmatrix.braid" + tag, r12 * r23 * r12 == r23 * r12 * r23,
                            "dense " + std::to_string(r12.dim) + "x" + std::to_string(r12.dim)));
        return;
      }
      // Larger supports: the same laws on every basis tensor of three slots.
      bool quadratic = true, braid = true;
      std::size_t const s = ctx.support_size();
      for (std::size_t code = 0; code < s * s * s; ++code) {
        TensorState const e = basis_state(ctx, {code / (s * s), (code / s) % s, code % s});
        TensorState const r = r_apply(ctx, 1, Side::left, e);
        TensorState rhs = r;
        rhs *= ctx.q() - 1;
        TensorState qe = e;
        qe *= ctx.q();
        rhs += qe;
        quadratic = quadratic && r_apply(ctx, 1, Side::left, r) == rhs;
        auto r121 = r_apply(ctx, 1, Side::left, r_apply(ctx, 2, Side::left, r));
        auto r212 = r_apply(ctx, 2, Side::left, r_apply(ctx, 1, Side::left, r_apply(ctx, 2, Side::left, e)));
        braid = braid && r121 == r212;
      }
      out.push_back(check("rmatrix.quadratic" + tag, quadratic, "basis tensors"));
      out.push_back(check("rmatrix.braid" + tag, braid, "basis tensors"));
    }

    // ---- tensor ----

    void tensor_suite(TraceParams const& p, std::size_t max_m, bool verbose, Checks& out, std::ostream& log) {
      std::string const tag = label(p);
      bool const at_one = p.q == Rational(1);
      for (std::size_t m = 1; m <= max_m; ++m) {
        ModelContext const ctx(p, m);
        if (verbose && m == 2) {
          log << "Xi " << tag << ":\n" << build_xi(ctx).dump();
        }
        Rational const formula = at_one ? thoma_value(m, p) : vk_zeta_m(m, p);
        RootRing const exact = matrix_element_exact(ctx, zeta_m(m));
        auto const part = exact.rational_part();
        std::vector<std::pair<std::string, Rational>> paths = {
            {"matrix_element", part.value},
            {"omega", trace_via_omega(ctx, av_normal_form(ctx, zeta_m(m)))},
            {"diagonal_path", diagonal_path_zeta(ctx, m)},
            {"direct_sum", zeta_direct_sum(m, p)},
        };
        if (!at_one) {
          paths.push_back({"grouped_sum", zeta_grouped_sum(m, p)});
        }
        std::string witness = part.pure ? "" : "irrational matrix element " + exact.to_string();
        for (auto const& [name, value] : paths) {
          if (value != formula) {
            witness += (witness.empty() ? "" : "; ") + name + "=" + value.to_string() + " vs formula "
                       + formula.to_string();
          }
        }
        out.push_back(check("tensor.fourway.m" + std::to_string(m) + tag, witness.empty(),
                            witness.empty() ? "value " + formula.to_string() : witness));
      }

      ModelContext const ctx3(p, 3);
      std::vector<HeckeElement> const samples = {HeckeElement::generator(1, 3), HeckeElement::generator(2, 3),
                                                 zeta_m(3), HeckeElement::basis(Permutation({3, 2, 1}))};
      BimoduleReport const report = bimodule_checks(ctx3, samples);
      std::string failures;
      for (auto const& c : report.checks) {
        if (!c.passed) {
          failures += (failures.empty() ? "" : "; ") + c.name + ": " + c.detail;
        }
      }
      out.push_back(check("tensor.bimodule" + tag, failures.empty(),
                          failures.empty() ? std::to_string(report.checks.size()) + " identities" : failures));

      ModelContext const ctx5(p, 5);
      std::string shift;
      for (std::size_t m = 2; m <= 3; ++m) {
        Rational const base = matrix_element(ctx5, zeta_m(m));
        for (std::size_t k = 1; k <= 2; ++k) {
          Rational const shifted = matrix_element(ctx5, zeta_interval(1 + k, m + k));
          if (shifted != base) {
            shift += "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + shifted.to_string()
                     + " != " + base.to_string() + "; ";
          }
        }
      }
      out.push_back(check("tensor.shift" + tag, shift.empty(), shift));

      int const pad = std::max(ctx3.support().back(), 0) + 1;
      ModelContext const padded(p, 3, {pad});
      bool same = true;
      for (auto const& w : all_permutations(3)) {
        same = same && matrix_element(ctx3, HeckeElement::basis(w)) == matrix_element(padded, HeckeElement::basis(w));
      }
      out.push_back(check("tensor.truncation" + tag, same, "zero-weight index " + std::to_string(pad)));
    }

    // ---- gram ----

    void gram_suite(TraceParams const& p, std::size_t rank, Checks& out) {
      ModelContext const ctx(p, rank);
      GramCheck const g = check_gns_positivity(ctx, rank);
      std::string pivots;
      for (auto const& x : g.factorization.pivots) {
        pivots += (pivots.empty() ? "" : ",") + x.to_string();
      }
      out.push_back(check("gram.psd.rank" + std::to_string(rank) + label(p), g.result.passed, "pivots " + pivots));
    }

    // ---- convolution ----

    bool is_expensive(std::size_t n, unsigned p) {
      std::uint64_t size = 1;
      for (std::size_t k = 0; k < n * n; ++k) {
        size *= p;
        if (size > 1000) {
          return true;
        }
      }
      return false;
    }

    void convolution_case(std::size_t n, unsigned p, Checks& out) {
      std::string const tag = "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
      auto const group = fq::FiniteGL::make(n, p);
      fq::BruhatTable const table = fq::bruhat_table(group);
      fq::StructureReport const report = fq::structure_constants_check(table);

      out.push_back(check("convolution.orders" + tag, report.group_order_ok && report.borel_order_ok,
                          "|G|=" + std::to_string(group->order()) + " |B|=" + std::to_string(group->borel().size())));
      out.push_back(check("convolution.cells" + tag, report.cell_count_ok && report.cell_sizes_ok,
                          std::to_string(table.cells.size()) + " cells"));

      std::string witness;
      Rational const q(static_cast<long>(p));
      fq::BiInvFunction const unit = fq::borel_indicator(group);
      for (std::size_t m = 1; m < n; ++m) {
        fq::BiInvFunction const s = fq::sigma_element(table, m);
        fq::BiInvFunction rhs = s;
        rhs *= q - 1;
        fq::BiInvFunction qe = unit;
        qe *= q;
        rhs += qe;
        if (!(fq::convolve(s, s) == rhs)) {
          witness += "quadratic relation fails for sigma_" + std::to_string(m) + "; ";
        }
        if (m + 1 < n) {
          fq::BiInvFunction const t = fq::sigma_element(table, m + 1);
          if (!(fq::convolve(fq::convolve(s, t), s) == fq::convolve(fq::convolve(t, s), t))) {
            witness += "braid relation fails at m=" + std::to_string(m) + "; ";
          }
        }
        for (std::size_t l = m + 2; l < n; ++l) {
          fq::BiInvFunction const u = fq::sigma_element(table, l);
          if (!(fq::convolve(s, u) == fq::convolve(u, s))) {
            witness += "sigma_" + std::to_string(m) + " and sigma_" + std::to_string(l) + " do not commute; ";
          }
        }
      }
      out.push_back(check("convolution.relations" + tag, witness.empty(), witness));

      std::string mismatch;
      if (!report.closure_ok) {
        mismatch = "a product is not constant on Bruhat cells";
      }
      if (!report.mismatches.empty()) {
        auto const& mm = report.mismatches.front();
        mismatch = "T_" + mm.u.to_string() + " T_" + mm.v.to_string() + " at " + mm.w.to_string() + ": expected "
                   + mm.expected.to_string() + ", got " + mm.actual.to_string() + " ("
                   + std::to_string(report.mismatches.size()) + " mismatches)";
      }
      out.push_back(check("convolution.structure" + tag, mismatch.empty(),
                          mismatch.empty() ? std::to_string(report.pairs_checked) + " cell pairs" : mismatch));
    }

    void convolution_suite(RunConfig const& config, Checks& out) {
      std::vector<std::pair<std::size_t, unsigned>> cases;
      if (config.n || config.p) {
        std::size_t const n = config.n.value_or(2);
        unsigned const p = config.p.value_or(2);
        if (is_expensive(n, p) && !config.expensive) {
          throw std::invalid_argument("GL(" + std::to_string(n) + ", " + std::to_string(p)
                                      + ") is an expensive check; pass --expensive to run it");
        }
        cases.emplace_back(n, p);
      } else {
        cases = {{2, 2}, {2, 3}, {2, 5}, {3, 2}};
        if (config.expensive) {
          cases.emplace_back(3, 3);
          cases.emplace_back(4, 2);
        }
      }
      for (auto [n, p] : cases) {
        convolution_case(n, p, out);
      }
    }
  }  // namespace

  std::vector<CheckResult> run_suite(std::string const& suite, std::optional<TraceParams> const& params,
                                     RunConfig const& config, std::ostream& log) {
    static std::vector<std::string> const known = {"hecke", "rmatrix", "tensor", "convolution", "gram", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      throw std::invalid_argument("unknown suite '" + suite
                                  + "' (expected hecke, rmatrix, tensor, convolution, gram or all)");
    }
    std::vector<TraceParams> const sets = params ? std::vector<TraceParams>{*params} : builtin_sets();
    for (auto const& p : sets) {
      if (!p.gamma.is_zero() && suite != "hecke" && suite != "convolution") {
        throw ParamError("the tensor-model suites need gamma = 0");
      }
    }
    bool const all = suite == "all";
    Checks out;
    if (all || suite == "hecke") {
      hecke_suite(out);
    }
    if (all || suite == "rmatrix") {
      for (auto const& p : sets) {
        rmatrix_suite(p, out);
      }
    }
    if (all || suite == "tensor") {
      for (auto const& p : sets) {
        tensor_suite(p, config.m.value_or(4), config.verbose, out, log);
      }
    }
    if (all || suite == "gram") {
      std::size_t const rank = config.n && suite == "gram" ? *config.n : 3;
      if (rank < 1 || rank > 3) {
        throw std::invalid_argument("gram rank must be between 1 and 3");
      }
      for (auto const& p : sets) {
        gram_suite(p, rank, out);
      }
    }
    if (all || suite == "convolution") {
      convolution_suite(config, out);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](CheckResult const& a, CheckResult const& b) { return a.name < b.name; });
    return out;
  }

}  // namespace hecke::cli
