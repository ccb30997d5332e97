#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/cli.hpp"
#include "hecke/gram.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/model_context.hpp"
#include "hecke/partition.hpp"
#include "hecke/tensor_model.hpp"
#include "hecke/vk_traces.hpp"

namespace hecke::cli {

  namespace {
    std::string parts_text(PartitionSpec const& nu) {
      std::string out;
      for (std::size_t part : nu.parts()) {
        out += (out.empty() ? "" : ",") + std::to_string(part);
      }
      return out;
    }

    std::string quoted(std::string const& s) { return "\"" + s + "\""; }

    std::vector<std::string> strings(std::vector<Rational> const& xs) {
      std::vector<std::string> out;
      for (auto const& x : xs) {
        out.push_back(x.to_string());
      }
      return out;
    }
  }  // namespace

  int cmd_trace(RunConfig const& config, std::ostream& out, std::ostream& err) {
    TraceParams const params = resolve_params(config.params, err);
    if (config.m.has_value() == config.partition.has_value()) {
      err << "error: trace needs exactly one of --m and --partition\n";
      return exit_invalid_input;
    }
    PartitionSpec const nu = config.m ? PartitionSpec({*config.m}) : PartitionSpec::parse(*config.partition);
    Rational const value = trace_zeta_lambda(nu, params);

    std::optional<Rational> tensor;
    if (config.cross_check) {
      if (!params.gamma.is_zero()) {
        err << "warning: the tensor-model cross-check needs gamma = 0; skipped\n";
      } else {
        ModelContext const ctx(params, std::max<std::size_t>(nu.size(), 1));
        tensor = matrix_element(ctx, zeta_lambda(nu));
        if (*tensor != value) {
          err << "error: cross-check mismatch: formula " << value << ", tensor model " << *tensor << '\n';
          return exit_cross_check_mismatch;
        }
      }
    }

    switch (config.format) {
      case Format::csv:
        out << value << '\n';
        break;
      case Format::table:
        out << "chi(zeta_(" << parts_text(nu) << ")) = " << value << '\n';
        if (tensor) {
          out << "tensor model      = " << *tensor << '\n';
        }
        break;
      case Format::records: {
        nlohmann::ordered_json j;
        j["partition"] = nu.parts();
        j["params"] = nlohmann::ordered_json::parse(params.to_json());
        j["value"] = value.to_string();
        if (tensor) {
          j["tensor_value"] = tensor->to_string();
        }
        out << j.dump() << '\n';
        break;
      }
    }
    return exit_ok;
  }

  int cmd_series(RunConfig const& config, std::ostream& out, std::ostream& err) {
    TraceParams const params = resolve_params(config.params, err);
    if (!config.degree) {
      err << "error: series needs --degree\n";
      return exit_invalid_input;
    }
    PowerSeries const g = generating_series(params, *config.degree);
    std::optional<PowerSeries> dual;
    if (config.dual_path) {
      dual = series_from_traces(params, *config.degree);
    }
    bool const match = !dual || *dual == g;

    switch (config.format) {
      case Format::csv:
        out << (dual ? "degree,coefficient,from_traces,match\n" : "degree,coefficient\n");
        for (std::size_t k = 0; k <= g.order(); ++k) {
          out << k << ',' << g[k];
          if (dual) {
            out << ',' << (*dual)[k] << ',' << ((*dual)[k] == g[k] ? "yes" : "no");
          }
          out << '\n';
        }
        break;
      case Format::table:
        for (std::size_t k = 0; k <= g.order(); ++k) {
          out << "z^" << std::left << std::setw(4) << k << ' ' << g[k];
          if (dual) {
            out << "  (from traces " << (*dual)[k] << ')';
          }
          out << '\n';
        }
        break;
      case Format::records: {
        nlohmann::ordered_json j;
        j["degree"] = *config.degree;
        j["coefficients"] = strings(g.coefficients());
        if (dual) {
          j["from_traces"] = strings(dual->coefficients());
          j["match"] = match;
        }
        out << j.dump() << '\n';
        break;
      }
    }
    if (!match) {
      err << "error: generating function and trace series disagree\n";
      return exit_cross_check_mismatch;
    }
    return exit_ok;
  }

  int cmd_gram(RunConfig const& config, std::ostream& out, std::ostream& err) {
    TraceParams const params = resolve_params(config.params, err);
    std::size_t const rank = config.n.value_or(3);
    if (rank < 1 || rank > 3) {
      err << "error: gram supports 1 <= n <= 3\n";
      return exit_invalid_input;
    }
    ModelContext const ctx(params, rank);
    GramCheck const g = check_gns_positivity(ctx, rank);
    auto const& basis = g.gram.basis;
    auto const& rows = g.gram.entries;

    switch (config.format) {
      case Format::csv:
        out << "basis";
        for (auto const& w : basis) {
          out << ',' << quoted(w.to_string());
        }
        out << '\n';
        for (std::size_t i = 0; i < basis.size(); ++i) {
          out << quoted(basis[i].to_string());
          for (auto const& x : rows[i]) {
            out << ',' << x;
          }
          out << '\n';
        }
        out << "pivots";
        for (auto const& x : g.factorization.pivots) {
          out << ',' << x;
        }
        out << "\npsd," << (g.factorization.psd ? "yes" : "no") << '\n';
        break;
      case Format::table: {
        std::size_t width = 8;
        for (auto const& row : rows) {
          for (auto const& x : row) {
            width = std::max(width, x.to_string().size() + 1);
          }
        }
        out << std::setw(9) << "";
        for (auto const& w : basis) {
          out << std::setw(static_cast<int>(width)) << w.to_string();
        }
        out << '\n';
        for (std::size_t i = 0; i < basis.size(); ++i) {
          out << std::left << std::setw(9) << basis[i].to_string() << std::right;
          for (auto const& x : rows[i]) {
            out << std::setw(static_cast<int>(width)) << x.to_string();
          }
          out << '\n';
        }
        out << "pivots:";
        for (auto const& x : g.factorization.pivots) {
          out << ' ' << x;
        }
        out << "\nPSD: " << (g.factorization.psd ? "yes" : "no") << '\n';
        break;
      }
      case Format::records: {
        nlohmann::ordered_json j;
        std::vector<std::string> names;
        for (auto const& w : basis) {
          names.push_back(w.to_string());
        }
        j["basis"] = names;
        auto matrix = nlohmann::ordered_json::array();
        for (auto const& row : rows) {
          matrix.push_back(strings(row));
        }
        j["gram"] = matrix;
        j["pivots"] = strings(g.factorization.pivots);
        j["psd"] = g.factorization.psd;
        out << j.dump() << '\n';
        break;
      }
    }
    return g.factorization.psd ? exit_ok : exit_check_failed;
  }

  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err) {
    std::optional<TraceParams> params;
    if (config.params.any()) {
      params = resolve_params(config.params, err);
    }
    std::vector<CheckResult> const checks = run_suite(config.suite, params, config, err);
    std::size_t failed = 0;
    for (auto const& c : checks) {
      failed += c.passed ? 0 : 1;
    }
    if (config.format == Format::records) {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& c : checks) {
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << arr.dump() << '\n';
    } else {
      for (auto const& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty() && (!c.passed || config.verbose)) {
          out << ": " << c.detail;
        }
        out << '\n';
      }
      out << checks.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_check_failed;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact evaluation and verification of Hecke algebra traces"};
    app.require_subcommand(1);
    RunConfig config;

    std::string q, alpha, beta, gamma, file, partition, suite = "all";
    std::size_t m = 0, degree = 0, n = 0;
    unsigned p = 0;
    std::map<std::string, Format> const formats = {
        {"csv", Format::csv}, {"table", Format::table}, {"records", Format::records}};

    struct Flags {
      CLI::Option* q;
      CLI::Option* alpha;
      CLI::Option* beta;
      CLI::Option* gamma;
      CLI::Option* file;
    };
    std::map<std::string, Flags> flag_sets;

    auto add_common = [&](CLI::App* sub) {
      Flags f;
      f.q = sub->add_option("--q", q, "Hecke parameter q, e.g. 2 or 1/2");
      f.alpha = sub->add_option("--alpha", alpha, "comma-separated alpha weights");
      f.beta = sub->add_option("--beta", beta, "comma-separated beta weights");
      f.gamma = sub->add_option("--gamma", gamma, "remainder gamma (default 0)");
      f.file = sub->add_option("--params", file, "parameter record file (JSON)");
      sub->add_option("--format", config.format, "output format")
          ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
      sub->add_flag("--expensive", config.expensive, "enable the costly finite-field cases");
      sub->add_flag("--verbose", config.verbose, "print details and state dumps");
      flag_sets[sub->get_name()] = f;
    };

    CLI::App* trace = app.add_subcommand("trace", "trace value on zeta_m or zeta_lambda");
    add_common(trace);
    auto* trace_m = trace->add_option("--m", m, "cycle length m");
    auto* trace_part = trace->add_option("--partition", partition, "partition such as 2,2");
    trace->add_flag("--cross-check", config.cross_check, "compare with the tensor model");

    CLI::App* series = app.add_subcommand("series", "coefficients of the generating function");
    add_common(series);
    auto* series_degree = series->add_option("--degree", degree, "truncation degree M");
    series->add_flag("--dual-path", config.dual_path, "also build the series from trace values");

    CLI::App* gram = app.add_subcommand("gram", "GNS Gram matrix of H_n with LDL^T pivots");
    add_common(gram);
    auto* gram_n = gram->add_option("--n", n, "rank n <= 3");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "hecke | rmatrix | tensor | convolution | gram | all");
    auto* verify_m = verify->add_option("--m", m, "largest m for the tensor suite");
    auto* verify_n = verify->add_option("--n", n, "matrix size (convolution) or rank (gram)");
    auto* verify_p = verify->add_option("--p", p, "prime for the convolution suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_invalid_input;
    }

    CLI::App* chosen = app.get_subcommands().front();
    config.subcommand = chosen->get_name();
    Flags const& f = flag_sets.at(config.subcommand);
    auto take = [](CLI::Option* opt, std::string const& value) {
      return opt->count() > 0 ? std::optional<std::string>(value) : std::nullopt;
    };
    config.params.q = take(f.q, q);
    config.params.alpha = take(f.alpha, alpha);
    config.params.beta = take(f.beta, beta);
    config.params.gamma = take(f.gamma, gamma);
    config.params.file = take(f.file, file);
    config.suite = suite;
    if (trace_m->count() || verify_m->count()) {
      config.m = m;
    }
    if (trace_part->count()) {
      config.partition = partition;
    }
    if (series_degree->count()) {
      config.degree = degree;
    }
    if (gram_n->count() || verify_n->count()) {
      config.n = n;
    }
    if (verify_p->count()) {
      config.p = p;
    }

    try {
      if (config.subcommand == "trace") {
        return cmd_trace(config, out, err);
      }
      if (config.subcommand == "series") {
        return cmd_series(config, out, err);
      }
      if (config.subcommand == "gram") {
        return cmd_gram(config, out, err);
      }
      return cmd_verify(config, out, err);
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid_input;
    }
  }

}  // namespace hecke::cli
