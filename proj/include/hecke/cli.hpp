#ifndef HECKE_CLI_HPP
#define HECKE_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/bimodule.hpp"
#include "hecke/trace_params.hpp"

namespace hecke::cli {

  inline constexpr int exit_ok = 0;
  inline constexpr int exit_check_failed = 1;
  inline constexpr int exit_invalid_input = 2;
  inline constexpr int exit_cross_check_mismatch = 3;

  enum class Format { csv, table, records };

  /// Raw parameter flags as typed; absent flags stay empty.
  struct ParamFlags {
    std::optional<std::string> q;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> gamma;
    std::optional<std::string> file;

    bool any() const { return q || alpha || beta || gamma || file; }
  };

  /// Merges a parameter file with inline flags. Flags win; each override of
  /// a value present in the file writes a warning to `warnings`. Throws
  /// ParamError on malformed or inconsistent parameters.
  TraceParams resolve_params(ParamFlags const& flags, std::ostream& warnings);

  struct RunConfig {
    std::string subcommand;
    ParamFlags params;
    Format format = Format::csv;
    bool expensive = false;
    bool verbose = false;
    bool cross_check = false;
    bool dual_path = false;
    std::optional<std::size_t> m;
    std::optional<std::string> partition;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> n;
    std::optional<unsigned> p;
    std::string suite = "all";
  };

  int cmd_trace(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_series(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_gram(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err);

  /// Runs the named suite and returns its checks sorted by name. `params`
  /// is required for the rmatrix, tensor and gram suites.
  std::vector<CheckResult> run_suite(std::string const& suite, std::optional<TraceParams> const& params,
                                     RunConfig const& config, std::ostream& log);

  /// Entry point shared by the executable and the tests; `args` excludes the
  /// program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli

#endif  // HECKE_CLI_HPP
