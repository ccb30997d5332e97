#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/cli.hpp"

namespace hecke::cli {

  namespace {
    struct RawParams {
      std::optional<std::string> q;
      std::optional<std::string> alpha;
      std::optional<std::string> beta;
      std::optional<std::string> gamma;
    };

    std::string scalar_text(nlohmann::json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_integer()) {
        return std::to_string(v.get<long>());
      }
      throw ParamError("parameter values must be rational strings such as \"1/2\"");
    }

    std::string list_text(nlohmann::json const& v) {
      if (!v.is_array()) {
        throw ParamError("\"alpha\" and \"beta\" must be lists");
      }
      std::string out;
      for (auto const& item : v) {
        if (!out.empty()) {
          out += ',';
        }
        out += scalar_text(item);
      }
      return out;
    }

    RawParams read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParamError("cannot read parameter file " + path);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(buffer.str());
      } catch (nlohmann::json::exception const& e) {
        throw ParamError("malformed parameter file " + path + ": " + e.what());
      }
      if (!j.is_object()) {
        throw ParamError("parameter file " + path + " must hold a JSON object");
      }
      RawParams raw;
      if (j.contains("q")) {
        raw.q = scalar_text(j.at("q"));
      }
      if (j.contains("alpha")) {
        raw.alpha = list_text(j.at("alpha"));
      }
      if (j.contains("beta")) {
        raw.beta = list_text(j.at("beta"));
      }
      if (j.contains("gamma")) {
        raw.gamma = scalar_text(j.at("gamma"));
      }
      return raw;
    }

    void overlay(std::optional<std::string>& target, std::optional<std::string> const& flag,
                 char const* name, std::string const& file, std::ostream& warnings) {
      if (!flag) {
        return;
      }
      if (target && *target != *flag) {
        warnings << "warning: --" << name << " " << *flag << " overrides " << *target << " from " << file
                 << '\n';
      }
      target = flag;
    }
  }  // namespace

  TraceParams resolve_params(ParamFlags const& flags, std::ostream& warnings) {
    RawParams raw;
    if (flags.file) {
      raw = read_file(*flags.file);
    }
    std::string const source = flags.file.value_or("");
    overlay(raw.q, flags.q, "q", source, warnings);
    overlay(raw.alpha, flags.alpha, "alpha", source, warnings);
    overlay(raw.beta, flags.beta, "beta", source, warnings);
    overlay(raw.gamma, flags.gamma, "gamma", source, warnings);

    auto rational = [](std::string const& text, char const* name) {
      try {
        return Rational::parse(text);
      } catch (std::invalid_argument const& e) {
        throw ParamError(std::string("invalid --") + name + " value '" + text + "': " + e.what());
      }
    };
    auto list = [](std::string const& text, char const* name) {
      try {
        return parse_rational_list(text);
      } catch (std::invalid_argument const& e) {
        throw ParamError(std::string("invalid --") + name + " list '" + text + "': " + e.what());
      }
    };
    return TraceParams::make(raw.q ? rational(*raw.q, "q") : Rational(2),
                             raw.alpha ? list(*raw.alpha, "alpha") : std::vector<Rational>{},
                             raw.beta ? list(*raw.beta, "beta") : std::vector<Rational>{},
                             raw.gamma ? rational(*raw.gamma, "gamma") : Rational(0));
  }

}  // namespace hecke::cli
