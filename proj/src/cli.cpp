#include "fvj/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fvj/cover_oracle.hpp"
#include "fvj/diagram.hpp"
#include "fvj/errors.hpp"

namespace fvj::cli {

namespace {

constexpr int kSchemaVersion = 1;

struct InputUnavailable : Error {
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputUnavailable("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw InputUnavailable("cannot read " + path);
  return ss.str();
}

std::string slot_name(const BoundaryLayout& L, int slot) {
  static constexpr char kSide[] = {'r', 't', 'l', 'b'};
  return kSide[static_cast<int>(L.side_of(slot))] + std::to_string(L.index_of(slot) + 1);
}

std::string matching_string(const SmoothedState& s) {
  std::string out;
  for (int a = 0; a < s.layout.size(); ++a) {
    const int b = s.partner[static_cast<std::size_t>(a)];
    if (b < a) continue;
    if (!out.empty()) out += ' ';
    out += slot_name(s.layout, a) + "-" + slot_name(s.layout, b);
  }
  return out.empty() ? "-" : out;
}

std::string census_pair(const ComponentCensus& c) {
  return "(" + std::to_string(c.trivial) + "," + std::to_string(c.eights) + ")";
}

nlohmann::json census_json(const ComponentCensus& c) { return {{"t", c.trivial}, {"e", c.eights}}; }

nlohmann::json envelope(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

/// Loads and validates the input; on failure reports and yields the exit code.
std::optional<CutTangle> load(const RunConfig& config, std::istream& in, std::ostream& err, int& code) {
  try {
    return parse_tangle(read_input(config.input, in));
  } catch (const InvalidTangle& e) {
    for (const auto& v : e.violations()) err << v.to_string() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  code = kInputError;
  return std::nullopt;
}

StateSumOptions options_for(const RunConfig& config, const Hooks& hooks) {
  StateSumOptions o;
  o.max_crossings = config.max_crossings;
  o.jobs = config.jobs;
  o.classifier = hooks.classifier;
  return o;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const EmbeddingViolation& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticFailure;
  }
}

}  // namespace

int cmd_validate(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  CutTangle t;
  try {
    t = parse_tangle_syntax(read_input(config.input, in));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto violations = validate(t);
  if (config.format == Format::json) {
    auto j = envelope("validate");
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) j["violations"].push_back(v.to_string());
    out << j.dump() << '\n';
  } else {
    for (const auto& v : violations) out << v.to_string() << '\n';
  }
  return violations.empty() ? kSuccess : kSemanticFailure;
}

int cmd_jones(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  int code = kSuccess;
  const auto t = load(config, in, err, code);
  if (!t) return code;
  return guarded(err, [&] {
    auto options = options_for(config, hooks);
    options.record_states = config.dump_states;
    const auto result = evaluate_states(*t, options);
    const auto w = writhe(*t);
    const FlatValue value = config.bracket ? result.bracket : fv_scale(writhe_prefactor(w), result.bracket);
    const int n = static_cast<int>(t->crossings.size());

    if (config.format == Format::json) {
      auto j = envelope("jones");
      j["quantity"] = config.bracket ? "bracket" : "jones";
      j["crossings"] = n;
      j["writhe"] = w;
      j["value"] = to_json(value);
      if (config.dump_states) {
        j["states"] = nlohmann::json::array();
        for (const auto& r : result.states)
          j["states"].push_back({{"state", state_string(state_from_index(r.index, n))},
                                 {"exponent", r.exponent},
                                 {"t", r.census.trivial},
                                 {"e", r.census.eights}});
      }
      out << j.dump() << '\n';
      return kSuccess;
    }
    for (const auto& r : result.states) {
      const auto bits = state_string(state_from_index(r.index, n));
      out << "state " << (bits.empty() ? "-" : bits) << " exp=" << r.exponent << " t=" << r.census.trivial
          << " e=" << r.census.eights << '\n';
    }
    out << render(value, Format::text) << '\n';
    return kSuccess;
  });
}

int cmd_oracle(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  int code = kSuccess;
  const auto t = load(config, in, err, code);
  if (!t) return code;
  return guarded(err, [&] {
    const auto report = oracle_check(*t, options_for(config, hooks));
    if (config.format == Format::json) {
      auto j = envelope("oracle");
      j["states"] = report.states_checked;
      j["mismatches"] = nlohmann::json::array();
      for (const auto& m : report.mismatches)
        j["mismatches"].push_back({{"state", m.state},
                                   {"exponent", m.exponent},
                                   {"classified", census_json(m.classified)},
                                   {"oracle", census_json(m.oracle)},
                                   {"matching", matching_string(m.smoothed)},
                                   {"interior_loops", m.smoothed.interior_loops},
                                   {"error", m.error}});
      out << j.dump() << '\n';
    } else {
      out << "states=" << report.states_checked << " mismatches=" << report.mismatches.size() << '\n';
      for (const auto& m : report.mismatches) {
        out << "MISMATCH state=" << (m.state.empty() ? "-" : m.state) << " exp=" << m.exponent
            << " classify=" << census_pair(m.classified) << " oracle=" << census_pair(m.oracle)
            << " loops=" << m.smoothed.interior_loops << " matching=" << matching_string(m.smoothed);
        if (!m.error.empty()) out << " error=\"" << m.error << '"';
        out << '\n';
      }
    }
    return report.ok() ? kSuccess : kSemanticFailure;
  });
}

int cmd_canonical(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                  const Hooks& hooks) {
  int code = kSuccess;
  const auto t = load(config, in, err, code);
  if (!t) return code;
  return guarded(err, [&] {
    auto options = options_for(config, hooks);
    options.record_states = true;
    const auto result = evaluate_states(*t, options);
    const int n = static_cast<int>(t->crossings.size());
    std::string header;
    if (!t->surface.is_torus()) header = t->surface.d % 2 == 1 ? "C(K')" : "C(Kbar')";

    if (config.format == Format::json) {
      auto j = envelope("canonical");
      j["canonical"] = header.empty() ? nlohmann::json(nullptr) : nlohmann::json(header);
      j["states"] = nlohmann::json::array();
      for (const auto& r : result.states)
        j["states"].push_back({{"state", state_string(state_from_index(r.index, n))},
                               {"exponent", r.exponent},
                               {"t", r.census.trivial},
                               {"e", r.census.eights}});
      out << j.dump() << '\n';
      return kSuccess;
    }
    if (!header.empty())
      out << "canonical: " << header << '\n';
    else
      out << "canonical: n/a (torus d1=" << t->surface.d1 << " d2=" << t->surface.d2 << ")\n";
    for (const auto& r : result.states) {
      const auto bits = state_string(state_from_index(r.index, n));
      out << (bits.empty() ? "-" : bits) << " O^" << r.census.trivial << " eight^" << r.census.eights << '\n';
    }
    return kSuccess;
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Flat-virtual Jones polynomial of cylinder and torus tangle closures", "fvjones"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  const unsigned hw = std::thread::hardware_concurrency();
  config.jobs = hw == 0 ? 1 : static_cast<int>(hw);

  auto add_common = [&](CLI::App* sub, bool computes) {
    sub->add_option("file", config.input, "Tangle file, or - for stdin")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (computes) {
      sub->add_option("--max-crossings", config.max_crossings, "Refuse inputs with more crossings")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    }
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check a tangle file");
  add_common(validate_cmd, false);
  auto* jones_cmd = app.add_subcommand("jones", "Flat-virtual Jones polynomial");
  add_common(jones_cmd, true);
  jones_cmd->add_flag("--bracket", config.bracket, "Print the bracket instead of the normalized polynomial");
  jones_cmd->add_flag("--states", config.dump_states, "Print the census of every state");
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check classification against homology tracing");
  add_common(oracle_cmd, true);
  auto* canonical_cmd = app.add_subcommand("canonical", "Semi-trivial decomposition of every state");
  add_common(canonical_cmd, true);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  config.format = format == "json" ? Format::json : Format::text;

  if (validate_cmd->parsed()) return cmd_validate(config, in, out, err);
  if (jones_cmd->parsed()) return cmd_jones(config, in, out, err, hooks);
  if (oracle_cmd->parsed()) return cmd_oracle(config, in, out, err, hooks);
  return cmd_canonical(config, in, out, err, hooks);
}

}  // namespace fvj::cli
