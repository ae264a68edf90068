#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fvj/flat_value.hpp"
#include "fvj/state_sum.hpp"

namespace fvj::cli {

enum ExitCode : int { kSuccess = 0, kSemanticFailure = 1, kInputError = 2, kResourceCap = 3 };

struct RunConfig {
  std::string command;
  std::string input = "-";
  Format format = Format::text;
  int max_crossings = kDefaultStateCap;
  int jobs = 1;
  bool bracket = false;
  bool dump_states = false;
};

/// Overrides for tests; the classifier replaces closure classification.
struct Hooks {
  Classifier classifier;
};

/// Full command line (args[0] is the program name). "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

int cmd_validate(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_jones(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
              const Hooks& hooks = {});
int cmd_oracle(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
               const Hooks& hooks = {});
int cmd_canonical(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                  const Hooks& hooks = {});

}  // namespace fvj::cli
