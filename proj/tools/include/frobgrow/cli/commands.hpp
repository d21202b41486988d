#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobgrow/budget.hpp"
#include "frobgrow/decomposer.hpp"

namespace frobgrow::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::optional<std::string> family;
  std::optional<std::string> ring_file;
  std::optional<std::uint64_t> p;
  std::optional<std::string> e_range;  // "2" or "1..3"
  std::optional<std::uint64_t> q;
  std::optional<std::string> r;        // "r0,r1,r2"
  std::optional<unsigned> n;
  std::string h_source = "minors";
  std::optional<std::string> z;
  unsigned panel = 10;
  std::uint64_t seed = 1;
  Budget budget;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output;
  bool timings = true;
};

struct CommandResult {
  int exit_code = kSuccess;
  nlohmann::ordered_json json;
  std::string csv;
  std::string text;
  /// Written to stderr (the witness on verification failure).
  std::string message;

  std::string render(OutputFormat f) const;
};

/// Throws InputError on inconsistent settings.
void validate(const RunConfig& c);
/// "3" -> {3}; "1..3" -> {1,2,3}.
std::vector<unsigned> parse_e_range(const std::string& s);
SequenceSpec parse_spec(const std::string& r, PrimeModulus p);

CommandResult cmd_pseq(const RunConfig& c);
CommandResult cmd_census(const RunConfig& c);
CommandResult cmd_hq(const RunConfig& c);
CommandResult cmd_decompose(const RunConfig& c);
CommandResult cmd_verify_lemmas(const RunConfig& c);
CommandResult cmd_saturate(const RunConfig& c);
CommandResult cmd_witness(const RunConfig& c);

/// Full command line (argv[0] included); returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobgrow::cli
