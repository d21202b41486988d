#pragma once

#include <chrono>
#include <cstddef>
#include <string>

namespace frobgrow {

/// Resource limits shared by every expensive routine. Exceeding one raises
/// BudgetExceeded; no routine ever returns a truncated answer silently.
struct Budget {
  std::size_t gb_pairs = 4'000'000;         // S-pairs processed per basis
  std::size_t gb_basis = 100'000;           // basis elements per basis
  std::size_t oracle_dim = 40'000;          // unknowns in the bounded membership system
  std::size_t minor_subsets = 3'000'000;    // square submatrices examined per matrix
  std::size_t saturation_steps = 512;       // colons per saturation
  std::size_t containment_products = 4'000'000;
  double wall_seconds = 1800.0;             // per basis computation / minor sweep

  /// Multiplies every limit by `factor` (> 0).
  Budget scaled(double factor) const;

  /// Defaults scaled by the FROBGROW_BUDGET_SCALE environment variable, if set.
  static Budget from_environment();
};

/// Process-wide budget used when a caller does not pass one explicitly.
Budget current_budget();
void set_current_budget(const Budget& b);

/// Wall-clock guard for one long-running computation.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool expired() const { return elapsed() > seconds_; }
  /// Throws BudgetExceeded naming `what` once expired.
  void check(const std::string& what) const;

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace frobgrow
