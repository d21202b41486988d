#include "frobgrow/budget.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

std::size_t scale_count(std::size_t v, double f) {
  double s = std::ceil(static_cast<double>(v) * f);
  return s < 1.0 ? 1 : static_cast<std::size_t>(s);
}

std::mutex& budget_mutex() {
  static std::mutex m;
  return m;
}

Budget& budget_storage() {
  static Budget b = Budget::from_environment();
  return b;
}

}  // namespace

Budget Budget::scaled(double f) const {
  if (!(f > 0.0)) throw InputError("budget scale must be positive");
  Budget b = *this;
  b.gb_pairs = scale_count(gb_pairs, f);
  b.gb_basis = scale_count(gb_basis, f);
  b.oracle_dim = scale_count(oracle_dim, f);
  b.minor_subsets = scale_count(minor_subsets, f);
  b.saturation_steps = scale_count(saturation_steps, f);
  b.containment_products = scale_count(containment_products, f);
  b.wall_seconds = wall_seconds * f;
  return b;
}

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("FROBGROW_BUDGET_SCALE")) {
    char* end = nullptr;
    double f = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(f > 0.0)) throw InputError("FROBGROW_BUDGET_SCALE must be a positive number");
    b = b.scaled(f);
  }
  return b;
}

Budget current_budget() {
  std::lock_guard lock(budget_mutex());
  return budget_storage();
}

void set_current_budget(const Budget& b) {
  std::lock_guard lock(budget_mutex());
  budget_storage() = b;
}

void Deadline::check(const std::string& what) const {
  if (expired()) throw BudgetExceeded(what + ": wall-clock budget of " + std::to_string(seconds_) + " s exhausted");
}

}  // namespace frobgrow
