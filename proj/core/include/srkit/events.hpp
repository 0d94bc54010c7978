#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srkit {

/// Scale-aware zero test: |x| counts as zero below abs + rel * scale.
struct ZeroThreshold {
  double abs = 1e-300;
  double rel = 1e-14;

  bool is_zero(double x, double scale) const {
    const double magnitude = x < 0 ? -x : x;
    return magnitude <= abs + rel * scale;
  }
};

enum class CureKind { householder2, givens2, block };

enum class EventKind { breakdown, near_breakdown, cure_applied, fixup_applied };

/// One entry of the ledger a reduction or factorization keeps about the
/// eliminations that went wrong and what was done about them.
struct ReductionEvent {
  EventKind kind = EventKind::breakdown;
  std::size_t step = 0;       // 1-based stage index
  double sub_entry = 0.0;     // entry that had to be annihilated
  double pivot_entry = 0.0;   // entry the elimination divides by
  double ratio = 0.0;         // |sub/pivot|; infinity when the pivot vanished
  std::optional<CureKind> cure;
};

/// Raised when a symplectic elimination does not exist: the pivot entry is
/// zero while the entry it must annihilate is not.
class BreakdownError : public std::runtime_error {
 public:
  BreakdownError(std::size_t step, double sub_entry, double pivot_entry, std::string what)
      : std::runtime_error(std::move(what)), step(step), sub_entry(sub_entry), pivot_entry(pivot_entry) {}

  std::size_t step;
  double sub_entry;
  double pivot_entry;
  std::vector<ReductionEvent> events;  // ledger up to and including the failure
};

/// Raised when curing retries at one column exceed the configured budget.
class CureBudgetError : public std::runtime_error {
 public:
  CureBudgetError(std::size_t step, std::string what)
      : std::runtime_error(std::move(what)), step(step) {}

  std::size_t step;
  std::vector<ReductionEvent> events;
};

/// Raised when the eigensolver runs out of exceptional restarts.
class RestartBudgetError : public std::runtime_error {
 public:
  explicit RestartBudgetError(std::string what) : std::runtime_error(std::move(what)) {}
};

}  // namespace srkit
