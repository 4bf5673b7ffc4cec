#pragma once

#include <chrono>
#include <cstdint>

namespace bnrank {

struct SearchBudget {
  std::chrono::milliseconds wall_clock{60'000};
  std::uint64_t node_limit = 100'000'000;

  static SearchBudget unlimited() {
    return {std::chrono::milliseconds::max(), UINT64_MAX};
  }
};

// Counts search nodes against a SearchBudget. Once exhausted it stays so.
class BudgetMeter {
 public:
  using Clock = std::chrono::steady_clock;

  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  // Accounts one node; false once the budget is spent.
  bool step() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.node_limit) {
      exhausted_ = true;
    } else if ((nodes_ & 0x3ff) == 0 && elapsed() > budget_.wall_clock) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace bnrank
