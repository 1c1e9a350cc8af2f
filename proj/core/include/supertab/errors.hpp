#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supertab {

// A precondition on the mathematical input failed (non-hook shape, empty
// Borel word, invalid chain, non-semistandard tableau, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested enumeration exceeds a configured size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A bounded search visited more nodes than its budget allows.
class SearchLimitExceeded : public std::runtime_error {
 public:
  explicit SearchLimitExceeded(std::uint64_t limit)
      : std::runtime_error("search node limit exceeded (" +
                           std::to_string(limit) + " nodes)"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

// Node budget shared by the backtracking searches. An unset budget means
// unlimited.
class NodeBudget {
 public:
  NodeBudget() = default;
  explicit NodeBudget(std::uint64_t limit) : limit_(limit), bounded_(true) {}

  static NodeBudget unlimited() { return NodeBudget(); }

  void charge() {
    ++used_;
    if (bounded_ && used_ > limit_) throw SearchLimitExceeded(limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  bool bounded() const noexcept { return bounded_; }

 private:
  std::uint64_t limit_ = 0;
  std::uint64_t used_ = 0;
  bool bounded_ = false;
};

}  // namespace supertab
