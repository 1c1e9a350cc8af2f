#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace supertab {

// A partition, identified with its Young diagram. Trailing zeros are
// dropped at construction so equality is plain sequence equality.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }

  // Zero-based row access; rows past the end read as 0.
  int operator[](std::size_t row) const noexcept {
    return row < parts_.size() ? parts_[row] : 0;
  }

  // Number of nonzero rows.
  std::size_t length() const noexcept { return parts_.size(); }
  // Number of boxes.
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  bool contains(const Partition& inner) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Canonical enumeration order: reverse lexicographic, so (2) precedes (1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return b < a;
  }
};

void sort_canonical(std::vector<Partition>& partitions);

// λ/μ. Construction requires inner ⊆ outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int box_count() const noexcept { return outer_.size() - inner_.size(); }

  SkewShape conjugate() const;

 private:
  Partition outer_;
  Partition inner_;
};

struct Hook {
  int m = 0;
  int n = 0;
};

enum class StripKind { kHorizontal, kVertical };

Partition conjugate(const Partition& lambda);

// λ_{m+1} <= n.
bool is_hook(const Partition& lambda, int m, int n);
inline bool is_hook(const Partition& lambda, Hook hook) {
  return is_hook(lambda, hook.m, hook.n);
}

// At most one box in every column (the empty skew shape qualifies).
bool is_horizontal_strip(const SkewShape& shape);
// At most one box in every row.
bool is_vertical_strip(const SkewShape& shape);

// λ_i >= μ_i >= λ_{i+1} for all i.
bool interlaces(const Partition& mu, const Partition& lambda);

// All partitions of `total` with at most `max_length` rows and, when given,
// inside the (m|n)-hook. Reverse lexicographic order.
std::vector<Partition> enumerate_partitions(
    int total, std::optional<std::size_t> max_length = std::nullopt,
    std::optional<Hook> hook = std::nullopt);

// All σ ⊆ λ, canonical order.
std::vector<Partition> subpartitions(const Partition& lambda);

// All (m|n)-hook σ ⊆ λ such that λ/σ is a strip of the given kind,
// including σ = λ. Canonical order.
std::vector<Partition> strip_removals(const Partition& lambda, StripKind kind,
                                      Hook hook);

}  // namespace supertab
