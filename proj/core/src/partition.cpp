#include "supertab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supertab {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

void sort_canonical(std::vector<Partition>& partitions) {
  std::sort(partitions.begin(), partitions.end(), CanonicalOrder{});
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw std::invalid_argument("skew shape: inner " + inner_.to_string() +
                                " is not contained in outer " +
                                outer_.to_string());
  }
}

SkewShape SkewShape::conjugate() const {
  return SkewShape(supertab::conjugate(outer_), supertab::conjugate(inner_));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> columns(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++columns[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(columns));
}

bool is_hook(const Partition& lambda, int m, int n) {
  return lambda[static_cast<std::size_t>(m)] <= n;
}

bool is_horizontal_strip(const SkewShape& shape) {
  return interlaces(shape.inner(), shape.outer());
}

bool is_vertical_strip(const SkewShape& shape) {
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  for (std::size_t i = 0; i < outer.length(); ++i) {
    if (outer[i] - inner[i] > 1) return false;
  }
  return true;
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  const std::size_t rows = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t max_length,
                    const std::optional<Hook>& hook, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (prefix.size() >= max_length) return;
  int cap = std::min(max_part, remaining);
  if (hook && prefix.size() >= static_cast<std::size_t>(hook->m)) {
    cap = std::min(cap, hook->n);
  }
  for (int part = cap; part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, max_length, hook, prefix, out);
    prefix.pop_back();
  }
}

void subpartitions_rec(const Partition& lambda, std::size_t row, int cap,
                       std::vector<int>& prefix, std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(cap, lambda[row]); part >= 0; --part) {
    prefix.push_back(part);
    subpartitions_rec(lambda, row + 1, part, prefix, out);
    prefix.pop_back();
  }
}

// Horizontal strips: σ_i ranges over [λ_{i+1}, λ_i] independently.
void horizontal_rec(const Partition& lambda, std::size_t row,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = lambda[row]; part >= lambda[row + 1]; --part) {
    prefix.push_back(part);
    horizontal_rec(lambda, row + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int total,
                                            std::optional<std::size_t> max_length,
                                            std::optional<Hook> hook) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<int> prefix;
  partitions_rec(total, total, max_length.value_or(static_cast<std::size_t>(total)),
                 hook, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subpartitions_rec(lambda, 0, lambda[0], prefix, out);
  return out;
}

std::vector<Partition> strip_removals(const Partition& lambda, StripKind kind,
                                      Hook hook) {
  std::vector<Partition> strips;
  std::vector<int> prefix;
  if (kind == StripKind::kHorizontal) {
    horizontal_rec(lambda, 0, prefix, strips);
  } else {
    horizontal_rec(conjugate(lambda), 0, prefix, strips);
    for (auto& sigma : strips) sigma = conjugate(sigma);
  }
  std::vector<Partition> out;
  for (auto& sigma : strips) {
    if (is_hook(sigma, hook)) out.push_back(std::move(sigma));
  }
  sort_canonical(out);
  return out;
}

}  // namespace supertab
