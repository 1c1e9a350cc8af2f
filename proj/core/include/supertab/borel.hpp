#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "supertab/partition.hpp"

namespace supertab {

enum class Symbol { kDelta, kEpsilon };

// An ε-δ word with m δ's and n ε's. Each word indexes one conjugacy class
// of Borel subalgebras of gl(m|n); the standard Borel is δ^m ε^n.
class BorelSequence {
 public:
  BorelSequence() = default;
  explicit BorelSequence(std::vector<Symbol> word);

  // Parses the CLI/JSON encoding: 'd' for δ, 'e' for ε.
  static BorelSequence parse(std::string_view text);

  const std::vector<Symbol>& word() const noexcept { return word_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  // "ddeded" style encoding.
  std::string to_string() const;

  friend bool operator==(const BorelSequence&, const BorelSequence&) = default;
  friend auto operator<=>(const BorelSequence& a, const BorelSequence& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Symbol> word_;
  int m_ = 0;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BorelSequence& b);

// A letter of the alphabet {1..m, 1̄..n̄}. Indices are 1-based.
struct Letter {
  bool barred = false;
  int index = 1;

  static constexpr Letter unbarred(int i) { return Letter{false, i}; }
  static constexpr Letter bar(int j) { return Letter{true, j}; }

  bool valid_for(int m, int n) const noexcept {
    return index >= 1 && index <= (barred ? n : m);
  }

  // "3" or "2b".
  std::string encode() const;
  // "3" or "2'".
  std::string to_text() const;
  static Letter decode(std::string_view token);

  friend bool operator==(const Letter&, const Letter&) = default;
  // Structural order (unbarred before barred); not the b-order.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Σ μ_i δ_i + Σ ν_j ε_j.
struct Weight {
  std::vector<int> delta;
  std::vector<int> epsilon;

  int total() const noexcept;
  bool is_polynomial() const noexcept;

  friend bool operator==(const Weight&, const Weight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct Offsets {
  std::vector<int> d;  // ε's before the i-th δ
  std::vector<int> e;  // δ's before the j-th ε
};

BorelSequence standard(int m, int n);

inline constexpr int kDefaultBorelCap = 20;

// All C(m+n, m) words, lexicographic with δ before ε.
std::vector<BorelSequence> all_sequences(int m, int n,
                                         int cap = kDefaultBorelCap);

Offsets offsets(const BorelSequence& b);

// λ^b: p_i = max(λ_i - d_i, 0), q_j = max(λ'_j - e_j, 0).
Weight frobenius_weight(const BorelSequence& b, const Partition& lambda);

// λ^♮: first m rows of λ on the δ side, the conjugate of the remaining rows
// on the ε side.
Weight natural_weight(const Partition& lambda, int m, int n);

// Position of a letter in b: the i-th δ stands for i, the j-th ε for j̄.
// Comparing positions is the total order <_b.
std::size_t position(const BorelSequence& b, Letter letter);
// Inverse of position().
Letter letter_at(const BorelSequence& b, std::size_t pos);

std::strong_ordering compare(const BorelSequence& b, Letter a, Letter c);

// The alphabet listed in increasing <_b order.
std::vector<Letter> ordered_alphabet(const BorelSequence& b);

struct Truncation {
  BorelSequence rest;
  Symbol removed;
};

// Drops the last symbol. Throws DomainError on the empty word.
Truncation truncate(const BorelSequence& b);

}  // namespace supertab
