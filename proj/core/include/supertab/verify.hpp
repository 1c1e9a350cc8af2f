#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "supertab/bigint.hpp"
#include "supertab/borel.hpp"
#include "supertab/partition.hpp"
#include "supertab/tableau.hpp"

namespace supertab {

// K^b_{λμ} for every content μ realized by a b-semistandard tableau of
// shape λ. Keys are ordered by (unbarred, barred) counts.
struct KostkaTable {
  std::map<Content, std::uint64_t> entries;

  std::uint64_t total() const;
  std::uint64_t at(const Content& content) const;

  friend bool operator==(const KostkaTable&, const KostkaTable&) = default;
};

std::uint64_t super_kostka(const BorelSequence& b, const Partition& lambda,
                           const Content& content,
                           std::optional<std::uint64_t> max_nodes = std::nullopt);

KostkaTable kostka_table(const BorelSequence& b, const Partition& lambda,
                         std::optional<std::uint64_t> max_nodes = std::nullopt);

struct KostkaDifference {
  BorelSequence first;
  BorelSequence second;
  Content content;
  std::uint64_t first_count = 0;
  std::uint64_t second_count = 0;
};

struct IndependenceReport {
  bool ok = true;
  std::vector<BorelSequence> borels;
  KostkaTable table;  // the table for the first Borel
  std::optional<KostkaDifference> difference;
};

// Compares kostka_table(b, λ) across all Borels for gl(m|n) and reports the
// first disagreement.
IndependenceReport verify_borel_independence(
    int m, int n, const Partition& lambda,
    std::optional<std::uint64_t> max_nodes = std::nullopt);

// Number of semistandard tableaux of shape λ with entries in {1..k}; zero
// when l(λ) > k.
BigInt gl_dimension(const Partition& lambda, int k);

// Graded dimension of S(C^{m|n} ⊗ C^k) in degree d:
// Σ_{a+c=d} C(mk+a-1, a) C(nk, c).
BigInt supersymmetric_dimension(int m, int n, int k, int d);

struct HoweReport {
  bool ok = true;
  BigInt lhs;  // Σ_λ dim L_{m|n}(b, λ^b) · dim L_k(λ)
  BigInt rhs;  // supersymmetric_dimension(m, n, k, d)
  std::size_t terms = 0;
};

// Throws std::invalid_argument when b does not have m δ's and n ε's.
HoweReport verify_howe_dimension(int m, int n, int k, int d, const BorelSequence& b);

}  // namespace supertab
