#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supertab/bigint.hpp"
#include "supertab/borel.hpp"
#include "supertab/partition.hpp"
#include "supertab/tableau.hpp"

namespace supertab {

struct ChainStep {
  int m = 0;
  int n = 0;
  Partition lambda;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

// A Gelfand-Tsetlin label: (m, n, λ) = steps[0], then one step per
// truncation of b, ending at (0, 0, ()). A chain for gl(m|n) has m+n+1
// steps.
struct BranchingChain {
  std::vector<ChainStep> steps;

  friend bool operator==(const BranchingChain&, const BranchingChain&) = default;
};

// One restriction step gl(m|n) -> gl(m̂|n̂) along truncate(b): the σ
// occurring in the restriction of the simple module labelled by λ, each
// with multiplicity one. Canonical order.
std::vector<Partition> branch(const BorelSequence& b, const Partition& lambda);

// Every chain obtained by iterating branch(). Throws SearchLimitExceeded if
// more than max_nodes partial chains are visited.
std::vector<BranchingChain> chains(const BorelSequence& b, const Partition& lambda,
                                   std::optional<std::uint64_t> max_nodes = std::nullopt);

// Checks the chain conditions against b: step shapes follow the
// truncations, every λ^k is an (m_k|n_k)-hook, and successive differences are
// horizontal strips after removing a δ and vertical strips after removing
// an ε.
bool is_valid_chain(const BorelSequence& b, const BranchingChain& chain);

// Boxes of λ^k/λ^{k+1} receive the k-th largest letter under <_b.
Tableau chain_to_tableau(const BorelSequence& b, const BranchingChain& chain);

// Strips the largest letter first. Throws DomainError if t is not
// b-semistandard.
BranchingChain tableau_to_chain(const BorelSequence& b, const Tableau& t);

// Number of chains, by memoized recursion over (prefix of b, σ). One counter
// per Borel word; the memo is not synchronized, so share a counter across
// threads only behind external locking.
class DimensionCounter {
 public:
  explicit DimensionCounter(BorelSequence b);

  const BorelSequence& borel() const noexcept { return b_; }
  BigInt operator()(const Partition& lambda);

 private:
  BigInt count(std::size_t prefix, const Partition& lambda);

  BorelSequence b_;
  std::vector<BorelSequence> prefixes_;
  std::map<std::pair<std::size_t, Partition>, BigInt> memo_;
};

BigInt dimension(const BorelSequence& b, const Partition& lambda);

}  // namespace supertab
