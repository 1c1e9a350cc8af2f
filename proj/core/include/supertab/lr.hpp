#pragma once

#include <cstdint>
#include <vector>

#include "supertab/borel.hpp"
#include "supertab/partition.hpp"

namespace supertab {

// c^λ_{σμ}: semistandard fillings of λ/σ with content μ whose reverse
// row reading word (right to left, top to bottom) is a lattice word.
// Zero when σ ⊄ λ or |σ| + |μ| != |λ|.
std::uint64_t lr_coefficient(const Partition& sigma, const Partition& mu,
                             const Partition& lambda);

// c^λ_{σ,(n)}: 1 iff λ/σ is a horizontal strip of n boxes.
int pieri_row(const Partition& sigma, int n, const Partition& lambda);
// c^λ_{σ,(1^n)}: 1 iff λ'/σ' is a horizontal strip of n boxes.
int pieri_column(const Partition& sigma, int n, const Partition& lambda);

struct MultiplicityMismatch {
  Partition sigma;
  std::uint64_t expected = 0;  // Σ_μ c^λ_{σμ}
  std::uint64_t got = 0;       // occurrences of σ in branch(b, λ)
};

struct BranchMultiplicityReport {
  bool ok = true;
  std::size_t candidates = 0;  // hook σ ⊆ λ examined
  std::uint64_t max_multiplicity = 0;
  std::vector<MultiplicityMismatch> mismatches;
};

// For every (m̂|n̂)-hook σ ⊆ λ compares the multiplicity of σ in
// branch(b, λ) with Σ_μ c^λ_{σμ}, μ ranging over one-row partitions when b
// ends in δ and one-column partitions when it ends in ε.
BranchMultiplicityReport verify_branch_multiplicities(const BorelSequence& b,
                                                      const Partition& lambda);

}  // namespace supertab
