#include "supertab/lr.hpp"

#include <algorithm>

#include "supertab/branching.hpp"

namespace supertab {

namespace {

// Fills λ/σ in reverse reading order: rows top to bottom, each row right to
// left. At each cell the value is at most the one to its right (row weak
// increase read left to right) and larger than the one above (column
// strictness). The prefix of the reverse reading word must stay a lattice
// word.
class LrSearch {
 public:
  LrSearch(const Partition& sigma, const Partition& mu, const Partition& lambda)
      : sigma_(sigma), lambda_(lambda), remaining_(mu.parts()),
        used_(mu.length(), 0) {
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      grid_.emplace_back(static_cast<std::size_t>(lambda[r]), 0);
    }
  }

  std::uint64_t run() {
    next(0, static_cast<int>(lambda_[0]) - 1);
    return count_;
  }

 private:
  void next(std::size_t r, int c) {
    while (r < lambda_.length() && c < sigma_[r]) {
      ++r;
      c = r < lambda_.length() ? lambda_[r] - 1 : -1;
    }
    if (r >= lambda_.length()) {
      ++count_;
      return;
    }
    const auto cell_c = static_cast<std::size_t>(c);
    int hi = static_cast<int>(remaining_.size());
    if (c + 1 < lambda_[r]) hi = std::min(hi, grid_[r][cell_c + 1]);
    int lo = 1;
    if (r > 0 && c < lambda_[r - 1] && c >= sigma_[r - 1]) {
      lo = grid_[r - 1][cell_c] + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      const auto idx = static_cast<std::size_t>(v - 1);
      if (remaining_[idx] == 0) continue;
      if (v > 1 && used_[idx] + 1 > used_[idx - 1]) continue;
      grid_[r][cell_c] = v;
      --remaining_[idx];
      ++used_[idx];
      next(r, c - 1);
      ++remaining_[idx];
      --used_[idx];
    }
  }

  const Partition& sigma_;
  const Partition& lambda_;
  std::vector<int> remaining_;
  std::vector<int> used_;
  std::vector<std::vector<int>> grid_;
  std::uint64_t count_ = 0;
};

Partition one_row(int n) { return n == 0 ? Partition() : Partition{n}; }

Partition one_column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& sigma, const Partition& mu,
                             const Partition& lambda) {
  if (!lambda.contains(sigma)) return 0;
  if (sigma.size() + mu.size() != lambda.size()) return 0;
  return LrSearch(sigma, mu, lambda).run();
}

int pieri_row(const Partition& sigma, int n, const Partition& lambda) {
  if (!lambda.contains(sigma) || lambda.size() - sigma.size() != n) return 0;
  return is_horizontal_strip(SkewShape(lambda, sigma)) ? 1 : 0;
}

int pieri_column(const Partition& sigma, int n, const Partition& lambda) {
  if (!lambda.contains(sigma) || lambda.size() - sigma.size() != n) return 0;
  return is_horizontal_strip(SkewShape(conjugate(lambda), conjugate(sigma))) ? 1 : 0;
}

BranchMultiplicityReport verify_branch_multiplicities(const BorelSequence& b,
                                                      const Partition& lambda) {
  BranchMultiplicityReport report;
  if (b.empty()) return report;
  const Truncation cut = truncate(b);
  const auto branched = branch(b, lambda);
  for (const auto& sigma : subpartitions(lambda)) {
    if (!is_hook(sigma, cut.rest.m(), cut.rest.n())) continue;
    ++report.candidates;
    std::uint64_t expected = 0;
    for (int s = 0; s <= lambda.size() - sigma.size(); ++s) {
      const Partition mu = cut.removed == Symbol::kDelta ? one_row(s) : one_column(s);
      expected += lr_coefficient(sigma, mu, lambda);
    }
    const auto got = static_cast<std::uint64_t>(
        std::count(branched.begin(), branched.end(), sigma));
    report.max_multiplicity = std::max({report.max_multiplicity, expected, got});
    if (expected != got) {
      report.ok = false;
      report.mismatches.push_back(MultiplicityMismatch{sigma, expected, got});
    }
  }
  return report;
}

}  // namespace supertab
