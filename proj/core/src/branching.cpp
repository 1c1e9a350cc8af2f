#include "supertab/branching.hpp"

#include <algorithm>
#include <string>

#include "supertab/errors.hpp"

namespace supertab {

namespace {

void require_hook(int m, int n, const Partition& lambda) {
  if (!is_hook(lambda, m, n)) {
    throw DomainError(lambda.to_string() + " is not a (" + std::to_string(m) +
                      "|" + std::to_string(n) + ")-hook partition");
  }
}

std::vector<Partition> branch_unchecked(const BorelSequence& b,
                                        const Partition& lambda) {
  const Truncation cut = truncate(b);
  const Hook hook{cut.rest.m(), cut.rest.n()};
  const StripKind kind = cut.removed == Symbol::kDelta ? StripKind::kHorizontal
                                                       : StripKind::kVertical;
  return strip_removals(lambda, kind, hook);
}

std::vector<BorelSequence> prefixes_of(const BorelSequence& b) {
  std::vector<BorelSequence> out;
  out.reserve(b.size() + 1);
  for (std::size_t len = 0; len <= b.size(); ++len) {
    out.emplace_back(std::vector<Symbol>(b.word().begin(),
                                         b.word().begin() + static_cast<long>(len)));
  }
  return out;
}

void chains_rec(const std::vector<BorelSequence>& prefixes, std::size_t len,
                BranchingChain& current, NodeBudget& budget,
                std::vector<BranchingChain>& out) {
  budget.charge();
  if (len == 0) {
    out.push_back(current);
    return;
  }
  const BorelSequence& b = prefixes[len];
  const Partition lambda = current.steps.back().lambda;
  for (auto& sigma : branch_unchecked(b, lambda)) {
    current.steps.push_back(ChainStep{prefixes[len - 1].m(), prefixes[len - 1].n(),
                                      std::move(sigma)});
    chains_rec(prefixes, len - 1, current, budget, out);
    current.steps.pop_back();
  }
}

}  // namespace

std::vector<Partition> branch(const BorelSequence& b, const Partition& lambda) {
  if (b.empty()) throw DomainError("branching needs a nonempty Borel word");
  require_hook(b.m(), b.n(), lambda);
  return branch_unchecked(b, lambda);
}

std::vector<BranchingChain> chains(const BorelSequence& b, const Partition& lambda,
                                   std::optional<std::uint64_t> max_nodes) {
  require_hook(b.m(), b.n(), lambda);
  NodeBudget budget = max_nodes ? NodeBudget(*max_nodes) : NodeBudget::unlimited();
  const auto prefixes = prefixes_of(b);
  BranchingChain current;
  current.steps.push_back(ChainStep{b.m(), b.n(), lambda});
  std::vector<BranchingChain> out;
  chains_rec(prefixes, b.size(), current, budget, out);
  return out;
}

bool is_valid_chain(const BorelSequence& b, const BranchingChain& chain) {
  const auto& steps = chain.steps;
  if (steps.size() != b.size() + 1) return false;
  const auto prefixes = prefixes_of(b);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const BorelSequence& prefix = prefixes[b.size() - k];
    if (steps[k].m != prefix.m() || steps[k].n != prefix.n()) return false;
    if (!is_hook(steps[k].lambda, steps[k].m, steps[k].n)) return false;
    if (k == 0) continue;
    const Partition& outer = steps[k - 1].lambda;
    const Partition& inner = steps[k].lambda;
    if (!outer.contains(inner)) return false;
    const SkewShape diff(outer, inner);
    const bool delta_removed = steps[k - 1].n == steps[k].n;
    if (delta_removed ? !is_horizontal_strip(diff) : !is_vertical_strip(diff)) {
      return false;
    }
  }
  return true;
}

Tableau chain_to_tableau(const BorelSequence& b, const BranchingChain& chain) {
  if (!is_valid_chain(b, chain)) {
    throw DomainError("not a valid branching chain for " + b.to_string());
  }
  const Partition& shape = chain.steps.front().lambda;
  std::vector<Tableau::Row> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len));
  // Step k removes the letter at position size-1-k, the k-th largest.
  for (std::size_t k = 0; k + 1 < chain.steps.size(); ++k) {
    const Letter letter = letter_at(b, b.size() - 1 - k);
    const Partition& outer = chain.steps[k].lambda;
    const Partition& inner = chain.steps[k + 1].lambda;
    for (std::size_t r = 0; r < outer.length(); ++r) {
      for (int c = inner[r]; c < outer[r]; ++c) {
        rows[r][static_cast<std::size_t>(c)] = letter;
      }
    }
  }
  return Tableau(std::move(rows));
}

BranchingChain tableau_to_chain(const BorelSequence& b, const Tableau& t) {
  if (!is_b_semistandard(b, t)) {
    throw DomainError("tableau is not " + b.to_string() + "-semistandard");
  }
  const auto prefixes = prefixes_of(b);
  BranchingChain chain;
  chain.steps.push_back(ChainStep{b.m(), b.n(), t.shape()});
  // After stripping k letters, keep the boxes whose position is < size-k.
  for (std::size_t k = 1; k <= b.size(); ++k) {
    const std::size_t keep_below = b.size() - k;
    std::vector<int> parts;
    for (const auto& row : t.rows()) {
      const auto kept = std::count_if(row.begin(), row.end(), [&](const Letter& l) {
        return position(b, l) < keep_below;
      });
      parts.push_back(static_cast<int>(kept));
    }
    chain.steps.push_back(ChainStep{prefixes[keep_below].m(), prefixes[keep_below].n(),
                                    Partition(std::move(parts))});
  }
  return chain;
}

DimensionCounter::DimensionCounter(BorelSequence b)
    : b_(std::move(b)), prefixes_(prefixes_of(b_)) {}

BigInt DimensionCounter::operator()(const Partition& lambda) {
  require_hook(b_.m(), b_.n(), lambda);
  return count(b_.size(), lambda);
}

BigInt DimensionCounter::count(std::size_t prefix, const Partition& lambda) {
  if (prefix == 0) return lambda.empty() ? 1 : 0;
  if (lambda.empty()) return 1;
  const auto key = std::make_pair(prefix, lambda);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigInt total = 0;
  for (const auto& sigma : branch_unchecked(prefixes_[prefix], lambda)) {
    total += count(prefix - 1, sigma);
  }
  memo_.emplace(key, total);
  return total;
}

BigInt dimension(const BorelSequence& b, const Partition& lambda) {
  return DimensionCounter(b)(lambda);
}

}  // namespace supertab
