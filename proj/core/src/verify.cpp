#include "supertab/verify.hpp"

#include <stdexcept>
#include <string>

#include "supertab/branching.hpp"

namespace supertab {

std::uint64_t KostkaTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [content, count] : entries) sum += count;
  return sum;
}

std::uint64_t KostkaTable::at(const Content& content) const {
  auto it = entries.find(content);
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t super_kostka(const BorelSequence& b, const Partition& lambda,
                           const Content& content,
                           std::optional<std::uint64_t> max_nodes) {
  EnumerationOptions options;
  options.content = content;
  options.max_nodes = max_nodes;
  return count_tableaux(b, lambda, options);
}

KostkaTable kostka_table(const BorelSequence& b, const Partition& lambda,
                         std::optional<std::uint64_t> max_nodes) {
  KostkaTable table;
  EnumerationOptions options;
  options.max_nodes = max_nodes;
  for_each_tableau(b, lambda, options, [&](const Tableau& t) {
    ++table.entries[content_of(t, b.m(), b.n())];
  });
  return table;
}

IndependenceReport verify_borel_independence(int m, int n, const Partition& lambda,
                                             std::optional<std::uint64_t> max_nodes) {
  IndependenceReport report;
  report.borels = all_sequences(m, n);
  std::vector<KostkaTable> tables;
  tables.reserve(report.borels.size());
  for (const auto& b : report.borels) tables.push_back(kostka_table(b, lambda, max_nodes));
  report.table = tables.front();
  for (std::size_t i = 1; i < tables.size() && report.ok; ++i) {
    if (tables[i] == tables.front()) continue;
    report.ok = false;
    // Walk the union of keys in order for the first differing content.
    std::map<Content, std::uint64_t> keys = tables.front().entries;
    keys.insert(tables[i].entries.begin(), tables[i].entries.end());
    for (const auto& [content, unused] : keys) {
      const auto a = tables.front().at(content);
      const auto c = tables[i].at(content);
      if (a != c) {
        report.difference =
            KostkaDifference{report.borels.front(), report.borels[i], content, a, c};
        break;
      }
    }
  }
  return report;
}

BigInt gl_dimension(const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("negative rank");
  if (lambda.length() > static_cast<std::size_t>(k)) return 0;
  return dimension(standard(k, 0), lambda);
}

BigInt supersymmetric_dimension(int m, int n, int k, int d) {
  const long long even = static_cast<long long>(m) * k;
  const long long odd = static_cast<long long>(n) * k;
  BigInt total = 0;
  for (int a = 0; a <= d; ++a) {
    // Monomials of degree a in `even` commuting variables.
    const BigInt sym = even == 0 ? BigInt(a == 0 ? 1 : 0) : binomial(even + a - 1, a);
    total += sym * binomial(odd, d - a);
  }
  return total;
}

HoweReport verify_howe_dimension(int m, int n, int k, int d, const BorelSequence& b) {
  if (b.m() != m || b.n() != n) {
    throw std::invalid_argument("Borel word " + b.to_string() + " is not for gl(" +
                                std::to_string(m) + "|" + std::to_string(n) + ")");
  }
  HoweReport report;
  DimensionCounter counter(b);
  for (const auto& lambda :
       enumerate_partitions(d, static_cast<std::size_t>(k), Hook{m, n})) {
    report.lhs += counter(lambda) * gl_dimension(lambda, k);
    ++report.terms;
  }
  report.rhs = supersymmetric_dimension(m, n, k, d);
  report.ok = report.lhs == report.rhs;
  return report;
}

}  // namespace supertab
