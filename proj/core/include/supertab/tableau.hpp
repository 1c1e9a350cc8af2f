#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supertab/borel.hpp"
#include "supertab/errors.hpp"
#include "supertab/partition.hpp"

namespace supertab {

// Letter multiplicities: unbarred[i-1] copies of i, barred[j-1] of j̄.
// Ordered lexicographically by (unbarred, barred).
struct Content {
  std::vector<int> unbarred;
  std::vector<int> barred;

  static Content zero(int m, int n) {
    return Content{std::vector<int>(static_cast<std::size_t>(m), 0),
                   std::vector<int>(static_cast<std::size_t>(n), 0)};
  }

  int total() const noexcept;
  // "3,2:1" form used by the CLI.
  std::string to_string() const;
  static Content parse(const std::string& text);

  friend bool operator==(const Content&, const Content&) = default;
  friend auto operator<=>(const Content&, const Content&) = default;
};

class Tableau {
 public:
  using Row = std::vector<Letter>;

  Tableau() = default;
  // Row lengths must be weakly decreasing; the shape is read off the rows.
  explicit Tableau(std::vector<Row> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Letter& at(std::size_t row, std::size_t col) const {
    return rows_.at(row).at(col);
  }
  bool empty() const noexcept { return rows_.empty(); }

  bool valid_for(int m, int n) const noexcept;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<Row> rows_;
};

// Rows weakly increase in <_b along rows and columns, unbarred letters strictly
// increase down columns and barred letters strictly increase along rows.
// Letters outside the (m|n) alphabet make the tableau non-semistandard.
bool is_b_semistandard(const BorelSequence& b, const Tableau& t);

// Throws std::invalid_argument when a letter lies outside {1..m, 1̄..n̄}.
Content content_of(const Tableau& t, int m, int n);
Weight weight_of(const Tableau& t, int m, int n);

struct EnumerationOptions {
  std::optional<Content> content;
  // Caps the number of cells placed during the search.
  std::optional<std::uint64_t> max_nodes;
};

using TableauVisitor = std::function<void(const Tableau&)>;

// Visits every b-semistandard tableau of shape λ (optionally with the given
// content) in canonical order: lexicographic on the row reading word under
// <_b. Throws DomainError when λ is not an (m|n)-hook, SearchLimitExceeded
// when max_nodes is exhausted.
void for_each_tableau(const BorelSequence& b, const Partition& lambda,
                      const EnumerationOptions& options,
                      const TableauVisitor& visit);

std::vector<Tableau> enumerate_tableaux(const BorelSequence& b,
                                        const Partition& lambda,
                                        const EnumerationOptions& options = {});

// Count only; avoids materializing tableaux.
std::uint64_t count_tableaux(const BorelSequence& b, const Partition& lambda,
                             const EnumerationOptions& options = {});

// Same search without the hook precondition; for oracle tests on shapes
// that admit no tableaux.
std::vector<Tableau> enumerate_tableaux_relaxed(
    const BorelSequence& b, const Partition& lambda,
    const EnumerationOptions& options = {});

enum class RenderFormat { kText, kLatex, kJson };

// text: column-aligned grid, barred letters as "k'", one line per row.
// latex: \young(...) with \bar{k}.
// json: {"shape":[...],"rows":[["1","1b"],...]}.
std::string render(const Tableau& t, RenderFormat format);

}  // namespace supertab
