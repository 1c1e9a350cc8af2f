#include "supertab/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "supertab/json_io.hpp"

namespace supertab {

int Content::total() const noexcept {
  int sum = 0;
  for (int c : unbarred) sum += c;
  for (int c : barred) sum += c;
  return sum;
}

std::string Content::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < unbarred.size(); ++i) os << (i ? "," : "") << unbarred[i];
  os << ':';
  for (std::size_t j = 0; j < barred.size(); ++j) os << (j ? "," : "") << barred[j];
  return os.str();
}

namespace {

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed count '" + item + "'");
    }
    if (used != item.size() || value < 0) {
      throw std::invalid_argument("malformed count '" + item + "'");
    }
    out.push_back(value);
  }
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument("trailing comma in '" + text + "'");
  }
  return out;
}

}  // namespace

Content Content::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return Content{parse_counts(text), {}};
  if (text.find(':', colon + 1) != std::string::npos) {
    throw std::invalid_argument("content has more than one ':'");
  }
  return Content{parse_counts(text.substr(0, colon)),
                 parse_counts(text.substr(colon + 1))};
}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> lengths;
  for (const auto& row : rows_) {
    if (row.empty()) throw std::invalid_argument("tableau has an empty inner row");
    lengths.push_back(static_cast<int>(row.size()));
  }
  shape_ = Partition(std::move(lengths));
}

bool Tableau::valid_for(int m, int n) const noexcept {
  for (const auto& row : rows_) {
    for (const auto& letter : row) {
      if (!letter.valid_for(m, n)) return false;
    }
  }
  return true;
}

bool is_b_semistandard(const BorelSequence& b, const Tableau& t) {
  if (!t.valid_for(b.m(), b.n())) return false;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const Letter here = rows[r][c];
      const std::size_t pos = position(b, here);
      if (c > 0) {
        const std::size_t left = position(b, rows[r][c - 1]);
        if (left > pos || (left == pos && here.barred)) return false;
      }
      if (r > 0) {
        const std::size_t above = position(b, rows[r - 1][c]);
        if (above > pos || (above == pos && !here.barred)) return false;
      }
    }
  }
  return true;
}

Content content_of(const Tableau& t, int m, int n) {
  Content content = Content::zero(m, n);
  for (const auto& row : t.rows()) {
    for (const auto& letter : row) {
      if (!letter.valid_for(m, n)) {
        throw std::invalid_argument("letter " + letter.to_text() +
                                    " outside the alphabet");
      }
      auto& counts = letter.barred ? content.barred : content.unbarred;
      ++counts[static_cast<std::size_t>(letter.index - 1)];
    }
  }
  return content;
}

Weight weight_of(const Tableau& t, int m, int n) {
  Content c = content_of(t, m, n);
  return Weight{std::move(c.unbarred), std::move(c.barred)};
}

namespace {

// Backtracking over cells in row reading order. Letters are handled by
// their position in b, so the search order is the canonical order.
class TableauSearch {
 public:
  TableauSearch(const BorelSequence& b, const Partition& lambda,
                const EnumerationOptions& options, const TableauVisitor& visit)
      : b_(b), lambda_(lambda), visit_(visit),
        budget_(options.max_nodes ? NodeBudget(*options.max_nodes)
                                  : NodeBudget::unlimited()) {
    const std::size_t letters = b.size();
    barred_.resize(letters);
    for (std::size_t p = 0; p < letters; ++p) {
      barred_[p] = b.word()[p] == Symbol::kEpsilon;
    }
    // unbarred_after_[p] = number of unbarred letters at positions >= p.
    unbarred_after_.assign(letters + 1, 0);
    barred_after_.assign(letters + 1, 0);
    for (std::size_t p = letters; p-- > 0;) {
      unbarred_after_[p] = unbarred_after_[p + 1] + (barred_[p] ? 0 : 1);
      barred_after_[p] = barred_after_[p + 1] + (barred_[p] ? 1 : 0);
    }
    if (options.content) {
      const Content& content = *options.content;
      if (content.unbarred.size() != static_cast<std::size_t>(b.m()) ||
          content.barred.size() != static_cast<std::size_t>(b.n())) {
        throw std::invalid_argument("content " + content.to_string() +
                                    " does not match the alphabet of " + b.to_string());
      }
      remaining_.resize(letters);
      for (std::size_t p = 0; p < letters; ++p) {
        const Letter l = letter_at(b, p);
        remaining_[p] = (l.barred ? content.barred : content.unbarred)
            [static_cast<std::size_t>(l.index - 1)];
      }
      content_ok_ = content.total() == lambda.size();
    }
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      grid_.emplace_back(static_cast<std::size_t>(lambda[r]), 0);
    }
  }

  void run() {
    if (!content_ok_) return;
    if (lambda_.empty()) {
      visit_(Tableau());
      return;
    }
    if (b_.empty()) return;
    place(0, 0);
  }

 private:
  bool column_feasible(std::size_t pos, std::size_t below) const {
    if (below == 0) return true;
    // Repeating a barred letter fills any column; otherwise need `below`
    // strictly larger unbarred letters.
    if (barred_after_[pos] > 0) return true;
    return unbarred_after_[pos + 1] >= below;
  }

  bool row_feasible(std::size_t pos, std::size_t right) const {
    if (right == 0) return true;
    if (unbarred_after_[pos] > 0) return true;
    return barred_after_[pos + 1] >= right;
  }

  void place(std::size_t r, std::size_t c) {
    if (r == grid_.size()) {
      emit();
      return;
    }
    if (c == grid_[r].size()) {
      place(r + 1, 0);
      return;
    }
    std::size_t lo = 0;
    if (c > 0) lo = std::max(lo, grid_[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid_[r - 1][c]);
    std::size_t below = 0;
    for (std::size_t rr = r + 1; rr < grid_.size() && grid_[rr].size() > c; ++rr) ++below;
    const std::size_t right = grid_[r].size() - c - 1;
    for (std::size_t pos = lo; pos < barred_.size(); ++pos) {
      if (c > 0 && pos == grid_[r][c - 1] && barred_[pos]) continue;
      if (r > 0 && pos == grid_[r - 1][c] && !barred_[pos]) continue;
      if (!remaining_.empty() && remaining_[pos] == 0) continue;
      if (!column_feasible(pos, below) || !row_feasible(pos, right)) continue;
      budget_.charge();
      grid_[r][c] = pos;
      if (!remaining_.empty()) --remaining_[pos];
      place(r, c + 1);
      if (!remaining_.empty()) ++remaining_[pos];
    }
  }

  void emit() {
    std::vector<Tableau::Row> rows;
    rows.reserve(grid_.size());
    for (const auto& row : grid_) {
      Tableau::Row letters;
      letters.reserve(row.size());
      for (std::size_t pos : row) letters.push_back(letter_at(b_, pos));
      rows.push_back(std::move(letters));
    }
    visit_(Tableau(std::move(rows)));
  }

  const BorelSequence& b_;
  const Partition& lambda_;
  const TableauVisitor& visit_;
  NodeBudget budget_;
  std::vector<bool> barred_;
  std::vector<std::size_t> unbarred_after_;
  std::vector<std::size_t> barred_after_;
  std::vector<int> remaining_;
  bool content_ok_ = true;
  std::vector<std::vector<std::size_t>> grid_;
};

void require_hook(const BorelSequence& b, const Partition& lambda) {
  if (!is_hook(lambda, b.m(), b.n())) {
    throw DomainError(lambda.to_string() + " is not a (" + std::to_string(b.m()) +
                      "|" + std::to_string(b.n()) + ")-hook partition");
  }
}

}  // namespace

void for_each_tableau(const BorelSequence& b, const Partition& lambda,
                      const EnumerationOptions& options,
                      const TableauVisitor& visit) {
  require_hook(b, lambda);
  TableauSearch(b, lambda, options, visit).run();
}

std::vector<Tableau> enumerate_tableaux(const BorelSequence& b,
                                        const Partition& lambda,
                                        const EnumerationOptions& options) {
  std::vector<Tableau> out;
  for_each_tableau(b, lambda, options, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_tableaux(const BorelSequence& b, const Partition& lambda,
                             const EnumerationOptions& options) {
  std::uint64_t count = 0;
  for_each_tableau(b, lambda, options, [&](const Tableau&) { ++count; });
  return count;
}

std::vector<Tableau> enumerate_tableaux_relaxed(const BorelSequence& b,
                                                const Partition& lambda,
                                                const EnumerationOptions& options) {
  std::vector<Tableau> out;
  TableauVisitor collect = [&](const Tableau& t) { out.push_back(t); };
  TableauSearch(b, lambda, options, collect).run();
  return out;
}

namespace {

std::string render_text(const Tableau& t) {
  std::vector<std::size_t> widths;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].to_text().size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += '\n';
    std::string line;
    const auto& row = t.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      std::string token = row[c].to_text();
      token.resize(widths[c], ' ');
      line += token;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
  }
  return out;
}

std::string latex_token(const Letter& letter) {
  const std::string digits = std::to_string(letter.index);
  if (letter.barred) return "\\bar{" + digits + "}";
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

std::string render_latex(const Tableau& t) {
  std::string out = "\\young(";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += ',';
    for (const auto& letter : t.rows()[r]) out += latex_token(letter);
  }
  out += ')';
  return out;
}

}  // namespace

std::string render(const Tableau& t, RenderFormat format) {
  switch (format) {
    case RenderFormat::kText:
      return render_text(t);
    case RenderFormat::kLatex:
      return render_latex(t);
    case RenderFormat::kJson:
      return to_json(t).dump();
  }
  return {};
}

}  // namespace supertab
