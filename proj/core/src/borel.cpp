#include "supertab/borel.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "supertab/errors.hpp"

namespace supertab {

BorelSequence::BorelSequence(std::vector<Symbol> word) : word_(std::move(word)) {
  m_ = static_cast<int>(std::count(word_.begin(), word_.end(), Symbol::kDelta));
  n_ = static_cast<int>(word_.size()) - m_;
}

BorelSequence BorelSequence::parse(std::string_view text) {
  std::vector<Symbol> word;
  word.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'd':
      case 'D':
        word.push_back(Symbol::kDelta);
        break;
      case 'e':
      case 'E':
        word.push_back(Symbol::kEpsilon);
        break;
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in Borel word (expected 'd' or 'e')");
    }
  }
  return BorelSequence(std::move(word));
}

std::string BorelSequence::to_string() const {
  std::string out;
  out.reserve(word_.size());
  for (Symbol s : word_) out.push_back(s == Symbol::kDelta ? 'd' : 'e');
  return out;
}

std::ostream& operator<<(std::ostream& os, const BorelSequence& b) {
  return os << b.to_string();
}

std::string Letter::encode() const {
  return std::to_string(index) + (barred ? "b" : "");
}

std::string Letter::to_text() const {
  return std::to_string(index) + (barred ? "'" : "");
}

Letter Letter::decode(std::string_view token) {
  Letter letter;
  if (!token.empty() && (token.back() == 'b' || token.back() == '\'')) {
    letter.barred = true;
    token.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
      value < 1) {
    throw std::invalid_argument("malformed letter '" + std::string(token) + "'");
  }
  letter.index = value;
  return letter;
}

int Weight::total() const noexcept {
  int sum = 0;
  for (int c : delta) sum += c;
  for (int c : epsilon) sum += c;
  return sum;
}

bool Weight::is_polynomial() const noexcept {
  auto nonneg = [](int c) { return c >= 0; };
  return std::all_of(delta.begin(), delta.end(), nonneg) &&
         std::all_of(epsilon.begin(), epsilon.end(), nonneg);
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.delta.size(); ++i) os << (i ? "," : "") << w.delta[i];
  os << '|';
  for (std::size_t j = 0; j < w.epsilon.size(); ++j) os << (j ? "," : "") << w.epsilon[j];
  return os << ')';
}

BorelSequence standard(int m, int n) {
  std::vector<Symbol> word(static_cast<std::size_t>(m), Symbol::kDelta);
  word.insert(word.end(), static_cast<std::size_t>(n), Symbol::kEpsilon);
  return BorelSequence(std::move(word));
}

std::vector<BorelSequence> all_sequences(int m, int n, int cap) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  if (m + n > cap) {
    throw SizeError("m + n = " + std::to_string(m + n) +
                    " exceeds the Borel enumeration cap " + std::to_string(cap));
  }
  // Start from the lexicographically smallest word and walk next_permutation.
  std::vector<Symbol> word = standard(m, n).word();
  std::vector<BorelSequence> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Offsets offsets(const BorelSequence& b) {
  Offsets out;
  int deltas = 0;
  int epsilons = 0;
  for (Symbol s : b.word()) {
    if (s == Symbol::kDelta) {
      out.d.push_back(epsilons);
      ++deltas;
    } else {
      out.e.push_back(deltas);
      ++epsilons;
    }
  }
  return out;
}

namespace {

void require_hook(const Partition& lambda, int m, int n) {
  if (!is_hook(lambda, m, n)) {
    throw DomainError(lambda.to_string() + " is not a (" + std::to_string(m) +
                      "|" + std::to_string(n) + ")-hook partition");
  }
}

}  // namespace

Weight frobenius_weight(const BorelSequence& b, const Partition& lambda) {
  require_hook(lambda, b.m(), b.n());
  const Offsets off = offsets(b);
  const Partition columns = conjugate(lambda);
  Weight w;
  for (std::size_t i = 0; i < off.d.size(); ++i) {
    w.delta.push_back(std::max(lambda[i] - off.d[i], 0));
  }
  for (std::size_t j = 0; j < off.e.size(); ++j) {
    w.epsilon.push_back(std::max(columns[j] - off.e[j], 0));
  }
  return w;
}

Weight natural_weight(const Partition& lambda, int m, int n) {
  require_hook(lambda, m, n);
  Weight w;
  std::vector<int> tail;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i < static_cast<std::size_t>(m)) continue;
    tail.push_back(lambda[i]);
  }
  const Partition sigma = conjugate(Partition(std::move(tail)));
  for (int i = 0; i < m; ++i) w.delta.push_back(lambda[static_cast<std::size_t>(i)]);
  for (int j = 0; j < n; ++j) w.epsilon.push_back(sigma[static_cast<std::size_t>(j)]);
  return w;
}

std::size_t position(const BorelSequence& b, Letter letter) {
  const Symbol wanted = letter.barred ? Symbol::kEpsilon : Symbol::kDelta;
  int seen = 0;
  for (std::size_t pos = 0; pos < b.size(); ++pos) {
    if (b.word()[pos] == wanted && ++seen == letter.index) return pos;
  }
  throw std::out_of_range("letter " + letter.to_text() + " not in alphabet of " +
                          b.to_string());
}

Letter letter_at(const BorelSequence& b, std::size_t pos) {
  if (pos >= b.size()) throw std::out_of_range("position past end of Borel word");
  const Symbol s = b.word()[pos];
  const auto index = std::count(b.word().begin(), b.word().begin() + static_cast<long>(pos) + 1, s);
  return Letter{s == Symbol::kEpsilon, static_cast<int>(index)};
}

std::strong_ordering compare(const BorelSequence& b, Letter a, Letter c) {
  return position(b, a) <=> position(b, c);
}

std::vector<Letter> ordered_alphabet(const BorelSequence& b) {
  std::vector<Letter> out;
  int deltas = 0;
  int epsilons = 0;
  for (Symbol s : b.word()) {
    if (s == Symbol::kDelta) {
      out.push_back(Letter::unbarred(++deltas));
    } else {
      out.push_back(Letter::bar(++epsilons));
    }
  }
  return out;
}

Truncation truncate(const BorelSequence& b) {
  if (b.empty()) throw DomainError("cannot truncate the empty Borel word");
  std::vector<Symbol> word = b.word();
  const Symbol last = word.back();
  word.pop_back();
  return Truncation{BorelSequence(std::move(word)), last};
}

}  // namespace supertab
