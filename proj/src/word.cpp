#include "freebound/word.hpp"

#include <algorithm>
#include <cmath>

namespace freebound {

char letter_char(Letter l) {
  if (l.index() < 1 || l.index() > 26) {
    throw Error("letter index " + std::to_string(l.index()) +
                " has no text rendering (rank > 26)");
  }
  const char base = l.is_inverse() ? 'A' : 'a';
  return static_cast<char>(base + l.index() - 1);
}

std::optional<Letter> letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 1, false);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 1, true);
  return std::nullopt;
}

Word Word::reduce(std::span<const Letter> raw, int rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.index() < 1 || (rank > 0 && l.index() > rank)) {
      throw Error("letter index " + std::to_string(l.index()) +
                  " out of range for rank " + std::to_string(rank));
    }
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::parse(std::string_view text, int rank) {
  if (text == "1") return Word();
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) {
      throw Error("invalid character '" + std::string(1, text[i]) +
                  "' at position " + std::to_string(i));
    }
    raw.push_back(*l);
  }
  return reduce(raw, rank);
}

Word Word::from_reduced(std::vector<Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1].inverse()) {
      throw Error("word is not freely reduced");
    }
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word Word::prefix(std::size_t k) const {
  k = std::min(k, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + k));
}

Word Word::suffix_from(std::size_t start) const {
  start = std::min(start, letters_.size());
  return Word(std::vector<Letter>(letters_.begin() + start, letters_.end()));
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

void Word::push(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end());
}

ConcatResult concat(const Word& u, const Word& v) {
  std::size_t c = 0;
  const std::size_t lim = std::min(u.size(), v.size());
  while (c < lim && u[u.size() - 1 - c] == v[c].inverse()) ++c;
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * c);
  out.insert(out.end(), u.begin(), u.end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(c), v.end());
  return {Word::from_reduced(std::move(out)), c};
}

Word operator*(const Word& u, const Word& v) { return concat(u, v).word; }

std::size_t meet_length(std::span<const Letter> u, std::span<const Letter> v) {
  const std::size_t lim = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < lim && u[i] == v[i]) ++i;
  return i;
}

Word meet(const Word& u, const Word& v) {
  return u.prefix(meet_length(u.letters(), v.letters()));
}

CyclicDecomposition cyclic_decompose(const Word& u) {
  std::size_t t = 0;
  const std::size_t n = u.size();
  while (2 * t + 1 < n && u[t] == u[n - 1 - t].inverse()) ++t;
  CyclicDecomposition d;
  d.wing = u.prefix(t);
  d.core = Word::from_reduced(
      std::vector<Letter>(u.begin() + static_cast<std::ptrdiff_t>(t),
                          u.end() - static_cast<std::ptrdiff_t>(t)));
  return d;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l.code() + 1024);
    h *= 1099511628211ull;
  }
  return h;
}

// --- boundary streams -------------------------------------------------------

BoundaryStream::BoundaryStream(Word seed, StepperFactory factory,
                               std::optional<Lasso> period_hint)
    : seed_(std::move(seed)),
      factory_(std::move(factory)),
      period_hint_(std::move(period_hint)) {}

BoundaryStream::Lasso normalize_lasso(const Word& prefix, const Word& loop) {
  if (loop.empty()) throw Error("lasso loop must be nonempty");
  if (!loop.is_cyclically_reduced()) {
    throw Error("lasso loop must be cyclically reduced");
  }
  if (!prefix.empty() && prefix.back() == loop.front().inverse()) {
    throw Error("lasso prefix·loop is not reduced");
  }
  // primitive root
  std::vector<Letter> l(loop.begin(), loop.end());
  const std::size_t n = l.size();
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = l[i] == l[i - p];
    if (ok) {
      period = p;
      break;
    }
  }
  l.resize(period);
  std::vector<Letter> pre(prefix.begin(), prefix.end());
  while (!pre.empty() && pre.back() == l.back()) {
    pre.pop_back();
    std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
  }
  return {Word::from_reduced(std::move(pre)), Word::from_reduced(std::move(l))};
}

BoundaryStream BoundaryStream::lasso(const Word& prefix, const Word& loop) {
  Lasso norm = normalize_lasso(prefix, loop);
  Word seed = norm.prefix;
  Word cycle = norm.loop;
  std::size_t plen = seed.size();
  auto factory = [cycle, plen]() -> Stepper {
    return [cycle, plen](const Word& current) {
      return cycle[(current.size() - plen) % cycle.size()];
    };
  };
  return BoundaryStream(std::move(seed), std::move(factory), std::move(norm));
}

Word BoundaryStream::prefix(std::size_t k) const {
  if (k <= seed_.size()) return seed_.prefix(k);
  std::vector<Letter> out(seed_.begin(), seed_.end());
  Word current = seed_;
  Stepper step = factory_();
  while (current.size() < k) {
    Letter next = step(current);
    if (!current.empty() && next == current.back().inverse()) {
      throw Error("boundary stream rule produced an unreduced prefix");
    }
    current.push(next);
  }
  return current;
}

double PrefixDistance::value() const {
  return zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(exponent));
}

PrefixDistance prefix_distance(const Word& u, const Word& v) {
  if (u == v) return {true, 0, false};
  return {false, meet_length(u.letters(), v.letters()), false};
}

PrefixDistance prefix_distance(const BoundaryStream& u, const BoundaryStream& v,
                               std::size_t horizon) {
  Word pu = u.prefix(horizon);
  Word pv = v.prefix(horizon);
  std::size_t m = meet_length(pu.letters(), pv.letters());
  if (m == horizon) return {false, horizon, true};
  return {false, m, false};
}

PrefixDistance prefix_distance(const Word& u, const BoundaryStream& v,
                               std::size_t horizon) {
  // A finite word always differs from an infinite one.
  Word pv = v.prefix(std::max(horizon, u.size() + 1));
  return {false, meet_length(u.letters(), pv.letters()), false};
}

namespace {

bool enumerate_rec(int rank, std::size_t length, std::vector<Letter>& cur,
                   const std::function<bool(const Word&)>& fn) {
  if (cur.size() == length) return fn(Word::from_reduced(cur));
  for (std::size_t s = 0; s < static_cast<std::size_t>(2 * rank); ++s) {
    Letter l = Letter::from_slot(s);
    if (!cur.empty() && cur.back() == l.inverse()) continue;
    cur.push_back(l);
    bool go = enumerate_rec(rank, length, cur, fn);
    cur.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void for_each_reduced_word(int rank, std::size_t length,
                           const std::function<bool(const Word&)>& fn) {
  std::vector<Letter> cur;
  cur.reserve(length);
  enumerate_rec(rank, length, cur, fn);
}

std::uint64_t count_reduced_words(int rank, std::size_t length) {
  if (length == 0) return 1;
  std::uint64_t c = 2 * static_cast<std::uint64_t>(rank);
  for (std::size_t i = 1; i < length; ++i) c *= 2 * static_cast<std::uint64_t>(rank) - 1;
  return c;
}

}  // namespace freebound
