#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freebound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter of the symmetrized alphabet A ∪ A^{-1}. Positive letters are
/// numbered 1..n; the sign selects the letter or its inverse.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, bool inverse) : code_(inverse ? -index : index) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool is_inverse() const { return code_ < 0; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }

  /// Dense position in 0..2n-1: a, A, b, B, ...
  constexpr std::size_t slot() const {
    return static_cast<std::size_t>(2 * (index() - 1) + (is_inverse() ? 1 : 0));
  }
  static constexpr Letter from_slot(std::size_t slot) {
    return Letter(static_cast<int>(slot / 2) + 1, slot % 2 == 1);
  }

  constexpr bool operator==(const Letter&) const = default;
  /// Ordered by index, then positive before inverse.
  constexpr std::strong_ordering operator<=>(const Letter& o) const {
    return slot() <=> o.slot();
  }

 private:
  int code_ = 0;
};

/// Renders a letter as a..z / A..Z. Throws for index > 26.
char letter_char(Letter l);
/// Inverse of letter_char; nullopt for anything that is not an ASCII letter.
std::optional<Letter> letter_from_char(char c);

/// A freely reduced word. The invariant (no adjacent x x^{-1}) is established
/// by every constructor and preserved by every operation.
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter sequence. If rank > 0, every letter
  /// index must be in 1..rank.
  static Word reduce(std::span<const Letter> raw, int rank = 0);
  /// Parses the text format: a..z positive, A..Z inverse, "1" or "" empty.
  /// The input need not be reduced.
  static Word parse(std::string_view text, int rank = 0);
  /// Wraps letters already known to be reduced (checked).
  static Word from_reduced(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word prefix(std::size_t k) const;
  Word suffix_from(std::size_t start) const;
  /// Largest letter index occurring (0 for the empty word).
  int max_index() const;
  bool is_cyclically_reduced() const;

  /// Text rendering; the empty word prints as "1".
  std::string str() const;

  /// Appends a letter, cancelling if it is the inverse of the last letter.
  void push(Letter l);

  bool operator==(const Word&) const = default;
  /// Shortlex order: by length, then lexicographically by letter order.
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

struct ConcatResult {
  Word word;
  std::size_t cancelled = 0;
};

/// reduce(u·v) together with the number of cancelled letter pairs.
ConcatResult concat(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);

/// Longest common prefix.
Word meet(const Word& u, const Word& v);
std::size_t meet_length(std::span<const Letter> u, std::span<const Letter> v);

struct CyclicDecomposition {
  Word wing;
  Word core;
};

/// u = wing·core·wing^{-1} with core cyclically reduced and wing shortest.
CyclicDecomposition cyclic_decompose(const Word& u);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// An infinite reduced word given by a seed and a deterministic extension
/// rule. The rule is supplied as a factory of stateful steppers so that a
/// stream value itself stays immutable and shareable.
class BoundaryStream {
 public:
  using Stepper = std::function<Letter(const Word& prefix)>;
  using StepperFactory = std::function<Stepper()>;

  struct Lasso {
    Word prefix;
    Word loop;
    bool operator==(const Lasso&) const = default;
  };

  BoundaryStream(Word seed, StepperFactory factory,
                 std::optional<Lasso> period_hint = std::nullopt);

  /// prefix·loop^ω, normalized to the shortest prefix and primitive loop.
  static BoundaryStream lasso(const Word& prefix, const Word& loop);

  const Word& seed() const { return seed_; }
  const std::optional<Lasso>& period_hint() const { return period_hint_; }

  /// The length-k prefix. Throws if the rule emits a letter that would
  /// make the prefix unreduced.
  Word prefix(std::size_t k) const;

 private:
  Word seed_;
  StepperFactory factory_;
  std::optional<Lasso> period_hint_;
};

/// Normalizes prefix·loop^ω: loop made primitive, prefix shortened by
/// rotating the loop as far as possible.
BoundaryStream::Lasso normalize_lasso(const Word& prefix, const Word& loop);

/// The prefix metric 2^{-|u∧v|}, kept exact as an exponent.
struct PrefixDistance {
  bool zero = false;           // the arguments are equal
  std::size_t exponent = 0;    // distance is 2^{-exponent} when !zero
  bool upper_bound = false;    // streams agreed up to the horizon

  double value() const;
  bool operator==(const PrefixDistance&) const = default;
};

PrefixDistance prefix_distance(const Word& u, const Word& v);
/// Stream comparisons look at prefixes of length `horizon` only; if those
/// agree the result is flagged as an upper bound 2^{-horizon}.
PrefixDistance prefix_distance(const BoundaryStream& u, const BoundaryStream& v,
                               std::size_t horizon);
PrefixDistance prefix_distance(const Word& u, const BoundaryStream& v,
                               std::size_t horizon);

/// Calls fn(word) for every reduced word of length exactly `length` over
/// rank letters, in shortlex order. fn returning false stops early.
void for_each_reduced_word(int rank, std::size_t length,
                           const std::function<bool(const Word&)>& fn);
/// Number of reduced words of a given length.
std::uint64_t count_reduced_words(int rank, std::size_t length);

}  // namespace freebound
