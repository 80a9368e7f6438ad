#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freebound/cancellation.hpp"
#include "freebound/image_language.hpp"
#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

class NotLengthIncreasing : public Error {
 public:
  using Error::Error;
};

/// q_u = (last letter of u, uβ, |uφ| - |u|), where uφ = (uα)(uβ) and uα is
/// the part of uφ that no continuation of u can cancel.
struct GrowthState {
  std::optional<Letter> last;
  Word tail;
  std::int64_t delta = 0;

  bool operator==(const GrowthState&) const = default;
  std::strong_ordering operator<=>(const GrowthState& o) const;
  std::string str() const;
};

/// Exact growth-state arithmetic for one monomorphism. The tail is obtained
/// from the largest cancellation any continuation can achieve, read off the
/// saturated continuation automata.
class GrowthEngine {
 public:
  /// Throws NotInjective.
  explicit GrowthEngine(Endomorphism phi);

  const Endomorphism& morphism() const { return phi_; }
  std::size_t B() const { return B_; }

  GrowthState initial() const { return {}; }
  /// nullopt when `a` would cancel the last letter.
  std::optional<GrowthState> step(const GrowthState& q, Letter a) const;
  /// Direct computation from uφ.
  GrowthState state_of(const Word& u) const;

 private:
  const ImageLanguage& continuations(std::optional<Letter> last) const;

  Endomorphism phi_;
  std::size_t B_ = 0;
  std::vector<ImageLanguage> cont_;  // by slot of the last letter; the final entry is "none"
};

GrowthState growth_state(const Endomorphism& phi, const Word& u);

/// The deterministic automaton of growth states reachable from q_1 while
/// expanding only states whose delta lies in [expand_min, expand_max].
/// Targets outside the range are kept as (unexpanded) states.
struct GrowthAutomaton {
  std::string morphism;
  std::size_t B = 0;
  std::vector<GrowthState> states;  // states[0] is q_1
  std::map<std::pair<int, Letter>, int> transitions;
  std::vector<bool> expanded;

  std::string dot() const;
};
GrowthAutomaton explore_growth(const GrowthEngine& engine, std::int64_t expand_min,
                               std::int64_t expand_max);

struct LengthDecision {
  bool holds = false;
  /// Shortlex-least counterexample of minimal length.
  std::optional<Word> witness;
};
/// |uφ| >= |u| for every u. Throws NotInjective.
LengthDecision is_length_increasing(const Endomorphism& phi);
/// |uφ| > |u| for every u != 1. Throws NotInjective.
LengthDecision is_strictly_length_increasing(const Endomorphism& phi);

/// A trim deterministic partial automaton whose language consists of reduced
/// words. State 0 is initial whenever the language is nonempty.
class RationalLanguage {
 public:
  RationalLanguage() = default;
  RationalLanguage(int rank, std::vector<std::map<Letter, int>> out, std::vector<bool> accepting);

  int rank() const { return rank_; }
  std::size_t state_count() const { return out_.size(); }
  bool empty() const { return out_.empty(); }
  const std::map<Letter, int>& out(int q) const { return out_[static_cast<std::size_t>(q)]; }
  bool is_accepting(int q) const { return accepting_[static_cast<std::size_t>(q)]; }

  bool accepts(const Word& w) const;
  /// True iff some accepted word has w as a prefix.
  bool is_prefix(const Word& w) const;
  /// -1 if w leaves the automaton.
  int run(const Word& w) const;

  std::string dot() const;

 private:
  void trim();

  int rank_ = 0;
  std::vector<std::map<Letter, int>> out_;
  std::vector<bool> accepting_;
};

/// {u : |uφ| <= |u| + k}. Throws NotLengthIncreasing (and NotInjective).
RationalLanguage build_Lk(const Endomorphism& phi, std::size_t k);
RationalLanguage build_Lk(const GrowthEngine& engine, std::size_t k);

bool lang_finite(const RationalLanguage& L);
/// Length-lexicographic; at most `limit` words, none longer than `max_length`.
std::vector<Word> lang_enumerate(const RationalLanguage& L, std::size_t limit,
                                 std::size_t max_length = SIZE_MAX);
/// Keeps the edges labelled by the first `sub_rank` letters, then re-trims.
RationalLanguage lang_intersect_alphabet(const RationalLanguage& L, int sub_rank);

}  // namespace freebound
