#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

/// Small dense bitset over automaton states.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t n) : bits_((n + 63) / 64, 0), n_(n) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool none() const;
  /// Returns true if anything was added.
  bool merge(const StateSet& o);
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t b = bits_[w];
      while (b) {
        const int t = __builtin_ctzll(b);
        f(w * 64 + static_cast<std::size_t>(t));
        b &= b - 1;
      }
    }
  }
  bool operator==(const StateSet&) const = default;

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t n_ = 0;
};

/// The set of reduced words red(lead · zφ), where z ranges over reduced words
/// whose first letter is allowed (plus, optionally, z = 1). Stored as a
/// Benois-saturated ε-NFA with a co-accessibility table over
/// (state, last letter read) so that prefix queries only follow reduced paths.
class ImageLanguage {
 public:
  /// `allowed_first[slot]` says which first letters z may start with.
  ImageLanguage(const Endomorphism& phi, const Word& lead, std::vector<bool> allowed_first,
                bool include_empty);

  /// Continuations of a word ending in `last`: every z with z[0] != last^{-1}.
  static ImageLanguage continuations(const Endomorphism& phi, std::optional<Letter> last);
  /// Images of words starting with exactly `first`.
  static ImageLanguage starting_with(const Endomorphism& phi, Letter first,
                                     const Word& lead = Word());

  int rank() const { return rank_; }
  std::size_t state_count() const { return out_.size(); }

  /// True iff p is a prefix of some word in the language.
  bool has_prefix(const Word& p) const;

  /// Largest c such that the inverse of the last c letters of w is a prefix
  /// of the language (the most a continuation can cancel from w).
  std::size_t max_cancellation(const Word& w) const;

  struct Lcp {
    /// nullopt when the languages share arbitrarily long prefixes.
    std::optional<std::size_t> length;
    Word witness;
  };
  /// Longest common prefix of a word of `a` and a word of `b`.
  friend Lcp longest_common_prefix(const ImageLanguage& a, const ImageLanguage& b);

 private:
  std::size_t slots() const { return 2 * static_cast<std::size_t>(rank_); }
  std::size_t none_slot() const { return slots(); }
  int add_state();
  void add_edge(int p, Letter x, int q);
  void saturate();
  void compute_closure();
  void compute_targets();
  void compute_coacc();
  StateSet start_set() const { return closure_[0]; }
  StateSet step(const StateSet& s, Letter y) const;
  bool live(const StateSet& s, std::size_t last_slot) const;
  bool coacc(int q, std::size_t last_slot) const {
    return coacc_[static_cast<std::size_t>(q) * (slots() + 1) + last_slot];
  }

  int rank_ = 0;
  std::vector<std::vector<std::pair<Letter, int>>> out_;
  std::vector<std::vector<int>> eps_;
  std::vector<bool> accepting_;
  std::vector<StateSet> closure_;
  // targets_[q * slots + y]: closure of the y-successors of closure(q).
  std::vector<StateSet> targets_;
  std::vector<bool> coacc_;
};

ImageLanguage::Lcp longest_common_prefix(const ImageLanguage& a, const ImageLanguage& b);

}  // namespace freebound
