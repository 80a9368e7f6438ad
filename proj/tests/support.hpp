#pragma once

// Shared helpers for the tests: fixture loading, a seeded RNG, and naive
// string-level oracles that share no code with the library.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freebound/cli.hpp"
#include "freebound/morphism.hpp"

namespace testing_support {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("FREEBOUND_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FREEBOUND_FIXTURES) + "/" + name + ".txt";
}

inline freebound::Endomorphism fixture(const std::string& name) {
  return freebound::parse_endomorphism(freebound::cli::load_morphism_text(fixture_path(name)));
}

inline freebound::Endomorphism parse(const std::string& text) {
  return freebound::parse_endomorphism(text);
}

// --- naive oracles over strings ---------------------------------------------

inline bool cancels(char x, char y) { return x != y && std::tolower(x) == std::tolower(y); }

/// Repeated removal of adjacent inverse pairs, one at a time.
inline std::string naive_reduce(std::string s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (cancels(s[i], s[i + 1])) {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

inline std::string naive_inverse(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  for (char& c : r) c = std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c)) : static_cast<char>(std::toupper(c));
  return r;
}

/// Images as strings, index 0 for 'a'.
using NaiveMap = std::vector<std::string>;

inline NaiveMap naive_map(const freebound::Endomorphism& phi) {
  NaiveMap m;
  for (const auto& w : phi.images()) m.push_back(w.empty() ? "" : w.str());
  return m;
}

inline std::string naive_apply(const NaiveMap& m, const std::string& u) {
  std::string out;
  for (char c : u) {
    if (c == '1') continue;
    const std::string& img = m[static_cast<std::size_t>(std::tolower(c) - 'a')];
    out += std::isupper(static_cast<unsigned char>(c)) ? naive_inverse(img) : img;
  }
  return naive_reduce(out);
}

inline std::size_t naive_meet(const std::string& u, const std::string& v) {
  std::size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  return i;
}

/// All reduced words of length exactly len, built by plain string recursion
/// in shortlex order (a < A < b < B ...).
inline void naive_words(int rank, std::size_t len, const std::function<void(const std::string&)>& fn,
                        std::string cur = "") {
  if (cur.size() == len) {
    fn(cur);
    return;
  }
  for (int i = 0; i < rank; ++i) {
    for (char c : {static_cast<char>('a' + i), static_cast<char>('A' + i)}) {
      if (!cur.empty() && cancels(cur.back(), c)) continue;
      naive_words(rank, len, fn, cur + c);
    }
  }
}

inline std::vector<std::string> naive_words_upto(int rank, std::size_t max_len, bool with_empty = false) {
  std::vector<std::string> out;
  for (std::size_t l = with_empty ? 0 : 1; l <= max_len; ++l) {
    naive_words(rank, l, [&](const std::string& w) { out.push_back(w); });
  }
  return out;
}

inline std::string random_word(int rank, std::size_t len) {
  std::string s;
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  while (s.size() < len) {
    const int k = pick(rng());
    const char c = static_cast<char>((k % 2 ? 'A' : 'a') + k / 2);
    if (!s.empty() && cancels(s.back(), c)) continue;
    s += c;
  }
  return s;
}

inline std::string random_raw(int rank, std::size_t len) {
  std::string s;
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  for (std::size_t i = 0; i < len; ++i) {
    const int k = pick(rng());
    s += static_cast<char>((k % 2 ? 'A' : 'a') + k / 2);
  }
  return s;
}

/// Random endomorphism with image lengths in [0, max_len] (nonempty if min_len >= 1).
inline freebound::Endomorphism random_endo(int rank, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::string text;
  for (int i = 0; i < rank; ++i) {
    std::string img = random_word(rank, len(rng()));
    if (img.empty()) img = "1";
    text += std::string(i ? ";" : "") + static_cast<char>('a' + i) + "->" + img;
  }
  return freebound::parse_endomorphism(text);
}

inline std::string str_or_empty(const std::string& s) { return s.empty() ? "1" : s; }

// Branches of the tree of prefixes p with p and pφ agreeing on their first
// min(|p|, |pφ| - B) letters, for every prefix along the way. Returns the
// depth-`depth` prefixes of branches that survive to depth + extra.
inline std::set<std::string> naive_fixed_prefixes(const freebound::Endomorphism& phi, std::size_t B, std::size_t depth,
                                                  std::size_t extra) {
  const auto m = naive_map(phi);
  auto ok = [&](const std::string& p) {
    const std::string img = naive_apply(m, p);
    const std::size_t need = img.size() >= B ? std::min(p.size(), img.size() - B) : 0;
    return naive_meet(p, img) >= need;
  };
  std::vector<std::string> level{""};
  std::set<std::string> out;
  for (std::size_t len = 1; len <= depth + extra && !level.empty(); ++len) {
    std::vector<std::string> next;
    for (const auto& p : level) {
      for (int i = 0; i < phi.rank(); ++i) {
        for (char c : {static_cast<char>('a' + i), static_cast<char>('A' + i)}) {
          if (!p.empty() && cancels(p.back(), c)) continue;
          if (ok(p + c)) next.push_back(p + c);
        }
      }
    }
    level = std::move(next);
    if (level.size() > 100000) return {};
  }
  for (const auto& p : level) out.insert(p.substr(0, depth));
  return out;
}

}  // namespace testing_support
