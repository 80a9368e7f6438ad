#include "freebound/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace freebound {

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  for (const Word& w : images_) {
    if (w.max_index() > rank()) {
      throw Error("image " + w.str() + " uses a letter beyond rank " +
                  std::to_string(rank()));
    }
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> imgs;
  for (int i = 1; i <= rank; ++i) imgs.push_back(Word::from_reduced({Letter(i, false)}));
  return Endomorphism(std::move(imgs));
}

Word Endomorphism::image(Letter l) const {
  const Word& w = images_.at(static_cast<std::size_t>(l.index() - 1));
  return l.is_inverse() ? w.inverse() : w;
}

std::size_t Endomorphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

Word Endomorphism::apply(const Word& u) const {
  if (u.max_index() > rank()) {
    throw Error("word " + u.str() + " is not over the rank-" +
                std::to_string(rank()) + " alphabet");
  }
  Word out;
  for (Letter l : u) {
    const Word& w = images_[static_cast<std::size_t>(l.index() - 1)];
    if (l.is_inverse()) {
      for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        out.push(it->inverse());
      }
    } else {
      for (Letter x : w) out.push(x);
    }
  }
  return out;
}

std::string Endomorphism::str() const {
  std::string s;
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) s += "; ";
    s += letter_char(Letter(i, false));
    s += "->";
    s += images_[static_cast<std::size_t>(i - 1)].str();
  }
  return s;
}

namespace {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  Endomorphism parse() {
    std::vector<std::pair<int, std::string>> rules;
    skip_ws();
    if (pos_ == text_.size()) fail("empty morphism");
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      char c = peek();
      if (!(c >= 'a' && c <= 'z')) fail("expected a lowercase letter");
      ++pos_;
      int idx = c - 'a' + 1;
      skip_ws();
      expect('-');
      expect('>');
      skip_ws();
      std::string img;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        img.push_back(text_[pos_++]);
      }
      if (img.empty() && peek() == '1') {
        ++pos_;
        img = "1";
      }
      if (img.empty()) fail("expected an image word");
      for (auto& [i, _] : rules) {
        if (i == idx) {
          pos_ = at;
          fail(std::string("duplicate rule for letter '") + c + "'");
        }
      }
      rules.emplace_back(idx, img);
      skip_ws();
      if (pos_ == text_.size()) break;
      if (peek() != ';') fail("expected ';' between rules");
      ++pos_;
      skip_ws();
      if (pos_ == text_.size()) break;  // trailing separator
    }
    const int rank = static_cast<int>(rules.size());
    std::vector<Word> images(rules.size());
    for (auto& [idx, img] : rules) {
      if (idx > rank) {
        throw Error(std::string("missing rule: letters must be a..") +
                    letter_char(Letter(rank, false)) + " but found '" +
                    letter_char(Letter(idx, false)) + "'");
      }
      Word w;
      try {
        w = Word::parse(img, rank);
      } catch (const Error& e) {
        throw Error("image of '" + std::string(1, letter_char(Letter(idx, false))) +
                    "': " + e.what());
      }
      images[static_cast<std::size_t>(idx - 1)] = std::move(w);
    }
    return Endomorphism(std::move(images));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Word power(Letter l, std::size_t k) {
  return Word::from_reduced(std::vector<Letter>(k, l));
}

}  // namespace

Endomorphism parse_endomorphism(std::string_view text) {
  return RuleParser(text).parse();
}

Endomorphism compose(const Endomorphism& first, const Endomorphism& second) {
  if (first.rank() != second.rank()) throw Error("rank mismatch in compose");
  std::vector<Word> imgs;
  for (const Word& w : first.images()) imgs.push_back(second.apply(w));
  return Endomorphism(std::move(imgs));
}

Endomorphism dollar_extension(const Endomorphism& phi, const Word& u) {
  if (u.max_index() > phi.rank()) throw Error("dollar_extension: u exceeds rank");
  std::vector<Word> imgs = phi.images();
  const Letter dollar(phi.rank() + 1, false);
  imgs.push_back(u.inverse() * Word::from_reduced({dollar}));
  return Endomorphism(std::move(imgs));
}

PsiLift psi_lift(const Endomorphism& phi) {
  const std::size_t k = phi.max_image_length();
  const Letter y(phi.rank() + 1, false);
  const Letter z(phi.rank() + 2, false);
  const Word yk = power(y, k);
  const Word yk_inv = yk.inverse();
  std::vector<Word> imgs;
  for (const Word& w : phi.images()) imgs.push_back(yk * w * yk_inv);
  imgs.push_back(Word::from_reduced({y.inverse(), z, y}));
  imgs.push_back(Word::from_reduced({z}));
  return {Endomorphism(std::move(imgs)), k};
}

// --- Nielsen reduction ------------------------------------------------------

namespace {

// Lyndon–Schupp order on single words: length, then the left half
// (ceil(n/2) letters), then the left half of the inverse, then the word.
struct HalfKey {
  std::size_t len;
  std::vector<Letter> left;
  std::vector<Letter> left_inv;
  std::vector<Letter> full;

  auto operator<=>(const HalfKey&) const = default;
};

HalfKey half_key(const Word& w) {
  const std::size_t h = (w.size() + 1) / 2;
  Word inv = w.inverse();
  return {w.size(),
          std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h)),
          std::vector<Letter>(inv.begin(), inv.begin() + static_cast<std::ptrdiff_t>(h)),
          std::vector<Letter>(w.begin(), w.end())};
}

// Elements are compared as pairs {w, w^{-1}}.
std::pair<HalfKey, HalfKey> pair_key(const Word& w) {
  HalfKey a = half_key(w);
  HalfKey b = half_key(w.inverse());
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

NielsenResult nielsen_reduce(const std::vector<Word>& input) {
  NielsenResult r;
  r.tuple = input;
  for (std::size_t i = 0; i < input.size(); ++i) {
    r.expressions.push_back(Word::from_reduced({Letter(static_cast<int>(i) + 1, false)}));
  }
  // Position bookkeeping: moves refer to indices in the current tuple.
  auto drop_empties = [&r]() {
    for (std::size_t i = 0; i < r.tuple.size();) {
      if (r.tuple[i].empty()) {
        r.moves.push_back({NielsenMove::Kind::Drop, i, i, false});
        r.tuple.erase(r.tuple.begin() + static_cast<std::ptrdiff_t>(i));
        r.expressions.erase(r.expressions.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
  };
  drop_empties();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < r.tuple.size() && !changed; ++j) {
      auto current = pair_key(r.tuple[j]);
      for (std::size_t k = 0; k < r.tuple.size() && !changed; ++k) {
        if (k == j) continue;
        for (int s = 0; s < 2 && !changed; ++s) {
          const bool inv = s == 1;
          const Word src = inv ? r.tuple[k].inverse() : r.tuple[k];
          const Word src_expr = inv ? r.expressions[k].inverse() : r.expressions[k];
          for (int side = 0; side < 2 && !changed; ++side) {
            Word cand = side == 0 ? r.tuple[j] * src : src * r.tuple[j];
            if (pair_key(cand) < current) {
              r.tuple[j] = std::move(cand);
              r.expressions[j] = side == 0 ? r.expressions[j] * src_expr
                                           : src_expr * r.expressions[j];
              r.moves.push_back({side == 0 ? NielsenMove::Kind::RightMultiply
                                           : NielsenMove::Kind::LeftMultiply,
                                 j, k, inv});
              changed = true;
            }
          }
        }
      }
    }
    if (changed) drop_empties();
  }
  return r;
}

std::variant<AutInverse, NotAutomorphism> invert_automorphism(const Endomorphism& phi) {
  NielsenResult nr = nielsen_reduce(phi.images());
  const int n = phi.rank();
  if (static_cast<int>(nr.tuple.size()) != n) return NotAutomorphism{nr.tuple};
  std::vector<Word> inv(static_cast<std::size_t>(n));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < nr.tuple.size(); ++j) {
    const Word& t = nr.tuple[j];
    if (t.size() != 1) return NotAutomorphism{nr.tuple};
    const Letter l = t[0];
    const auto slot = static_cast<std::size_t>(l.index() - 1);
    if (hit[slot]) return NotAutomorphism{nr.tuple};
    hit[slot] = true;
    // expressions[j] (over original letters) maps to l under phi.
    inv[slot] = l.is_inverse() ? nr.expressions[j].inverse() : nr.expressions[j];
  }
  Endomorphism inverse(std::move(inv));
  const Endomorphism id = Endomorphism::identity(n);
  if (compose(phi, inverse) != id || compose(inverse, phi) != id) {
    throw Error("internal: Nielsen certificate failed verification");
  }
  return AutInverse{std::move(inverse), std::move(nr.moves)};
}

}  // namespace freebound
