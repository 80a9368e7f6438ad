#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freebound/word.hpp"

namespace freebound {

/// An endomorphism of F_n given by the images of the positive letters.
/// Maps act on the right: apply(compose(f, g), u) = apply(g, apply(f, u)).
class Endomorphism {
 public:
  Endomorphism() = default;
  /// Throws if an image uses a letter beyond rank = images.size().
  explicit Endomorphism(std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  /// Image of a letter of the symmetrized alphabet.
  Word image(Letter l) const;
  /// Longest letter image.
  std::size_t max_image_length() const;

  Word apply(const Word& u) const;

  /// "a->aa; b->aabbAA"
  std::string str() const;

  bool operator==(const Endomorphism&) const = default;

 private:
  std::vector<Word> images_;
};

/// Parses the rule grammar "x->word(;x->word)*". Each of the first n
/// positive letters must appear exactly once on the left; images are
/// reduced on parse and may be written "1" for the empty word.
Endomorphism parse_endomorphism(std::string_view text);

Endomorphism compose(const Endomorphism& first, const Endomorphism& second);

/// The extension to rank n+1 sending the new last letter $ to u^{-1}$.
Endomorphism dollar_extension(const Endomorphism& phi, const Word& u);

struct PsiLift {
  Endomorphism lift;  // rank n+2
  std::size_t k = 0;  // max letter image length of the original
};

/// Appends two fresh letters y (= n+1) and z (= n+2) with
/// y -> y^{-1} z y, z -> z, x -> y^K (x phi) y^{-K}.
PsiLift psi_lift(const Endomorphism& phi);

// --- Nielsen reduction ------------------------------------------------------

struct NielsenMove {
  enum class Kind { RightMultiply, LeftMultiply, Drop };
  Kind kind = Kind::RightMultiply;
  std::size_t target = 0;
  std::size_t source = 0;
  bool inverse_source = false;

  bool operator==(const NielsenMove&) const = default;
};

struct NielsenResult {
  /// Nielsen-reduced tuple (empty entries dropped).
  std::vector<Word> tuple;
  /// expressions[i], evaluated on the original tuple, gives tuple[i]. They are
  /// words over letters 1..k standing for the k original entries.
  std::vector<Word> expressions;
  std::vector<NielsenMove> moves;
};

/// Nielsen reduction driven by the Lyndon–Schupp half-word order. The result
/// is a free basis of the subgroup generated by the input.
NielsenResult nielsen_reduce(const std::vector<Word>& tuple);

struct AutInverse {
  Endomorphism inverse;
  std::vector<NielsenMove> certificate;
};
struct NotAutomorphism {
  std::vector<Word> reduced_tuple;
};

std::variant<AutInverse, NotAutomorphism> invert_automorphism(
    const Endomorphism& phi);

}  // namespace freebound
