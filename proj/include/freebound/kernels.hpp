#pragma once

#include <cstdint>
#include <vector>

#include "freebound/growth.hpp"
#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

// Brute-force kernels over all reduced words up to a length. Each takes a
// `parallel` flag: false runs the serial reference, true splits the work
// over two-letter prefixes with OpenMP. Results are identical either way.
namespace freebound::kernels {

struct CancellationMax {
  /// Letters cancelled on each side of the product.
  std::size_t cancelled = 0;
  Word u, v;
};

/// Max cancellation in u·v over all reduced products with 1 <= |u|, |v| <= max_len.
/// Ties go to the shortlex-least u, then v.
CancellationMax max_cancellation(const Endomorphism& phi, std::size_t max_len, bool parallel);

/// Every u with 1 <= |u| <= max_len and |uφ| < |u| (strict: <=), shortlex.
std::vector<Word> length_violations(const Endomorphism& phi, std::size_t max_len, bool strict,
                                    bool parallel);

/// Every u with 1 <= |u| <= max_len and uφ = uψ, shortlex.
std::vector<Word> equalizer_words(const Endomorphism& phi, const Endomorphism& psi,
                                  std::size_t max_len, bool parallel);

/// Number of u with |u| <= max_len where membership in L disagrees with
/// |uφ| <= |u| + k.
std::uint64_t lk_mismatches(const Endomorphism& phi, const RationalLanguage& L, std::size_t k,
                            std::size_t max_len, bool parallel);

}  // namespace freebound::kernels
