#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

class NotInjective : public Error {
 public:
  explicit NotInjective(const std::string& what) : Error("not injective: " + what) {}
};

/// Throws NotInjective unless the image subgroup has full rank.
void require_injective(const Endomorphism& phi);

struct BrpCertificate {
  enum class Method { ExhaustiveToDepth, StateClosure };

  std::string morphism;
  /// No reduced product uv loses more than 2B letters: |(uv)φ| >= |uφ| + |vφ| - 2B.
  std::size_t B = 0;
  /// A reduced product u·v that loses exactly 2B letters (absent when B = 0).
  std::optional<std::pair<Word, Word>> witness;
  Method method = Method::StateClosure;
  /// Only meaningful for ExhaustiveToDepth.
  std::size_t depth = 0;
};

/// Exact bounded-reduction constant: the longest common prefix of the image
/// languages of words starting with distinct letters, computed on the product
/// of their saturated automata. Throws NotInjective.
BrpCertificate brp_constant(const Endomorphism& phi);

/// Min of |zφ| over reduced z of length k whose first letter is not
/// `forbidden_first`.
std::size_t min_image_length(const Endomorphism& phi, std::size_t k,
                             std::optional<Letter> forbidden_first = std::nullopt);

/// Sound M_N: |u ∧ v| <= N implies |uφ ∧ vφ| <= M_N. Exact over all pairs of
/// finite words, hence valid for boundary points too. Throws NotInjective.
std::size_t mn_constant(const Endomorphism& phi, std::size_t N);

struct MeetBoundTable {
  std::string morphism;
  std::map<std::size_t, std::size_t> entries;
};
MeetBoundTable meet_bound_table(const Endomorphism& phi, std::size_t max_n);

/// 2K + 4B with B the larger BRP constant and K = max(M_0^φ, M_0^ψ, B).
std::size_t equalizer_constant(const Endomorphism& phi, const Endomorphism& psi);

/// Length-k prefix of the image of a boundary point, taken from apply(φ, α^[m])
/// once at least k letters lie beyond the reach of future cancellation.
Word boundary_apply_prefix(const Endomorphism& phi, const BoundaryStream& alpha, std::size_t k);
/// Same, with a known BRP constant.
Word boundary_apply_prefix(const Endomorphism& phi, std::size_t B, const BoundaryStream& alpha,
                           std::size_t k);

}  // namespace freebound
