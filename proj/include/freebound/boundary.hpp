#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freebound/growth.hpp"
#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class FixNotTrivial : public Error {
 public:
  explicit FixNotTrivial(Word w)
      : Error("fixed subgroup is nontrivial: " + w.str() + " is fixed"), witness(std::move(w)) {}
  Word witness;
};

class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

// --- ALI / ASLI ---------------------------------------------------------------

struct AliReport {
  enum class Condition { ALI, ASLI };
  Condition condition = Condition::ALI;
  bool holds = false;
  /// Exactly the u != 1 with |uφ| < |u| (ALI) or |uφ| <= |u| (ASLI), when holds.
  std::vector<Word> exceptions;
  /// Max letter image length; |uφ| >= |u| - K whenever ALI holds.
  std::size_t lifted_K = 0;
};

/// Decides ALI / ASLI through the ψ-lift and its L_k language restricted to
/// the original letters. Throws NotInjective.
AliReport ali_classify(const Endomorphism& phi, bool strict);

// --- σ / τ / ρ ----------------------------------------------------------------

struct SigmaDecomposition {
  Word sigma;  // u ∧ uφ
  Word tau;    // u = σ·τ
  Word rho;    // uφ = σ·ρ
};
SigmaDecomposition sigma_tau_rho(const Endomorphism& phi, const Word& u);

// --- fixed subgroup oracle ----------------------------------------------------

struct FixOracle {
  enum class Strategy { BoundedSearch, External };
  enum class Outcome { Trivial, Nontrivial, Unknown };

  Strategy strategy = Strategy::BoundedSearch;
  Outcome outcome = Outcome::Unknown;
  /// Verified fixed words found (a basis of the subgroup they generate).
  std::vector<Word> basis;
  std::size_t depth = 0;
  /// How triviality was certified, or why it could not be.
  std::string reason;
};

/// Searches fixed words up to `depth`. Triviality is only certified when
/// every candidate can be accounted for: φ strictly length-increasing, or φ
/// ASLI with all (finitely many) exceptions checked.
FixOracle fix_oracle_bounded(const Endomorphism& phi, std::size_t depth);

// --- translation equations ----------------------------------------------------

struct TranslationResult {
  enum class Kind { Unique, None, Unknown };
  Kind kind = Kind::Unknown;
  Word solution;
};

struct TranslationSearch {
  std::vector<Word> solutions;  // shortlex order
  bool complete = false;
};

/// All x with |x| <= budget and xφ = x·v. Complete when every branch died
/// before the budget. Prefixes are pruned by |y ∧ yφ| >= min(|yφ| - B, |y|),
/// which every prefix followed by at least |v| more letters must satisfy,
/// and by L_|v| when φ is length-increasing (or its ψ-lift when ALI).
class TranslationSolver {
 public:
  /// Throws NotInjective.
  explicit TranslationSolver(Endomorphism phi);

  TranslationSearch search(const Word& v, std::size_t budget);
  /// Every x with |x| <= budget and |x^{-1}·xφ| <= reach: the solutions of
  /// all the equations with |v| <= reach at once.
  TranslationSearch search_upto(std::size_t reach, std::size_t budget);
  std::size_t B() const { return B_; }

 private:
  const RationalLanguage* language_for(std::size_t k);
  template <class Accept>
  TranslationSearch explore(std::size_t reach, std::size_t budget, Accept&& accept);

  Endomorphism phi_;
  std::size_t B_ = 0;
  enum class Growth { LI, ALI, Other } growth_ = Growth::Other;
  std::size_t K_ = 0;
  std::optional<GrowthEngine> engine_;
  std::map<std::size_t, RationalLanguage> languages_;
};

/// The unique x with xφ = x·v. Throws FixNotTrivial if the oracle (or the
/// search) shows Fix(φ) != 1, PreconditionFailed if the oracle is Unknown.
TranslationResult solve_translation(const Endomorphism& phi, const Word& v, const FixOracle& oracle,
                                    std::size_t budget);

// --- boundary fixed points ----------------------------------------------------

/// Stream seeded by y ∈ X_1 that appends the first letter of the current ρ.
BoundaryStream rho_stream(const Endomorphism& phi, const Word& seed);

struct BoundaryFixReport {
  AliReport ali;
  FixOracle oracle;
  std::vector<Word> exceptions;  // L
  std::vector<Word> v_prime;     // solutions of xφ = x·v, |v| <= 2B
  std::vector<Word> x2;
  std::size_t m = 0;
  std::size_t B = 0;
  std::vector<Word> seeds;  // Y
  std::vector<BoundaryStream> points;
};

/// Fix(φ̂) for an ALI monomorphism with trivial Fix(φ). Throws
/// PreconditionFailed when φ is not ALI, Fix is not certified trivial, or a
/// translation search runs out of budget.
BoundaryFixReport boundary_fixed_points_ali(const Endomorphism& phi, const FixOracle& oracle,
                                            std::size_t budget = 12);

struct BoundaryAnswer {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<BoundaryStream> witness;
  std::string reason;
};

/// Stream wing·core^ω for a nontrivial fixed word.
BoundaryStream singular_witness(const Word& fixed);

BoundaryAnswer has_boundary_fixed_point(const Endomorphism& phi, const FixOracle& oracle,
                                        std::size_t budget = 12);

struct AutFixAnswer {
  enum class Kind { Trivial, Nontrivial, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<BoundaryStream> witness;
  std::size_t M = 0, N = 0, m = 0, K = 0, s = 0;
  std::vector<Word> X;
  std::string reason;
};

/// Whether Fix(φ̂) is trivial for an automorphism φ. Throws
/// NotAutomorphismError.
AutFixAnswer aut_boundary_fix_trivial(const Endomorphism& phi, const FixOracle& oracle,
                                      std::size_t budget = 12);

}  // namespace freebound
