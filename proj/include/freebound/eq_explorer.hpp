#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

/// Images of the current prefix δ past their common prefix.
struct OverhangState {
  Word xtail;
  Word ytail;
  bool operator==(const OverhangState&) const = default;
};
OverhangState overhang(const Word& x_image, const Word& y_image);

struct EqBoundaryPoint {
  BoundaryStream::Lasso lasso;
  /// Limit of found equalizer elements (at this depth), else regular.
  bool singular = false;
  BoundaryStream stream() const { return BoundaryStream::lasso(lasso.prefix, lasso.loop); }
};

struct ExplorationReport {
  enum class Verdict { TrivialSoFar, Nontrivial, Inconclusive };

  std::string phi, psi;
  std::size_t depth = 0, slack = 0, horizon = 0;
  /// Nonempty e with eφ = eψ, shortlex.
  std::vector<Word> finite_elements;
  /// Verified lassos, ordered by (prefix, loop) shortlex.
  std::vector<EqBoundaryPoint> boundary_points;
  std::uint64_t nodes = 0;
  std::uint64_t pruned_count = 0;
  /// Live branches cut at the depth; zero means no equalizer element exists at all.
  std::uint64_t frontier_count = 0;
  bool node_cap_hit = false;
  std::size_t orbit_estimate = 0;
  Verdict verdict = Verdict::TrivialSoFar;
  std::optional<Word> witness;

  /// Eq nontrivial forces infinitely many boundary equalizer points; a report
  /// with elements but no boundary point contradicts that.
  bool criterion_consistent() const { return finite_elements.empty() || !boundary_points.empty(); }
};

struct ExploreOptions {
  std::size_t depth = 12;
  /// Defaults to equalizer_constant(φ, ψ).
  std::optional<std::size_t> slack;
  std::uint64_t max_nodes = 20'000'000;
  /// Search budget for the singular test, per point.
  std::uint64_t singular_nodes = 200'000;
  bool parallel = true;
};

/// Depth-first search over reduced prefixes keeping the overhang; prunes
/// branches once both tails exceed the slack. Throws NotInjective.
ExplorationReport explore(const Endomorphism& phi, const Endomorphism& psi,
                          const ExploreOptions& options = {});

/// Classes of indices into report.boundary_points (regular points only),
/// merged when a found element carries one to the other to the horizon.
std::vector<std::vector<std::size_t>> orbit_group(const ExplorationReport& report);

std::string verdict_str(const ExplorationReport& r);

}  // namespace freebound
