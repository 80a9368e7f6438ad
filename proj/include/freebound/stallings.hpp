#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freebound/morphism.hpp"
#include "freebound/word.hpp"

namespace freebound {

/// A folded, trimmed inverse automaton with basepoint 0. Vertices are
/// numbered breadth-first from the basepoint with outgoing labels visited
/// in letter order, so two automata of the same subgroup compare equal.
class InverseAutomaton {
 public:
  struct Edge {
    int source;
    Letter label;
    int target;
    bool operator==(const Edge&) const = default;
  };

  std::size_t vertex_count() const { return out_.size(); }
  /// Directed edges, both orientations (|E| in the usual count).
  std::size_t edge_count() const;
  /// Positive-labelled edges only.
  std::vector<Edge> positive_edges() const;
  const std::map<Letter, int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }

  /// Reads w from the basepoint; true iff the path exists and returns.
  bool accepts(const Word& w) const;

  std::string dot() const;

  bool operator==(const InverseAutomaton&) const = default;

 private:
  friend InverseAutomaton fold(const std::vector<Word>&, std::uint64_t);
  std::vector<std::map<Letter, int>> out_;
};

/// Flower automaton of the generators, folded and trimmed. `shuffle_seed`
/// perturbs the folding order (0 = natural order); the result must not
/// depend on it.
InverseAutomaton fold(const std::vector<Word>& generators, std::uint64_t shuffle_seed = 0);

/// |E|/2 - |Q| + 1.
int rank(const InverseAutomaton& a);

/// Spanning-tree basis, one generator per positive edge off the tree.
std::vector<Word> basis(const InverseAutomaton& a);

/// True iff the image subgroup has rank n.
bool is_monomorphism(const Endomorphism& phi);

}  // namespace freebound
