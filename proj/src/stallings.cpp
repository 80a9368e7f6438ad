#include "freebound/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace freebound {

namespace {

// Union-find over vertices with a worklist of pending identifications.
class Folder {
 public:
  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adj_.emplace_back();
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      int& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }

  void add_edge(int p, Letter x, int q) {
    insert(p, x, q);
    insert(q, x.inverse(), p);
    drain();
  }

  // Removes non-basepoint vertices of degree one, repeatedly.
  void trim(int base) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < adj_.size(); ++v) {
        const int vi = static_cast<int>(v);
        if (vi == base || find(vi) != vi || adj_[v].size() != 1) continue;
        auto [x, t] = *adj_[v].begin();
        adj_[static_cast<std::size_t>(find(t))].erase(x.inverse());
        adj_[v].clear();
        dead_.push_back(vi);
        changed = true;
      }
    }
  }

  bool is_dead(int v) const {
    return std::find(dead_.begin(), dead_.end(), v) != dead_.end();
  }

  std::map<Letter, int> out(int v) {
    std::map<Letter, int> m;
    for (auto [x, t] : adj_[static_cast<std::size_t>(v)]) m[x] = find(t);
    return m;
  }

 private:
  void insert(int p, Letter x, int q) {
    p = find(p);
    q = find(q);
    auto& m = adj_[static_cast<std::size_t>(p)];
    auto it = m.find(x);
    if (it == m.end()) {
      m.emplace(x, q);
      return;
    }
    int r = find(it->second);
    if (r != q) pending_.emplace_back(r, q);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [u, v] = pending_.front();
      pending_.pop_front();
      u = find(u);
      v = find(v);
      if (u == v) continue;
      if (u > v) std::swap(u, v);  // keep the smaller id (basepoint stays 0)
      parent_[static_cast<std::size_t>(v)] = u;
      auto moved = std::move(adj_[static_cast<std::size_t>(v)]);
      adj_[static_cast<std::size_t>(v)].clear();
      for (auto [x, t] : moved) insert(u, x, t);
    }
  }

  std::vector<int> parent_;
  std::vector<std::map<Letter, int>> adj_;
  std::deque<std::pair<int, int>> pending_;
  std::vector<int> dead_;
};

}  // namespace

std::size_t InverseAutomaton::edge_count() const {
  std::size_t c = 0;
  for (const auto& m : out_) c += m.size();
  return c;
}

std::vector<InverseAutomaton::Edge> InverseAutomaton::positive_edges() const {
  std::vector<Edge> e;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    for (auto [x, t] : out_[v]) {
      if (!x.is_inverse()) e.push_back({static_cast<int>(v), x, t});
    }
  }
  return e;
}

bool InverseAutomaton::accepts(const Word& w) const {
  int v = 0;
  for (Letter x : w) {
    auto it = out_[static_cast<std::size_t>(v)].find(x);
    if (it == out_[static_cast<std::size_t>(v)].end()) return false;
    v = it->second;
  }
  return v == 0;
}

std::string InverseAutomaton::dot() const {
  std::ostringstream os;
  os << "digraph stallings {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (const Edge& e : positive_edges()) {
    os << "  " << e.source << " -> " << e.target << " [label=\"" << letter_char(e.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

InverseAutomaton fold(const std::vector<Word>& generators, std::uint64_t shuffle_seed) {
  struct PetalEdge {
    int p;
    Letter x;
    int q;
  };
  Folder f;
  const int base = f.add_vertex();
  std::vector<PetalEdge> edges;
  for (const Word& g : generators) {
    if (g.empty()) continue;
    int prev = base;
    for (std::size_t i = 0; i < g.size(); ++i) {
      int next = i + 1 == g.size() ? base : f.add_vertex();
      edges.push_back({prev, g[i], next});
      prev = next;
    }
  }
  if (shuffle_seed != 0) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(edges.begin(), edges.end(), rng);
  }
  for (const auto& e : edges) f.add_edge(e.p, e.x, e.q);
  f.trim(base);

  // Canonical breadth-first renumbering from the basepoint.
  InverseAutomaton a;
  std::map<int, int> number;
  std::deque<int> queue{f.find(base)};
  number[f.find(base)] = 0;
  std::vector<std::map<Letter, int>> raw;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto m = f.out(v);
    raw.push_back(m);
    for (auto [x, t] : m) {
      if (!number.count(t)) {
        number[t] = static_cast<int>(number.size());
        queue.push_back(t);
      }
    }
  }
  a.out_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (auto [x, t] : raw[i]) a.out_[i][x] = number.at(t);
  }
  return a;
}

int rank(const InverseAutomaton& a) {
  return static_cast<int>(a.edge_count() / 2) - static_cast<int>(a.vertex_count()) + 1;
}

std::vector<Word> basis(const InverseAutomaton& a) {
  const std::size_t n = a.vertex_count();
  std::vector<Word> path(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, Letter>> tree_edge(n, {-1, Letter()});
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [x, t] : a.out(v)) {
      if (seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = true;
      path[static_cast<std::size_t>(t)] =
          path[static_cast<std::size_t>(v)] * Word::from_reduced({x});
      tree_edge[static_cast<std::size_t>(t)] = {v, x};
      queue.push_back(t);
    }
  }
  std::vector<Word> gens;
  for (const auto& e : a.positive_edges()) {
    auto [tp, tx] = tree_edge[static_cast<std::size_t>(e.target)];
    auto [sp, sx] = tree_edge[static_cast<std::size_t>(e.source)];
    const bool in_tree = (tp == e.source && tx == e.label) ||
                         (sp == e.target && sx == e.label.inverse());
    if (in_tree) continue;
    gens.push_back(path[static_cast<std::size_t>(e.source)] * Word::from_reduced({e.label}) *
                   path[static_cast<std::size_t>(e.target)].inverse());
  }
  return gens;
}

bool is_monomorphism(const Endomorphism& phi) {
  return rank(fold(phi.images())) == phi.rank();
}

}  // namespace freebound
