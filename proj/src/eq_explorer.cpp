#include "freebound/eq_explorer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "freebound/cancellation.hpp"

namespace freebound {

OverhangState overhang(const Word& x_image, const Word& y_image) {
  const std::size_t c = meet_length(x_image.letters(), y_image.letters());
  return {x_image.suffix_from(c), y_image.suffix_from(c)};
}

namespace {

using LassoKey = std::pair<Word, Word>;

struct SubtreeResult {
  std::vector<Word> elements;
  std::set<LassoKey> candidates;
  std::uint64_t nodes = 0, pruned = 0, frontier = 0;
  bool cap_hit = false;
};

// Bounded view of a branch state used for cycle detection: the shorter tail
// in full, the longer one through windows of `slack` letters at each end.
struct Projection {
  Letter last;
  bool x_shorter = true;
  Word short_tail, long_head, long_end;
  bool operator==(const Projection&) const = default;
};

Projection project(Letter last, const OverhangState& st, std::size_t slack) {
  const bool xs = st.xtail.size() <= st.ytail.size();
  const Word& lo = xs ? st.ytail : st.xtail;
  const std::size_t w = std::min(slack, lo.size());
  return {last, xs, xs ? st.xtail : st.ytail, lo.prefix(w), lo.suffix_from(lo.size() - w)};
}

void explore_subtree(const Endomorphism& phi, const Endomorphism& psi, Letter first,
                     std::size_t depth, std::size_t slack, std::uint64_t max_nodes,
                     SubtreeResult& out) {
  struct Frame {
    Word delta, x, y;
  };
  std::vector<Frame> stack{{Word::from_reduced({first}), phi.image(first), psi.image(first)}};
  std::vector<Projection> path;  // path[i] belongs to the prefix of length i+1
  const std::size_t slots = 2 * static_cast<std::size_t>(phi.rank());
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++out.nodes > max_nodes) {
      out.cap_hit = true;
      return;
    }
    const std::size_t len = f.delta.size();
    path.resize(len - 1);
    OverhangState st = overhang(f.x, f.y);
    if (std::min(st.xtail.size(), st.ytail.size()) > slack) {
      ++out.pruned;
      continue;
    }
    if (st.xtail.empty() && st.ytail.empty()) out.elements.push_back(f.delta);
    const Letter last = f.delta.back();
    Projection pr = project(last, st, slack);
    for (std::size_t i = path.size(); i-- > 0;) {
      if (path[i] == pr) {
        const Word prefix = f.delta.prefix(i + 1);
        const Word loop = f.delta.suffix_from(i + 1);
        auto norm = normalize_lasso(prefix, loop);
        out.candidates.emplace(norm.prefix, norm.loop);
        break;
      }
    }
    path.push_back(std::move(pr));
    if (len == depth) {
      ++out.frontier;
      continue;
    }
    for (std::size_t s = slots; s-- > 0;) {
      const Letter a = Letter::from_slot(s);
      if (a == last.inverse()) continue;
      Word d = f.delta;
      d.push(a);
      stack.push_back({std::move(d), f.x * phi.image(a), f.y * psi.image(a)});
    }
  }
}

bool in_equalizer_nearby(const Endomorphism& phi, const Endomorphism& psi, const Word& p,
                         std::size_t slack, std::uint64_t budget) {
  struct Frame {
    Word z_end, x, y;
    std::size_t len;
  };
  std::vector<Frame> stack{{p, phi.apply(p), psi.apply(p), 0}};
  std::uint64_t nodes = 0;
  while (!stack.empty() && nodes++ < budget) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    OverhangState st = overhang(f.x, f.y);
    if (st.xtail.empty() && st.ytail.empty() && !f.z_end.empty()) return true;
    if (std::min(st.xtail.size(), st.ytail.size()) > slack || f.len == slack) continue;
    for (std::size_t s = 2 * static_cast<std::size_t>(phi.rank()); s-- > 0;) {
      const Letter a = Letter::from_slot(s);
      if (!f.z_end.empty() && a == f.z_end.back().inverse()) continue;
      Word w = f.z_end;
      w.push(a);
      stack.push_back({std::move(w), f.x * phi.image(a), f.y * psi.image(a), f.len + 1});
    }
  }
  return false;
}

}  // namespace

ExplorationReport explore(const Endomorphism& phi, const Endomorphism& psi,
                          const ExploreOptions& options) {
  if (phi.rank() != psi.rank()) throw Error("explore: rank mismatch");
  require_injective(phi);
  require_injective(psi);
  ExplorationReport r;
  r.phi = phi.str();
  r.psi = psi.str();
  r.depth = options.depth;
  r.slack = options.slack ? *options.slack : equalizer_constant(phi, psi);
  r.horizon = std::max<std::size_t>(64, 4 * options.depth);
  const std::size_t Bphi = brp_constant(phi).B, Bpsi = brp_constant(psi).B;
  if (r.slack < std::max(Bphi, Bpsi)) {
    throw Error("explore: slack must be at least the BRP constant");
  }

  const int slots = 2 * phi.rank();
  std::vector<SubtreeResult> parts(static_cast<std::size_t>(slots));
  const std::uint64_t cap = std::max<std::uint64_t>(1, options.max_nodes / static_cast<std::uint64_t>(slots));
  if (r.depth > 0) {
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
    for (int s = 0; s < slots; ++s) {
      explore_subtree(phi, psi, Letter::from_slot(static_cast<std::size_t>(s)), r.depth, r.slack,
                      cap, parts[static_cast<std::size_t>(s)]);
    }
  }
  std::set<LassoKey> candidates;
  for (auto& p : parts) {
    r.finite_elements.insert(r.finite_elements.end(), p.elements.begin(), p.elements.end());
    candidates.insert(p.candidates.begin(), p.candidates.end());
    r.nodes += p.nodes;
    r.pruned_count += p.pruned;
    r.frontier_count += p.frontier;
    r.node_cap_hit = r.node_cap_hit || p.cap_hit;
  }
  std::sort(r.finite_elements.begin(), r.finite_elements.end());

  // Candidates are kept only if both images agree to the horizon.
  std::vector<LassoKey> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  std::vector<char> verified(cand.size(), 0), singular(cand.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const BoundaryStream alpha = BoundaryStream::lasso(cand[i].first, cand[i].second);
    const Word a = boundary_apply_prefix(phi, Bphi, alpha, r.horizon);
    const Word b = boundary_apply_prefix(psi, Bpsi, alpha, r.horizon);
    if (a != b) continue;
    verified[i] = 1;
    singular[i] = in_equalizer_nearby(phi, psi, alpha.prefix(r.depth), r.slack,
                                      options.singular_nodes);
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (!verified[i]) continue;
    r.boundary_points.push_back({{cand[i].first, cand[i].second}, singular[i] != 0});
  }
  r.orbit_estimate = orbit_group(r).size();

  if (!r.finite_elements.empty()) {
    r.verdict = ExplorationReport::Verdict::Nontrivial;
    r.witness = r.finite_elements.front();
  } else if (r.node_cap_hit) {
    r.verdict = ExplorationReport::Verdict::Inconclusive;
  } else {
    r.verdict = ExplorationReport::Verdict::TrivialSoFar;
  }
  return r;
}

std::vector<std::vector<std::size_t>> orbit_group(const ExplorationReport& report) {
  std::vector<std::size_t> regular;
  for (std::size_t i = 0; i < report.boundary_points.size(); ++i) {
    if (!report.boundary_points[i].singular) regular.push_back(i);
  }
  std::vector<std::size_t> parent(regular.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const std::size_t h = report.horizon;
  std::vector<Word> prefixes;
  for (std::size_t i : regular) prefixes.push_back(report.boundary_points[i].stream().prefix(h));
  for (std::size_t i = 0; i < regular.size(); ++i) {
    const BoundaryStream a = report.boundary_points[regular[i]].stream();
    for (const Word& e : report.finite_elements) {
      for (const Word& g : {e, e.inverse()}) {
        const Word moved = (g * a.prefix(h + g.size())).prefix(h);
        for (std::size_t j = 0; j < regular.size(); ++j) {
          if (j != i && moved == prefixes[j]) parent[find(j)] = find(i);
        }
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < regular.size(); ++i) classes[find(i)].push_back(regular[i]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::string verdict_str(const ExplorationReport& r) {
  switch (r.verdict) {
    case ExplorationReport::Verdict::Nontrivial:
      return "NONTRIVIAL(" + r.witness->str() + ")";
    case ExplorationReport::Verdict::Inconclusive:
      return "INCONCLUSIVE";
    case ExplorationReport::Verdict::TrivialSoFar:
      break;
  }
  return "TRIVIAL-SO-FAR";
}

}  // namespace freebound
