#include "freebound/boundary.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "freebound/cancellation.hpp"
#include "freebound/stallings.hpp"

namespace freebound {

AliReport ali_classify(const Endomorphism& phi, bool strict) {
  require_injective(phi);
  AliReport r;
  r.condition = strict ? AliReport::Condition::ASLI : AliReport::Condition::ALI;
  const PsiLift lift = psi_lift(phi);
  r.lifted_K = lift.k;
  // If φ were ALI the lift would be length-increasing.
  if (!is_length_increasing(lift.lift).holds) return r;
  const std::size_t k = strict ? 2 * lift.k : 2 * lift.k - 1;
  RationalLanguage L = lang_intersect_alphabet(build_Lk(lift.lift, k), phi.rank());
  if (!lang_finite(L)) return r;
  r.holds = true;
  for (Word& w : lang_enumerate(L, SIZE_MAX)) {
    if (!w.empty()) r.exceptions.push_back(std::move(w));
  }
  return r;
}

SigmaDecomposition sigma_tau_rho(const Endomorphism& phi, const Word& u) {
  const Word img = phi.apply(u);
  const std::size_t s = meet_length(u.letters(), img.letters());
  return {u.prefix(s), u.suffix_from(s), img.suffix_from(s)};
}

namespace {

// Necessary condition on a prefix y of any x with xφ = x·v followed by at
// least |v| more letters, and on every prefix of a word of X_1.
bool prefix_compatible(const Word& y, const Word& img, std::size_t B) {
  const std::size_t m = meet_length(y.letters(), img.letters());
  const std::size_t need =
      std::min(img.size() > B ? img.size() - B : std::size_t{0}, y.size());
  return m >= need;
}

std::size_t slot_count(const Endomorphism& phi) { return 2 * static_cast<std::size_t>(phi.rank()); }

// Depth-first over reduced words whose every prefix is prefix-compatible.
// `visit` sees each surviving word with its image; returning false stops the
// descent below that word. Returns true if some live branch was cut at max_len.
template <class Visit>
bool compatible_dfs(const Endomorphism& phi, std::size_t B, std::size_t max_len, Visit&& visit) {
  struct Node {
    Word y, img;
  };
  bool cut = false;
  std::vector<Node> stack{{Word(), Word()}};
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    if (!visit(n.y, n.img)) continue;
    for (std::size_t s = slot_count(phi); s-- > 0;) {
      const Letter x = Letter::from_slot(s);
      if (!n.y.empty() && x == n.y.back().inverse()) continue;
      Word y = n.y;
      y.push(x);
      Word img = n.img * phi.image(x);
      if (!prefix_compatible(y, img, B)) continue;
      if (y.size() > max_len) {
        cut = true;
        continue;
      }
      stack.push_back({std::move(y), std::move(img)});
    }
  }
  return cut;
}

}  // namespace

FixOracle fix_oracle_bounded(const Endomorphism& phi, std::size_t depth) {
  FixOracle o;
  o.strategy = FixOracle::Strategy::BoundedSearch;
  o.depth = depth;
  std::vector<Word> found;
  if (!is_monomorphism(phi)) {
    for (std::size_t len = 1; len <= depth; ++len) {
      for_each_reduced_word(phi.rank(), len, [&](const Word& u) {
        if (phi.apply(u) == u) found.push_back(u);
        return true;
      });
    }
    if (found.empty()) {
      o.reason = "no fixed word up to the depth; not injective, so no certificate";
      return o;
    }
  } else {
    const std::size_t B = brp_constant(phi).B;
    // Keep only fixed words outside the subgroup found so far.
    std::optional<Word> least;
    InverseAutomaton span = fold({});
    const bool cut = compatible_dfs(phi, B, depth, [&](const Word& y, const Word& img) {
      if (y.empty() || img != y) return true;
      if (!least || y < *least) least = y;
      if (!span.accepts(y)) {
        found.push_back(y);
        span = fold(found);
      }
      return true;
    });
    if (least && std::find(found.begin(), found.end(), *least) == found.end()) found.push_back(*least);
    if (found.empty()) {
      if (!cut) {
        o.outcome = FixOracle::Outcome::Trivial;
        o.reason = "every prefix-compatible branch ends before the depth";
        return o;
      }
      if (is_strictly_length_increasing(phi).holds) {
        o.outcome = FixOracle::Outcome::Trivial;
        o.reason = "strictly length-increasing";
        return o;
      }
      const AliReport asli = ali_classify(phi, true);
      if (asli.holds) {
        for (const Word& u : asli.exceptions) {
          if (phi.apply(u) == u) found.push_back(u);
        }
        if (found.empty()) {
          o.outcome = FixOracle::Outcome::Trivial;
          o.reason = "almost strictly length-increasing; no exception is fixed";
          return o;
        }
      } else {
        o.reason = "no fixed word up to the depth; triviality not certified";
        return o;
      }
    }
  }
  std::sort(found.begin(), found.end());
  o.outcome = FixOracle::Outcome::Nontrivial;
  o.basis = basis(fold(found));
  std::sort(o.basis.begin(), o.basis.end());
  o.reason = "fixed word " + found.front().str();
  return o;
}

// --- translation equations ----------------------------------------------------

TranslationSolver::TranslationSolver(Endomorphism phi) : phi_(std::move(phi)) {
  B_ = brp_constant(phi_).B;
  if (is_length_increasing(phi_).holds) {
    growth_ = Growth::LI;
    engine_.emplace(phi_);
  } else if (ali_classify(phi_, false).holds) {
    growth_ = Growth::ALI;
    const PsiLift lift = psi_lift(phi_);
    K_ = lift.k;
    engine_.emplace(lift.lift);
  }
}

const RationalLanguage* TranslationSolver::language_for(std::size_t k) {
  if (growth_ == Growth::Other) return nullptr;
  auto it = languages_.find(k);
  if (it == languages_.end()) {
    RationalLanguage L = growth_ == Growth::LI
                             ? build_Lk(*engine_, k)
                             : lang_intersect_alphabet(build_Lk(*engine_, k + 2 * K_), phi_.rank());
    it = languages_.emplace(k, std::move(L)).first;
  }
  return &it->second;
}

template <class Accept>
TranslationSearch TranslationSolver::explore(std::size_t reach, std::size_t budget, Accept&& accept) {
  // |xφ| = |x·v| <= |x| + |v|
  const RationalLanguage* lang = language_for(reach);
  TranslationSearch out;
  struct Node {
    Word y, img;
    std::size_t limit;
  };
  bool cut = false;
  std::vector<Node> stack{{Word(), Word(), SIZE_MAX}};
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    if (accept(n.y, n.img)) out.solutions.push_back(n.y);
    for (std::size_t s = slot_count(phi_); s-- > 0;) {
      const Letter x = Letter::from_slot(s);
      if (!n.y.empty() && x == n.y.back().inverse()) continue;
      Word y = n.y;
      y.push(x);
      if (lang && !lang->is_prefix(y)) continue;
      Word img = n.img * phi_.image(x);
      std::size_t limit = n.limit;
      // a failing prefix must sit within the last |v| - 1 letters of x
      if (!prefix_compatible(y, img, B_)) limit = std::min(limit, y.size() + reach - 1);
      if (y.size() > limit) continue;
      if (y.size() > budget) {
        cut = true;
        continue;
      }
      stack.push_back({std::move(y), std::move(img), limit});
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.complete = !cut;
  return out;
}

TranslationSearch TranslationSolver::search(const Word& v, std::size_t budget) {
  return explore(v.size(), budget, [&](const Word& y, const Word& img) { return img == y * v; });
}

TranslationSearch TranslationSolver::search_upto(std::size_t reach, std::size_t budget) {
  return explore(reach, budget, [&](const Word& y, const Word& img) {
    return (y.inverse() * img).size() <= reach;
  });
}

TranslationResult solve_translation(const Endomorphism& phi, const Word& v, const FixOracle& oracle,
                                    std::size_t budget) {
  if (oracle.outcome == FixOracle::Outcome::Nontrivial) {
    throw FixNotTrivial(oracle.basis.empty() ? Word() : oracle.basis.front());
  }
  if (oracle.outcome == FixOracle::Outcome::Unknown) {
    throw PreconditionFailed("solve_translation: Fix not certified trivial (" + oracle.reason + ")");
  }
  TranslationSolver solver(phi);
  TranslationSearch r = solver.search(v, budget);
  if (r.solutions.size() >= 2) throw FixNotTrivial(r.solutions[0] * r.solutions[1].inverse());
  if (r.solutions.size() == 1) return {TranslationResult::Kind::Unique, r.solutions[0]};
  return {r.complete ? TranslationResult::Kind::None : TranslationResult::Kind::Unknown, Word()};
}

// --- boundary fixed points ----------------------------------------------------

namespace {

BoundaryStream::Stepper make_rho_stepper(const Endomorphism& phi) {
  return [phi, img = Word(), init = false](const Word& cur) mutable {
    if (!init) {
      img = phi.apply(cur);
      init = true;
    }
    if (img.size() <= cur.size() || meet_length(cur.letters(), img.letters()) < cur.size()) {
      throw Error("fixed-point stream left X_1 at " + cur.str());
    }
    const Letter a = img[cur.size()];
    img = img * phi.image(a);
    return a;
  };
}

// Eventual periodicity shows up as a repeated ρ within the probe window.
std::optional<BoundaryStream::Lasso> probe_period(const Endomorphism& phi, const Word& seed,
                                                  std::size_t steps) {
  std::map<Word, std::size_t> seen;
  Word cur = seed;
  Word img = phi.apply(cur);
  for (std::size_t i = 0; i <= steps; ++i) {
    if (img.size() <= cur.size()) return std::nullopt;
    Word rho = img.suffix_from(cur.size());
    if (rho.size() > 4 * steps) return std::nullopt;
    auto [it, fresh] = seen.emplace(rho, cur.size());
    if (!fresh) {
      const Word prefix = cur.prefix(it->second);
      const Word loop = cur.suffix_from(it->second);
      if (loop.empty() || !loop.is_cyclically_reduced()) return std::nullopt;
      return normalize_lasso(prefix, loop);
    }
    const Letter a = rho[0];
    cur.push(a);
    img = img * phi.image(a);
  }
  return std::nullopt;
}

}  // namespace

BoundaryStream rho_stream(const Endomorphism& phi, const Word& seed) {
  auto factory = [phi]() { return make_rho_stepper(phi); };
  return BoundaryStream(seed, factory, probe_period(phi, seed, 64));
}

BoundaryFixReport boundary_fixed_points_ali(const Endomorphism& phi, const FixOracle& oracle,
                                            std::size_t budget) {
  BoundaryFixReport r;
  r.ali = ali_classify(phi, false);
  r.oracle = oracle;
  if (!r.ali.holds) throw PreconditionFailed("not almost length-increasing");
  if (oracle.outcome != FixOracle::Outcome::Trivial) {
    throw PreconditionFailed("Fix not certified trivial (" + oracle.reason + ")");
  }
  r.exceptions = r.ali.exceptions;
  TranslationSolver solver(phi);
  r.B = solver.B();
  std::set<Word> v_prime;
  for (std::size_t len = 0; len <= 2 * r.B; ++len) {
    for_each_reduced_word(phi.rank(), len, [&](const Word& v) {
      TranslationSearch t = solver.search(v, budget);
      if (t.solutions.size() >= 2) throw FixNotTrivial(t.solutions[0] * t.solutions[1].inverse());
      if (t.solutions.empty() && !t.complete) {
        throw PreconditionFailed("translation search for v = " + v.str() + " exhausted budget " +
                                 std::to_string(budget));
      }
      if (!t.solutions.empty()) v_prime.insert(t.solutions[0]);
      return true;
    });
  }
  r.v_prime.assign(v_prime.begin(), v_prime.end());
  std::set<Word> x2;
  for (const auto* src : {&r.exceptions, &r.v_prime}) {
    for (const Word& u : *src) {
      if (sigma_tau_rho(phi, u).rho.size() <= r.B) x2.insert(u);
    }
  }
  r.x2.assign(x2.begin(), x2.end());
  std::size_t longest = 0;
  for (const Word& u : r.x2) longest = std::max(longest, u.size());
  r.m = longest + 1;

  compatible_dfs(phi, r.B, r.m, [&](const Word& y, const Word& img) {
    if (y.size() < r.m) return true;
    if (meet_length(y.letters(), img.letters()) == y.size()) r.seeds.push_back(y);
    return false;
  });
  std::sort(r.seeds.begin(), r.seeds.end());
  for (const Word& y : r.seeds) r.points.push_back(rho_stream(phi, y));
  return r;
}

BoundaryStream singular_witness(const Word& fixed) {
  const CyclicDecomposition d = cyclic_decompose(fixed);
  return BoundaryStream::lasso(d.wing, d.core);
}

BoundaryAnswer has_boundary_fixed_point(const Endomorphism& phi, const FixOracle& oracle,
                                        std::size_t budget) {
  BoundaryAnswer a;
  if (oracle.outcome == FixOracle::Outcome::Nontrivial && !oracle.basis.empty()) {
    a.kind = BoundaryAnswer::Kind::Yes;
    a.witness = singular_witness(oracle.basis.front());
    a.reason = "nontrivial fixed word " + oracle.basis.front().str();
    return a;
  }
  if (oracle.outcome == FixOracle::Outcome::Unknown) {
    a.reason = "Fix not certified trivial (" + oracle.reason + ")";
    return a;
  }
  try {
    BoundaryFixReport r = boundary_fixed_points_ali(phi, oracle, budget);
    if (r.points.empty()) {
      a.kind = BoundaryAnswer::Kind::No;
      a.reason = "no seed of length " + std::to_string(r.m);
    } else {
      a.kind = BoundaryAnswer::Kind::Yes;
      a.witness = r.points.front();
      a.reason = "regular fixed point seeded by " + r.seeds.front().str();
    }
  } catch (const PreconditionFailed& e) {
    a.kind = BoundaryAnswer::Kind::Unknown;
    a.reason = e.what();
  }
  return a;
}

AutFixAnswer aut_boundary_fix_trivial(const Endomorphism& phi, const FixOracle& oracle,
                                      std::size_t budget) {
  auto inv_or = invert_automorphism(phi);
  if (std::holds_alternative<NotAutomorphism>(inv_or)) {
    throw NotAutomorphismError("not an automorphism: " + phi.str());
  }
  const Endomorphism inv = std::get<AutInverse>(inv_or).inverse;
  AutFixAnswer a;
  auto nontrivial_fix = [&](const Word& w, const std::string& why) {
    a.kind = AutFixAnswer::Kind::Nontrivial;
    a.witness = singular_witness(w);
    a.reason = why;
    return a;
  };
  if (oracle.outcome == FixOracle::Outcome::Nontrivial && !oracle.basis.empty()) {
    return nontrivial_fix(oracle.basis.front(), "nontrivial fixed word " + oracle.basis.front().str());
  }

  TranslationSolver fwd(phi), bwd(inv);
  a.M = std::max(fwd.B(), bwd.B());
  for (std::size_t len = 0; len <= a.M; ++len) {
    for_each_reduced_word(phi.rank(), len, [&](const Word& u) {
      a.N = std::max(a.N, inv.apply(u).size());
      return true;
    });
  }
  // X is the union of the solution sets of xφ = x·u over |u| <= 2M + N,
  // i.e. every x with |x^{-1}·xφ| <= 2M + N.
  std::set<Word> X;
  bool exhausted = false;
  std::optional<Word> fixed;
  for (auto [s, f] : {std::pair{&fwd, &phi}, std::pair{&bwd, &inv}}) {
    TranslationSearch t = s->search_upto(2 * a.M + a.N, budget);
    exhausted |= !t.complete;
    std::map<Word, Word> by_translation;
    for (const Word& x : t.solutions) {
      auto [it, fresh] = by_translation.emplace(x.inverse() * f->apply(x), x);
      if (!fresh && !fixed) fixed = it->second * x.inverse();
    }
    X.insert(t.solutions.begin(), t.solutions.end());
  }
  // Fix(φ) = Fix(φ^{-1}), and two solutions of one equation differ by a fixed word.
  if (fixed) return nontrivial_fix(*fixed, "fixed word " + fixed->str());
  a.X.assign(X.begin(), X.end());
  if (exhausted) {
    a.kind = AutFixAnswer::Kind::Unknown;
    a.reason = "translation search exhausted budget " + std::to_string(budget);
    return a;
  }
  for (const Word& x : a.X) a.m = std::max(a.m, x.size());
  for (std::size_t len = 0; len <= a.m + a.M; ++len) {
    for_each_reduced_word(phi.rank(), len, [&](const Word& y) {
      a.K = std::max(a.K, inv.apply(y).size());
      return true;
    });
  }
  a.s = std::max(a.m + 1, a.K + 1);
  for (const auto& [f, B] : {std::pair{phi, fwd.B()}, std::pair{inv, bwd.B()}}) {
    std::optional<Word> found;
    compatible_dfs(f, B, a.s, [&](const Word& v, const Word& img) {
      if (found) return false;
      if (v.size() > a.m && meet_length(v.letters(), img.letters()) == v.size()) {
        found = v;
        return false;
      }
      return true;
    });
    if (found) {
      a.kind = AutFixAnswer::Kind::Nontrivial;
      a.witness = rho_stream(f, *found);
      a.reason = "prefix-compatible word " + found->str() + (f == phi ? "" : " (inverse)");
      return a;
    }
  }
  a.kind = AutFixAnswer::Kind::Trivial;
  a.reason = "no prefix-compatible word with m < |v| <= s";
  return a;
}

}  // namespace freebound
