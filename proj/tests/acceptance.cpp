// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "freebound/boundary.hpp"
#include "freebound/cancellation.hpp"
#include "freebound/cli.hpp"
#include "freebound/eq_explorer.hpp"
#include "freebound/growth.hpp"
#include "freebound/kernels.hpp"
#include "freebound/stallings.hpp"
#include "support.hpp"

using namespace freebound;
namespace ts = testing_support;

namespace {

using Clock = std::chrono::steady_clock;

Word W(const std::string& s) { return Word::parse(s); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : "FAIL") << " C" << id << " " << name << ": " << o.detail << " ["
       << seconds_since(t0) << "s]";
  std::cout << line.str() << std::endl;
}

// 1. φ_ex reproduction.
Outcome example_reproduction() {
  const auto t0 = Clock::now();
  const auto phi = ts::fixture("phi_ex");
  const bool mono = is_monomorphism(phi);
  const auto li = is_length_increasing(phi);
  const auto asli = ali_classify(phi, true);
  const double t = seconds_since(t0);
  const bool witness_ok = li.witness && li.witness->str() == "Aba" && phi.apply(*li.witness).str() == "bb";
  std::ostringstream d;
  d << "mono=" << mono << " li=" << li.holds << " witness=" << (li.witness ? li.witness->str() : "-")
    << " image=" << (li.witness ? phi.apply(*li.witness).str() : "-") << " asli=" << asli.holds;
  return {mono && !li.holds && witness_ok && asli.holds && t < 10.0, d.str()};
}

// 2. L_k membership against brute force.
Outcome growth_language() {
  const std::vector<std::pair<std::string, Endomorphism>> maps{
      {"theta", ts::fixture("theta")},
      {"identity", ts::fixture("identity")},
      {"lift(theta)", psi_lift(ts::fixture("theta")).lift},
      {"lift(phi_ex)", psi_lift(ts::fixture("phi_ex")).lift}};
  std::uint64_t bad = 0;
  std::size_t checks = 0;
  for (const auto& [name, phi] : maps) {
    for (std::size_t k = 0; k <= 2; ++k) {
      bad += kernels::lk_mismatches(phi, build_Lk(phi, k), k, 8, true);
      ++checks;
    }
  }
  return {bad == 0, std::to_string(checks) + " languages, |u| <= 8, mismatches=" + std::to_string(bad)};
}

// 3. ALI exceptions of φ_ex.
Outcome ali_exceptions() {
  const auto phi = ts::fixture("phi_ex");
  const auto r = ali_classify(phi, false);
  std::vector<Word> brute;
  for (const auto& u : ts::naive_words_upto(2, 6)) {
    if (phi.apply(W(u)).size() < u.size()) brute.push_back(W(u));
  }
  auto mine = r.exceptions;
  std::sort(mine.begin(), mine.end());
  std::sort(brute.begin(), brute.end());
  std::string list;
  for (const Word& w : mine) list += (list.empty() ? "" : ",") + w.str();
  return {r.holds && mine == brute, "exceptions={" + list + "} brute=" + std::to_string(brute.size())};
}

// 4. Boundary fixed points against the prefix-tree oracle.
Outcome boundary_points() {
  constexpr std::size_t kDepth = 50;
  std::ostringstream d;
  bool ok = true;
  for (const std::string name : {"theta", "phi_ex", "bbaa"}) {
    const auto phi = ts::fixture(name);
    const auto r = boundary_fixed_points_ali(phi, fix_oracle_bounded(phi, 12));
    std::set<std::string> mine;
    for (const auto& s : r.points) mine.insert(s.prefix(kDepth).str());
    const auto oracle = ts::naive_fixed_prefixes(phi, r.B, kDepth, 10);
    const bool same = mine == oracle && mine.size() == r.points.size();
    ok = ok && same;
    d << name << "=" << r.points.size() << "/" << oracle.size() << " ";
  }
  ok = ok && d.str().find("bbaa=0/0") != std::string::npos;
  return {ok, d.str() + "(reported/oracle, 50-letter prefixes)"};
}

// 5. BRP certificates validated exhaustively.
Outcome brp_soundness() {
  std::ostringstream d;
  bool ok = true;
  for (const std::string name : {"identity", "theta", "phi_ex"}) {
    const auto phi = ts::fixture(name);
    const auto c = brp_constant(phi);
    const auto k = kernels::max_cancellation(phi, 8, true);
    ok = ok && k.cancelled <= c.B;
    d << name << " B=" << c.B << " seen=" << k.cancelled << " ";
    if (name == "phi_ex") {
      const auto& [u, v] = *c.witness;
      const std::size_t loss = phi.apply(u).size() + phi.apply(v).size() - phi.apply(u * v).size();
      ok = ok && loss == 2 * c.B;
      d << "witness " << u.str() << "." << v.str() << " loses " << loss;
    }
  }
  return {ok, d.str()};
}

// 6. Stallings monomorphism test against Nielsen rank.
Outcome mono_vs_nielsen() {
  int bad = 0, injective = 0;
  for (int i = 0; i < 200; ++i) {
    const auto phi = ts::random_endo(2 + i % 2, 0, 4);
    const bool mono = is_monomorphism(phi);
    const bool nielsen = nielsen_reduce(phi.images()).tuple.size() == static_cast<std::size_t>(phi.rank());
    bad += mono != nielsen;
    injective += mono;
  }
  return {bad == 0, "200 tuples, injective=" + std::to_string(injective) + " mismatches=" + std::to_string(bad)};
}

// 7. x solves xθ = xu iff x$ is fixed by the $-extension.
Outcome dollar_identity() {
  const auto theta = ts::fixture("theta");
  const auto xs = ts::naive_words_upto(2, 5, true);
  int bad = 0, solutions = 0;
  for (int i = 0; i < 20; ++i) {
    const Word u = W(ts::str_or_empty(ts::random_word(2, static_cast<std::size_t>(ts::rng()() % 4))));
    const auto ext = dollar_extension(theta, u);
    for (const auto& s : xs) {
      const Word x = W(ts::str_or_empty(s));
      const bool solves = theta.apply(x) == x * u;
      const Word xd = x * W("c");
      bad += solves != (ext.apply(xd) == xd);
      solutions += solves;
    }
  }
  return {bad == 0, "20 u, |x| <= 5, solutions=" + std::to_string(solutions) + " mismatches=" + std::to_string(bad)};
}

// 8. Equalizer explorer.
Outcome explorer() {
  const auto t0 = Clock::now();
  ExploreOptions o;
  o.depth = 8;
  const auto r = explore(ts::fixture("theta"), ts::fixture("phi_ex"), o);
  std::vector<Word> powers;
  for (std::size_t k = 1; k <= 8; ++k) {
    powers.push_back(W(std::string(k, 'a')));
    powers.push_back(W(std::string(k, 'A')));
  }
  std::sort(powers.begin(), powers.end());
  std::set<std::string> pts;
  bool singular = true;
  for (const auto& p : r.boundary_points) {
    pts.insert(p.lasso.prefix.str() + "(" + p.lasso.loop.str() + ")");
    singular = singular && p.singular;
  }
  const bool first = r.finite_elements == powers && pts == std::set<std::string>{"1(a)", "1(A)"} && singular &&
                     r.orbit_estimate == 0;
  const auto e = explore(ts::fixture("bbaa"), ts::fixture("theta"), o);
  const bool second = e.finite_elements.empty() && e.boundary_points.empty() && e.criterion_consistent();
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "(theta,phi_ex) elements=" << r.finite_elements.size() << " points=" << pts.size()
    << " orbits=" << r.orbit_estimate << " " << verdict_str(r) << "; (bbaa,theta) " << verdict_str(e);
  return {first && second && t < 60.0, d.str()};
}

// 9. Equal growth states have equal successors.
Outcome congruence() {
  std::size_t violations = 0, equal_pairs = 0;
  for (const std::string name : {"phi_ex", "theta", "identity", "swap", "inner", "bbaa", "nielsen"}) {
    const GrowthEngine engine(ts::fixture(name));
    // Pool words by state so that a good share of the pairs are nonvacuous.
    std::map<GrowthState, std::vector<Word>> pool;
    std::vector<Word> words;
    for (int i = 0; i < 3000; ++i) {
      const Word u = W(ts::str_or_empty(ts::random_word(2, static_cast<std::size_t>(ts::rng()() % 9))));
      pool[engine.state_of(u)].push_back(u);
      words.push_back(u);
    }
    for (int i = 0; i < 500; ++i) {
      const Word& u = words[ts::rng()() % words.size()];
      const auto qu = engine.state_of(u);
      const auto& same = pool[qu];
      const Word& v = (i % 5 == 0) ? words[ts::rng()() % words.size()] : same[ts::rng()() % same.size()];
      if (engine.state_of(v) != qu) continue;
      ++equal_pairs;
      for (std::size_t s = 0; s < 4; ++s) {
        const Letter a = Letter::from_slot(s);
        const auto su = engine.step(qu, a);
        const bool free_u = u.empty() || u.back() != a.inverse();
        const bool free_v = v.empty() || v.back() != a.inverse();
        if (free_u != free_v || su.has_value() != free_u) {
          ++violations;
          continue;
        }
        if (!free_u) continue;
        Word ua = u, va = v;
        ua.push(a);
        va.push(a);
        if (engine.state_of(ua) != engine.state_of(va) || *su != engine.state_of(ua)) ++violations;
      }
    }
  }
  return {violations == 0, "7 fixtures x 500 pairs, equal-state pairs=" + std::to_string(equal_pairs) +
                               " violations=" + std::to_string(violations)};
}

// 10. CLI JSON determinism.
Outcome determinism() {
  const std::vector<std::string> names{"phi_ex", "theta", "identity", "swap", "inner", "bbaa", "nielsen"};
  auto invoke = [](std::vector<std::string> args) {
    args.insert(args.begin(), "freebound");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
  };
  int runs = 0, diffs = 0;
  for (const auto& cmd : cli::commands()) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::vector<std::string> args{cmd, ts::fixture_path(names[i])};
      if (cmd == "eq-explore") {
        args.push_back(ts::fixture_path(names[(i + 1) % names.size()]));
        args.insert(args.end(), {"--depth", "8"});
      }
      args.insert(args.end(), {"--format", "json"});
      diffs += invoke(args) != invoke(args);
      ++runs;
    }
  }
  return {diffs == 0, std::to_string(runs) + " invocations run twice, differing=" + std::to_string(diffs)};
}

}  // namespace

int main() {
  std::cout << "seed " << ts::seed() << std::endl;
  report(1, "example reproduction", example_reproduction);
  report(2, "growth language vs brute force", growth_language);
  report(3, "ALI exceptions", ali_exceptions);
  report(4, "boundary fixed points vs prefix oracle", boundary_points);
  report(5, "BRP certificates", brp_soundness);
  report(6, "monomorphism vs Nielsen rank", mono_vs_nielsen);
  report(7, "$-extension identity", dollar_identity);
  report(8, "equalizer explorer", explorer);
  report(9, "growth-state congruence", congruence);
  report(10, "CLI determinism", determinism);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << std::endl;
  return failures ? 1 : 0;
}
