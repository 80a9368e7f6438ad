#include "freebound/report.hpp"

namespace freebound::report {

namespace {

Json words(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

Json lasso_json(const std::optional<BoundaryStream::Lasso>& l) {
  if (!l) return nullptr;
  return {{"prefix", l->prefix.str()}, {"loop", l->loop.str()}};
}

Json opt_word(const std::optional<Word>& w) { return w ? Json(w->str()) : Json(nullptr); }

}  // namespace

std::string outcome_str(FixOracle::Outcome o) {
  switch (o) {
    case FixOracle::Outcome::Trivial:
      return "trivial";
    case FixOracle::Outcome::Nontrivial:
      return "nontrivial";
    case FixOracle::Outcome::Unknown:
      break;
  }
  return "unknown";
}

std::string strategy_str(FixOracle::Strategy s) {
  return s == FixOracle::Strategy::BoundedSearch ? "bounded-search" : "external";
}

std::string prefix64(const BoundaryStream& s) { return s.prefix(64).str(); }

Json length_json(const std::string& condition, const Endomorphism& phi, const LengthDecision& d) {
  return {{"condition", condition},
          {"morphism", phi.str()},
          {"holds", d.holds},
          {"witness", opt_word(d.witness)}};
}

Json ali_json(const Endomorphism& phi, const AliReport& r) {
  return {{"condition", r.condition == AliReport::Condition::ALI ? "ALI" : "ASLI"},
          {"morphism", phi.str()},
          {"holds", r.holds},
          {"exceptions", words(r.exceptions)},
          {"K", r.lifted_K}};
}

Json oracle_json(const FixOracle& o) {
  return {{"strategy", strategy_str(o.strategy)},
          {"outcome", outcome_str(o.outcome)},
          {"basis", words(o.basis)},
          {"depth", o.depth},
          {"reason", o.reason}};
}

Json boundary_json(const BoundaryFixReport& r) {
  Json points = Json::array();
  for (const BoundaryStream& s : r.points) {
    points.push_back(
        {{"seed", s.seed().str()}, {"period_hint", lasso_json(s.period_hint())}, {"prefix64", prefix64(s)}});
  }
  return {{"condition", "ALI"},
          {"holds", r.ali.holds},
          {"exceptions", words(r.exceptions)},
          {"seeds", words(r.seeds)},
          {"points", points},
          {"oracle", oracle_json(r.oracle)},
          {"v_prime", words(r.v_prime)},
          {"x2", words(r.x2)},
          {"m", r.m},
          {"B", r.B}};
}

Json boundary_json(const AliReport& ali, const FixOracle& oracle) {
  return {{"condition", "ALI"},
          {"holds", ali.holds},
          {"exceptions", words(ali.exceptions)},
          {"seeds", Json::array()},
          {"points", Json::array()},
          {"oracle", oracle_json(oracle)}};
}

Json aut_fix_json(const Endomorphism& phi, const AutFixAnswer& a, const FixOracle& oracle) {
  static const char* kinds[] = {"trivial", "nontrivial", "unknown"};
  Json witness = nullptr;
  if (a.witness) {
    witness = {{"seed", a.witness->seed().str()},
               {"period_hint", lasso_json(a.witness->period_hint())},
               {"prefix64", prefix64(*a.witness)}};
  }
  return {{"morphism", phi.str()},
          {"answer", kinds[static_cast<int>(a.kind)]},
          {"witness", witness},
          {"M", a.M},
          {"N", a.N},
          {"m", a.m},
          {"K", a.K},
          {"s", a.s},
          {"X", words(a.X)},
          {"reason", a.reason},
          {"oracle", oracle_json(oracle)}};
}

Json exploration_json(const ExplorationReport& r) {
  Json points = Json::array();
  for (const EqBoundaryPoint& p : r.boundary_points) {
    points.push_back({{"prefix", p.lasso.prefix.str()},
                      {"loop", p.lasso.loop.str()},
                      {"singular", p.singular}});
  }
  Json orbits = Json::array();
  for (const auto& cls : orbit_group(r)) orbits.push_back(cls);
  return {{"phi", r.phi},
          {"psi", r.psi},
          {"depth", r.depth},
          {"slack", r.slack},
          {"horizon", r.horizon},
          {"finite_elements", words(r.finite_elements)},
          {"boundary_points", points},
          {"nodes", r.nodes},
          {"pruned_count", r.pruned_count},
          {"frontier_count", r.frontier_count},
          {"node_cap_hit", r.node_cap_hit},
          {"orbits", orbits},
          {"orbit_estimate", r.orbit_estimate},
          {"verdict", verdict_str(r)},
          {"criterion_consistent", r.criterion_consistent()}};
}

Json stallings_json(const Endomorphism& phi, const InverseAutomaton& a) {
  Json edges = Json::array();
  for (const auto& e : a.positive_edges()) {
    edges.push_back({e.source, std::string(1, letter_char(e.label)), e.target});
  }
  const int r = rank(a);
  return {{"morphism", phi.str()},
          {"vertices", a.vertex_count()},
          {"edges", edges},
          {"rank", r},
          {"basis", words(basis(a))},
          {"monomorphism", r == phi.rank()}};
}

Json constants_json(const Endomorphism& phi, const BrpCertificate& brp, const MeetBoundTable& mn) {
  Json witness = nullptr;
  if (brp.witness) witness = {brp.witness->first.str(), brp.witness->second.str()};
  Json table = Json::object();
  for (const auto& [n, m] : mn.entries) table[std::to_string(n)] = m;
  return {{"morphism", phi.str()},
          {"B", brp.B},
          {"brp_witness", witness},
          {"brp_method",
           brp.method == BrpCertificate::Method::StateClosure ? "state-closure" : "exhaustive"},
          {"K", phi.max_image_length()},
          {"mn", table}};
}

}  // namespace freebound::report
