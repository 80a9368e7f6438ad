#include "freebound/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "freebound/report.hpp"

namespace freebound::cli {

namespace {

using report::Json;

struct Usage : Error {
  using Error::Error;
};

std::size_t arity(const std::string& command) {
  return command == "eq-explore" ? 2 : 1;
}

void write_dot(const Invocation& inv, const std::string& dot) {
  if (!inv.dot) return;
  std::ofstream f(*inv.dot);
  if (!f) throw Usage("cannot write " + *inv.dot);
  f << dot;
}

void emit(const Invocation& inv, std::ostream& out, const Json& j, const std::string& text) {
  if (inv.format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::string word_list(const std::vector<Word>& ws) {
  if (ws.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + ws[i].str();
  return s + "}";
}

int run_length(const Invocation& inv, const Endomorphism& phi, std::ostream& out) {
  const bool strict = inv.command == "sli";
  const LengthDecision d = strict ? is_strictly_length_increasing(phi) : is_length_increasing(phi);
  if (inv.dot) {
    GrowthEngine engine(phi);
    const auto b = static_cast<std::int64_t>(engine.B());
    write_dot(inv, explore_growth(engine, strict ? 1 : 0, 2 * b - 1).dot());
  }
  std::ostringstream t;
  t << inv.command << ": " << (d.holds ? "true" : "false");
  if (d.witness) t << " (witness " << d.witness->str() << ')';
  t << '\n';
  emit(inv, out, report::length_json(strict ? "SLI" : "LI", phi, d), t.str());
  return 0;
}

int run_ali(const Invocation& inv, const Endomorphism& phi, std::ostream& out) {
  const bool strict = inv.command == "asli";
  const AliReport r = ali_classify(phi, strict);
  std::ostringstream t;
  t << inv.command << ": " << (r.holds ? "true" : "false");
  if (r.holds) t << " exceptions " << word_list(r.exceptions);
  t << '\n';
  emit(inv, out, report::ali_json(phi, r), t.str());
  return 0;
}

std::string oracle_line(const FixOracle& o) {
  std::string s = "fix oracle: " + report::outcome_str(o.outcome);
  if (!o.basis.empty()) s += " basis " + word_list(o.basis);
  if (!o.reason.empty()) s += " (" + o.reason + ")";
  return s + '\n';
}

int run_fix_boundary(const Invocation& inv, const Endomorphism& phi, std::ostream& out,
                     std::ostream& err) {
  const AliReport ali = ali_classify(phi, false);
  if (!ali.holds) {
    err << "fix-boundary: not almost length-increasing\n";
    return 1;
  }
  const FixOracle oracle = fix_oracle_bounded(phi, inv.depth);
  auto stopped = [&](int code, const std::string& why) {
    err << "fix-boundary: " << why << '\n';
    emit(inv, out, report::boundary_json(ali, oracle), oracle_line(oracle));
    return code;
  };
  if (oracle.outcome == FixOracle::Outcome::Nontrivial) {
    return stopped(1, "fixed subgroup is nontrivial");
  }
  if (oracle.outcome == FixOracle::Outcome::Unknown) {
    return stopped(2, "fixed subgroup not certified trivial");
  }
  BoundaryFixReport r;
  try {
    r = boundary_fixed_points_ali(phi, oracle, inv.budget);
  } catch (const FixNotTrivial& e) {
    return stopped(1, e.what());
  } catch (const PreconditionFailed& e) {
    return stopped(2, e.what());
  }
  std::ostringstream t;
  t << oracle_line(oracle);
  t << "exceptions " << word_list(r.exceptions) << "\nseeds " << word_list(r.seeds) << '\n';
  t << r.points.size() << " point(s)\n";
  for (const auto& p : r.points) t << "  " << report::prefix64(p) << "...\n";
  emit(inv, out, report::boundary_json(r), t.str());
  return 0;
}

int run_aut_fix(const Invocation& inv, const Endomorphism& phi, std::ostream& out) {
  if (std::holds_alternative<NotAutomorphism>(invert_automorphism(phi))) {
    throw NotAutomorphismError("not an automorphism: " + phi.str());
  }
  const FixOracle oracle = fix_oracle_bounded(phi, inv.depth);
  const AutFixAnswer a = aut_boundary_fix_trivial(phi, oracle, inv.budget);
  static const char* kinds[] = {"trivial", "nontrivial", "unknown"};
  std::ostringstream t;
  t << oracle_line(oracle) << "boundary fixed points: " << kinds[static_cast<int>(a.kind)];
  if (a.witness) t << " (witness " << report::prefix64(*a.witness) << "...)";
  if (!a.reason.empty()) t << " [" << a.reason << ']';
  t << '\n';
  emit(inv, out, report::aut_fix_json(phi, a, oracle), t.str());
  return a.kind == AutFixAnswer::Kind::Unknown ? 2 : 0;
}

int run_explore(const Invocation& inv, const Endomorphism& phi, const Endomorphism& psi,
                std::ostream& out) {
  ExploreOptions opt;
  opt.depth = inv.depth;
  opt.slack = inv.slack;
  const ExplorationReport r = explore(phi, psi, opt);
  std::ostringstream t;
  t << "finite elements " << word_list(r.finite_elements) << '\n';
  for (const auto& p : r.boundary_points) {
    t << "  " << p.lasso.prefix.str() << "(" << p.lasso.loop.str() << ")^w "
      << (p.singular ? "singular" : "regular") << '\n';
  }
  t << "regular orbits " << r.orbit_estimate << '\n' << verdict_str(r) << '\n';
  emit(inv, out, report::exploration_json(r), t.str());
  return r.verdict == ExplorationReport::Verdict::Inconclusive ? 2 : 0;
}

int run_stallings(const Invocation& inv, const Endomorphism& phi, std::ostream& out) {
  const InverseAutomaton a = fold(phi.images(), inv.seed);
  write_dot(inv, a.dot());
  const Json j = report::stallings_json(phi, a);
  std::ostringstream t;
  t << "vertices " << a.vertex_count() << ", rank " << rank(a) << ", monomorphism "
    << (j["monomorphism"].get<bool>() ? "true" : "false") << '\n';
  emit(inv, out, j, t.str());
  return 0;
}

int run_constants(const Invocation& inv, const Endomorphism& phi, std::ostream& out) {
  const BrpCertificate brp = brp_constant(phi);
  const MeetBoundTable mn = meet_bound_table(phi, std::min<std::size_t>(inv.depth, 4));
  std::ostringstream t;
  t << "B " << brp.B;
  if (brp.witness) t << " (witness " << brp.witness->first.str() << " . " << brp.witness->second.str() << ')';
  t << "\nK " << phi.max_image_length() << '\n';
  for (const auto& [n, m] : mn.entries) t << "M_" << n << ' ' << m << '\n';
  emit(inv, out, report::constants_json(phi, brp, mn), t.str());
  return 0;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"li",      "sli",      "ali",        "asli",     "fix-boundary",
                                          "aut-fix", "eq-explore", "stallings", "constants"};
  return c;
}

std::string load_morphism_text(const std::string& source) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(source, ec)) return source;
  std::ifstream f(source);
  std::ostringstream s;
  s << f.rdbuf();
  std::string text = s.str();
  // Newlines separate rules as well as semicolons; '#' starts a comment.
  std::string joined;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!joined.empty()) joined += ';';
    joined += line;
  }
  return joined;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    const auto& cs = commands();
    if (std::find(cs.begin(), cs.end(), inv.command) == cs.end()) {
      throw Usage("unknown command '" + inv.command + "'");
    }
    if (inv.morphisms.size() != arity(inv.command)) {
      throw Usage(inv.command + " takes " + std::to_string(arity(inv.command)) + " morphism(s)");
    }
    std::vector<Endomorphism> maps;
    for (const auto& src : inv.morphisms) maps.push_back(parse_endomorphism(load_morphism_text(src)));
    const Endomorphism& phi = maps[0];
    const std::string& c = inv.command;
    if (c == "li" || c == "sli") return run_length(inv, phi, out);
    if (c == "ali" || c == "asli") return run_ali(inv, phi, out);
    if (c == "fix-boundary") return run_fix_boundary(inv, phi, out, err);
    if (c == "aut-fix") return run_aut_fix(inv, phi, out);
    if (c == "eq-explore") return run_explore(inv, phi, maps[1], out);
    if (c == "stallings") return run_stallings(inv, phi, out);
    return run_constants(inv, phi, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length conditions, boundary fixed points and equalizers of free group endomorphisms"};
  Invocation inv;
  std::string format = "text";
  std::size_t slack = 0;
  app.add_option("command", inv.command, "li | sli | ali | asli | fix-boundary | aut-fix | eq-explore | stallings | constants")
      ->required();
  app.add_option("morphisms", inv.morphisms, "rule text like 'a->aa; b->ab' or a file")->required();
  app.add_option("--depth", inv.depth, "search depth")->capture_default_str();
  auto* slack_opt = app.add_option("--slack", slack, "explorer slack (default: equalizer constant)");
  app.add_option("--budget", inv.budget, "translation equation budget")->capture_default_str();
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--dot", inv.dot, "write a DOT dump of the automaton here");
  app.add_option("--seed", inv.seed, "folding order seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (*slack_opt) inv.slack = slack;
  inv.format = format == "json" ? Format::Json : Format::Text;
  return run(inv, out, err);
}

}  // namespace freebound::cli
