#include "freebound/growth.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace freebound {

std::strong_ordering GrowthState::operator<=>(const GrowthState& o) const {
  auto slot = [](const std::optional<Letter>& l) { return l ? static_cast<int>(l->slot()) : -1; };
  if (auto c = slot(last) <=> slot(o.last); c != 0) return c;
  if (auto c = tail <=> o.tail; c != 0) return c;
  return delta <=> o.delta;
}

std::string GrowthState::str() const {
  std::string s = "(";
  s += last ? std::string(1, letter_char(*last)) : std::string("-");
  s += ", " + tail.str() + ", " + std::to_string(delta) + ")";
  return s;
}

GrowthEngine::GrowthEngine(Endomorphism phi) : phi_(std::move(phi)) {
  B_ = brp_constant(phi_).B;
  const std::size_t slots = 2 * static_cast<std::size_t>(phi_.rank());
  for (std::size_t s = 0; s < slots; ++s) {
    cont_.push_back(ImageLanguage::continuations(phi_, Letter::from_slot(s)));
  }
  cont_.push_back(ImageLanguage::continuations(phi_, std::nullopt));
}

const ImageLanguage& GrowthEngine::continuations(std::optional<Letter> last) const {
  return last ? cont_[last->slot()] : cont_.back();
}

std::optional<GrowthState> GrowthEngine::step(const GrowthState& q, Letter a) const {
  if (q.last && a == q.last->inverse()) return std::nullopt;
  if (a.index() > phi_.rank()) throw Error("growth step: letter beyond rank");
  // (ua)φ = uα · red(uβ · aφ); only the new tail can still be cancelled
  const Word w = q.tail * phi_.image(a);
  const std::size_t c = continuations(a).max_cancellation(w);
  GrowthState r;
  r.last = a;
  r.tail = w.suffix_from(w.size() - c);
  r.delta = q.delta + static_cast<std::int64_t>(w.size()) -
            static_cast<std::int64_t>(q.tail.size()) - 1;
  return r;
}

GrowthState GrowthEngine::state_of(const Word& u) const {
  const Word img = phi_.apply(u);
  GrowthState q;
  q.last = u.empty() ? std::nullopt : std::optional<Letter>(u.back());
  const std::size_t c = u.empty() ? 0 : continuations(q.last).max_cancellation(img);
  q.tail = img.suffix_from(img.size() - c);
  q.delta = static_cast<std::int64_t>(img.size()) - static_cast<std::int64_t>(u.size());
  return q;
}

GrowthState growth_state(const Endomorphism& phi, const Word& u) {
  return GrowthEngine(phi).state_of(u);
}

std::string GrowthAutomaton::dot() const {
  std::ostringstream os;
  os << "digraph growth {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << "  " << i << " [label=\"" << states[i].str() << "\"" << (i == 0 ? ", shape=box" : "")
       << (expanded[i] ? "" : ", style=dashed") << "];\n";
  }
  for (const auto& [key, t] : transitions) {
    os << "  " << key.first << " -> " << t << " [label=\"" << letter_char(key.second)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

GrowthAutomaton explore_growth(const GrowthEngine& engine, std::int64_t expand_min,
                               std::int64_t expand_max) {
  GrowthAutomaton a;
  a.morphism = engine.morphism().str();
  a.B = engine.B();
  std::map<GrowthState, int> index;
  std::deque<int> queue;
  auto intern = [&](const GrowthState& q) {
    auto [it, fresh] = index.emplace(q, static_cast<int>(a.states.size()));
    if (fresh) {
      a.states.push_back(q);
      const bool expand =
          a.states.size() == 1 || (q.delta >= expand_min && q.delta <= expand_max);
      a.expanded.push_back(expand);
      if (expand) queue.push_back(it->second);
    }
    return it->second;
  };
  intern(engine.initial());
  const auto slots = 2 * static_cast<std::size_t>(engine.morphism().rank());
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < slots; ++s) {
      const Letter x = Letter::from_slot(s);
      auto r = engine.step(a.states[static_cast<std::size_t>(i)], x);
      if (!r) continue;
      const int j = intern(*r);
      a.transitions[{i, x}] = j;
    }
  }
  return a;
}

namespace {

// Breadth-first search for a word whose delta drops to `bad_at_most` or
// below. Only states with delta in [keep_min, 2B) are expanded; a minimal
// counterexample never passes through a state outside that window.
LengthDecision search_violation(const Endomorphism& phi, std::int64_t bad_at_most,
                                std::int64_t keep_min) {
  GrowthEngine engine(phi);
  const auto twoB = static_cast<std::int64_t>(2 * engine.B());
  std::map<GrowthState, Word> seen;
  std::deque<GrowthState> queue{engine.initial()};
  seen.emplace(engine.initial(), Word());
  const auto slots = 2 * static_cast<std::size_t>(phi.rank());
  while (!queue.empty()) {
    const GrowthState q = queue.front();
    queue.pop_front();
    const Word& u = seen.at(q);
    for (std::size_t s = 0; s < slots; ++s) {
      const Letter x = Letter::from_slot(s);
      auto r = engine.step(q, x);
      if (!r) continue;
      Word ux = u;
      ux.push(x);
      if (r->delta <= bad_at_most) return {false, ux};
      if (r->delta < keep_min || r->delta >= twoB) continue;
      if (seen.emplace(*r, ux).second) queue.push_back(*r);
    }
  }
  return {true, std::nullopt};
}

}  // namespace

LengthDecision is_length_increasing(const Endomorphism& phi) {
  return search_violation(phi, -1, 0);
}

LengthDecision is_strictly_length_increasing(const Endomorphism& phi) {
  return search_violation(phi, 0, 1);
}

// --- rational languages -------------------------------------------------------

RationalLanguage::RationalLanguage(int rank, std::vector<std::map<Letter, int>> out,
                                   std::vector<bool> accepting)
    : rank_(rank), out_(std::move(out)), accepting_(std::move(accepting)) {
  trim();
}

void RationalLanguage::trim() {
  const std::size_t n = out_.size();
  if (n == 0) return;
  std::vector<bool> reach(n, false), coreach(n, false);
  std::deque<int> queue{0};
  reach[0] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (auto [x, t] : out_[static_cast<std::size_t>(q)]) {
      if (!reach[static_cast<std::size_t>(t)]) {
        reach[static_cast<std::size_t>(t)] = true;
        queue.push_back(t);
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) coreach[q] = accepting_[q];
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (coreach[q]) continue;
      for (auto [x, t] : out_[q]) {
        if (coreach[static_cast<std::size_t>(t)]) {
          coreach[q] = true;
          changed = true;
          break;
        }
      }
    }
  }
  if (!coreach[0]) {
    out_.clear();
    accepting_.clear();
    return;
  }
  // renumber breadth-first over kept states
  std::vector<int> number(n, -1);
  std::vector<int> order{0};
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [x, t] : out_[static_cast<std::size_t>(order[i])]) {
      const auto ts = static_cast<std::size_t>(t);
      if (coreach[ts] && reach[ts] && number[ts] < 0) {
        number[ts] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::map<Letter, int>> out(order.size());
  std::vector<bool> acc(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto q = static_cast<std::size_t>(order[i]);
    acc[i] = accepting_[q];
    for (auto [x, t] : out_[q]) {
      if (number[static_cast<std::size_t>(t)] >= 0) out[i][x] = number[static_cast<std::size_t>(t)];
    }
  }
  out_ = std::move(out);
  accepting_ = std::move(acc);
}

int RationalLanguage::run(const Word& w) const {
  if (out_.empty()) return -1;
  int q = 0;
  for (Letter x : w) {
    auto it = out_[static_cast<std::size_t>(q)].find(x);
    if (it == out_[static_cast<std::size_t>(q)].end()) return -1;
    q = it->second;
  }
  return q;
}

bool RationalLanguage::accepts(const Word& w) const {
  const int q = run(w);
  return q >= 0 && accepting_[static_cast<std::size_t>(q)];
}

bool RationalLanguage::is_prefix(const Word& w) const { return run(w) >= 0; }

std::string RationalLanguage::dot() const {
  std::ostringstream os;
  os << "digraph language {\n  rankdir=LR;\n";
  for (std::size_t q = 0; q < out_.size(); ++q) {
    os << "  " << q << (accepting_[q] ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  }
  for (std::size_t q = 0; q < out_.size(); ++q) {
    for (auto [x, t] : out_[q]) {
      os << "  " << q << " -> " << t << " [label=\"" << letter_char(x) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

RationalLanguage build_Lk(const Endomorphism& phi, std::size_t k) {
  return build_Lk(GrowthEngine(phi), k);
}

RationalLanguage build_Lk(const GrowthEngine& engine, std::size_t k) {
  const Endomorphism& phi = engine.morphism();
  if (auto li = is_length_increasing(phi); !li.holds) {
    throw NotLengthIncreasing("not length-increasing: |uφ| < |u| at u = " + li.witness->str());
  }
  // Prefixes of words in L_k never exceed delta k + 2B.
  const auto cap = static_cast<std::int64_t>(k + 2 * engine.B());
  GrowthAutomaton g = explore_growth(engine, 0, cap);
  std::vector<std::map<Letter, int>> out(g.states.size());
  std::vector<bool> acc(g.states.size());
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    acc[i] = g.states[i].delta <= static_cast<std::int64_t>(k);
  }
  for (const auto& [key, t] : g.transitions) {
    if (g.states[static_cast<std::size_t>(t)].delta <= cap) {
      out[static_cast<std::size_t>(key.first)][key.second] = t;
    }
  }
  return RationalLanguage(phi.rank(), std::move(out), std::move(acc));
}

bool lang_finite(const RationalLanguage& L) {
  // trim automaton: infinite iff a cycle exists
  const std::size_t n = L.state_count();
  std::vector<int> colour(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<int, std::map<Letter, int>::const_iterator>> stack;
    stack.emplace_back(static_cast<int>(s), L.out(static_cast<int>(s)).begin());
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [q, it] = stack.back();
      if (it == L.out(q).end()) {
        colour[static_cast<std::size_t>(q)] = 2;
        stack.pop_back();
        continue;
      }
      const int t = (it++)->second;
      if (colour[static_cast<std::size_t>(t)] == 1) return false;
      if (colour[static_cast<std::size_t>(t)] == 0) {
        colour[static_cast<std::size_t>(t)] = 1;
        stack.emplace_back(t, L.out(t).begin());
      }
    }
  }
  return true;
}

std::vector<Word> lang_enumerate(const RationalLanguage& L, std::size_t limit,
                                 std::size_t max_length) {
  std::vector<Word> result;
  if (L.empty() || limit == 0) return result;
  std::vector<std::pair<Word, int>> layer{{Word(), 0}};
  for (std::size_t len = 0; !layer.empty() && len <= max_length; ++len) {
    for (const auto& [w, q] : layer) {
      if (L.is_accepting(q)) {
        result.push_back(w);
        if (result.size() == limit) return result;
      }
    }
    if (len == max_length) break;
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, q] : layer) {
      for (auto [x, t] : L.out(q)) {
        Word wx = w;
        wx.push(x);
        next.emplace_back(std::move(wx), t);
      }
    }
    layer = std::move(next);
  }
  return result;
}

RationalLanguage lang_intersect_alphabet(const RationalLanguage& L, int sub_rank) {
  std::vector<std::map<Letter, int>> out(L.state_count());
  std::vector<bool> acc(L.state_count());
  for (std::size_t q = 0; q < L.state_count(); ++q) {
    acc[q] = L.is_accepting(static_cast<int>(q));
    for (auto [x, t] : L.out(static_cast<int>(q))) {
      if (x.index() <= sub_rank) out[q][x] = t;
    }
  }
  return RationalLanguage(sub_rank, std::move(out), std::move(acc));
}

}  // namespace freebound
