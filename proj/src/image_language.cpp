#include "freebound/image_language.hpp"

#include <algorithm>

namespace freebound {

bool StateSet::none() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t b) { return b == 0; });
}

bool StateSet::merge(const StateSet& o) {
  bool changed = false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    const std::uint64_t nb = bits_[i] | o.bits_[i];
    changed |= nb != bits_[i];
    bits_[i] = nb;
  }
  return changed;
}

int ImageLanguage::add_state() {
  out_.emplace_back();
  eps_.emplace_back();
  accepting_.push_back(false);
  return static_cast<int>(out_.size()) - 1;
}

void ImageLanguage::add_edge(int p, Letter x, int q) {
  out_[static_cast<std::size_t>(p)].emplace_back(x, q);
}

ImageLanguage::ImageLanguage(const Endomorphism& phi, const Word& lead,
                             std::vector<bool> allowed_first, bool include_empty)
    : rank_(phi.rank()) {
  if (allowed_first.size() != slots()) throw Error("ImageLanguage: bad first-letter mask");
  if (lead.max_index() > rank_) throw Error("ImageLanguage: lead exceeds rank");
  int cur = add_state();
  for (Letter x : lead) {
    int nxt = add_state();
    add_edge(cur, x, nxt);
    cur = nxt;
  }
  const int hub0 = cur;
  accepting_[static_cast<std::size_t>(hub0)] = include_empty;

  std::vector<int> entry(slots()), hub(slots());
  for (std::size_t s = 0; s < slots(); ++s) {
    entry[s] = add_state();
    hub[s] = add_state();
    accepting_[static_cast<std::size_t>(hub[s])] = true;
  }
  for (std::size_t s = 0; s < slots(); ++s) {
    const Word img = phi.image(Letter::from_slot(s));
    int p = entry[s];
    if (img.empty()) {
      eps_[static_cast<std::size_t>(p)].push_back(hub[s]);
    } else {
      for (std::size_t i = 0; i < img.size(); ++i) {
        int q = i + 1 == img.size() ? hub[s] : add_state();
        add_edge(p, img[i], q);
        p = q;
      }
    }
    if (allowed_first[s]) eps_[static_cast<std::size_t>(hub0)].push_back(entry[s]);
    for (std::size_t t = 0; t < slots(); ++t) {
      if (Letter::from_slot(t) != Letter::from_slot(s).inverse()) {
        eps_[static_cast<std::size_t>(hub[t])].push_back(entry[s]);
      }
    }
  }
  saturate();
  compute_targets();
  compute_coacc();
}

ImageLanguage ImageLanguage::continuations(const Endomorphism& phi, std::optional<Letter> last) {
  std::vector<bool> allowed(2 * static_cast<std::size_t>(phi.rank()), true);
  if (last) allowed[last->inverse().slot()] = false;
  return ImageLanguage(phi, Word(), std::move(allowed), false);
}

ImageLanguage ImageLanguage::starting_with(const Endomorphism& phi, Letter first,
                                           const Word& lead) {
  std::vector<bool> allowed(2 * static_cast<std::size_t>(phi.rank()), false);
  allowed[first.slot()] = true;
  return ImageLanguage(phi, lead, std::move(allowed), false);
}

void ImageLanguage::compute_closure() {
  const std::size_t n = out_.size();
  closure_.assign(n, StateSet(n));
  for (std::size_t q = 0; q < n; ++q) {
    // depth-first over ε-edges
    std::vector<int> stack{static_cast<int>(q)};
    closure_[q].set(q);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t : eps_[static_cast<std::size_t>(v)]) {
        if (!closure_[q].test(static_cast<std::size_t>(t))) {
          closure_[q].set(static_cast<std::size_t>(t));
          stack.push_back(t);
        }
      }
    }
  }
}

// Adds r -ε-> t whenever r -y-> s ~ε~> s' -y^{-1}-> t, until stable.
void ImageLanguage::saturate() {
  bool changed = true;
  while (changed) {
    compute_closure();
    changed = false;
    for (std::size_t r = 0; r < out_.size(); ++r) {
      for (auto [y, s] : out_[r]) {
        closure_[static_cast<std::size_t>(s)].for_each([&](std::size_t s2) {
          for (auto [y2, t] : out_[s2]) {
            if (y2 != y.inverse() || closure_[r].test(static_cast<std::size_t>(t))) continue;
            auto& e = eps_[r];
            if (std::find(e.begin(), e.end(), t) == e.end()) {
              e.push_back(t);
              changed = true;
            }
          }
        });
      }
    }
  }
}

void ImageLanguage::compute_targets() {
  const std::size_t n = out_.size();
  targets_.assign(n * slots(), StateSet(n));
  for (std::size_t q = 0; q < n; ++q) {
    closure_[q].for_each([&](std::size_t q2) {
      for (auto [y, t] : out_[q2]) {
        targets_[q * slots() + y.slot()].merge(closure_[static_cast<std::size_t>(t)]);
      }
    });
  }
}

void ImageLanguage::compute_coacc() {
  const std::size_t n = out_.size();
  const std::size_t w = slots() + 1;
  coacc_.assign(n * w, false);
  std::vector<bool> reach_accept(n, false);
  for (std::size_t q = 0; q < n; ++q) {
    closure_[q].for_each([&](std::size_t q2) {
      if (accepting_[q2]) reach_accept[q] = true;
    });
    if (reach_accept[q]) {
      for (std::size_t l = 0; l < w; ++l) coacc_[q * w + l] = true;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t l = 0; l < w; ++l) {
        if (coacc_[q * w + l]) continue;
        bool ok = false;
        for (std::size_t y = 0; y < slots() && !ok; ++y) {
          if (l < slots() && Letter::from_slot(y) == Letter::from_slot(l).inverse()) continue;
          targets_[q * slots() + y].for_each([&](std::size_t t) {
            if (coacc_[t * w + y]) ok = true;
          });
        }
        if (ok) {
          coacc_[q * w + l] = true;
          changed = true;
        }
      }
    }
  }
}

StateSet ImageLanguage::step(const StateSet& s, Letter y) const {
  StateSet r(out_.size());
  s.for_each([&](std::size_t q) { r.merge(targets_[q * slots() + y.slot()]); });
  return r;
}

bool ImageLanguage::live(const StateSet& s, std::size_t last_slot) const {
  bool ok = false;
  s.for_each([&](std::size_t q) { ok = ok || coacc(static_cast<int>(q), last_slot); });
  return ok;
}

bool ImageLanguage::has_prefix(const Word& p) const {
  if (p.max_index() > rank_) return false;
  StateSet s = start_set();
  std::size_t last = none_slot();
  if (!live(s, last)) return false;
  for (Letter y : p) {
    s = step(s, y);
    last = y.slot();
    if (!live(s, last)) return false;
  }
  return true;
}

std::size_t ImageLanguage::max_cancellation(const Word& w) const {
  StateSet s = start_set();
  std::size_t c = 0;
  while (c < w.size()) {
    const Letter y = w[w.size() - 1 - c].inverse();
    s = step(s, y);
    if (!live(s, y.slot())) break;
    ++c;
  }
  return c;
}

ImageLanguage::Lcp longest_common_prefix(const ImageLanguage& a, const ImageLanguage& b) {
  if (a.rank_ != b.rank_) throw Error("longest_common_prefix: rank mismatch");
  const std::size_t na = a.state_count(), nb = b.state_count();
  const std::size_t slots = a.slots(), w = slots + 1;
  auto id = [&](std::size_t qa, std::size_t qb, std::size_t l) { return (qa * nb + qb) * w + l; };
  const std::size_t total = na * nb * w;

  struct Child {
    std::size_t node;
    Letter y;
  };
  std::vector<std::vector<Child>> children(total);
  std::vector<char> expanded(total, 0);
  auto expand = [&](std::size_t node) {
    if (expanded[node]) return;
    expanded[node] = 1;
    const std::size_t l = node % w;
    const std::size_t qa = node / w / nb, qb = node / w % nb;
    for (std::size_t y = 0; y < slots; ++y) {
      const Letter ly = Letter::from_slot(y);
      if (l < slots && ly == Letter::from_slot(l).inverse()) continue;
      const StateSet& ta = a.targets_[qa * slots + y];
      const StateSet& tb = b.targets_[qb * slots + y];
      ta.for_each([&](std::size_t ra) {
        if (!a.coacc(static_cast<int>(ra), y)) return;
        tb.for_each([&](std::size_t rb) {
          if (b.coacc(static_cast<int>(rb), y)) children[node].push_back({id(ra, rb, y), ly});
        });
      });
    }
  };

  // Longest path by iterative depth-first search; a grey hit means a cycle.
  std::vector<char> colour(total, 0);
  std::vector<std::size_t> best(total, 0);
  std::vector<std::ptrdiff_t> next(total, -1);
  std::vector<Letter> next_letter(total);
  ImageLanguage::Lcp result{std::size_t{0}, Word()};
  std::ptrdiff_t best_start = -1;

  std::vector<std::size_t> starts;
  a.closure_[0].for_each([&](std::size_t sa) {
    if (!a.coacc(static_cast<int>(sa), slots)) return;
    b.closure_[0].for_each([&](std::size_t sb) {
      if (b.coacc(static_cast<int>(sb), slots)) starts.push_back(id(sa, sb, slots));
    });
  });
  for (std::size_t s : starts) {
    if (colour[s] == 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      expand(v);
      if (i < children[v].size()) {
        const Child c = children[v][i++];
        if (colour[c.node] == 1) return {std::nullopt, Word()};
        if (colour[c.node] == 0) {
          colour[c.node] = 1;
          stack.emplace_back(c.node, 0);
        }
        continue;
      }
      for (const Child& c : children[v]) {
        if (best[c.node] + 1 > best[v]) {
          best[v] = best[c.node] + 1;
          next[v] = static_cast<std::ptrdiff_t>(c.node);
          next_letter[v] = c.y;
        }
      }
      colour[v] = 2;
      stack.pop_back();
    }
    if (best_start < 0 || best[s] > best[static_cast<std::size_t>(best_start)]) {
      best_start = static_cast<std::ptrdiff_t>(s);
    }
  }
  if (best_start < 0) return result;
  std::vector<Letter> wit;
  for (std::ptrdiff_t v = best_start; next[static_cast<std::size_t>(v)] >= 0;
       v = next[static_cast<std::size_t>(v)]) {
    wit.push_back(next_letter[static_cast<std::size_t>(v)]);
  }
  result.length = best[static_cast<std::size_t>(best_start)];
  result.witness = Word::from_reduced(std::move(wit));
  return result;
}

}  // namespace freebound
