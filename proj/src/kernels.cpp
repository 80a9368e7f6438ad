#include "freebound/kernels.hpp"

#include <algorithm>
#include <optional>

namespace freebound::kernels {

namespace {

// Visits every reduced word 1 <= |u| <= max_len once, with its images under
// each morphism, as fn(task, u, images). Words of length >= 2 are split into
// tasks by their first two letters; length-1 words belong to task 0.
template <class Fn>
void sweep(const std::vector<const Endomorphism*>& maps, std::size_t max_len, bool parallel,
           std::size_t& task_count, Fn&& fn) {
  const int rank = maps.front()->rank();
  const auto slots = 2 * static_cast<std::size_t>(rank);
  std::vector<Word> seeds;
  if (max_len >= 2) for_each_reduced_word(rank, 2, [&](const Word& w) {
      seeds.push_back(w);
      return true;
    });
  task_count = std::max<std::size_t>(seeds.size(), 1);
  auto images_of = [&](const Word& w) {
    std::vector<Word> imgs;
    for (const Endomorphism* m : maps) imgs.push_back(m->apply(w));
    return imgs;
  };
  if (max_len >= 1) {
    for (std::size_t s = 0; s < slots; ++s) {
      const Word w = Word::from_reduced({Letter::from_slot(s)});
      fn(std::size_t{0}, w, images_of(w));
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    struct Frame {
      Word u;
      std::vector<Word> imgs;
    };
    const Word& seed = seeds[static_cast<std::size_t>(t)];
    std::vector<Frame> stack{{seed, images_of(seed)}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      fn(static_cast<std::size_t>(t), f.u, f.imgs);
      if (f.u.size() == max_len) continue;
      for (std::size_t s = slots; s-- > 0;) {
        const Letter x = Letter::from_slot(s);
        if (x == f.u.back().inverse()) continue;
        Frame g{f.u, {}};
        g.u.push(x);
        for (std::size_t i = 0; i < maps.size(); ++i) g.imgs.push_back(f.imgs[i] * maps[i]->image(x));
        stack.push_back(std::move(g));
      }
    }
  }
}

std::size_t count_tasks(const Endomorphism& phi, std::size_t max_len) {
  return max_len >= 2 ? static_cast<std::size_t>(count_reduced_words(phi.rank(), 2)) : 1;
}

// Trie of images, one root per first letter of the preimage. Each node keeps
// the shortlex-least preimage passing through it.
class ImageTrie {
 public:
  explicit ImageTrie(int rank) : slots_(2 * static_cast<std::size_t>(rank)) {
    for (std::size_t s = 0; s < slots_; ++s) roots_.push_back(new_node());
  }

  void insert(const Word& pre, const Word& img) {
    int node = roots_[pre[0].slot()];
    touch(node, pre);
    for (Letter x : img) {
      int& child = next_[static_cast<std::size_t>(node) * slots_ + x.slot()];
      if (child < 0) {
        const int c = new_node();
        next_[static_cast<std::size_t>(node) * slots_ + x.slot()] = c;
        node = c;
      } else {
        node = child;
      }
      touch(node, pre);
    }
  }

  /// Longest common prefix of w with an image whose preimage starts with `first`.
  std::pair<std::size_t, const Word*> walk(Letter first, const Word& w) const {
    int node = roots_[first.slot()];
    if (!best_[static_cast<std::size_t>(node)]) return {0, nullptr};
    std::size_t d = 0;
    for (Letter x : w) {
      const int c = next_[static_cast<std::size_t>(node) * slots_ + x.slot()];
      if (c < 0) break;
      node = c;
      ++d;
    }
    return {d, &*best_[static_cast<std::size_t>(node)]};
  }

 private:
  int new_node() {
    next_.resize(next_.size() + slots_, -1);
    best_.emplace_back();
    return static_cast<int>(best_.size()) - 1;
  }
  void touch(int node, const Word& pre) {
    auto& b = best_[static_cast<std::size_t>(node)];
    if (!b || pre < *b) b = pre;
  }

  std::size_t slots_;
  std::vector<int> roots_;
  std::vector<int> next_;
  std::vector<std::optional<Word>> best_;
};

bool better(const CancellationMax& a, const CancellationMax& b) {
  if (a.cancelled != b.cancelled) return a.cancelled > b.cancelled;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

template <class Pred>
std::vector<Word> collect(const std::vector<const Endomorphism*>& maps, std::size_t max_len,
                          bool parallel, Pred&& pred) {
  std::vector<std::vector<Word>> per(count_tasks(*maps.front(), max_len));
  std::size_t tasks = 0;
  sweep(maps, max_len, parallel, tasks,
        [&](std::size_t t, const Word& u, const std::vector<Word>& imgs) {
          if (pred(u, imgs)) per[t].push_back(u);
        });
  std::vector<Word> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CancellationMax max_cancellation(const Endomorphism& phi, std::size_t max_len, bool parallel) {
  ImageTrie trie(phi.rank());
  for (std::size_t len = 1; len <= max_len; ++len) {
    for_each_reduced_word(phi.rank(), len, [&](const Word& v) {
      trie.insert(v, phi.apply(v));
      return true;
    });
  }
  std::vector<CancellationMax> per(count_tasks(phi, max_len));
  std::vector<bool> seen(per.size(), false);
  const auto slots = 2 * static_cast<std::size_t>(phi.rank());
  std::size_t tasks = 0;
  const std::vector<const Endomorphism*> maps{&phi};
  sweep(maps, max_len, parallel, tasks,
        [&](std::size_t t, const Word& u, const std::vector<Word>& imgs) {
          const Word w = imgs[0].inverse();
          for (std::size_t s = 0; s < slots; ++s) {
            const Letter f = Letter::from_slot(s);
            if (f == u.back().inverse()) continue;
            auto [d, v] = trie.walk(f, w);
            if (!v) continue;
            CancellationMax c{d, u, *v};
            if (!seen[t] || better(c, per[t])) {
              per[t] = std::move(c);
              seen[t] = true;
            }
          }
        });
  CancellationMax best;
  bool any = false;
  for (std::size_t t = 0; t < per.size(); ++t) {
    if (seen[t] && (!any || better(per[t], best))) {
      best = per[t];
      any = true;
    }
  }
  return best;
}

std::vector<Word> length_violations(const Endomorphism& phi, std::size_t max_len, bool strict,
                                    bool parallel) {
  return collect({&phi}, max_len, parallel, [strict](const Word& u, const std::vector<Word>& imgs) {
    return strict ? imgs[0].size() <= u.size() : imgs[0].size() < u.size();
  });
}

std::vector<Word> equalizer_words(const Endomorphism& phi, const Endomorphism& psi,
                                  std::size_t max_len, bool parallel) {
  return collect({&phi, &psi}, max_len, parallel,
                 [](const Word&, const std::vector<Word>& imgs) { return imgs[0] == imgs[1]; });
}

std::uint64_t lk_mismatches(const Endomorphism& phi, const RationalLanguage& L, std::size_t k,
                            std::size_t max_len, bool parallel) {
  std::vector<std::uint64_t> per(count_tasks(phi, max_len), 0);
  std::size_t tasks = 0;
  const std::vector<const Endomorphism*> maps{&phi};
  sweep(maps, max_len, parallel, tasks,
        [&](std::size_t t, const Word& u, const std::vector<Word>& imgs) {
          const bool in = imgs[0].size() <= u.size() + k;
          if (in != L.accepts(u)) ++per[t];
        });
  std::uint64_t total = L.accepts(Word()) ? 0 : 1;  // the empty word is always in L_k
  for (auto c : per) total += c;
  return total;
}

}  // namespace freebound::kernels
