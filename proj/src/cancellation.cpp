#include "freebound/cancellation.hpp"

#include <algorithm>
#include <set>

#include "freebound/growth.hpp"
#include "freebound/image_language.hpp"
#include "freebound/stallings.hpp"

namespace freebound {

void require_injective(const Endomorphism& phi) {
  if (!is_monomorphism(phi)) throw NotInjective(phi.str());
}

namespace {

// Shortest (then shortlex-least) reduced z starting with `first` whose image
// begins with p. A branch dies once its image disagrees with p before the
// last B letters, since later letters cancel at most B of them.
std::optional<Word> preimage_with_prefix(const Endomorphism& phi, std::size_t B, Letter first,
                                         const Word& p) {
  std::vector<Word> layer{Word::from_reduced({first})};
  for (std::size_t len = 1; len <= 4 * (p.size() + B) + 8 && !layer.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& z : layer) {
      const Word img = phi.apply(z);
      const std::size_t m = meet_length(img.letters(), p.letters());
      if (m == p.size()) return z;
      if (img.size() > B && m < std::min(img.size() - B, p.size())) continue;
      for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(phi.rank()); ++s) {
        const Letter x = Letter::from_slot(s);
        if (x == z.back().inverse()) continue;
        Word zz = z;
        zz.push(x);
        next.push_back(std::move(zz));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

BrpCertificate brp_constant(const Endomorphism& phi) {
  require_injective(phi);
  BrpCertificate cert;
  cert.morphism = phi.str();
  cert.method = BrpCertificate::Method::StateClosure;
  const std::size_t slots = 2 * static_cast<std::size_t>(phi.rank());
  std::vector<ImageLanguage> langs;
  for (std::size_t s = 0; s < slots; ++s) {
    langs.push_back(ImageLanguage::starting_with(phi, Letter::from_slot(s)));
  }
  std::optional<std::pair<std::size_t, std::size_t>> arg;
  Word best_prefix;
  for (std::size_t x = 0; x < slots; ++x) {
    for (std::size_t y = x + 1; y < slots; ++y) {
      auto lcp = longest_common_prefix(langs[x], langs[y]);
      if (!lcp.length) {
        throw NotInjective("image languages share unbounded prefixes for " + phi.str());
      }
      if (!arg || *lcp.length > cert.B) {
        cert.B = *lcp.length;
        arg = {x, y};
        best_prefix = lcp.witness;
      }
    }
  }
  if (cert.B > 0 && arg) {
    // u^{-1} starts with x and v with y, so u·v is reduced and cancels B on each side.
    auto z1 = preimage_with_prefix(phi, cert.B, Letter::from_slot(arg->first), best_prefix);
    auto z2 = preimage_with_prefix(phi, cert.B, Letter::from_slot(arg->second), best_prefix);
    if (z1 && z2) cert.witness = std::make_pair(z1->inverse(), *z2);
  }
  return cert;
}

std::size_t min_image_length(const Endomorphism& phi, std::size_t k,
                             std::optional<Letter> forbidden_first) {
  if (k == 0) return 0;
  GrowthEngine engine(phi);
  std::set<GrowthState> layer;
  for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(phi.rank()); ++s) {
    const Letter x = Letter::from_slot(s);
    if (forbidden_first && x == *forbidden_first) continue;
    layer.insert(*engine.step(engine.initial(), x));
  }
  for (std::size_t len = 1; len < k; ++len) {
    std::set<GrowthState> next;
    for (const GrowthState& q : layer) {
      for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(phi.rank()); ++s) {
        if (auto r = engine.step(q, Letter::from_slot(s))) next.insert(std::move(*r));
      }
    }
    layer = std::move(next);
  }
  std::int64_t best = INT64_MAX;
  for (const GrowthState& q : layer) best = std::min(best, q.delta);
  if (layer.empty()) return 0;
  return static_cast<std::size_t>(static_cast<std::int64_t>(k) + best);
}

namespace {

// Longest common prefix of the images of two distinct continuations of a
// word whose state has tail β and last letter λ. A branch is either "stop"
// (the image is β itself) or a first letter x.
class PairMax {
 public:
  explicit PairMax(const Endomorphism& phi) : phi_(phi) {}

  std::size_t operator()(const Word& beta, std::optional<Letter> last) {
    auto key = std::make_pair(beta, last ? static_cast<int>(last->slot()) : -1);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const std::size_t slots = 2 * static_cast<std::size_t>(phi_.rank());
    std::vector<std::optional<ImageLanguage>> langs(slots);
    for (std::size_t s = 0; s < slots; ++s) {
      const Letter x = Letter::from_slot(s);
      if (last && x == last->inverse()) continue;
      langs[s].emplace(ImageLanguage::starting_with(phi_, x, beta));
    }
    std::size_t best = beta.size();  // stop vs stop
    for (std::size_t x = 0; x < slots; ++x) {
      if (!langs[x]) continue;
      // stop vs x: longest prefix of β that some image still begins with
      std::size_t j = beta.size();
      while (j > 0 && !langs[x]->has_prefix(beta.prefix(j))) --j;
      best = std::max(best, j);
      for (std::size_t y = x + 1; y < slots; ++y) {
        if (!langs[y]) continue;
        auto lcp = longest_common_prefix(*langs[x], *langs[y]);
        if (!lcp.length) throw NotInjective(phi_.str());
        best = std::max(best, *lcp.length);
      }
    }
    cache_.emplace(key, best);
    return best;
  }

 private:
  const Endomorphism& phi_;
  std::map<std::pair<Word, int>, std::size_t> cache_;
};

}  // namespace

MeetBoundTable meet_bound_table(const Endomorphism& phi, std::size_t max_n) {
  GrowthEngine engine(phi);
  PairMax pair_max(phi);
  MeetBoundTable table;
  table.morphism = phi.str();
  std::set<GrowthState> layer{engine.initial()};
  std::size_t running = 0;
  for (std::size_t len = 0; len <= max_n; ++len) {
    for (const GrowthState& q : layer) {
      // |wα| = |wφ| - |wβ|; the two continuations diverge right after wα
      const auto stable = static_cast<std::size_t>(static_cast<std::int64_t>(len) + q.delta) -
                          q.tail.size();
      running = std::max(running, stable + pair_max(q.tail, q.last));
    }
    table.entries[len] = running;
    if (len == max_n) break;
    std::set<GrowthState> next;
    for (const GrowthState& q : layer) {
      for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(phi.rank()); ++s) {
        if (auto r = engine.step(q, Letter::from_slot(s))) next.insert(std::move(*r));
      }
    }
    layer = std::move(next);
  }
  return table;
}

std::size_t mn_constant(const Endomorphism& phi, std::size_t N) {
  return meet_bound_table(phi, N).entries.at(N);
}

std::size_t equalizer_constant(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank() != psi.rank()) throw Error("equalizer_constant: rank mismatch");
  const std::size_t B = std::max(brp_constant(phi).B, brp_constant(psi).B);
  const std::size_t K = std::max({mn_constant(phi, 0), mn_constant(psi, 0), B});
  return 2 * K + 4 * B;
}

Word boundary_apply_prefix(const Endomorphism& phi, const BoundaryStream& alpha, std::size_t k) {
  return boundary_apply_prefix(phi, brp_constant(phi).B, alpha, k);
}

Word boundary_apply_prefix(const Endomorphism& phi, std::size_t B, const BoundaryStream& alpha,
                           std::size_t k) {
  if (k == 0) return Word();
  std::size_t m = std::max<std::size_t>(k, 1);
  for (int round = 0; round < 20; ++round, m *= 2) {
    const Word img = phi.apply(alpha.prefix(m));
    if (img.size() >= k + B) return img.prefix(k);
  }
  throw NotInjective("boundary image does not grow for " + phi.str());
}

}  // namespace freebound
