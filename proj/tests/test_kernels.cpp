#include <gtest/gtest.h>

#include "freebound/cancellation.hpp"
#include "freebound/kernels.hpp"
#include "freebound/stallings.hpp"
#include "support.hpp"

using namespace freebound;
namespace ts = testing_support;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

const std::vector<std::string> kFixtures{"phi_ex", "theta", "identity", "swap", "inner", "bbaa", "nielsen"};

}  // namespace

TEST(Kernels, MaxCancellationSerialEqualsParallel) {
  for (const auto& name : kFixtures) {
    const auto phi = ts::fixture(name);
    const auto s = kernels::max_cancellation(phi, 6, false);
    const auto p = kernels::max_cancellation(phi, 6, true);
    EXPECT_EQ(s.cancelled, p.cancelled) << name;
    EXPECT_EQ(s.u, p.u) << name;
    EXPECT_EQ(s.v, p.v) << name;
  }
}

TEST(Kernels, MaxCancellationMatchesBrp) {
  for (const auto& name : kFixtures) {
    const auto phi = ts::fixture(name);
    const auto c = brp_constant(phi);
    const auto k = kernels::max_cancellation(phi, 7, true);
    EXPECT_EQ(k.cancelled, c.B) << name;
    if (k.cancelled > 0) {
      const Word uv = k.u * k.v;
      EXPECT_EQ(uv.size(), k.u.size() + k.v.size());
      EXPECT_EQ(phi.apply(k.u).size() + phi.apply(k.v).size() - phi.apply(uv).size(), 2 * k.cancelled);
    }
  }
  const auto k = kernels::max_cancellation(ts::fixture("phi_ex"), 4, false);
  EXPECT_EQ(k.u.str(), "A");
  EXPECT_EQ(k.v.str(), "b");
}

TEST(Kernels, MaxCancellationOnRandomMonomorphisms) {
  int done = 0;
  while (done < 25) {
    const auto phi = ts::random_endo(2, 1, 4);
    if (!is_monomorphism(phi)) continue;
    ++done;
    const auto k = kernels::max_cancellation(phi, 5, true);
    EXPECT_LE(k.cancelled, brp_constant(phi).B) << phi.str();
    EXPECT_EQ(k.cancelled, kernels::max_cancellation(phi, 5, false).cancelled);
  }
}

TEST(Kernels, LengthViolationsMatchNaive) {
  for (const auto& name : kFixtures) {
    const auto phi = ts::fixture(name);
    const auto m = ts::naive_map(phi);
    for (bool strict : {false, true}) {
      std::vector<Word> want;
      for (const auto& u : ts::naive_words_upto(2, 7)) {
        const std::size_t n = ts::naive_apply(m, u).size();
        if (strict ? n <= u.size() : n < u.size()) want.push_back(W(u));
      }
      EXPECT_EQ(kernels::length_violations(phi, 7, strict, false), want) << name << strict;
      EXPECT_EQ(kernels::length_violations(phi, 7, strict, true), want) << name << strict;
    }
  }
  const auto v = kernels::length_violations(ts::fixture("phi_ex"), 3, false, true);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().str(), "Aba");
}

TEST(Kernels, EqualizerWordsMatchNaive) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"theta", "phi_ex"}, {"inner", "identity"}, {"nielsen", "identity"}, {"bbaa", "theta"}, {"theta", "theta"}};
  for (const auto& [a, b] : pairs) {
    const auto phi = ts::fixture(a), psi = ts::fixture(b);
    const auto ma = ts::naive_map(phi), mb = ts::naive_map(psi);
    std::vector<Word> want;
    for (const auto& u : ts::naive_words_upto(2, 6)) {
      if (ts::naive_apply(ma, u) == ts::naive_apply(mb, u)) want.push_back(W(u));
    }
    EXPECT_EQ(kernels::equalizer_words(phi, psi, 6, false), want) << a << " " << b;
    EXPECT_EQ(kernels::equalizer_words(phi, psi, 6, true), want) << a << " " << b;
  }
}

TEST(Kernels, LkLanguagesHaveNoMismatches) {
  std::vector<Endomorphism> maps{ts::fixture("theta"), ts::fixture("identity"),
                                 psi_lift(ts::fixture("theta")).lift, psi_lift(ts::fixture("phi_ex")).lift};
  for (const auto& phi : maps) {
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto L = build_Lk(phi, k);
      const std::size_t len = phi.rank() > 2 ? 5 : 8;
      EXPECT_EQ(kernels::lk_mismatches(phi, L, k, len, false), 0u) << phi.str() << " k=" << k;
      EXPECT_EQ(kernels::lk_mismatches(phi, L, k, len, true), 0u) << phi.str() << " k=" << k;
    }
  }
}

TEST(Kernels, LkMismatchesDetectWrongLanguage) {
  const auto theta = ts::fixture("theta");
  // L_0 of θ holds only the empty word; L_k of the identity holds everything.
  const auto wrong = build_Lk(ts::fixture("identity"), 0);
  const auto s = kernels::lk_mismatches(theta, wrong, 0, 4, false);
  EXPECT_EQ(s, kernels::lk_mismatches(theta, wrong, 0, 4, true));
  EXPECT_EQ(s, 4u + 12u + 36u + 108u);
}
