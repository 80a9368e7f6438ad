#include <gtest/gtest.h>

#include <variant>

#include "freebound/stallings.hpp"
#include "support.hpp"

using namespace freebound;
namespace ts = testing_support;

namespace {
Word W(const std::string& s) { return Word::parse(s); }

std::vector<Word> gens(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(W(w));
  return out;
}
}  // namespace

TEST(Fold, Examples) {
  auto a = fold(gens({"aa", "bb"}));
  EXPECT_EQ(a.vertex_count(), 3u);
  EXPECT_EQ(a.positive_edges().size(), 4u);
  EXPECT_EQ(rank(a), 2);

  a = fold(gens({"a", "a"}));
  EXPECT_EQ(a.vertex_count(), 1u);
  EXPECT_EQ(a.positive_edges().size(), 1u);
  EXPECT_EQ(rank(a), 1);
  EXPECT_EQ(basis(a), gens({"a"}));

  EXPECT_EQ(rank(fold(gens({"abA", "b"}))), 2);
  EXPECT_EQ(rank(fold(gens({"a"}))), 1);
}

TEST(Fold, EdgesAreInvolutiveAndDeterministic) {
  for (int i = 0; i < 100; ++i) {
    const auto phi = ts::random_endo(3, 0, 5);
    const auto a = fold(phi.images());
    EXPECT_EQ(a.edge_count(), 2 * a.positive_edges().size());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      for (const auto& [l, t] : a.out(static_cast<int>(v))) {
        ASSERT_TRUE(a.out(t).count(l.inverse()));
        EXPECT_EQ(a.out(t).at(l.inverse()), static_cast<int>(v));
      }
      if (v != 0) EXPECT_GE(a.out(static_cast<int>(v)).size(), 2u);
    }
  }
}

TEST(Fold, Confluence) {
  for (int i = 0; i < 200; ++i) {
    const auto phi = ts::random_endo(2 + i % 2, 0, 6);
    const auto base = fold(phi.images());
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      EXPECT_EQ(fold(phi.images(), ts::seed() + seed), base) << phi.str();
    }
  }
}

TEST(Fold, AcceptsGeneratorsAndBasis) {
  for (int i = 0; i < 200; ++i) {
    const auto phi = ts::random_endo(2 + i % 2, 0, 5);
    const auto a = fold(phi.images());
    for (const Word& g : phi.images()) EXPECT_TRUE(a.accepts(g)) << phi.str() << " " << g.str();
    const auto b = basis(a);
    EXPECT_EQ(static_cast<int>(b.size()), rank(a));
    for (const Word& g : b) EXPECT_TRUE(a.accepts(g));
    EXPECT_EQ(fold(b), a);
  }
}

TEST(Fold, RankMatchesNielsen) {
  for (int i = 0; i < 300; ++i) {
    const auto phi = ts::random_endo(2 + i % 2, 0, 3);
    const auto a = fold(phi.images());
    EXPECT_LE(rank(a), phi.rank());
    EXPECT_EQ(static_cast<std::size_t>(rank(a)), nielsen_reduce(phi.images()).tuple.size()) << phi.str();
  }
}

TEST(Basis, ExamplesUpToEquivalence) {
  auto a = fold(gens({"aa", "bb"}));
  EXPECT_EQ(fold(basis(a)), a);
  a = fold(gens({"ab", "ab"}));
  ASSERT_EQ(basis(a).size(), 1u);
  EXPECT_EQ(fold(basis(a)), fold(gens({"ab"})));
}

TEST(Monomorphism, Examples) {
  EXPECT_FALSE(is_monomorphism(ts::parse("a->a; b->a")));
  EXPECT_TRUE(is_monomorphism(ts::fixture("theta")));
  EXPECT_TRUE(is_monomorphism(ts::fixture("phi_ex")));
  EXPECT_FALSE(is_monomorphism(ts::parse("a->ab; b->1")));
}

TEST(Monomorphism, AutomorphismsAreMonomorphisms) {
  for (int i = 0; i < 300; ++i) {
    const auto phi = ts::random_endo(2, 1, 3);
    if (std::holds_alternative<AutInverse>(invert_automorphism(phi))) {
      EXPECT_TRUE(is_monomorphism(phi)) << phi.str();
    }
  }
}

TEST(Dot, MentionsEveryEdge) {
  const auto a = fold(gens({"aa", "bb"}));
  const std::string d = a.dot();
  EXPECT_NE(d.find("digraph"), std::string::npos);
  EXPECT_EQ(std::count(d.begin(), d.end(), '>'), 4);
}
