#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace setumbral;
using setumbral::testing::all_labeled_graphs;
using setumbral::testing::poly;
using setumbral::testing::random_graph;
using setumbral::testing::random_rational;
using setumbral::testing::random_setmap;

namespace {

std::vector<BinomialFamily> chromatic_families() {
  return {BinomialFamily::monomial(),      BinomialFamily::falling(Rational(1)),
          BinomialFamily::falling(Rational(-1)), BinomialFamily::falling(Rational(2)),
          BinomialFamily::rising(),        BinomialFamily::abel(Rational(0)),
          BinomialFamily::abel(Rational(1)),     BinomialFamily::abel(Rational(-1)),
          BinomialFamily::log_family()};
}

SetMap<Poly> power_map(int n) {
  return SetMap<Poly>::generate(GroundSet(n), [](Mask s) { return Poly::monomial(static_cast<unsigned>(popcount(s))); });
}

}  // namespace

TEST(BinomialType, Examples) {
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : all_labeled_graphs(n)) EXPECT_TRUE(check_binomial_type(chromatic_setmap(g)));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(check_binomial_type(chromatic_setmap(random_graph(rng, 5))));

  EXPECT_TRUE(check_binomial_type(SetMap<Poly>(GroundSet(3))));

  auto p = power_map(3);
  EXPECT_TRUE(check_binomial_type(p));
  p[0b101] += Poly(Rational(1));
  EXPECT_FALSE(check_binomial_type(p));
  EXPECT_THROW(check_binomial_type(power_map(8)), cap_exceeded);
}

TEST(Expand, K2Examples) {
  const auto chi = chromatic_setmap(Graph::complete(2));
  const Expansion mono = expand(chi, 0b11, BinomialFamily::monomial());
  EXPECT_EQ(mono.coefficients[0b01], 1);
  EXPECT_EQ(mono.coefficients[0b10], 1);
  EXPECT_EQ(mono.coefficients[0b11], -1);
  EXPECT_EQ(expansion_by_length(mono), (std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}));
  EXPECT_EQ(reconstruct(mono), poly({0, -1, 1}));

  const Expansion fall = expand(chi, 0b11, BinomialFamily::falling(Rational(1)));
  EXPECT_EQ(fall.coefficients[0b11], 0);
  EXPECT_EQ(expansion_by_length(fall), (std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
  EXPECT_EQ(reconstruct(fall), poly({0, -1, 1}));

  const Expansion rise = expand(chi, 0b11, BinomialFamily::rising());
  EXPECT_EQ(expansion_by_length(rise), (std::vector<Rational>{Rational(0), Rational(-2), Rational(1)}));

  const Expansion empty = expand(chi, 0, BinomialFamily::abel(Rational(1)));
  EXPECT_EQ(expansion_by_length(empty), std::vector<Rational>{Rational(1)});
  EXPECT_EQ(reconstruct(empty), poly({1}));
}

TEST(Expand, Errors) {
  EXPECT_THROW(expand(SetMap<Poly>(GroundSet(2)), 0b11, BinomialFamily::monomial()), precondition_error);
  const auto chi = chromatic_setmap(Graph::complete(2));
  EXPECT_THROW(expand(chi, 0b100, BinomialFamily::monomial()), precondition_error);
  EXPECT_THROW(expand(chromatic_setmap(Graph::edgeless(13)), 0x1fff, BinomialFamily::monomial()), cap_exceeded);
}

TEST(Expand, ReconstructsEveryFamily) {
  std::mt19937_64 rng(53);
  std::vector<Graph> corpus;
  for (int n = 0; n <= 3; ++n)
    for (const Graph& g : all_labeled_graphs(n)) corpus.push_back(g);
  for (int trial = 0; trial < 10; ++trial) corpus.push_back(random_graph(rng, 4 + trial % 3));
  for (const Graph& g : corpus) {
    const auto chi = chromatic_setmap(g);
    for (const auto& fam : chromatic_families()) {
      for (Mask s = 0; s <= g.vertices(); ++s) {
        const Expansion e = expand(chi, s, fam);
        ASSERT_EQ(reconstruct(e), chi[s]) << fam.to_string() << " S=" << s;
        // Only the all-singleton partition has |S| blocks.
        Rational top(1);
        for (Mask r = s; r != 0; r &= r - 1) top *= e.coefficients[r & (~r + 1)];
        EXPECT_EQ(e.by_length.back(), top);
      }
      if (g.order() <= 4) {
        EXPECT_EQ(reconstruct_by_partitions(expand(chi, g.vertices(), fam)), chi[g.vertices()]);
      }
    }
  }
}

TEST(Expand, PowersOfDeltaCountOrderedPartitions) {
  // A^k p_S = k! c_k
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 4);
    const auto chi = chromatic_setmap(g);
    for (const auto& fam : chromatic_families()) {
      const Expansion e = expand(chi, g.vertices(), fam);
      const Functional A = fam.delta(g.order());
      for (unsigned k = 0; k <= 4 && k <= static_cast<unsigned>(g.order()); ++k) {
        EXPECT_EQ(functional_power(A, k)(chi[g.vertices()]), factorial(k) * e.by_length[k]) << fam.to_string();
      }
    }
  }
}

TEST(Expand, FunctionalsActMultiplicatively) {
  // LM p = (L p)(M p) in the set-map ring
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 5);
    const auto chi = chromatic_setmap(g);
    std::vector<Rational> lm, mm;
    for (int i = 0; i <= g.order(); ++i) {
      lm.push_back(random_rational(rng));
      mm.push_back(random_rational(rng));
    }
    const Functional L(lm), M(mm);
    EXPECT_EQ(apply_functional(umbral_product(L, M), chi), apply_functional(L, chi) * apply_functional(M, chi));
  }
}

TEST(Expand, ThetaRoundTrip) {
  // θ(h) = a(x)∘h, then A entrywise gives h back.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 18; ++trial) {
    const int n = trial % 7;
    auto h = random_setmap(rng, n);
    h[0] = 0;
    const auto fams = chromatic_families();
    const BinomialFamily fam = fams[static_cast<std::size_t>(trial) % fams.size()];
    std::vector<Poly> a;
    for (int k = 0; k <= n; ++k) a.push_back(fam.poly(k));
    const SetMap<Poly> theta = compose(Sequence<Poly>(a), h);
    EXPECT_TRUE(detail::is_one(theta[0]));
    SetMap<Rational> back = apply_functional(fam.delta(std::max(1, n)), theta);
    back[0] = 0;
    EXPECT_EQ(back, h) << fam.to_string();
    if (n <= 4) {
      EXPECT_TRUE(check_binomial_type(theta));
    }
  }
}

TEST(Chromatic, Exp91Examples) {
  EXPECT_TRUE(verify_exp91(Graph::complete(2), 0b11));
  EXPECT_TRUE(verify_exp91(Graph::edgeless(4), 0b1111));
  EXPECT_TRUE(verify_exp91(Graph::complete(3), 0b111));
  EXPECT_TRUE(verify_exp91(Graph::cycle(5), 0b11011));
  EXPECT_THROW(verify_exp91(Graph::edgeless(7), 0b1111111), cap_exceeded);
  // K2: c_1 = −2, and the one-block partition carries 2 orientations.
  const Expansion e = expand(chromatic_setmap(Graph::complete(2)), 0b11, BinomialFamily::rising());
  EXPECT_EQ(-e.by_length[1], Rational(static_cast<unsigned long>(count_acyclic_orientations(Graph::complete(2)))));
}

TEST(Chromatic, CexpExamples) {
  const Graph k2 = Graph::complete(2), k3 = Graph::complete(3);
  EXPECT_TRUE(verify_cexp(k2, 0b11, Rational(0), CexpForm::derivative));
  EXPECT_TRUE(verify_cexp(k2, 0b11, Rational(1), CexpForm::evaluation));
  EXPECT_TRUE(verify_cexp(k3, 0b111, Rational(-1), CexpForm::evaluation));
  EXPECT_TRUE(verify_cexp(k3, 0b111, Rational(3, 2), CexpForm::derivative));
  EXPECT_TRUE(verify_cexp(Graph::cycle(5), 0b11111, Rational(-2, 3), CexpForm::evaluation));
  EXPECT_THROW(verify_cexp(k2, 0b11, Rational(0), CexpForm::evaluation), precondition_error);
  EXPECT_TRUE(verify_exp92(k2, 0b11));
  EXPECT_TRUE(verify_exp92(k3, 0b001));
  EXPECT_TRUE(verify_exp92(k3, 0b111));
  EXPECT_TRUE(verify_exp93(k2, 0b11));
  EXPECT_TRUE(verify_exp93(Graph::path(3), 0b111));
  EXPECT_TRUE(verify_exp93(k3, 0b100));
}

TEST(Chromatic, SuitesOnSmallGraphs) {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const Mask full = g.vertices();
      EXPECT_TRUE(verify_exp91(g, full));
      EXPECT_TRUE(verify_exp92(g, full));
      EXPECT_TRUE(verify_exp93(g, full));
      EXPECT_TRUE(verify_stanley(g, full));
      EXPECT_TRUE(verify_unique_sink(g, full));
      EXPECT_TRUE(verify_sink_source(g, full));
      for (int a = -2; a <= 2; ++a) {
        EXPECT_TRUE(verify_cexp(g, full, Rational(a), CexpForm::derivative));
        if (a != 0) {
          EXPECT_TRUE(verify_cexp(g, full, Rational(a), CexpForm::evaluation));
        }
      }
    }
  }
}

TEST(PowerIdentity, Examples) {
  const auto k2 = chromatic_setmap(Graph::complete(2));
  const auto k3 = chromatic_setmap(Graph::complete(3));
  EXPECT_TRUE(setmap_power_identity(k2, Rational(5, 3), 1));
  EXPECT_TRUE(setmap_power_identity(k2, Rational(2), 2));
  EXPECT_TRUE(setmap_power_identity(k3, Rational(1), 3));
  EXPECT_EQ(evaluate(k2, Rational(4)), setmap_power(evaluate(k2, Rational(2)), 2));
  EXPECT_THROW(setmap_power_identity(k2, Rational(1), 0), precondition_error);
  // a constant shift breaks binomial type (a linear one would not)
  auto p = power_map(2);
  p[0b11] += Poly(Rational(1));
  EXPECT_FALSE(setmap_power_identity(p, Rational(1), 2));
}
