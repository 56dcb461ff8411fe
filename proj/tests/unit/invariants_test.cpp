#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "polyspec/error.hpp"
#include "polyspec/invariants.hpp"
#include "polyspec/oracle.hpp"

namespace polyspec {
namespace {

using testing::acceptance_corpus;
using testing::complete_graph;

struct Tuple {
  Rational kf;
  Rational k;
  BigInt n0;
  BigInt e0;
  int n;
};

// Random (N0, E0) with N0 - 1 <= E0 <= N0(N0-1)/2 and Kf0 = 2 E0 K0.
Tuple random_tuple(std::mt19937& rng) {
  std::uniform_int_distribution<long> vertices(2, 60);
  std::uniform_int_distribution<int> poly(2, 12);
  const long n0 = vertices(rng);
  std::uniform_int_distribution<long> edges(n0 - 1, n0 * (n0 - 1) / 2);
  const long e0 = edges(rng);
  Rational k(static_cast<long>(rng() % 100000) + 1, static_cast<long>(rng() % 997) + 1);
  k.canonicalize();
  Rational kf = 2 * Rational(e0) * k;
  kf.canonicalize();
  return {kf, k, BigInt(n0), BigInt(e0), poly(rng)};
}

TEST(FromSpectrum, TriangleWithN2) {
  const Graph g = iterate_transform(complete_graph(3), 2, 1);
  const auto base = base_spectrum(g);
  const auto r = invariants_from_spectrum(base.spectrum, base.context, g.degrees());
  EXPECT_NEAR(r.kirchhoff, 84.0, 1e-9);
  EXPECT_NEAR(r.kemeny, 14.0 / 3.0, 1e-12);
  ASSERT_TRUE(r.spanning_trees.has_value());
  EXPECT_EQ(*r.spanning_trees, 54);
  EXPECT_EQ(r.method, Method::FromSpectrum);
}

TEST(FromSpectrum, CompleteGraphK4) {
  const Graph g = complete_graph(4);
  const auto base = base_spectrum(g);
  const auto r = invariants_from_spectrum(base.spectrum, base.context, degree_product(g));
  EXPECT_EQ(*r.spanning_trees, 16);
  EXPECT_NEAR(r.kemeny, 3.0 * 3.0 / 4.0, 1e-12);
}

TEST(FromSpectrum, RejectsMissingZero) {
  Spectrum s({{0.5, BigInt(1), Source::Base}, {1.5, BigInt(2), Source::Base}});
  EXPECT_THROW(invariants_from_spectrum_log(s, {BigInt(3), BigInt(3), false}, 0.0), InputError);
}

TEST(FromSpectrum, MatchesExactOracles) {
  for (const auto& [name, g] : acceptance_corpus()) {
    for (int n = 2; n <= 4; ++n) {
      const Graph t = polygon_transform(g, n);
      const auto base = base_spectrum(t);
      const auto r = invariants_from_spectrum(base.spectrum, base.context, t.degrees());
      const Rational k = kemeny_exact(t);
      EXPECT_NEAR(r.kemeny, k.get_d(), 1e-9 * k.get_d()) << name << " n=" << n;
      const BigInt trees = oracle::matrix_tree_count(t);
      EXPECT_NEAR(r.log_spanning_trees, log_of(trees), 1e-9 * log_of(trees)) << name;
      if (r.spanning_trees) EXPECT_EQ(*r.spanning_trees, trees) << name << " n=" << n;
    }
  }
}

TEST(KemenyExact, KnownValues) {
  EXPECT_EQ(kemeny_exact(complete_graph(3)), Rational(4, 3));
  EXPECT_EQ(kemeny_exact(iterate_transform(complete_graph(3), 2, 1)), Rational(14, 3));
  EXPECT_EQ(kemeny_exact(complete_graph(2)), Rational(1, 2));
  EXPECT_THROW(kemeny_exact(complete_graph(5), 4), CapExceeded);
}

TEST(WalkCharpoly, TriangleAndDegree) {
  // Eigenvalues 0, 3/2, 3/2.
  EXPECT_EQ(walk_laplacian_charpoly(complete_graph(3)),
            Polynomial(std::vector<Rational>{Rational(0), Rational(9, 4), Rational(-3), Rational(1)}));
  for (const auto& [name, g] : acceptance_corpus()) {
    const Polynomial p = walk_laplacian_charpoly(g);
    EXPECT_EQ(p.degree(), static_cast<int>(g.vertex_count())) << name;
    EXPECT_EQ(p.coeff(0), 0) << name;
    // Trace of I - D^{-1} A is N.
    EXPECT_EQ(p.coeff(g.vertex_count() - 1), -Rational(static_cast<long>(g.vertex_count()))) << name;
  }
}

TEST(ClosedForms, TriangleExamples) {
  const Rational kf0(8), k0(4, 3);
  EXPECT_EQ(kirchhoff_step(kf0, 3, 3, 2), Rational(84));
  EXPECT_EQ(kemeny_step(k0, 3, 3, 2), Rational(14, 3));
  EXPECT_EQ(kirchhoff_closed(kf0, 3, 3, 2, 1), Rational(84));
  EXPECT_EQ(kemeny_closed(k0, 3, 3, 2, 1), Rational(14, 3));
  EXPECT_EQ(kemeny_iterated(k0, 3, 3, 2, 1), Rational(14, 3));
  EXPECT_EQ(kirchhoff_iterated(kf0, 3, 3, 2, 1), Rational(84));
  EXPECT_EQ(spanning_trees_step(3, 3, 3, 2), 54);
  EXPECT_EQ(spanning_trees_closed(3, 3, 3, 2, 2), 209952);
  EXPECT_DOUBLE_EQ(kemeny_closed(4.0 / 3.0, 3, 3, 2, 1), 14.0 / 3.0);
}

TEST(ClosedForms, EdgeBecomesCycle) {
  // tau_n(K2) is the cycle C_{n+1}, whose Kemeny constant is ((n+1)^2 - 1) / 6.
  for (int n = 2; n <= 12; ++n) {
    Rational k((n + 1) * (n + 1) - 1, 6);
    k.canonicalize();
    EXPECT_EQ(kemeny_step(Rational(1, 2), 2, 1, n), k) << n;
    EXPECT_EQ(kirchhoff_step(Rational(1), 2, 1, n), 2 * Rational(n + 1) * k) << n;
  }
}

TEST(ClosedForms, RejectGenerationZero) {
  EXPECT_THROW(kirchhoff_closed(Rational(8), 3, 3, 2, 0), InputError);
  EXPECT_THROW(kemeny_closed(Rational(1), 3, 3, 2, 0), InputError);
  EXPECT_THROW(spanning_trees_closed(3, 3, 3, 2, 0), InputError);
  EXPECT_THROW(kemeny_step(Rational(1), 3, 3, 1), InputError);
}

TEST(ClosedForms, IteratedAgreesWithStepAtGenerationOne) {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const Tuple t = random_tuple(rng);
    ASSERT_EQ(kirchhoff_iterated(t.kf, t.n0, t.e0, t.n, 1), kirchhoff_step(t.kf, t.n0, t.e0, t.n));
    ASSERT_EQ(kemeny_iterated(t.k, t.n0, t.e0, t.n, 1), kemeny_step(t.k, t.n0, t.e0, t.n));
    ASSERT_EQ(spanning_trees_iterated(7, t.n0, t.e0, t.n, 1), spanning_trees_step(7, t.n0, t.e0, t.n));
  }
}

TEST(ClosedForms, IteratedAgreesWithRepeatedSteps) {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const Tuple t = random_tuple(rng);
    Rational kf = t.kf, k = t.k;
    BigInt trees = 5, vertices = t.n0, edges = t.e0;
    for (int g = 1; g <= 6; ++g) {
      kf = kirchhoff_step(kf, vertices, edges, t.n);
      k = kemeny_step(k, vertices, edges, t.n);
      // Tree counts have about N_g digits; keep them to sizes that stay cheap.
      if (vertices < 20000) trees = spanning_trees_step(trees, vertices, edges, t.n);
      vertices += BigInt(t.n - 1) * edges;
      edges *= t.n + 1;
      ASSERT_EQ(kirchhoff_closed(t.kf, t.n0, t.e0, t.n, g), kf) << "g=" << g << " n=" << t.n;
      ASSERT_EQ(kemeny_closed(t.k, t.n0, t.e0, t.n, g), k) << "g=" << g << " n=" << t.n;
      if (vertices < 20000) {
        ASSERT_EQ(spanning_trees_closed(5, t.n0, t.e0, t.n, g), trees) << "g=" << g;
      }
    }
  }
}

TEST(ClosedForms, KemenyIsKirchhoffOverTwiceEdges) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Tuple t = random_tuple(rng);
    const int g = 1 + trial % 5;
    const auto counts = predict_counts(t.n0, t.e0, t.n, g);
    Rational ratio = kirchhoff_closed(t.kf, t.n0, t.e0, t.n, g) / Rational(2 * counts.edges);
    ratio.canonicalize();
    ASSERT_EQ(kemeny_closed(t.k, t.n0, t.e0, t.n, g), ratio) << trial;
  }
}

TEST(ClosedForms, MatchExplicitGraphs) {
  for (const auto& [name, g] : acceptance_corpus()) {
    const Rational k0 = kemeny_exact(g);
    const Rational kf0 = 2 * Rational(static_cast<long>(g.edge_count())) * k0;
    const BigInt trees0 = oracle::matrix_tree_count(g);
    for (int n = 2; n <= 4; ++n) {
      for (int gen = 1; gen <= 2; ++gen) {
        const auto counts = predict_counts(g.vertex_count(), g.edge_count(), n, gen);
        if (counts.vertices > 200) continue;
        const Graph t = iterate_transform(g, n, gen);
        const Rational k = kemeny_exact(t);
        EXPECT_EQ(kemeny_closed(k0, g.vertex_count(), g.edge_count(), n, gen), k) << name;
        EXPECT_EQ(kirchhoff_closed(kf0, g.vertex_count(), g.edge_count(), n, gen),
                  Rational(2 * counts.edges) * k) << name;
        EXPECT_EQ(spanning_trees_closed(trees0, g.vertex_count(), g.edge_count(), n, gen),
                  oracle::matrix_tree_count(t)) << name << " n=" << n << " g=" << gen;
      }
    }
  }
}

TEST(ClosedForms, ReportCarriesExactFields) {
  InvariantReport base;
  base.kirchhoff = 8.0;
  base.kemeny = 4.0 / 3.0;
  base.kirchhoff_exact = Rational(8);
  base.kemeny_exact = Rational(4, 3);
  base.spanning_trees = BigInt(3);
  const auto r = closed_form_report(base, 3, 3, 2, 1);
  EXPECT_EQ(r.method, Method::ClosedForm);
  EXPECT_EQ(r.generation, 1);
  EXPECT_EQ(*r.kirchhoff_exact, Rational(84));
  EXPECT_EQ(*r.kemeny_exact, Rational(14, 3));
  EXPECT_EQ(*r.spanning_trees, 54);
  EXPECT_NEAR(r.kemeny, 14.0 / 3.0, 1e-12);
}

TEST(DegreeProduct, IteratedMatchesExplicit) {
  for (const auto& [name, g] : acceptance_corpus()) {
    for (int n = 2; n <= 5; ++n) {
      for (int gen = 0; gen <= 2; ++gen) {
        const auto counts = predict_counts(g.vertex_count(), g.edge_count(), n, gen);
        if (counts.vertices > 5000) continue;
        const BigInt want = degree_product(iterate_transform(g, n, gen));
        const BigInt got =
            degree_product_iterated(degree_product(g), g.vertex_count(), g.edge_count(), n, gen);
        EXPECT_EQ(got, want) << name << " n=" << n << " g=" << gen;
        EXPECT_NEAR(log_degree_product_iterated(degree_product(g), g.vertex_count(),
                                                g.edge_count(), n, gen),
                    log_of(want), 1e-9 * (1.0 + log_of(want)));
      }
    }
  }
}

TEST(ClosedForms, LogSpanningTrees) {
  for (int n = 2; n <= 6; ++n) {
    for (int g = 1; g <= 3; ++g) {
      const BigInt exact = spanning_trees_closed(16, 4, 6, n, g);
      EXPECT_NEAR(log_spanning_trees_closed(std::log(16.0), 4, 6, n, g), log_of(exact),
                  1e-12 * log_of(exact));
    }
  }
  // N_40 of tau_2 on K3 is near 1.8e19; the count itself is far out of reach.
  EXPECT_GT(log_spanning_trees_closed(std::log(3.0), 3, 3, 2, 40), 1e19);
}

TEST(ClosedForms, LargeGenerationsStayExact) {
  const BigInt trees = spanning_trees_closed(3, 3, 3, 9, 3);
  EXPECT_GT(trees, 0);
  const Rational kf = kirchhoff_closed(Rational(8), 3, 3, 9, 3);
  const double d = kirchhoff_closed(8.0, 3, 3, 9, 3);
  EXPECT_NEAR(d, kf.get_d(), 1e-12 * kf.get_d());
}

}  // namespace
}  // namespace polyspec
