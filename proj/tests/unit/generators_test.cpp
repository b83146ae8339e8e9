#include <gtest/gtest.h>

#include "sparsecol/generators.hpp"
#include "sparsecol/sparsity.hpp"

namespace sc = sparsecol;

namespace {

TEST(Generators, BasicFamilies) {
  EXPECT_EQ(sc::cycle_graph(6).edge_count(), 6);
  for (sc::Vertex v = 0; v < 6; ++v) EXPECT_EQ(sc::cycle_graph(6).degree(v), 2);
  EXPECT_EQ(sc::path_graph(5).edge_count(), 4);
  EXPECT_EQ(sc::complete_graph(6).edge_count(), 15);
  EXPECT_EQ(sc::complete_bipartite_graph(3, 4).edge_count(), 12);
}

TEST(Generators, ApollonianIsATriangulation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = sc::apollonian_graph(20, seed);
    EXPECT_EQ(g.vertex_count(), 20);
    EXPECT_EQ(g.edge_count(), 54);
    EXPECT_LT(sc::mad(g).density, sc::Rational(6, 1));
  }
}

TEST(Generators, EarthMoonBelowTwelve) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = sc::earth_moon_graph(30, seed);
    EXPECT_EQ(g.vertex_count(), 30);
    EXPECT_LE(g.edge_count(), 168);
    EXPECT_LT(sc::mad(g).density, sc::Rational(12, 1));
  }
}

TEST(Generators, ThicknessBelowSixT) {
  for (int t = 1; t <= 4; ++t) {
    const auto g = sc::thickness_graph(25, t, 7);
    EXPECT_LT(sc::mad(g).density, sc::Rational(6 * t, 1));
  }
}

TEST(Generators, TorusIsSixRegular) {
  const auto g = sc::torus_grid_graph(5, 6);
  EXPECT_EQ(g.vertex_count(), 30);
  for (sc::Vertex v = 0; v < 30; ++v) EXPECT_EQ(g.degree(v), 6);
  EXPECT_EQ(sc::mad(g).density, sc::Rational(6, 1));
}

TEST(Generators, MadBoundedStaysBelowTarget) {
  for (const auto& target : {sc::Rational(2, 1), sc::Rational(7, 2), sc::Rational(5, 1)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = sc::random_mad_bounded_graph(18, target, seed);
      EXPECT_LT(sc::mad(g).density, target);
    }
  }
  EXPECT_LE(sc::random_mad_bounded_graph(18, sc::Rational(5, 1), 1, 10).edge_count(), 10);
}

TEST(Generators, DeterministicPerSeed) {
  sc::GenSpec spec;
  spec.family = sc::Family::EarthMoon;
  spec.n = 25;
  spec.seed = 4;
  EXPECT_EQ(sc::generate(spec), sc::generate(spec));
  auto other = spec;
  other.seed = 5;
  EXPECT_NE(sc::generate(spec), sc::generate(other));
}

TEST(Generators, FamilyNamesRoundTrip) {
  for (auto f : {sc::Family::Path, sc::Family::Cycle, sc::Family::Complete,
                 sc::Family::CompleteBipartite, sc::Family::Apollonian, sc::Family::TorusGrid,
                 sc::Family::EarthMoon, sc::Family::Thickness, sc::Family::RandomMadBounded})
    EXPECT_EQ(sc::parse_family(sc::to_string(f)), f);
  EXPECT_THROW(sc::parse_family("planar"), sc::Error);
}

}  // namespace
