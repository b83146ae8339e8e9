#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute.hpp"
#include "sparsecol/clustered.hpp"
#include "sparsecol/generators.hpp"
#include "sparsecol/io.hpp"
#include "sparsecol/local_search.hpp"
#include "sparsecol/oracle.hpp"
#include "sparsecol/sparsity.hpp"

namespace sc = sparsecol;

namespace {

sc::Graph petersen() {
  std::vector<sc::Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return sc::build_graph(10, e);
}

int clustering(const sc::Graph& g, const sc::Colouring& c) {
  return brute::measure(g, c).clustering;
}

std::vector<sc::Vertex> random_stable_set(const sc::Graph& g, std::mt19937_64& rng) {
  std::vector<sc::Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> blocked(g.vertex_count(), false);
  std::vector<sc::Vertex> out;
  for (sc::Vertex v : order) {
    if (blocked[v] || rng() % 2) continue;
    out.push_back(v);
    for (sc::Vertex w : g.neighbours(v)) blocked[w] = true;
  }
  std::ranges::sort(out);
  return out;
}

// --- defect-2 base ---------------------------------------------------------

TEST(Defect2Base, SingleColourOnCycleRejected) {
  EXPECT_THROW(sc::defect2_base(sc::cycle_graph(5), sc::ListAssignment::uniform(5, {1})),
               sc::PreconditionViolated);
}

TEST(Defect2Base, EveryDefectTwoVertexHasSpareColour) {
  for (const auto& g : {sc::cycle_graph(5), sc::complete_graph(4)}) {
    const int n = g.vertex_count();
    const auto lists = sc::ListAssignment::uniform(n, {1, 2});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto base = sc::defect2_base(g, lists, {}, seed);
      const auto m = brute::measure(g, base.colouring);
      EXPECT_LE(m.defect, 2);
      for (sc::Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(base.beta[v].has_value(), m.mono_degree[v] == 2);
        if (base.beta[v]) {
          EXPECT_NE(*base.beta[v], base.colouring[v]);
          EXPECT_LE(sc::neighbours_coloured(g, base.colouring, v, *base.beta[v]), 2);
        }
      }
    }
  }
}

// --- orientation and bipartite recolouring ---------------------------------

TEST(Orientation, CyclesAndPaths) {
  const std::vector<sc::Edge> e{{0, 3}, {3, 1}, {1, 0}, {4, 6}, {6, 5}};
  const auto succ = sc::orient_paths_and_cycles(sc::build_graph(8, e));
  EXPECT_EQ(succ[0], 1);  // towards the smaller neighbour
  EXPECT_EQ(succ[1], 3);
  EXPECT_EQ(succ[3], 0);
  EXPECT_EQ(succ[4], 6);  // from the lower endpoint
  EXPECT_EQ(succ[6], 5);
  EXPECT_EQ(succ[5], -1);
  EXPECT_EQ(succ[2], -1);
  EXPECT_EQ(succ[7], -1);
}

TEST(Orientation, RejectsDegreeThree) {
  EXPECT_THROW(sc::orient_paths_and_cycles(sc::complete_bipartite_graph(1, 3)),
               sc::PreconditionViolated);
}

TEST(Bipartite, SingleXAlone) {
  const sc::BipartiteRecolourInstance inst{{{1, 2}}, {1, 1}, {{0, 0}, {0, 1}}};
  const auto col = sc::recolour_bipartite(inst);
  ASSERT_EQ(col.size(), 1u);
  EXPECT_LE(sc::max_x_per_component(inst, col), 1);
}

TEST(Bipartite, AlternatesAlongAPath) {
  // y0 x0 y1 x1 y2, every y coloured 1.
  const sc::BipartiteRecolourInstance inst{
      {{1, 2}, {1, 2}}, {1, 1, 1}, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}};
  const auto col = sc::recolour_bipartite(inst);
  EXPECT_NE(col[0], col[1]);
}

TEST(Bipartite, EmptyXSide) {
  const sc::BipartiteRecolourInstance inst{{}, {3}, {}};
  EXPECT_TRUE(sc::recolour_bipartite(inst).empty());
}

TEST(Bipartite, OverloadedClassRejected) {
  const sc::BipartiteRecolourInstance inst{{{1, 2}}, {1, 1, 1}, {{0, 0}, {0, 1}, {0, 2}}};
  EXPECT_THROW(sc::recolour_bipartite(inst), sc::PreconditionViolated);
}

TEST(Bipartite, AtMostTwoXPerComponentOnRandomInstances) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int nx = 1 + static_cast<int>(rng() % 30);
    const int ny = 1 + static_cast<int>(rng() % 30);
    const int colours = 2 + static_cast<int>(rng() % 4);
    sc::BipartiteRecolourInstance inst;
    for (int x = 0; x < nx; ++x) {
      const int a = static_cast<int>(rng() % colours);
      const int b = (a + 1 + static_cast<int>(rng() % (colours - 1))) % colours;
      inst.x_lists.push_back({a, b});
    }
    for (int y = 0; y < ny; ++y) inst.y_colour.push_back(static_cast<int>(rng() % colours));
    std::vector<std::array<int, 2>> deg_x(nx, {0, 0});
    std::vector<int> deg_y(ny, 0);
    for (int tries = 0; tries < 3 * (nx + ny); ++tries) {
      const int x = static_cast<int>(rng() % nx);
      const int y = static_cast<int>(rng() % ny);
      const auto& l = inst.x_lists[x];
      const int c = inst.y_colour[y];
      if (c != l[0] && c != l[1]) continue;
      const int s = c == l[0] ? 0 : 1;
      if (std::ranges::find(inst.edges, std::pair{x, y}) != inst.edges.end()) continue;
      if (deg_x[x][s] == 2 || deg_y[y] == 2) continue;
      ++deg_x[x][s];
      ++deg_y[y];
      inst.edges.emplace_back(x, y);
    }
    const auto col = sc::recolour_bipartite(inst);
    for (int x = 0; x < nx; ++x)
      EXPECT_TRUE(col[x] == inst.x_lists[x][0] || col[x] == inst.x_lists[x][1]);
    EXPECT_LE(sc::max_x_per_component(inst, col), 2);
  }
}

// --- contraction -----------------------------------------------------------

TEST(Contraction, SizesAndDegree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 30);
    const auto g = brute::random_bounded_degree(n, 3 + static_cast<int>(rng() % 4), rng());
    const auto lists = sc::ListAssignment::uniform(n, {0, 1});
    const auto stable = random_stable_set(g, rng);
    std::vector<bool> in_i(n, false);
    for (sc::Vertex v : stable) in_i[v] = true;
    auto col = sc::local_min_colouring(g, sc::ListAssignment::uniform(n, {0, 1, 2}), rng());
    const auto mono = sc::monochromatic_subgraph(g, col);
    if (mono.max_degree() > 2) continue;
    const auto map = sc::build_contraction(g, col, in_i);
    EXPECT_EQ(map.contracted.vertex_count() + map.contractions, n);
    EXPECT_LE(map.contracted.max_degree(), g.max_degree());
    for (sc::Vertex v = 0; v < n; ++v) {
      const int img = map.image[v];
      ASSERT_GE(img, 0);
      EXPECT_NE(std::ranges::find(map.members[img], v), map.members[img].end());
      EXPECT_EQ(map.colours[img], col[map.members[img][0]]);
    }
  }
}

TEST(Contraction, EmptyStableSetIsIdentityUpToEdges) {
  const auto g = petersen();
  const auto col = sc::local_min_colouring(g, sc::ListAssignment::uniform(10, {0, 1}), 1);
  const auto map = sc::build_contraction(g, col, std::vector<bool>(10, false));
  EXPECT_EQ(map.contractions, 0);
  EXPECT_EQ(map.contracted, g);
}

// --- maximum-degree bound --------------------------------------------------

TEST(MaxDegree, BoundValues) {
  EXPECT_EQ(sc::maxdeg_clustering_bound(3), 12);
  EXPECT_EQ(sc::maxdeg_clustering_bound(4), 21);
  EXPECT_EQ(sc::maxdeg_clustering_bound(8), 59);
}

TEST(MaxDegree, PetersenWithTwoColours) {
  const auto g = petersen();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto lists = sc::random_lists(10, 2, seed);
    const auto r = sc::choose_clustered_maxdeg(g, lists, seed);
    EXPECT_TRUE(r.report.ok);
    EXPECT_LE(clustering(g, r.colouring), 12);
    const auto best = sc::oracle_colour(g, lists, sc::Objective::Clustering);
    EXPECT_LE(best.minimum, r.report.clustering);
  }
}

TEST(MaxDegree, CycleRejected) {
  EXPECT_THROW(
      sc::choose_clustered_maxdeg(sc::cycle_graph(4), sc::ListAssignment::uniform(4, {1, 2})),
      sc::PreconditionViolated);
}

TEST(MaxDegree, RandomGraphsMeetBound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int delta = 3 + static_cast<int>(trial % 6);
    const int n = delta + 1 + static_cast<int>(rng() % 40);
    const auto g = brute::random_bounded_degree(n, delta, rng());
    if (g.max_degree() < 3) continue;
    const int k = (g.max_degree() + 4) / 3;
    const auto raw = brute::random_lists(n, k, k + static_cast<int>(rng() % 2), rng());
    const auto r = sc::choose_clustered_maxdeg(g, sc::ListAssignment(raw), rng());
    ASSERT_TRUE(brute::from_lists(raw, r.colouring));
    EXPECT_LE(clustering(g, r.colouring), sc::maxdeg_clustering_bound(g.max_degree()));
    EXPECT_LE(r.stats.restarts, static_cast<std::int64_t>(g.edge_count()) * (n + 1));
  }
}

// --- stable-set variant ----------------------------------------------------

TEST(StableSet, PetersenWithoutStableSet) {
  const auto r =
      sc::stable_set_colour(petersen(), sc::ListAssignment::uniform(10, {1, 2}), {});
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.report.bound, 25);
}

TEST(StableSet, CycleRejected) {
  EXPECT_THROW(sc::stable_set_colour(sc::cycle_graph(6), sc::ListAssignment::uniform(6, {1, 2}), {}),
               sc::PreconditionViolated);
}

TEST(StableSet, StarWithLeavesInStableSet) {
  const auto g = sc::complete_bipartite_graph(1, 4);
  const sc::ListAssignment lists({{1, 2}, {1}, {1}, {1}, {1}});
  const auto r = sc::stable_set_colour(g, lists, {1, 2, 3, 4});
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.report.bound, 44);
  EXPECT_LE(r.report.clustering, 5);
}

TEST(StableSet, RejectsNonStableSet) {
  EXPECT_THROW(sc::stable_set_colour(petersen(), sc::ListAssignment::uniform(10, {1, 2}), {0, 1}),
               sc::PreconditionViolated);
}

TEST(StableSet, RandomInstancesMeetBound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const int delta = 3 + static_cast<int>(trial % 5);
    const int n = 8 + static_cast<int>(rng() % 40);
    const auto g = brute::random_bounded_degree(n, delta, rng());
    if (g.max_degree() < 3) continue;
    const auto stable = random_stable_set(g, rng);
    std::vector<bool> in_i(n, false);
    for (sc::Vertex v : stable) in_i[v] = true;
    std::vector<std::vector<int>> raw(n);
    for (sc::Vertex v = 0; v < n; ++v) {
      const int size = (g.degree(v) + (in_i[v] ? 1 : 2) + 2) / 3;
      raw[v] = brute::random_lists(1, std::max(1, size), std::max(1, size) + 1, rng())[0];
    }
    const auto r = sc::stable_set_colour(g, sc::ListAssignment(raw), stable, delta, rng());
    ASSERT_TRUE(brute::from_lists(raw, r.colouring));
    EXPECT_LE(clustering(g, r.colouring), 19 * delta - 32);
  }
}

// --- absolute bound --------------------------------------------------------

TEST(Absolute, EdgelessGraph) {
  const auto r = sc::choose_clustered_absolute(sc::Graph(5), sc::ListAssignment::uniform(5, {3}), {});
  EXPECT_EQ(r.report.clustering, 1);
}

TEST(Absolute, EvenCycleWithoutStableSet) {
  const auto g = sc::cycle_graph(10);
  const auto r = sc::choose_clustered_absolute(g, sc::ListAssignment::uniform(10, {1, 2}), {});
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.report.bound, 6);
  EXPECT_LE(clustering(g, r.colouring), 6);
}

TEST(Absolute, EvenCycleWithAlternateStableSet) {
  const auto g = sc::cycle_graph(10);
  const auto r =
      sc::choose_clustered_absolute(g, sc::ListAssignment::uniform(10, {1, 2}), {0, 2, 4, 6, 8});
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.report.bound, 9);
}

TEST(Absolute, RandomInstancesMeetBound) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int delta = 2 + static_cast<int>(trial % 7);
    const int n = 4 + static_cast<int>(rng() % 40);
    const auto g = brute::random_bounded_degree(n, delta, rng());
    const bool with_i = trial % 2 == 1;
    const auto stable = with_i ? random_stable_set(g, rng) : std::vector<sc::Vertex>{};
    std::vector<bool> in_i(n, false);
    for (sc::Vertex v : stable) in_i[v] = true;
    std::vector<std::vector<int>> raw(n);
    for (sc::Vertex v = 0; v < n; ++v) {
      const int size = std::max(1, (2 * g.degree(v) + (in_i[v] ? 1 : 2) + 4) / 5);
      raw[v] = brute::random_lists(1, size, size + static_cast<int>(rng() % 2), rng())[0];
    }
    const auto r = sc::choose_clustered_absolute(g, sc::ListAssignment(raw), stable, rng());
    ASSERT_TRUE(brute::from_lists(raw, r.colouring));
    EXPECT_LE(clustering(g, r.colouring), with_i ? 9 : 6);
  }
}

// --- pair peel and mad 7/10 ------------------------------------------------

TEST(PairPeel, ResidualIsStuck) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const auto g = brute::random_graph(n, 0.1 + 0.5 * (trial % 4) / 3.0, rng());
    const int k = 1 + static_cast<int>(rng() % 5);
    const sc::ListAssignment lists(brute::random_lists(n, k, k + 1, rng()));
    const auto rule = trial % 2 ? sc::kAbsolutePeel : sc::kExtensionPeel;
    const auto peel = sc::peel_pairs(g, lists, rule);
    std::vector<bool> in_a(n, false);
    for (const auto& layer : peel.layers) {
      ASSERT_GE(layer.size(), 1u);
      ASSERT_LE(layer.size(), 2u);
      if (layer.size() == 2) EXPECT_TRUE(g.adjacent(layer[0], layer[1]));
      for (sc::Vertex v : layer) in_a[v] = true;
    }
    auto slack = [&](sc::Vertex v) {
      int deg_a = 0;
      for (sc::Vertex w : g.neighbours(v)) deg_a += in_a[w];
      return rule.a_coef * deg_a + rule.deg_coef * g.degree(v) - rule.list_coef * k;
    };
    for (sc::Vertex v : peel.residual) {
      EXPECT_LE(slack(v), -1);
      for (sc::Vertex w : g.neighbours(v))
        if (!in_a[w]) EXPECT_FALSE(slack(v) == -1 && slack(w) == -1);
    }
  }
}

TEST(Mad710, SmallGraphUsesBaseCase) {
  const auto g = sc::complete_graph(9);
  const auto r = sc::choose_clustered_mad7_10(g, sc::ListAssignment::uniform(9, {0}));
  EXPECT_EQ(r.report.clustering, 9);
  EXPECT_TRUE(r.report.ok);
}

TEST(Mad710, EvenCycle) {
  const auto g = sc::cycle_graph(12);
  const auto r = sc::choose_clustered_mad7_10(g, sc::ListAssignment::uniform(12, {1, 2}));
  EXPECT_TRUE(r.report.ok);
  EXPECT_LE(clustering(g, r.colouring), 9);
}

TEST(Mad710, ApollonianWithFiveColours) {
  const auto g = sc::apollonian_graph(20, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = sc::choose_clustered_mad7_10(g, sc::random_lists(20, 5, seed), seed);
    EXPECT_LE(clustering(g, r.colouring), 9);
  }
}

TEST(Mad710, DenseGraphGivesCertificate) {
  const auto g = sc::complete_graph(14);
  try {
    sc::choose_clustered_mad7_10(g, sc::ListAssignment::uniform(14, {0, 1}));
    FAIL();
  } catch (const sc::DensityViolation& e) {
    EXPECT_GE(sc::induced_density(g, e.certificate().witness), sc::Rational(20, 7));
  }
}

// --- extension -------------------------------------------------------------

TEST(Extension, BoundFormula) {
  EXPECT_EQ(sc::extension_clustering_bound(2, 1), 63);
  EXPECT_EQ(sc::extension_clustering_bound(8, 1), 405);
  EXPECT_EQ(sc::extension_clustering_bound(1, 1), 6);
  EXPECT_EQ(sc::extension_clustering_bound(2, 200), 100);
}

TEST(Extension, ForestWithTwoColours) {
  const auto g = sc::build_graph(7, std::vector<sc::Edge>{{0, 1}, {1, 2}, {1, 3}, {4, 5}});
  const auto r = sc::choose_clustered_extension(g, sc::ListAssignment::uniform(7, {4, 9}), 2, 1);
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.report.bound, 63);
}

TEST(Extension, PathWithOneColour) {
  const auto r =
      sc::choose_clustered_extension(sc::path_graph(3), sc::ListAssignment::uniform(3, {0}), 1, 1);
  EXPECT_EQ(r.report.clustering, 3);
  EXPECT_TRUE(r.report.ok);
}

TEST(Extension, EarthMoonWithEightColours) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = sc::earth_moon_graph(30, seed);
    const auto r = sc::choose_clustered_extension(g, sc::random_lists(30, 8, seed), 8, 1, seed);
    EXPECT_LE(clustering(g, r.colouring), 405);
  }
}

TEST(Extension, UsesOnlyTheSmallestColours) {
  const auto g = sc::cycle_graph(9);
  const auto lists = sc::ListAssignment::uniform(9, {5, 1, 7, 3});
  const auto r = sc::choose_clustered_extension(g, lists, 2, 1);
  for (int c : r.colouring) EXPECT_TRUE(c == 1 || c == 3);
}

TEST(Extension, DenseGraphGivesCertificate) {
  const auto g = sc::complete_graph(12);
  try {
    sc::choose_clustered_extension(g, sc::ListAssignment::uniform(12, {0, 1}), 2, 1);
    FAIL();
  } catch (const sc::DensityViolation& e) {
    EXPECT_GE(sc::induced_density(g, e.certificate().witness), sc::Rational(3, 1));
  }
}

}  // namespace
