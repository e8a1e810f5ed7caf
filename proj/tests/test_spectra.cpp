#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "sprad/harness.hpp"
#include "sprad/spectra.hpp"

using namespace sprad;

namespace {

double eigen_radius(const DenseMatrix& m) {
  Eigen::EigenSolver<DenseMatrix> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Build, Examples) {
  EXPECT_EQ(build(MatrixKind::SignlessLaplacian, complete_graph(2)), make_dense({{1, 1}, {1, 1}}));
  EXPECT_EQ(build(MatrixKind::DistanceSignlessLaplacian, path_graph(3)),
            make_dense({{3, 1, 2}, {1, 2, 1}, {2, 1, 3}}));
  EXPECT_EQ(build(MatrixKind::Laplacian, directed_cycle(3)),
            make_dense({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
}

TEST(Build, DistanceKindsNeedConnectivity) {
  try {
    build(MatrixKind::Distance, Graph(3, {{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Disconnected);
  }
  try {
    build(MatrixKind::DistanceLaplacian, Digraph(2, {{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotStronglyConnected);
  }
}

TEST(ExactRadius, Examples) {
  EXPECT_NEAR(exact_radius(MatrixKind::Adjacency, complete_graph(4)).radius, 3.0, 1e-12);
  EXPECT_NEAR(exact_radius(MatrixKind::DistanceSignlessLaplacian, path_graph(3)).radius,
              (7 + std::sqrt(17.0)) / 2, 1e-12);
  EXPECT_NEAR(exact_radius(MatrixKind::Laplacian, directed_cycle(3)).radius, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(exact_radius(MatrixKind::Adjacency, path_graph(3)).method, SolverMethod::SymmetricJacobi);
  EXPECT_EQ(exact_radius(MatrixKind::Adjacency, directed_cycle(3)).method, SolverMethod::GeneralQr);
}

TEST(ExactRadius, KnownSpectra) {
  // Laplacian spectrum of K_n is {0, n^(n-1)}; signless of K_n has 2(n-1).
  for (int n = 2; n <= 7; ++n) {
    EXPECT_NEAR(exact_radius(MatrixKind::Laplacian, complete_graph(n)).radius, n, 1e-10);
    EXPECT_NEAR(exact_radius(MatrixKind::SignlessLaplacian, complete_graph(n)).radius, 2 * (n - 1), 1e-10);
  }
  // Adjacency of P_n: 2 cos(pi / (n + 1)).
  for (int n = 2; n <= 9; ++n)
    EXPECT_NEAR(exact_radius(MatrixKind::Adjacency, path_graph(n)).radius, 2 * std::cos(M_PI / (n + 1)), 1e-10);
  // Star K_{1,k}: sqrt(k) and k + 1.
  for (int k = 1; k <= 6; ++k) {
    EXPECT_NEAR(exact_radius(MatrixKind::Adjacency, star_graph(k)).radius, std::sqrt(k), 1e-10);
    EXPECT_NEAR(exact_radius(MatrixKind::SignlessLaplacian, star_graph(k)).radius, k + 1, 1e-10);
  }
}

TEST(RowSums, LaplacianFamilies) {
  for (int t = 0; t < 30; ++t) {
    TrialConfig c;
    c.n_min = 2;
    c.n_max = 12;
    c.seed = 21;
    const Graph g = std::get<Graph>(generate(c, t));
    const auto d = degrees(g);
    const auto tr = distance_matrix(g).transmissions;
    const DenseMatrix l = build(MatrixKind::Laplacian, g);
    const DenseMatrix q = build(MatrixKind::SignlessLaplacian, g);
    const DenseMatrix dl = build(MatrixKind::DistanceLaplacian, g);
    const DenseMatrix dq = build(MatrixKind::DistanceSignlessLaplacian, g);
    for (int i = 0; i < g.order(); ++i) {
      EXPECT_EQ(l.row(i).sum(), 0);
      EXPECT_EQ(dl.row(i).sum(), 0);
      EXPECT_EQ(q.row(i).sum(), 2 * d[i]);
      EXPECT_EQ(dq.row(i).sum(), 2 * tr[i]);
    }
  }
}

TEST(Exhaustive, LaplacianMeetsSignlessIffBipartite) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, true, [](const Graph& g) {
      const double mu = exact_radius(MatrixKind::Laplacian, g).radius;
      const double q = exact_radius(MatrixKind::SignlessLaplacian, g).radius;
      ASSERT_LE(mu, q + 1e-8);
      ASSERT_EQ(std::abs(mu - q) <= 1e-8, is_bipartite(g).has_value());
    });
}

TEST(Random, RegularClosedForms) {
  TrialConfig c;
  c.model = Model::RandomRegular;
  c.n_min = 4;
  c.n_max = 16;
  for (int r : {2, 3, 4, 5}) {
    c.degree = r;
    for (int t = 0; t < 10; ++t) {
      const Graph g = std::get<Graph>(generate(c, t));
      EXPECT_NEAR(exact_radius(MatrixKind::Adjacency, g).radius, r, 1e-9);
      EXPECT_NEAR(exact_radius(MatrixKind::SignlessLaplacian, g).radius, 2 * r, 1e-9);
    }
  }
}

TEST(Random, DigraphRadiiMatchEigen) {
  TrialConfig c;
  c.model = Model::DigraphGnp;
  c.n_min = 2;
  c.n_max = 15;
  c.densities = {0.2, 0.5};
  c.seed = 99;
  for (int t = 0; t < 30; ++t) {
    const Digraph d = std::get<Digraph>(generate(c, t));
    for (MatrixKind k : kAllMatrixKinds) {
      const double oracle = eigen_radius(build(k, d));
      EXPECT_NEAR(exact_radius(k, d).radius, oracle, 1e-8 * std::max(1.0, oracle)) << to_string(k);
    }
  }
}
