#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

#include "sprad/harness.hpp"
#include "sprad/linalg.hpp"

using namespace sprad;

namespace {

// Independent oracle: Eigen's own dense eigensolvers.
double eigen_radius(const DenseMatrix& m) {
  Eigen::EigenSolver<DenseMatrix> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double eigen_radius_symmetric(const DenseMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double rel(double r) { return 1e-8 * std::max(1.0, r); }

const DenseMatrix kSwap = make_dense({{0, 1}, {1, 0}});
const DenseMatrix kOneTwo = make_dense({{1, 2}, {3, 4}});
const DenseMatrix kDirectedC3 = make_dense({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
const DenseMatrix kP3 = make_dense({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
const double kOneTwoRadius = (5.0 + std::sqrt(33.0)) / 2.0;

}  // namespace

TEST(DenseMatrix, RejectsBadShapes) {
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(make_dense(2, three), Error);
  EXPECT_THROW(make_dense(0, {}), Error);
  EXPECT_THROW(make_dense({{1, 2}, {3}}), Error);
  const std::vector<double> nan{1, std::nan(""), 0, 1};
  try {
    make_dense(2, nan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidMatrix);
  }
}

TEST(DenseMatrix, RowMajorOrder) {
  const std::vector<double> v{1, 2, 3, 4};
  const DenseMatrix m = make_dense(2, v);
  EXPECT_EQ(m(0, 1), 2);
  EXPECT_EQ(m(1, 0), 3);
}

TEST(Symmetric, Examples) {
  EXPECT_NEAR(spectral_radius_symmetric(kSwap).radius, 1.0, 1e-12);
  EXPECT_NEAR(spectral_radius_symmetric(DenseMatrix::Identity(3, 3)).radius, 1.0, 1e-12);
  const auto r = spectral_radius_symmetric(kP3);
  EXPECT_NEAR(r.radius, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.method, SolverMethod::SymmetricJacobi);
  EXPECT_LE(r.residual, 1e-12);
  ASSERT_TRUE(r.eigenvector);
  EXPECT_LE((kP3 * *r.eigenvector - r.radius * *r.eigenvector).norm(), 1e-10);
}

TEST(Symmetric, NegativeDominantEigenvalue) {
  // Eigenvalues -3 and 1: the radius is a modulus.
  const DenseMatrix m = make_dense({{-1, 2}, {2, -1}});
  EXPECT_NEAR(spectral_radius_symmetric(m).radius, 3.0, 1e-12);
}

TEST(Symmetric, Errors) {
  try {
    spectral_radius_symmetric(kOneTwo);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSymmetric);
  }
  JacobiOptions<double> capped;
  capped.max_sweeps = 0;
  try {
    spectral_radius_symmetric(kP3, capped);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoConvergence);
  }
}

TEST(General, Examples) {
  EXPECT_NEAR(spectral_radius_general(make_dense({{0, 1}, {-1, 0}})).radius, 1.0, 1e-12);
  EXPECT_NEAR(spectral_radius_general(kOneTwo).radius, kOneTwoRadius, 1e-12);
  const DenseMatrix lap = DenseMatrix::Identity(3, 3) - kDirectedC3;
  EXPECT_NEAR(spectral_radius_general(lap).radius, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(spectral_radius_general(lap).method, SolverMethod::GeneralQr);
}

TEST(General, AllEigenvaluesOfCirculant) {
  // Eigenvalues of the cyclic permutation are the cube roots of unity.
  auto eig = eigenvalues_general(kDirectedC3);
  ASSERT_EQ(eig.size(), 3U);
  for (const auto& z : eig) EXPECT_NEAR(std::abs(std::pow(z, 3) - 1.0), 0.0, 1e-12);
}

TEST(General, IterationCap) {
  Rng rng(5);
  const DenseMatrix m = random_matrix(rng, 8, 1.0, true);
  QrOptions<double> capped;
  capped.iterations_per_dimension = 0;
  try {
    spectral_radius_general(m, capped);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoConvergence);
  }
}

TEST(Power, Examples) {
  EXPECT_NEAR(spectral_radius_nonnegative(kSwap).radius, 1.0, 1e-10);
  EXPECT_NEAR(spectral_radius_nonnegative(kOneTwo).radius, kOneTwoRadius, 1e-10);
  EXPECT_NEAR(spectral_radius_nonnegative(kDirectedC3).radius, 1.0, 1e-10);
}

TEST(Power, EigenvectorIsPositiveForIrreducible) {
  const auto r = spectral_radius_nonnegative(kP3);
  ASSERT_TRUE(r.eigenvector);
  EXPECT_GT(r.eigenvector->minCoeff(), 0.0);
  EXPECT_LE(r.residual, 1e-9 * std::max(1.0, r.radius));
}

TEST(Power, Errors) {
  try {
    spectral_radius_nonnegative(make_dense({{1, -1}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeEntry);
  }
  PowerOptions<double> capped;
  capped.max_iterations = 1;
  try {
    spectral_radius_nonnegative(kOneTwo, capped);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoConvergence);
  }
}

TEST(Solvers, OneByOneReturnsModulus) {
  const DenseMatrix neg = make_dense({{-2.5}});
  EXPECT_EQ(spectral_radius_symmetric(neg).radius, 2.5);
  EXPECT_EQ(spectral_radius_general(neg).radius, 2.5);
  EXPECT_EQ(spectral_radius_nonnegative(make_dense({{7.0}})).radius, 7.0);
}

TEST(Solvers, LongDoubleInstantiation) {
  const Matrix<long double> m = kOneTwo.cast<long double>();
  const long double oracle = (5.0L + std::sqrt(33.0L)) / 2.0L;
  EXPECT_NEAR(static_cast<double>(spectral_radius_general(m).radius - oracle), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(spectral_radius_nonnegative(m).radius - oracle), 0.0, 1e-11);
  const Matrix<long double> s = kP3.cast<long double>();
  EXPECT_NEAR(static_cast<double>(spectral_radius_symmetric(s).radius - std::sqrt(2.0L)), 0.0, 1e-15);
}

TEST(RowSums, Examples) {
  auto r = row_sum_interval(kOneTwo);
  EXPECT_EQ(r.min, 3);
  EXPECT_EQ(r.max, 7);
  EXPECT_TRUE(r.contains(kOneTwoRadius));
  const DenseMatrix ones = DenseMatrix::Ones(3, 3);
  r = row_sum_interval(ones);
  EXPECT_EQ(r.min, 3);
  EXPECT_EQ(r.max, 3);
  EXPECT_NEAR(spectral_radius_general(ones).radius, 3.0, 1e-12);
  r = row_sum_interval(kP3);
  EXPECT_EQ(r.min, 1);
  EXPECT_EQ(r.max, 2);
  EXPECT_TRUE(r.contains(std::sqrt(2.0)));
  EXPECT_THROW(row_sum_interval(make_dense({{0, -1}, {1, 0}})), Error);
}

TEST(EntrywiseAbs, Examples) {
  EXPECT_EQ(entrywise_abs(make_dense({{1, -2}, {-3, 4}})), kOneTwo);
  EXPECT_EQ(entrywise_abs(kOneTwo), kOneTwo);
  const DenseMatrix lap = make_dense({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  EXPECT_EQ(entrywise_abs(lap), make_dense({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(kSwap));
  EXPECT_FALSE(is_irreducible(make_dense({{1, 1}, {0, 1}})));
  EXPECT_TRUE(is_irreducible(kDirectedC3));
  EXPECT_TRUE(is_irreducible(make_dense({{0.0}})));
}

// Randomized properties against Eigen as the oracle.

class RandomMatrices : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatrices, GeneralMatchesEigen) {
  Rng rng(trial_seed(11, GetParam()));
  const int n = 1 + static_cast<int>(rng.below(30));
  const DenseMatrix m = random_matrix(rng, n, 0.6, true);
  const double oracle = eigen_radius(m);
  EXPECT_NEAR(spectral_radius_general(m).radius, oracle, rel(oracle));
}

TEST_P(RandomMatrices, SymmetricAgreesWithGeneralAndEigen) {
  Rng rng(trial_seed(12, GetParam()));
  const int n = 1 + static_cast<int>(rng.below(30));
  DenseMatrix m = random_matrix(rng, n, 0.7, true);
  m = (m + m.transpose()).eval();
  const double jacobi = spectral_radius_symmetric(m).radius;
  EXPECT_NEAR(jacobi, spectral_radius_general(m).radius, rel(jacobi));
  EXPECT_NEAR(jacobi, eigen_radius_symmetric(m), rel(jacobi));
}

TEST_P(RandomMatrices, PowerAgreesOnIrreducible) {
  Rng rng(trial_seed(13, GetParam()));
  const int n = 1 + static_cast<int>(rng.below(30));
  DenseMatrix m;
  do m = random_matrix(rng, n, 0.4, false);
  while (!is_irreducible(m));
  const double power = spectral_radius_nonnegative(m).radius;
  EXPECT_NEAR(power, spectral_radius_general(m).radius, rel(power));
}

TEST_P(RandomMatrices, RowSumSandwich) {
  Rng rng(trial_seed(14, GetParam()));
  const DenseMatrix m = random_matrix(rng, 1 + static_cast<int>(rng.below(20)), 0.5, false);
  EXPECT_TRUE(row_sum_interval(m).contains(spectral_radius_general(m).radius, 1e-8));
}

TEST_P(RandomMatrices, EqualRowSumsForceRadius) {
  Rng rng(trial_seed(15, GetParam()));
  const int n = 2 + static_cast<int>(rng.below(15));
  DenseMatrix m;
  do m = random_matrix(rng, n, 0.5, false);
  while (!is_irreducible(m));
  // Rescale rows to a common sum.
  const Vector<double> sums = m.rowwise().sum();
  for (Eigen::Index i = 0; i < n; ++i) m.row(i) *= 2.5 / sums(i);
  EXPECT_NEAR(spectral_radius_general(m).radius, 2.5, 1e-8);
}

TEST_P(RandomMatrices, AbsDominates) {
  Rng rng(trial_seed(16, GetParam()));
  const DenseMatrix a = random_matrix(rng, 1 + static_cast<int>(rng.below(20)), 0.6, true);
  EXPECT_LE(spectral_radius_general(a).radius, spectral_radius_general(entrywise_abs(a)).radius + 1e-8);
}

TEST_P(RandomMatrices, PermutationInvariance) {
  Rng rng(trial_seed(17, GetParam()));
  const int n = 1 + static_cast<int>(rng.below(20));
  const DenseMatrix m = random_matrix(rng, n, 0.5, true);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(n);
  for (int i = 0; i < n; ++i) p.indices()[i] = perm[static_cast<std::size_t>(i)];
  const DenseMatrix q = p * m * p.transpose();
  EXPECT_NEAR(spectral_radius_general(m).radius, spectral_radius_general(q).radius, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Range(0, 40));
