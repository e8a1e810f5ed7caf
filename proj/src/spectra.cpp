#include "sprad/spectra.hpp"

namespace sprad {

namespace {

// diag +/- off-diagonal part, the shape shared by all six kinds.
DenseMatrix combine(const Eigen::VectorXd& diagonal, const DenseMatrix& off, double sign) {
  DenseMatrix m = sign * off;
  m.diagonal() += diagonal;
  return m;
}

template <typename G>
DenseMatrix adjacency_of(const G& g, const std::vector<Edge>& pairs, bool symmetric) {
  DenseMatrix a = DenseMatrix::Zero(g.order(), g.order());
  for (const auto& [u, v] : pairs) {
    a(u, v) = 1.0;
    if (symmetric) a(v, u) = 1.0;
  }
  return a;
}

DenseMatrix build_from(MatrixKind kind, const DenseMatrix& adjacency,
                       const std::vector<int>& degree, const DistanceData* distances) {
  const auto n = adjacency.rows();
  if (!is_distance_family(kind)) {
    Eigen::VectorXd diag(n);
    for (Eigen::Index i = 0; i < n; ++i) diag(i) = degree[i];
    switch (kind) {
      case MatrixKind::Adjacency: return adjacency;
      case MatrixKind::Laplacian: return combine(diag, adjacency, -1.0);
      default: return combine(diag, adjacency, 1.0);
    }
  }
  const DenseMatrix dist = distances->dist.cast<double>();
  Eigen::VectorXd trans(n);
  for (Eigen::Index i = 0; i < n; ++i) trans(i) = static_cast<double>(distances->transmissions[i]);
  switch (kind) {
    case MatrixKind::Distance: return dist;
    case MatrixKind::DistanceLaplacian: return combine(trans, dist, -1.0);
    default: return combine(trans, dist, 1.0);
  }
}

}  // namespace

DenseMatrix build(MatrixKind kind, const Graph& g) {
  std::optional<DistanceData> dd;
  if (is_distance_family(kind)) dd = distance_matrix(g);
  return build_from(kind, adjacency_of(g, g.edges(), true), degrees(g), dd ? &*dd : nullptr);
}

DenseMatrix build(MatrixKind kind, const Digraph& d) {
  std::optional<DistanceData> dd;
  if (is_distance_family(kind)) dd = distance_matrix(d);
  return build_from(kind, adjacency_of(d, d.arcs(), false), out_degrees(d), dd ? &*dd : nullptr);
}

SpectralResult<double> exact_radius(MatrixKind kind, const Graph& g) {
  return spectral_radius_symmetric(build(kind, g));
}

SpectralResult<double> exact_radius(MatrixKind kind, const Digraph& d) {
  return spectral_radius_general(build(kind, d));
}

}  // namespace sprad
