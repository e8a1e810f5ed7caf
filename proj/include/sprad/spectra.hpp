#pragma once

#include <array>
#include <string_view>

#include "sprad/graphs.hpp"
#include "sprad/linalg.hpp"

namespace sprad {

enum class MatrixKind {
  Adjacency,
  Laplacian,
  SignlessLaplacian,
  Distance,
  DistanceLaplacian,
  DistanceSignlessLaplacian,
};

inline constexpr std::array<MatrixKind, 6> kAllMatrixKinds = {
    MatrixKind::Adjacency,         MatrixKind::Laplacian,
    MatrixKind::SignlessLaplacian, MatrixKind::Distance,
    MatrixKind::DistanceLaplacian, MatrixKind::DistanceSignlessLaplacian,
};

constexpr std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless-laplacian";
    case MatrixKind::Distance: return "distance";
    case MatrixKind::DistanceLaplacian: return "distance-laplacian";
    case MatrixKind::DistanceSignlessLaplacian: return "distance-signless-laplacian";
  }
  return "unknown";
}

/// Distance, distance Laplacian and distance signless Laplacian need (strong) connectivity.
constexpr bool is_distance_family(MatrixKind k) {
  return k == MatrixKind::Distance || k == MatrixKind::DistanceLaplacian ||
         k == MatrixKind::DistanceSignlessLaplacian;
}

/// Laplacian-type matrices carry negative off-diagonal entries.
constexpr bool is_signed(MatrixKind k) {
  return k == MatrixKind::Laplacian || k == MatrixKind::DistanceLaplacian;
}

DenseMatrix build(MatrixKind kind, const Graph& g);
DenseMatrix build(MatrixKind kind, const Digraph& d);

/// Symmetric (Jacobi) solver for graphs, general QR for digraphs, whose
/// Laplacian-type spectra may be complex.
SpectralResult<double> exact_radius(MatrixKind kind, const Graph& g);
SpectralResult<double> exact_radius(MatrixKind kind, const Digraph& d);

}  // namespace sprad
