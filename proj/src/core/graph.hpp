#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "core/dataset.hpp"

namespace qle {

enum class WeightKernel { heat, binary };

// heat_t <= 0 requests the automatic bandwidth (mean squared distance over
// the selected neighbor pairs); the resolved value is stored back.
struct KernelSpec {
  WeightKernel type = WeightKernel::heat;
  double heat_t = 0.0;
};

// Symmetric nonnegative weight matrix with zero diagonal plus the
// construction parameters. k == 0 marks a graph built directly from weights.
struct NeighborhoodGraph {
  Eigen::MatrixXd weights;
  std::int64_t k = 0;
  KernelSpec kernel;

  Eigen::Index size() const { return weights.rows(); }

  static NeighborhoodGraph from_weights(Eigen::MatrixXd w);
};

// Degree, Laplacian and incidence views of a graph.
//   degrees(i) = sum_j W(i,j)
//   laplacian  = diag(degrees) - W, positive semidefinite
//   incidence  = B with one column per edge (i<j, lexicographic), entries
//                +sqrt(w) at i and -sqrt(w) at j, so that B*B^T = laplacian
struct LaplacianBundle {
  Eigen::MatrixXd weights;
  Eigen::VectorXd degrees;
  Eigen::MatrixXd laplacian;
  Eigen::MatrixXd incidence;
  std::int64_t components = 0;

  Eigen::Index size() const { return weights.rows(); }
};

// Union-symmetrized k-nearest-neighbor graph: edge (i,j) exists iff j is
// among the k nearest Euclidean neighbors of i or vice versa. Distance ties
// break toward the lower index. Heat weights are exp(-d^2/t).
NeighborhoodGraph build_knn_graph(const PointCloud& pc, std::int64_t k, KernelSpec kernel);

LaplacianBundle degree_and_laplacian(const NeighborhoodGraph& g);

Eigen::MatrixXd incidence_factor(const NeighborhoodGraph& g);

std::int64_t count_components(const Eigen::MatrixXd& weights);

// Sum over ordered pairs (i,j) of w_ij * |y_i - y_j|^2; identical to
// 2 * trace(Y^T L Y).
double objective_value(const LaplacianBundle& bundle, const Eigen::MatrixXd& y);

}  // namespace qle
