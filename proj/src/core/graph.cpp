#include "core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core/errors.hpp"

namespace qle {

namespace {

// Indices of the k nearest neighbors of row i, self excluded, ties broken by
// lower index.
std::vector<Eigen::Index> nearest_neighbors(const Eigen::MatrixXd& sq_dist, Eigen::Index i,
                                            std::int64_t k) {
  std::vector<Eigen::Index> order;
  order.reserve(sq_dist.rows() - 1);
  for (Eigen::Index j = 0; j < sq_dist.rows(); ++j)
    if (j != i) order.push_back(j);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (sq_dist(i, a) != sq_dist(i, b)) return sq_dist(i, a) < sq_dist(i, b);
    return a < b;
  });
  order.resize(static_cast<std::size_t>(k));
  return order;
}

}  // namespace

NeighborhoodGraph NeighborhoodGraph::from_weights(Eigen::MatrixXd w) {
  if (w.rows() != w.cols() || w.rows() < 2) {
    fail(errc::invalid_argument, "graph: weight matrix must be square, size >= 2");
  }
  if (!w.allFinite()) fail(errc::invalid_argument, "graph: non-finite weight");
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    if (w(i, i) != 0.0) fail(errc::invalid_argument, "graph: nonzero diagonal weight");
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      if (w(i, j) < 0.0) fail(errc::invalid_argument, "graph: negative weight");
      if (w(i, j) != w(j, i)) fail(errc::invalid_argument, "graph: weight matrix not symmetric");
    }
  }
  return NeighborhoodGraph{std::move(w), 0, KernelSpec{WeightKernel::binary, 0.0}};
}

NeighborhoodGraph build_knn_graph(const PointCloud& pc, std::int64_t k, KernelSpec kernel) {
  const Eigen::Index m = pc.sample_count();
  if (k < 1 || k > m - 1) {
    fail(errc::invalid_argument, "graph: k must be in [1, " + std::to_string(m - 1) + "], got " +
                                     std::to_string(k));
  }
  if (kernel.type == WeightKernel::heat && kernel.heat_t > 0.0 &&
      !std::isfinite(kernel.heat_t)) {
    fail(errc::invalid_argument, "graph: heat kernel bandwidth must be finite");
  }

  Eigen::MatrixXd sq_dist(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    sq_dist(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double d2 = (pc.points.row(i) - pc.points.row(j)).squaredNorm();
      sq_dist(i, j) = d2;
      sq_dist(j, i) = d2;
    }
  }

  std::vector<std::vector<Eigen::Index>> neighbors(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) neighbors[i] = nearest_neighbors(sq_dist, i, k);

  if (kernel.type == WeightKernel::heat && kernel.heat_t <= 0.0) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j : neighbors[i]) sum += sq_dist(i, j);
    double mean = sum / (static_cast<double>(m) * static_cast<double>(k));
    kernel.heat_t = mean > 0.0 ? mean : 1.0;  // all-duplicate cloud
  }

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
  auto connect = [&](Eigen::Index i, Eigen::Index j) {
    double value = kernel.type == WeightKernel::binary
                       ? 1.0
                       : std::exp(-sq_dist(i, j) / kernel.heat_t);
    w(i, j) = value;
    w(j, i) = value;
  };
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j : neighbors[i]) connect(i, j);

  return NeighborhoodGraph{std::move(w), k, kernel};
}

std::int64_t count_components(const Eigen::MatrixXd& weights) {
  const Eigen::Index m = weights.rows();
  std::vector<Eigen::Index> stack;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::int64_t components = 0;
  for (Eigen::Index start = 0; start < m; ++start) {
    if (seen[start]) continue;
    ++components;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      Eigen::Index v = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < m; ++j) {
        if (weights(v, j) > 0.0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return components;
}

Eigen::MatrixXd incidence_factor(const NeighborhoodGraph& g) {
  const Eigen::Index m = g.size();
  Eigen::Index edge_count = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      if (g.weights(i, j) > 0.0) ++edge_count;

  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, edge_count);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      if (g.weights(i, j) <= 0.0) continue;
      double root = std::sqrt(g.weights(i, j));
      b(i, col) = root;
      b(j, col) = -root;
      ++col;
    }
  }
  return b;
}

LaplacianBundle degree_and_laplacian(const NeighborhoodGraph& g) {
  LaplacianBundle bundle;
  bundle.weights = g.weights;
  bundle.degrees = g.weights.rowwise().sum();
  bundle.laplacian = Eigen::MatrixXd(bundle.degrees.asDiagonal()) - g.weights;
  bundle.incidence = incidence_factor(g);
  bundle.components = count_components(g.weights);
  return bundle;
}

double objective_value(const LaplacianBundle& bundle, const Eigen::MatrixXd& y) {
  if (y.rows() != bundle.size()) {
    fail(errc::invalid_argument, "graph: embedding has " + std::to_string(y.rows()) +
                                     " rows, graph has " + std::to_string(bundle.size()));
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    for (Eigen::Index j = 0; j < y.rows(); ++j) {
      if (bundle.weights(i, j) == 0.0) continue;
      total += bundle.weights(i, j) * (y.row(i) - y.row(j)).squaredNorm();
    }
  return total;
}

}  // namespace qle
