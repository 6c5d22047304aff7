#pragma once

#include <Eigen/Core>
#include <vector>

#include "core/graph.hpp"

namespace qle {

// Relative threshold below which an eigenvalue counts as a zero mode.
inline constexpr double kRankEps = 1e-10;

// Solution of L v = lambda D v with v^T D v = 1 and the first component of v
// above 1e-8 in magnitude made positive.
struct GeneralizedEigenpair {
  double lambda = 0.0;
  Eigen::VectorXd v;
};

// m x d spectral embedding; column j is the eigenvector of lambdas[j] and
// lambdas ascend, all strictly above the zero-mode threshold.
struct Embedding {
  Eigen::MatrixXd y;
  std::vector<double> lambdas;

  Eigen::Index sample_count() const { return y.rows(); }
  Eigen::Index dims() const { return y.cols(); }
};

// All m generalized eigenpairs, ascending by eigenvalue; degenerate groups
// are ordered by lexicographic comparison of the sign-fixed vectors. Requires
// every degree positive.
std::vector<GeneralizedEigenpair> generalized_eigenpairs(const LaplacianBundle& bundle);

// Drops the `components` smallest eigenvalues (the zero modes) and selects
// the next d pairs as embedding columns.
Embedding build_embedding(const std::vector<GeneralizedEigenpair>& pairs, Eigen::Index d,
                          std::int64_t components);

// Flips v so the first component with |v_i| > 1e-8 is positive.
void fix_sign(Eigen::VectorXd& v);

}  // namespace qle
