#include "core/eigenmap.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace qle {

void fix_sign(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

std::vector<GeneralizedEigenpair> generalized_eigenpairs(const LaplacianBundle& bundle) {
  const Eigen::Index m = bundle.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(bundle.degrees(i) > 0.0)) {
      fail(errc::numeric,
           "eigenmap: vertex " + std::to_string(i) + " is isolated (zero degree)");
    }
  }

  // Symmetric reduction: N = D^{-1/2} L D^{-1/2}, then v = D^{-1/2} w. The
  // unit 2-norm of w makes v^T D v = 1 automatically.
  Eigen::VectorXd inv_sqrt_d = bundle.degrees.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd n = inv_sqrt_d.asDiagonal() * bundle.laplacian * inv_sqrt_d.asDiagonal();
  n = 0.5 * (n + n.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(n);
  if (solver.info() != Eigen::Success) fail(errc::numeric, "eigenmap: eigensolver failed");

  std::vector<GeneralizedEigenpair> pairs(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    pairs[i].lambda = solver.eigenvalues()(i);
    pairs[i].v = inv_sqrt_d.asDiagonal() * solver.eigenvectors().col(i);
    fix_sign(pairs[i].v);
  }

  // Eigenvalues arrive ascending; pin the order inside degenerate groups.
  double scale = std::max(1.0, std::abs(pairs.back().lambda));
  std::sort(pairs.begin(), pairs.end(),
            [scale](const GeneralizedEigenpair& a, const GeneralizedEigenpair& b) {
              if (std::abs(a.lambda - b.lambda) > 1e-12 * scale) return a.lambda < b.lambda;
              return std::lexicographical_compare(a.v.data(), a.v.data() + a.v.size(),
                                                  b.v.data(), b.v.data() + b.v.size());
            });
  return pairs;
}

Embedding build_embedding(const std::vector<GeneralizedEigenpair>& pairs, Eigen::Index d,
                          std::int64_t components) {
  if (d < 1) fail(errc::invalid_argument, "eigenmap: target dimension must be >= 1");
  const Eigen::Index m = static_cast<Eigen::Index>(pairs.size());
  const Eigen::Index available = m - static_cast<Eigen::Index>(components);
  if (d > available) {
    fail(errc::invalid_argument, "eigenmap: requested " + std::to_string(d) +
                                     " dimensions but only " + std::to_string(available) +
                                     " nonzero eigenpairs are available");
  }
  Embedding emb;
  emb.y.resize(pairs.front().v.size(), d);
  emb.lambdas.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    const GeneralizedEigenpair& p = pairs[static_cast<std::size_t>(components + j)];
    emb.y.col(j) = p.v;
    emb.lambdas.push_back(p.lambda);
  }
  return emb;
}

}  // namespace qle
