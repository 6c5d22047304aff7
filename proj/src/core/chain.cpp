#include "core/chain.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "core/errors.hpp"

namespace qle {

namespace {

double lambda_max_sym(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(errc::numeric, "chain: eigensolver failed");
  return solver.eigenvalues().maxCoeff();
}

void require_positive_degrees(const LaplacianBundle& bundle) {
  for (Eigen::Index i = 0; i < bundle.size(); ++i) {
    if (!(bundle.degrees(i) > 0.0)) {
      fail(errc::numeric, "chain: vertex " + std::to_string(i) + " is isolated (zero degree)");
    }
  }
}

GeneralizedEigenpair recover_impl(const Eigen::VectorXd& u, double lambda,
                                  const Eigen::MatrixXd& sqrt_l, const Eigen::MatrixXd& g,
                                  double g_lambda_max, const LaplacianBundle& bundle,
                                  double eps_rank, std::optional<double> input_residual_tol) {
  if (u.size() != bundle.size()) fail(errc::invalid_argument, "chain: eigenvector size mismatch");
  double norm = u.norm();
  if (norm < 1e-12) fail(errc::invalid_argument, "chain: zero input vector");
  Eigen::VectorXd unit = u / norm;

  if (lambda <= eps_rank * std::max(g_lambda_max, 1e-300)) {
    fail(errc::invalid_argument, "chain: eigenvalue is at or below the zero-mode threshold");
  }
  if (input_residual_tol) {
    double residual = (g * unit - lambda * unit).norm();
    if (residual > *input_residual_tol) {
      fail(errc::invalid_argument,
           "chain: input is not an eigenvector of the chain operator (residual " +
               std::to_string(residual) + ")");
    }
  }

  Eigen::VectorXd w = sqrt_l * unit;
  if (w.norm() <= 1e-12) {
    fail(errc::invalid_argument, "chain: input lies in the kernel of the Laplacian");
  }
  Eigen::VectorXd v = w.cwiseQuotient(bundle.degrees);
  double d_norm_sq = v.dot(bundle.degrees.asDiagonal() * v);
  v /= std::sqrt(d_norm_sq);
  fix_sign(v);
  return GeneralizedEigenpair{lambda, std::move(v)};
}

}  // namespace

Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& a, double eps_rank) {
  if (a.rows() != a.cols()) fail(errc::invalid_argument, "chain: matrix must be square");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    fail(errc::invalid_argument, "chain: matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (a + a.transpose()));
  if (solver.info() != Eigen::Success) fail(errc::numeric, "chain: eigensolver failed");

  Eigen::VectorXd lam = solver.eigenvalues();
  double lam_max = std::max(lam.maxCoeff(), 0.0);
  double clamp = eps_rank * lam_max;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -clamp) {
      fail(errc::numeric, "chain: matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(lam(i)) + ")");
    }
    lam(i) = lam(i) <= clamp ? 0.0 : std::sqrt(lam(i));
  }
  return solver.eigenvectors() * lam.asDiagonal() * solver.eigenvectors().transpose();
}

ChainOperator build_chain_operator(const LaplacianBundle& bundle, double scale,
                                   double eps_rank) {
  if (!(scale > 0.0) || scale > 0.5) {
    fail(errc::invalid_argument, "chain: scale must be in (0, 1/2]");
  }
  require_positive_degrees(bundle);

  ChainOperator chain;
  chain.eps_rank = eps_rank;
  chain.sqrt_laplacian = sqrt_psd(bundle.laplacian, eps_rank);
  Eigen::VectorXd inv_sqrt_d = bundle.degrees.cwiseSqrt().cwiseInverse();
  chain.f = chain.sqrt_laplacian * inv_sqrt_d.asDiagonal();
  chain.g = chain.f * chain.f.transpose();
  chain.g = 0.5 * (chain.g + chain.g.transpose()).eval();
  chain.g_lambda_max = lambda_max_sym(chain.g);

  chain.scale = scale;
  while (chain.scale * chain.g_lambda_max >= 1.0) {
    chain.scale *= 0.5;
    chain.scale_adjusted = true;
  }
  return chain;
}

GeneralizedEigenpair recover_eigenvector(const Eigen::VectorXd& u, double lambda,
                                         const LaplacianBundle& bundle, double eps_rank,
                                         std::optional<double> input_residual_tol) {
  require_positive_degrees(bundle);
  Eigen::MatrixXd sqrt_l = sqrt_psd(bundle.laplacian, eps_rank);
  Eigen::VectorXd inv_d = bundle.degrees.cwiseInverse();
  Eigen::MatrixXd g = sqrt_l * inv_d.asDiagonal() * sqrt_l;
  return recover_impl(u, lambda, sqrt_l, g, lambda_max_sym(g), bundle, eps_rank,
                      input_residual_tol);
}

GeneralizedEigenpair recover_eigenvector(const Eigen::VectorXd& u, double lambda,
                                         const ChainOperator& chain,
                                         const LaplacianBundle& bundle,
                                         std::optional<double> input_residual_tol) {
  return recover_impl(u, lambda, chain.sqrt_laplacian, chain.g, chain.g_lambda_max, bundle,
                      chain.eps_rank, input_residual_tol);
}

}  // namespace qle
