#pragma once

#include <Eigen/Core>
#include <optional>

#include "core/eigenmap.hpp"
#include "core/graph.hpp"

namespace qle {

// F = L^{1/2} D^{-1/2} and G = F F^T = L^{1/2} D^{-1} L^{1/2}. The nonzero
// spectrum of G equals the nonzero generalized spectrum of (L, D), which is
// what lets phase estimation on exp(i*2*pi*scale*G) read the embedding
// eigenvalues. `scale` maps eigenvalues into [0,1) for unambiguous phases.
struct ChainOperator {
  Eigen::MatrixXd f;
  Eigen::MatrixXd g;
  Eigen::MatrixXd sqrt_laplacian;
  double scale = 0.25;
  double eps_rank = kRankEps;
  double g_lambda_max = 0.0;
  bool scale_adjusted = false;  // scale was halved to honor scale*lambda_max < 1
};

// Spectral square root of a symmetric PSD matrix. Eigenvalues below
// eps_rank * lambda_max are clamped to zero; anything below the negative of
// that threshold is rejected as not PSD.
Eigen::MatrixXd sqrt_psd(const Eigen::MatrixXd& a, double eps_rank = kRankEps);

ChainOperator build_chain_operator(const LaplacianBundle& bundle, double scale = 0.25,
                                   double eps_rank = kRankEps);

// Maps a unit eigenvector u of G with G u = lambda u back to a solution of
// L v = lambda D v via v = D^{-1} L^{1/2} u, rescaled to v^T D v = 1 and
// sign-fixed. `input_residual_tol`, when set, gates |G u - lambda u|.
GeneralizedEigenpair recover_eigenvector(const Eigen::VectorXd& u, double lambda,
                                         const LaplacianBundle& bundle,
                                         double eps_rank = kRankEps,
                                         std::optional<double> input_residual_tol = 1e-8);

// Same map with the chain operator's cached L^{1/2}; used on the hot path.
GeneralizedEigenpair recover_eigenvector(const Eigen::VectorXd& u, double lambda,
                                         const ChainOperator& chain,
                                         const LaplacianBundle& bundle,
                                         std::optional<double> input_residual_tol = 1e-8);

}  // namespace qle
