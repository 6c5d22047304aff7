#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qle {

using Complex = std::complex<double>;

// Two-register machine: a t-bit phase register and a q-qubit system register
// holding the padded node space (2^q >= node count). Joint amplitudes are
// indexed as (phase_value << q) | system_value, so basis state
// |b>|j> lives at index b * 2^q + j. Bitstrings print MSB first.
struct RegisterLayout {
  int phase_bits = 0;    // t
  int system_qubits = 0; // q

  Eigen::Index phase_dim() const { return Eigen::Index(1) << phase_bits; }
  Eigen::Index system_dim() const { return Eigen::Index(1) << system_qubits; }
  Eigen::Index total_dim() const { return Eigen::Index(1) << (phase_bits + system_qubits); }

  // q = ceil(log2(node_count)), at least one qubit.
  static RegisterLayout for_nodes(int phase_bits, Eigen::Index node_count);
  static RegisterLayout create(int phase_bits, int system_qubits);
};

struct PureState {
  Eigen::VectorXcd amplitudes;  // length 2^(t+q), unit 2-norm
  RegisterLayout layout;

  Complex& at(std::uint64_t phase_value, Eigen::Index system_index) {
    return amplitudes(static_cast<Eigen::Index>(phase_value << layout.system_qubits) +
                      system_index);
  }
  Complex at(std::uint64_t phase_value, Eigen::Index system_index) const {
    return amplitudes(static_cast<Eigen::Index>(phase_value << layout.system_qubits) +
                      system_index);
  }
};

// Hermitian, unit trace, positive semidefinite.
struct MixedState {
  Eigen::MatrixXcd rho;
};

struct MeasurementRecord {
  std::uint64_t outcome = 0;      // phase-register value
  std::string bits;               // MSB-first rendering of `outcome`
  double probability = 0.0;
  Eigen::VectorXcd post_state;    // renormalized system register
};

// Exhaustive readout of the phase register: probability per t-bit value,
// collapse records on demand, seeded sampling for shot experiments.
struct PhaseDistribution {
  RegisterLayout layout;
  Eigen::VectorXd probabilities;  // length 2^t, sums to 1

  MeasurementRecord record(std::uint64_t outcome) const;
  std::vector<std::uint64_t> sample(std::int64_t shots, std::uint64_t seed) const;

private:
  friend PhaseDistribution measure_phase_register(const PureState& state);
  Eigen::MatrixXcd blocks_;  // row b = unnormalized system amplitudes for outcome b
};

std::string format_bits(std::uint64_t value, int width);

// rho = A A^dagger / trace(A A^dagger), zero-padded to the given dimension.
MixedState prepare_density_from_columns(const Eigen::MatrixXd& a, Eigen::Index padded_dim);

// U = exp(i * 2*pi * scale * G) for symmetric PSD G, computed spectrally and
// padded with an identity block up to padded_dim.
Eigen::MatrixXcd unitary_from_generator(const Eigen::MatrixXd& g, double scale,
                                        Eigen::Index padded_dim);

// Textbook phase estimation: uniform superposition on the phase register,
// controlled-U^x ladder, inverse Fourier transform on the phase register.
// `input` is the system-register state (length 2^q, unit norm). For an
// eigenvector input with eigenphase theta = b/2^t the readout is exactly b.
PureState phase_estimation(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& input,
                           const RegisterLayout& layout);

PhaseDistribution measure_phase_register(const PureState& state);

// Grover iteration (reflect about `state`) x (phase-flip the block whose
// phase register equals `target`), applied `iterations` times. Success
// probability follows sin^2((2k+1) asin(sqrt(p0))).
PureState amplitude_amplification(const PureState& state, std::uint64_t target,
                                  std::int64_t iterations);

// Iteration count that lands the marked probability near its peak:
// max(0, round(pi / (4 asin(sqrt(p0))) - 1/2)).
std::int64_t choose_iterations(double p0);

// Phase estimation driven by the mixed state rho = G/trace(G); eigenvalue
// lambda_i is read with probability lambda_i/trace(G).
struct DensityPhaseEntry {
  std::uint64_t outcome = 0;   // most likely t-bit value for this eigenvector
  std::string bits;
  double probability = 0.0;    // weight lambda_i / trace(G)
  double lambda_hat = 0.0;     // (outcome / 2^t) / scale
  Eigen::VectorXd eigenvector; // node-space eigenvector of G
};

struct DensityPhaseResult {
  RegisterLayout layout;
  double scale = 0.0;
  std::vector<DensityPhaseEntry> entries;    // one per nonzero-weight eigenvector
  Eigen::VectorXd bin_probabilities;         // exact readout distribution over 2^t bins

  std::vector<std::uint64_t> sample(std::int64_t shots, std::uint64_t seed) const;
};

DensityPhaseResult density_phase_estimation(const Eigen::MatrixXd& g, double scale,
                                            int phase_bits);

// Power-of-two complex DFT, sign = -1 for the inverse-QFT direction,
// normalized by 1/sqrt(N). Exposed for testing.
void fourier_transform_inplace(Eigen::VectorXcd& data, int sign);

}  // namespace qle
