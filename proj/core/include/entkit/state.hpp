#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace entkit {

using Complex = std::complex<double>;

// Numerical tolerances used across the toolkit: structural checks
// (normalization, Hermiticity, trace) are tighter than spectral ones
// (entropies, Schmidt coefficients) because the latter pass through an
// eigensolver.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kSpectralTol = 1e-9;
inline constexpr double kEigenvalueCutoff = 1e-12;

/// Normalized state vector of an n-qubit register.
///
/// Amplitudes are indexed by bit pattern read big-endian: the leftmost bit
/// of the pattern is qubit 0, so |01> on two qubits sits at index 1. Under
/// a bipartition the first qubits belong to subsystem A.
class PureState {
 public:
  PureState(int n_qubits, Eigen::VectorXcd amplitudes);

  /// Rescales `amplitudes` to unit norm before constructing. Throws if the
  /// vector is numerically zero.
  static PureState normalized(int n_qubits, Eigen::VectorXcd amplitudes);

  /// Computational basis ket |index> (big-endian bit pattern).
  static PureState basis_state(int n_qubits, std::uint32_t index);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(std::uint32_t index) const { return amps_(index); }

  /// <this|other>.
  Complex inner(const PureState& other) const;

 private:
  int n_qubits_;
  Eigen::VectorXcd amps_;
};

/// Ordered split of the qubit indices {0..n-1} into two non-empty groups.
/// The order inside each group fixes the qubit order of the reduced system.
class Bipartition {
 public:
  Bipartition(std::vector<int> a_indices, std::vector<int> b_indices);

  /// A = {0..k-1}, B = {k..n-1}.
  static Bipartition first_k(int n_qubits, int k);

  /// Default split: first half versus second half (A gets n/2 qubits).
  static Bipartition half(int n_qubits);

  const std::vector<int>& a_indices() const { return a_; }
  const std::vector<int>& b_indices() const { return b_; }
  int n_qubits() const { return static_cast<int>(a_.size() + b_.size()); }

 private:
  std::vector<int> a_;
  std::vector<int> b_;
};

/// Hermitian, unit-trace, positive-semidefinite operator on n qubits.
/// All three properties are validated on construction.
class DensityOp {
 public:
  DensityOp(int n_qubits, Eigen::MatrixXcd matrix);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// Eigenvalues in increasing order, tiny negatives clamped to zero.
  Eigen::VectorXd eigenvalues() const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Singular values of the bipartitioned amplitude matrix, non-increasing.
struct SchmidtResult {
  std::vector<double> coefficients;
  int rank = 0;  // count of coefficients above 1e-10
};

enum class Subsystem { A, B };

struct PurityResult {
  bool is_pure = false;
  /// lambda with rho^2 = lambda * rho, when rho is proportional to a
  /// projector (candidate lambda = Tr rho^2); absent otherwise.
  std::optional<double> projector_scale;
};

/// rho = |state><state|.
DensityOp density_of(const PureState& state);

PurityResult purity_check(const DensityOp& rho);

/// Traces out the complement of `keep`. The result's qubit order follows
/// the kept index list. Throws on qubit-count mismatch between rho and part.
DensityOp partial_trace(const DensityOp& rho, const Bipartition& part,
                        Subsystem keep);

/// S(rho) = -Tr rho log2 rho, in bits. Eigenvalues below 1e-12 contribute 0.
double von_neumann_entropy(const DensityOp& rho);

/// Entropy of the reduced state of subsystem A.
double entanglement_entropy(const PureState& state, const Bipartition& part);

SchmidtResult schmidt_decompose(const PureState& state,
                                const Bipartition& part);

/// True iff the Schmidt rank across `part` is 1.
bool is_product(const PureState& state, const Bipartition& part);

namespace detail {
/// Index contribution table for placing k-bit values at the given global
/// qubit positions of an n-qubit pattern (big-endian). Entry v is the full
/// index produced by bits `v` alone, zeros elsewhere.
std::vector<std::uint32_t> index_table(int n_qubits,
                                       const std::vector<int>& positions);
}  // namespace detail

}  // namespace entkit
