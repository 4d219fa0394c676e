#include "entkit/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace entkit {

namespace {

bool is_power_of_two(Eigen::Index v) { return v > 0 && (v & (v - 1)) == 0; }

Eigen::Index expected_dim(int n_qubits) {
  return Eigen::Index{1} << n_qubits;
}

}  // namespace

namespace detail {

std::vector<std::uint32_t> index_table(int n_qubits,
                                       const std::vector<int>& positions) {
  const int k = static_cast<int>(positions.size());
  std::vector<std::uint32_t> table(std::size_t{1} << k, 0);
  for (std::uint32_t bits = 0; bits < table.size(); ++bits) {
    std::uint32_t index = 0;
    for (int s = 0; s < k; ++s) {
      const std::uint32_t bit = (bits >> (k - 1 - s)) & 1u;
      index |= bit << (n_qubits - 1 - positions[static_cast<std::size_t>(s)]);
    }
    table[bits] = index;
  }
  return table;
}

}  // namespace detail

PureState::PureState(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("PureState: need at least one qubit");
  }
  if (amps_.size() != expected_dim(n_qubits_)) {
    throw std::invalid_argument(
        "PureState: amplitude count " + std::to_string(amps_.size()) +
        " does not match 2^" + std::to_string(n_qubits_));
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStructuralTol) {
    throw std::invalid_argument(
        "PureState: amplitudes not normalized (|psi|^2 = " +
        std::to_string(norm2) + ")");
  }
}

PureState PureState::normalized(int n_qubits, Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (norm < kStructuralTol) {
    throw std::invalid_argument("PureState: cannot normalize a zero vector");
  }
  return PureState(n_qubits, amplitudes / norm);
}

PureState PureState::basis_state(int n_qubits, std::uint32_t index) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(expected_dim(n_qubits));
  amps(index) = Complex{1.0, 0.0};
  return PureState(n_qubits, std::move(amps));
}

Complex PureState::inner(const PureState& other) const {
  if (other.dim() != dim()) {
    throw std::invalid_argument("PureState::inner: dimension mismatch");
  }
  return amps_.dot(other.amps_);
}

Bipartition::Bipartition(std::vector<int> a_indices,
                         std::vector<int> b_indices)
    : a_(std::move(a_indices)), b_(std::move(b_indices)) {
  if (a_.empty() || b_.empty()) {
    throw std::invalid_argument("Bipartition: both sides must be non-empty");
  }
  const int n = n_qubits();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  auto mark = [&](const std::vector<int>& side) {
    for (int q : side) {
      if (q < 0 || q >= n) {
        throw std::invalid_argument("Bipartition: qubit index " +
                                    std::to_string(q) + " out of range");
      }
      if (seen[static_cast<std::size_t>(q)]) {
        throw std::invalid_argument("Bipartition: qubit index " +
                                    std::to_string(q) + " repeated");
      }
      seen[static_cast<std::size_t>(q)] = true;
    }
  };
  mark(a_);
  mark(b_);
  // n slots, n distinct in-range indices: the union is exactly {0..n-1}.
}

Bipartition Bipartition::first_k(int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) {
    throw std::invalid_argument("Bipartition: split point out of range");
  }
  std::vector<int> a(static_cast<std::size_t>(k));
  std::vector<int> b(static_cast<std::size_t>(n_qubits - k));
  for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = i;
  for (int i = k; i < n_qubits; ++i) b[static_cast<std::size_t>(i - k)] = i;
  return Bipartition(std::move(a), std::move(b));
}

Bipartition Bipartition::half(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("Bipartition: need at least two qubits");
  }
  return first_k(n_qubits, n_qubits / 2);
}

DensityOp::DensityOp(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("DensityOp: need at least one qubit");
  }
  const Eigen::Index d = expected_dim(n_qubits_);
  if (matrix_.rows() != d || matrix_.cols() != d || !is_power_of_two(d)) {
    throw std::invalid_argument("DensityOp: matrix is not 2^n x 2^n");
  }
  const double herm_err =
      (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kStructuralTol) {
    throw std::invalid_argument("DensityOp: matrix not Hermitian (max dev " +
                                std::to_string(herm_err) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kStructuralTol) {
    throw std::invalid_argument("DensityOp: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStructuralTol) {
    throw std::invalid_argument("DensityOp: negative eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()));
  }
}

Eigen::VectorXd DensityOp::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      matrix_, Eigen::EigenvaluesOnly);
  Eigen::VectorXd evals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < 0.0) evals(i) = 0.0;
  }
  return evals;
}

DensityOp density_of(const PureState& state) {
  return DensityOp(state.n_qubits(),
                   state.amplitudes() * state.amplitudes().adjoint());
}

PurityResult purity_check(const DensityOp& rho) {
  const Eigen::MatrixXcd& m = rho.matrix();
  const Eigen::MatrixXcd m2 = m * m;
  PurityResult result;
  result.is_pure = (m2 - m).cwiseAbs().maxCoeff() <= kStructuralTol;
  const double candidate = m2.trace().real();
  if ((m2 - candidate * m).cwiseAbs().maxCoeff() <= kStructuralTol) {
    result.projector_scale = candidate;
  }
  return result;
}

DensityOp partial_trace(const DensityOp& rho, const Bipartition& part,
                        Subsystem keep) {
  if (part.n_qubits() != rho.n_qubits()) {
    throw std::invalid_argument(
        "partial_trace: bipartition covers " +
        std::to_string(part.n_qubits()) + " qubits, operator has " +
        std::to_string(rho.n_qubits()));
  }
  const std::vector<int>& kept =
      keep == Subsystem::A ? part.a_indices() : part.b_indices();
  const std::vector<int>& traced =
      keep == Subsystem::A ? part.b_indices() : part.a_indices();

  const auto kept_table = detail::index_table(rho.n_qubits(), kept);
  const auto traced_table = detail::index_table(rho.n_qubits(), traced);
  const auto dk = static_cast<Eigen::Index>(kept_table.size());

  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex sum{0.0, 0.0};
      for (std::uint32_t t : traced_table) {
        sum += rho.matrix()(kept_table[static_cast<std::size_t>(i)] | t,
                            kept_table[static_cast<std::size_t>(j)] | t);
      }
      reduced(i, j) = sum;
    }
  }
  // Symmetrize away accumulation noise; the exact sum is Hermitian.
  reduced = (reduced + reduced.adjoint().eval()) / 2.0;
  return DensityOp(static_cast<int>(kept.size()), std::move(reduced));
}

double von_neumann_entropy(const DensityOp& rho) {
  const Eigen::VectorXd evals = rho.eigenvalues();
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lambda = evals(i);
    if (lambda > kEigenvalueCutoff) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return std::max(entropy, 0.0);
}

double entanglement_entropy(const PureState& state, const Bipartition& part) {
  return von_neumann_entropy(
      partial_trace(density_of(state), part, Subsystem::A));
}

SchmidtResult schmidt_decompose(const PureState& state,
                                const Bipartition& part) {
  if (part.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("schmidt_decompose: bipartition mismatch");
  }
  const auto a_table = detail::index_table(state.n_qubits(), part.a_indices());
  const auto b_table = detail::index_table(state.n_qubits(), part.b_indices());

  Eigen::MatrixXcd amp_matrix(static_cast<Eigen::Index>(a_table.size()),
                              static_cast<Eigen::Index>(b_table.size()));
  for (std::size_t a = 0; a < a_table.size(); ++a) {
    for (std::size_t b = 0; b < b_table.size(); ++b) {
      amp_matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          state.amplitude(a_table[a] | b_table[b]);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(amp_matrix);
  const Eigen::VectorXd& singular = svd.singularValues();

  SchmidtResult result;
  result.coefficients.reserve(static_cast<std::size_t>(singular.size()));
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    result.coefficients.push_back(singular(i));
    if (singular(i) > kStructuralTol) ++result.rank;
  }
  return result;
}

bool is_product(const PureState& state, const Bipartition& part) {
  return schmidt_decompose(state, part).rank == 1;
}

}  // namespace entkit
