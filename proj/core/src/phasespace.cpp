#include "entkit/phasespace.hpp"

#include <cmath>
#include <stdexcept>

namespace entkit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

PureState two_index_state(std::uint32_t lo, std::uint32_t hi, double hi_sign) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  amps(lo) = Complex{kInvSqrt2, 0.0};
  amps(hi) = Complex{hi_sign * kInvSqrt2, 0.0};
  return PureState(2, std::move(amps));
}

PureState phi_plus() { return two_index_state(0b00, 0b11, +1.0); }
PureState phi_minus() { return two_index_state(0b00, 0b11, -1.0); }
PureState psi_plus() { return two_index_state(0b01, 0b10, +1.0); }
PureState psi_minus() { return two_index_state(0b01, 0b10, -1.0); }

std::pair<std::uint32_t, std::uint32_t> block_indices(BellBlock block) {
  return block == BellBlock::triplet
             ? std::pair<std::uint32_t, std::uint32_t>{0b00, 0b11}
             : std::pair<std::uint32_t, std::uint32_t>{0b01, 0b10};
}

}  // namespace

BitPattern::BitPattern(int n_bits, std::uint32_t value)
    : n_bits_(n_bits), value_(value) {
  if (n_bits_ < 1 || n_bits_ > 31) {
    throw std::invalid_argument("BitPattern: length out of range");
  }
  if (value_ >> n_bits_ != 0) {
    throw std::invalid_argument("BitPattern: value wider than the pattern");
  }
}

BitPattern BitPattern::parse(std::string_view bits) {
  if (bits.empty()) {
    throw std::invalid_argument("BitPattern: empty string");
  }
  std::uint32_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitPattern: invalid character '" +
                                  std::string(1, c) + "'");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitPattern(static_cast<int>(bits.size()), value);
}

int BitPattern::bit(int position) const {
  if (position < 0 || position >= n_bits_) {
    throw std::out_of_range("BitPattern: bit position out of range");
  }
  return static_cast<int>((value_ >> (n_bits_ - 1 - position)) & 1u);
}

BitPattern BitPattern::complement() const {
  const std::uint32_t mask = (std::uint32_t{1} << n_bits_) - 1;
  return BitPattern(n_bits_, value_ ^ mask);
}

std::string BitPattern::str() const {
  std::string out(static_cast<std::size_t>(n_bits_), '0');
  for (int i = 0; i < n_bits_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
  }
  return out;
}

DiagramBasis::DiagramBasis(BitPattern base, Sign sign)
    : base_(base), sign_(sign) {
  if (base_.size() < 2) {
    throw std::invalid_argument("DiagramBasis: need at least two qubits");
  }
  if (base_.bit(0) != 0) {
    throw std::invalid_argument(
        "DiagramBasis: base pattern must be canonical (leading bit 0), got " +
        base_.str());
  }
}

PureState DiagramBasis::state() const {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(Eigen::Index{1} << base_.size());
  amps(base_.value()) = Complex{kInvSqrt2, 0.0};
  amps(base_.complement().value()) =
      Complex{sign_value(sign_) * kInvSqrt2, 0.0};
  return PureState(base_.size(), std::move(amps));
}

std::string DiagramBasis::label() const {
  return "p=" + base_.str() + ",s=" + sign_char(sign_);
}

std::pair<PureState, PureState> hadamard_pair(const PureState& first,
                                              const PureState& second,
                                              PairDirection /*direction*/) {
  if (first.dim() != second.dim()) {
    throw std::invalid_argument("hadamard_pair: dimension mismatch");
  }
  const Complex overlap = first.inner(second);
  if (std::abs(overlap) > kStructuralTol) {
    throw std::invalid_argument("hadamard_pair: inputs are not orthogonal");
  }
  Eigen::VectorXcd plus =
      (first.amplitudes() + second.amplitudes()) * kInvSqrt2;
  Eigen::VectorXcd minus =
      (first.amplitudes() - second.amplitudes()) * kInvSqrt2;
  return {PureState(first.n_qubits(), std::move(plus)),
          PureState(first.n_qubits(), std::move(minus))};
}

std::array<PureState, 4> bell_basis() {
  return {phi_plus(), phi_minus(), psi_plus(), psi_minus()};
}

BellCoefficients expand_in_bell(const PureState& state) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument("expand_in_bell: expected a two-qubit state");
  }
  const auto basis = bell_basis();
  BellCoefficients coeffs;
  for (std::size_t i = 0; i < 4; ++i) {
    coeffs.beta[i] = basis[i].inner(state);
  }
  return coeffs;
}

PureState reconstruct_from_bell(const BellCoefficients& coeffs) {
  const auto basis = bell_basis();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  for (std::size_t i = 0; i < 4; ++i) {
    amps += coeffs.beta[i] * basis[i].amplitudes();
  }
  return PureState(2, std::move(amps));
}

PureState translate(const PureState& state, int shift) {
  if (((shift % 2) + 2) % 2 == 0) {
    return state;
  }
  const auto mask = static_cast<std::uint32_t>(state.dim() - 1);
  Eigen::VectorXcd amps(state.dim());
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.dim()); ++i) {
    amps(i ^ mask) = state.amplitude(i);
  }
  return PureState(state.n_qubits(), std::move(amps));
}

std::optional<Complex> translation_symmetry(const PureState& state) {
  const Complex phase = state.inner(translate(state, 1));
  if (std::abs(std::abs(phase) - 1.0) <= kStructuralTol) {
    return phase;
  }
  return std::nullopt;
}

std::pair<PureState, PureState> diagram_basis_states(const DiagramBasis& d) {
  const std::uint32_t p = d.base().value();
  const std::uint32_t q = d.base().complement().value();
  const int n = d.base().size();
  return hadamard_pair(PureState::basis_state(n, p),
                       PureState::basis_state(n, q),
                       PairDirection::to_bloch);
}

std::vector<DiagramBasis> enumerate_diagrams(int n_qubits) {
  if (n_qubits < 2 || n_qubits > 12) {
    throw std::invalid_argument("enumerate_diagrams: supported range is 2..12");
  }
  const std::uint32_t count = std::uint32_t{1} << (n_qubits - 1);
  std::vector<DiagramBasis> diagrams;
  diagrams.reserve(count);
  for (std::uint32_t value = 0; value < count; ++value) {
    // Patterns below 2^(n-1) have leading bit 0, which is the canonical
    // representative of each {p, p~} pair.
    diagrams.emplace_back(BitPattern(n_qubits, value), Sign::plus);
  }
  return diagrams;
}

std::array<PureState, 4> pseudo_spin_basis() {
  PureState ey = psi_minus();
  Eigen::VectorXcd ey_amps = ey.amplitudes() * Complex{0.0, -1.0};
  return {phi_plus(), psi_plus(), PureState(2, std::move(ey_amps)),
          phi_minus()};
}

Eigen::Matrix2cd bell_block_coefficients(const DensityOp& rho,
                                         BellBlock block) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument(
        "bell_block_coefficients: expected a two-qubit operator");
  }
  const auto [lo, hi] = block_indices(block);
  // Support check: every entry involving an index outside the block must
  // vanish.
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) {
      const bool inside =
          (i == lo || i == hi) && (j == lo || j == hi);
      if (!inside && std::abs(rho.matrix()(i, j)) > kStructuralTol) {
        throw std::invalid_argument(
            "bell_block_coefficients: operator has support outside the "
            "chosen block");
      }
    }
  }
  const PureState pair_plus = block == BellBlock::triplet ? phi_plus()
                                                          : psi_plus();
  const PureState pair_minus = block == BellBlock::triplet ? phi_minus()
                                                           : psi_minus();
  const Eigen::VectorXcd e0 = pair_plus.amplitudes();
  const Eigen::VectorXcd e1 = pair_minus.amplitudes();

  Eigen::Matrix2cd coeffs;
  coeffs(0, 0) = (e0.adjoint() * rho.matrix() * e0)(0);
  coeffs(0, 1) = (e0.adjoint() * rho.matrix() * e1)(0);
  coeffs(1, 0) = (e1.adjoint() * rho.matrix() * e0)(0);
  coeffs(1, 1) = (e1.adjoint() * rho.matrix() * e1)(0);
  return coeffs;
}

DensityOp conjugate_density_basis(const DensityOp& rho, BellBlock block) {
  const Eigen::Matrix2cd coeffs = bell_block_coefficients(rho, block);
  const PureState pair_plus = block == BellBlock::triplet ? phi_plus()
                                                          : psi_plus();
  const PureState pair_minus = block == BellBlock::triplet ? phi_minus()
                                                           : psi_minus();
  const Eigen::VectorXcd e0 = pair_plus.amplitudes();
  const Eigen::VectorXcd e1 = pair_minus.amplitudes();

  Eigen::MatrixXcd rebuilt = coeffs(0, 0) * (e0 * e0.adjoint()) +
                             coeffs(0, 1) * (e0 * e1.adjoint()) +
                             coeffs(1, 0) * (e1 * e0.adjoint()) +
                             coeffs(1, 1) * (e1 * e1.adjoint());
  rebuilt = (rebuilt + rebuilt.adjoint().eval()) / 2.0;
  return DensityOp(2, std::move(rebuilt));
}

}  // namespace entkit
