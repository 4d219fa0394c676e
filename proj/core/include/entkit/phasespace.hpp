#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entkit/state.hpp"

namespace entkit {

/// Fixed-length bit string labelling a computational basis ket.
/// Position 0 is the leftmost (most significant) bit.
class BitPattern {
 public:
  BitPattern(int n_bits, std::uint32_t value);
  static BitPattern parse(std::string_view bits);

  int size() const { return n_bits_; }
  int bit(int position) const;
  /// Big-endian integer value; doubles as the amplitude-vector index.
  std::uint32_t value() const { return value_; }
  BitPattern complement() const;
  std::string str() const;

  friend bool operator==(const BitPattern&, const BitPattern&) = default;

 private:
  int n_bits_;
  std::uint32_t value_;
};

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }
inline Sign opposite(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// One two-state diagram: base pattern p plus a sign s, standing for the
/// state (|p> + s|p~>)/sqrt(2) where p~ is the bitwise complement.
/// Canonical form requires p to start with 0 (p lexicographically smaller
/// than p~), so each {p, p~} pair is represented once.
class DiagramBasis {
 public:
  DiagramBasis(BitPattern base, Sign sign);

  const BitPattern& base() const { return base_; }
  Sign sign() const { return sign_; }

  PureState state() const;
  DiagramBasis partner() const { return {base_, opposite(sign_)}; }
  /// Descriptor of the form "p=0101,s=+".
  std::string label() const;

  friend bool operator==(const DiagramBasis&, const DiagramBasis&) = default;

 private:
  BitPattern base_;
  Sign sign_;
};

/// Coefficients over the two-qubit Bell basis e1..e4.
struct BellCoefficients {
  std::array<Complex, 4> beta;
};

enum class PairDirection { to_bloch, to_wannier };

/// Applies (1/sqrt2)[[1,1],[1,-1]] to an orthonormal pair of states. The
/// two directions are the same matrix (the pairing is an involution); the
/// enum records which way the caller is going. Throws if the inputs are
/// not orthogonal.
std::pair<PureState, PureState> hadamard_pair(const PureState& first,
                                              const PureState& second,
                                              PairDirection direction);

/// e1 = Phi+, e2 = Phi-, e3 = Psi+, e4 = Psi-.
std::array<PureState, 4> bell_basis();

/// beta_i = <e_i|state> for a two-qubit state.
BellCoefficients expand_in_bell(const PureState& state);

/// Sum beta_i e_i.
PureState reconstruct_from_bell(const BellCoefficients& coeffs);

/// Shift-by-`shift` (mod 2) of every qubit: shift 1 maps each basis ket
/// to its bitwise complement. Unitary; squares to the identity.
PureState translate(const PureState& state, int shift);

/// The unit phase phi with translate(state,1) = phi * state, when one
/// exists (|<state|translated>| = 1 within 1e-10); otherwise nullopt.
/// Any such phi is +1 or -1 up to rounding, since the shift is involutive.
std::optional<Complex> translation_symmetry(const PureState& state);

/// The Hadamard partners ((|p>+|p~>)/sqrt2, (|p>-|p~>)/sqrt2) of a diagram.
std::pair<PureState, PureState> diagram_basis_states(const DiagramBasis& d);

/// All 2^(n-1) canonical diagrams on n qubits (sign +). The union of the
/// +/- states of every diagram is an orthonormal basis of the 2^n space.
/// Valid for 2 <= n <= 12.
std::vector<DiagramBasis> enumerate_diagrams(int n_qubits);

/// Pseudo-spin component basis (e0, ex, ey, ez) =
/// (Phi+, Psi+, -i Psi-, Phi-). Orthonormal; i*ey equals Psi-.
std::array<PureState, 4> pseudo_spin_basis();

/// The two 2-dimensional blocks of the two-qubit space that the pairing
/// acts on: triplet = span{|00>,|11>}, singlet = span{|01>,|10>}.
enum class BellBlock { triplet, singlet };

/// Re-expresses a density operator supported on one block through the
/// block's Bell pair: rho is expanded in the pair (e+, e-) and rebuilt
/// from those coefficients. The spectrum is preserved. Throws if rho has
/// support outside the chosen block.
DensityOp conjugate_density_basis(const DensityOp& rho, BellBlock block);

/// The 2x2 coefficient matrix c_ij = <e_i|rho|e_j> over the block's Bell
/// pair (e+, e-).
Eigen::Matrix2cd bell_block_coefficients(const DensityOp& rho,
                                         BellBlock block);

}  // namespace entkit
