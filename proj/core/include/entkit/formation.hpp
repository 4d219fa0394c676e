#pragma once

#include <span>
#include <vector>

#include "entkit/phasespace.hpp"
#include "entkit/state.hpp"

namespace entkit {

/// The effective two-state system spanned by one diagram's +/- partners.
/// In the (|p>, |p~>) coordinates the partners read (1,1)/sqrt2 and
/// (1,-1)/sqrt2, so the flip operator restricts to the 2x2 exchange.
class EmergentQubit {
 public:
  explicit EmergentQubit(const BitPattern& base);

  const BitPattern& base() const { return base_; }
  const PureState& plus_state() const { return plus_; }
  const PureState& minus_state() const { return minus_; }

  /// Coordinates of the chosen partner in the (|p>, |p~>) basis.
  Eigen::Vector2cd representation(Sign which) const;

 private:
  BitPattern base_;
  PureState plus_;
  PureState minus_;
};

/// Expectation of the exchange operator in the emergent two-space:
/// +1 for the plus partner, -1 for the minus partner. Computed from the
/// 2-dimensional representation; independently equal to the eigenvalue of
/// the full-space flip.
double emergent_sigma_x(const EmergentQubit& eq, Sign which);

/// Grouping of N parties, optionally nested. A leaf is one party.
class PartitionTree {
 public:
  static PartitionTree leaf();
  static PartitionTree flat(int n_parties);
  static PartitionTree group(std::vector<PartitionTree> children);

  bool is_leaf() const { return children_.empty(); }
  int party_count() const;
  const std::vector<PartitionTree>& children() const { return children_; }

 private:
  PartitionTree() = default;
  std::vector<PartitionTree> children_;
};

/// Qubits of formation spent fully disentangling N maximally entangled
/// parties: each pairwise step peels one emergent qubit, so the count is
/// N - 1 regardless of the grouping shape. Counted structurally over the
/// tree. Throws for fewer than two parties.
int formation_count(const PartitionTree& tree);

/// Normalized uniform superposition (1/sqrt m) sum of the given diagram
/// states, all taken with `sign`. The result is a flip eigenstate with
/// eigenvalue +1 (plus) or -1 (minus) and unit translation concurrence.
/// Throws on mixed arities, duplicate diagrams, or a sign mismatch with
/// the diagrams' own signs.
PureState chain_superposition(std::span<const DiagramBasis> diagrams,
                              Sign sign);

/// Reduced entropy of a maximally entangled bipartite system whose halves
/// hold k qubits each: exactly k bits.
double bipartite_formation_entropy(int k);

struct EmergentCheck {
  DiagramBasis diagram;  // base with sign +
  bool two_space_closed = false;
  double sigma_x_plus = 0.0;
  double sigma_x_minus = 0.0;
  double concurrence_plus = 0.0;
  double concurrence_minus = 0.0;
  double formation_plus = 0.0;
  double formation_minus = 0.0;
  bool pass = false;
};

struct EmergentReport {
  std::vector<EmergentCheck> checks;
  bool all_pass = true;
};

/// For every diagram: the +/- pair spans a flip-closed two-space, the
/// exchange expectations are +1/-1, and both partners have concurrence 1
/// and formation 1.
EmergentReport verify_emergent_property(std::span<const DiagramBasis> diagrams);

}  // namespace entkit
