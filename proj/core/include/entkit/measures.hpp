#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "entkit/phasespace.hpp"
#include "entkit/state.hpp"

namespace entkit {

/// Concurrence under the two rival definitions. The flip-overlap value
/// |<psi|T psi>| exists for any qubit count; the spin-flip (Wootters)
/// value only for two qubits.
struct ConcurrenceReport {
  double translation_c = 0.0;
  std::optional<double> wootters_c;
  bool agree = true;  // |difference| <= 1e-9 whenever both are present
};

/// Diagram-representability of a state:
///  - product: a single site ket (up to global phase),
///  - entangled: an eigenstate of the flip operator, i.e. a same-sign
///    superposition of diagram states,
///  - unrepresentable: neither; not expressible in the diagram/site bases.
enum class Classification { product, entangled, unrepresentable };

std::string_view to_string(Classification c);

struct MeasureReport {
  double entropy_bits = 0.0;
  ConcurrenceReport concurrence;
  double formation_e = 0.0;
  double entropic_distance = 0.0;
  /// +1 or -1 when the state is an eigenstate of the flip operator.
  std::optional<int> translation_phase;
  Classification classification = Classification::unrepresentable;
  /// Schmidt-oracle verdict across the report's bipartition. Kept separate
  /// from `classification`: the two criteria disagree on specific states.
  bool schmidt_product = false;
};

/// C = |<psi|T(+1) psi>|, clamped to [0,1] after rounding at 1e-12.
double concurrence_translation(const PureState& state);

/// Spin-flip concurrence |<psi|(sigma_y (x) sigma_y)|psi*>| of a two-qubit
/// pure state. Throws for other qubit counts.
double concurrence_wootters(const PureState& state);

/// H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double x);

/// E(C) = H(1/2 + 1/2 sqrt(1 - C^2)). Monotone increasing, E(0)=0, E(1)=1.
double formation_from_concurrence(double c);

/// Distance from maximal entanglement: |E(C) - 1|.
double entropic_distance(double c);

struct WeightedDiagram {
  DiagramBasis diagram;
  Complex coefficient;
};

struct ClassifyResult {
  PureState state;
  Classification verdict = Classification::unrepresentable;
  bool schmidt_product = false;  // across the default half split
  std::optional<Complex> translation_phase;
  double translation_concurrence = 0.0;
};

/// Builds the normalized superposition of the given diagram states and
/// classifies it both ways: the diagram verdict (same-sign terms stay
/// representable, mixed-sign terms either collapse to a site ket or leave
/// the representable set) and the Schmidt verdict. Throws on arity
/// mismatch among terms or when the superposition cancels to zero.
ClassifyResult classify_bell_superposition(std::span<const WeightedDiagram> terms);

/// Aggregates every measure for one state across one bipartition.
/// formation_e and entropic_distance derive from the translation
/// concurrence; the Wootters value is attached for two-qubit inputs.
MeasureReport measure_report(const PureState& state, const Bipartition& part);

}  // namespace entkit
