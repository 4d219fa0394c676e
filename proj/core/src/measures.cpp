#include "entkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace entkit {

namespace {

// Snap to the endpoints at 1e-12, then clamp to [0,1].
double clamp_unit(double v) {
  if (std::abs(v) < kEigenvalueCutoff) return 0.0;
  if (std::abs(v - 1.0) < kEigenvalueCutoff) return 1.0;
  return std::clamp(v, 0.0, 1.0);
}

// True when all amplitude mass sits on a single basis ket.
bool is_site_ket(const PureState& state) {
  return state.amplitudes().cwiseAbs().maxCoeff() >= 1.0 - kStructuralTol;
}

std::optional<int> snapped_phase(const std::optional<Complex>& phase) {
  if (!phase) return std::nullopt;
  return phase->real() >= 0.0 ? +1 : -1;
}

Classification diagram_classification(const PureState& state,
                                      bool translation_invariant) {
  if (translation_invariant) return Classification::entangled;
  if (is_site_ket(state)) return Classification::product;
  return Classification::unrepresentable;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::product:
      return "product";
    case Classification::entangled:
      return "entangled";
    case Classification::unrepresentable:
      return "paper-unrepresentable";
  }
  return "unknown";
}

double concurrence_translation(const PureState& state) {
  return clamp_unit(std::abs(state.inner(translate(state, 1))));
}

double concurrence_wootters(const PureState& state) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument(
        "concurrence_wootters: defined for two-qubit states only");
  }
  // sigma_y (x) sigma_y in the computational basis.
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = Complex{-1.0, 0.0};
  flip(1, 2) = Complex{1.0, 0.0};
  flip(2, 1) = Complex{1.0, 0.0};
  flip(3, 0) = Complex{-1.0, 0.0};

  const Eigen::Vector4cd flipped = flip * state.amplitudes().conjugate();
  const Complex overlap = state.amplitudes().dot(flipped);
  return clamp_unit(std::abs(overlap));
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double formation_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0) {
    throw std::domain_error(
        "formation_from_concurrence: argument outside [0,1]");
  }
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return binary_entropy(0.5 + 0.5 * s);
}

double entropic_distance(double c) {
  return std::abs(formation_from_concurrence(c) - 1.0);
}

ClassifyResult classify_bell_superposition(
    std::span<const WeightedDiagram> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("classify_bell_superposition: no terms");
  }
  const int n = terms.front().diagram.base().size();
  double norm2 = 0.0;
  bool all_plus = true;
  bool all_minus = true;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (const WeightedDiagram& term : terms) {
    if (term.diagram.base().size() != n) {
      throw std::invalid_argument(
          "classify_bell_superposition: arity mismatch among terms");
    }
    amps += term.coefficient * term.diagram.state().amplitudes();
    norm2 += std::norm(term.coefficient);
    all_plus = all_plus && term.diagram.sign() == Sign::plus;
    all_minus = all_minus && term.diagram.sign() == Sign::minus;
  }
  if (std::abs(norm2 - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "classify_bell_superposition: coefficients not normalized");
  }

  ClassifyResult result{PureState::normalized(n, std::move(amps))};
  result.translation_phase = translation_symmetry(result.state);
  result.translation_concurrence = concurrence_translation(result.state);
  result.schmidt_product = is_product(result.state, Bipartition::half(n));

  if (all_plus || all_minus) {
    result.verdict = Classification::entangled;
  } else if (is_site_ket(result.state)) {
    result.verdict = Classification::product;
  } else {
    result.verdict = Classification::unrepresentable;
  }
  return result;
}

MeasureReport measure_report(const PureState& state, const Bipartition& part) {
  MeasureReport report;
  report.entropy_bits = entanglement_entropy(state, part);

  report.concurrence.translation_c = concurrence_translation(state);
  if (state.n_qubits() == 2) {
    report.concurrence.wootters_c = concurrence_wootters(state);
    report.concurrence.agree =
        std::abs(*report.concurrence.wootters_c -
                 report.concurrence.translation_c) <= kSpectralTol;
  }

  report.formation_e =
      formation_from_concurrence(report.concurrence.translation_c);
  report.entropic_distance =
      entropic_distance(report.concurrence.translation_c);

  const std::optional<Complex> phase = translation_symmetry(state);
  report.translation_phase = snapped_phase(phase);
  report.classification = diagram_classification(state, phase.has_value());
  report.schmidt_product = is_product(state, part);
  return report;
}

}  // namespace entkit
