#include "claims.hpp"

#include <cmath>
#include <sstream>

#include "entkit/formation.hpp"
#include "entkit/measures.hpp"
#include "entkit/phasespace.hpp"
#include "statefile.hpp"

namespace entkit::cli {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

std::string complex_text(const Complex& z) {
  std::ostringstream out;
  out << format_double(z.real());
  if (z.imag() != 0.0) {
    out << (z.imag() < 0 ? "" : "+") << format_double(z.imag()) << "i";
  }
  return out.str();
}

PureState bell(int which) { return bell_basis()[static_cast<std::size_t>(which)]; }

DiagramBasis diagram(const std::string& bits, Sign sign) {
  return DiagramBasis(BitPattern::parse(bits), sign);
}

/// (1/sqrt(2^k)) sum_p |p,p> on 2k qubits, as a diagram chain.
PureState matched_chain(int k) {
  std::vector<DiagramBasis> diagrams;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << (k - 1)); ++v) {
    const std::uint32_t doubled = (v << k) | v;
    diagrams.emplace_back(BitPattern(2 * k, doubled), Sign::plus);
  }
  return chain_superposition(diagrams, Sign::plus);
}

Eigen::MatrixXcd projector(const PureState& s) {
  return s.amplitudes() * s.amplitudes().adjoint();
}

}  // namespace

double Evaluator::entropy(const DensityOp& rho) const {
  const double bits = von_neumann_entropy(rho);
  return faults_.natural_log_entropy ? bits * kLn2 : bits;
}

double Evaluator::entanglement_entropy(const PureState& state,
                                       const Bipartition& part) const {
  const double bits = entkit::entanglement_entropy(state, part);
  return faults_.natural_log_entropy ? bits * kLn2 : bits;
}

std::optional<Complex> Evaluator::translation_phase(
    const PureState& state) const {
  std::optional<Complex> phase = translation_symmetry(state);
  if (phase && faults_.flip_translation_sign) {
    phase = -*phase;
  }
  return phase;
}

void ClaimCheck::fail(const std::string& expected, const std::string& actual) {
  if (!result_.pass) return;
  result_.pass = false;
  result_.expected = expected;
  result_.actual = actual;
}

void ClaimCheck::near(const std::string& what, double expected, double actual,
                      double tol) {
  if (std::abs(expected - actual) > tol) {
    fail(what + " = " + format_double(expected),
         "got " + format_double(actual));
  }
}

void ClaimCheck::near(const std::string& what, const Complex& expected,
                      const Complex& actual, double tol) {
  if (std::abs(expected - actual) > tol) {
    fail(what + " = " + complex_text(expected),
         "got " + complex_text(actual));
  }
}

void ClaimCheck::is_true(const std::string& what, bool condition,
                         const std::string& actual) {
  if (!condition) {
    fail(what, "got " + actual);
  }
}

void ClaimCheck::equal(const std::string& what, const std::string& expected,
                       const std::string& actual) {
  if (expected != actual) {
    fail(what + " = " + expected, "got " + actual);
  }
}

void ClaimCheck::matrix_near(const std::string& what,
                             const Eigen::MatrixXcd& expected,
                             const Eigen::MatrixXcd& actual, double tol) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    fail(what + ": matching shape", "got a shape mismatch");
    return;
  }
  const double dev = (expected - actual).cwiseAbs().maxCoeff();
  if (dev > tol) {
    fail(what + ": entrywise deviation <= " + format_double(tol),
         "got max deviation " + format_double(dev));
  }
}

std::vector<Claim> paper_claims() {
  std::vector<Claim> claims;
  auto add = [&claims](std::string id, std::string description, std::string op,
                       std::function<ClaimResult(const Evaluator&)> run,
                       bool divergence = false) {
    claims.push_back({std::move(id), std::move(description), std::move(op),
                      divergence, std::move(run)});
  };

  // --- state / density operators ------------------------------------

  add("density.bell-projector",
      "projector of the two-qubit chain state has 1/2 at the {00,11} corners",
      "density_of", [](const Evaluator&) {
        ClaimCheck c;
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
        expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) =
            0.5;
        c.matrix_near("rho", expected, density_of(bell(0)).matrix(), 1e-12);
        return c.result();
      });

  add("purity.reduced-single-qubit",
      "reduced operator of the two-qubit chain is mixed with rho^2 = rho/2",
      "purity_check", [](const Evaluator&) {
        ClaimCheck c;
        const DensityOp reduced = partial_trace(
            density_of(bell(0)), Bipartition::half(2), Subsystem::A);
        const PurityResult purity = purity_check(reduced);
        c.is_true("reduced state is mixed", !purity.is_pure, "pure");
        c.is_true("projector scale present", purity.projector_scale.has_value(),
                  "no scale");
        if (purity.projector_scale) {
          c.near("scale", 0.5, *purity.projector_scale, 1e-12);
        }
        return c.result();
      });

  add("purity.reduced-four-qubit",
      "reduced operator of the four-qubit chain satisfies rho^2 = rho/4",
      "purity_check", [](const Evaluator&) {
        ClaimCheck c;
        const PureState chain = chain_superposition(
            std::vector<DiagramBasis>{diagram("0000", Sign::plus),
                                      diagram("0101", Sign::plus)},
            Sign::plus);
        const DensityOp reduced = partial_trace(
            density_of(chain), Bipartition::half(4), Subsystem::A);
        const PurityResult purity = purity_check(reduced);
        c.is_true("reduced state is mixed", !purity.is_pure, "pure");
        c.is_true("projector scale present", purity.projector_scale.has_value(),
                  "no scale");
        if (purity.projector_scale) {
          c.near("scale", 0.25, *purity.projector_scale, 1e-10);
        }
        return c.result();
      });

  add("ptrace.bell-reduced",
      "tracing one side of the two-qubit chain leaves the maximally mixed "
      "qubit",
      "partial_trace", [](const Evaluator&) {
        ClaimCheck c;
        const DensityOp reduced = partial_trace(
            density_of(bell(0)), Bipartition::half(2), Subsystem::A);
        c.matrix_near("rho_A", Eigen::MatrixXcd::Identity(2, 2) * 0.5,
                      reduced.matrix(), 1e-12);
        return c.result();
      });

  add("ptrace.four-qubit-chain",
      "the four-qubit chain reduces to eigenvalues of 1/4 on either half",
      "partial_trace", [](const Evaluator&) {
        ClaimCheck c;
        const PureState chain = chain_superposition(
            std::vector<DiagramBasis>{diagram("0000", Sign::plus),
                                      diagram("0101", Sign::plus)},
            Sign::plus);
        const DensityOp reduced = partial_trace(
            density_of(chain), Bipartition::half(4), Subsystem::A);
        const Eigen::VectorXd evals = reduced.eigenvalues();
        for (Eigen::Index i = 0; i < evals.size(); ++i) {
          c.near("eigenvalue", 0.25, evals(i), 1e-10);
        }
        return c.result();
      });

  add("entropy.bell-bit",
      "entanglement entropy of the two-qubit chain across 1|1 is one bit",
      "entanglement_entropy", [](const Evaluator& ev) {
        ClaimCheck c;
        c.near("S_A", 1.0, ev.entanglement_entropy(bell(0), Bipartition::half(2)),
               1e-12);
        return c.result();
      });

  add("entropy.uniform-spectra",
      "uniform spectra give log2(Omega) bits: 1, 2 and 3",
      "von_neumann_entropy", [](const Evaluator& ev) {
        ClaimCheck c;
        c.near("S(I/2)", 1.0,
               ev.entropy(DensityOp(1, Eigen::MatrixXcd::Identity(2, 2) / 2.0)),
               1e-12);
        c.near("S(I/4)", 2.0,
               ev.entropy(DensityOp(2, Eigen::MatrixXcd::Identity(4, 4) / 4.0)),
               1e-12);
        c.near("S(I/8)", 3.0,
               ev.entropy(DensityOp(3, Eigen::MatrixXcd::Identity(8, 8) / 8.0)),
               1e-12);
        return c.result();
      });

  add("entropy.four-qubit-two-bits",
      "the four-qubit chain carries two bits across the 2|2 split",
      "entanglement_entropy", [](const Evaluator& ev) {
        ClaimCheck c;
        const PureState chain = chain_superposition(
            std::vector<DiagramBasis>{diagram("0000", Sign::plus),
                                      diagram("0101", Sign::plus)},
            Sign::plus);
        c.near("S_A", 2.0, ev.entanglement_entropy(chain, Bipartition::half(4)),
               1e-9);
        return c.result();
      });

  // --- phase space ----------------------------------------------------

  add("hadamard.triplet-pair",
      "pairing (|00>,|11>) yields the Phi pair",
      "hadamard_pair", [](const Evaluator&) {
        ClaimCheck c;
        const auto [plus, minus] =
            hadamard_pair(PureState::basis_state(2, 0b00),
                          PureState::basis_state(2, 0b11),
                          PairDirection::to_bloch);
        c.matrix_near("plus", bell(0).amplitudes(), plus.amplitudes(), 1e-12);
        c.matrix_near("minus", bell(1).amplitudes(), minus.amplitudes(), 1e-12);
        return c.result();
      });

  add("hadamard.triplet-inverse",
      "pairing the Phi pair recovers (|00>,|11>)",
      "hadamard_pair", [](const Evaluator&) {
        ClaimCheck c;
        const auto [site0, site1] =
            hadamard_pair(bell(0), bell(1), PairDirection::to_wannier);
        c.matrix_near("first", PureState::basis_state(2, 0b00).amplitudes(),
                      site0.amplitudes(), 1e-12);
        c.matrix_near("second", PureState::basis_state(2, 0b11).amplitudes(),
                      site1.amplitudes(), 1e-12);
        return c.result();
      });

  add("hadamard.singlet-pair",
      "pairing (|01>,|10>) yields the Psi pair",
      "hadamard_pair", [](const Evaluator&) {
        ClaimCheck c;
        const auto [plus, minus] =
            hadamard_pair(PureState::basis_state(2, 0b01),
                          PureState::basis_state(2, 0b10),
                          PairDirection::to_bloch);
        c.matrix_near("plus", bell(2).amplitudes(), plus.amplitudes(), 1e-12);
        c.matrix_near("minus", bell(3).amplitudes(), minus.amplitudes(), 1e-12);
        return c.result();
      });

  add("bell.basis-vectors",
      "e1 = (|00>+|11>)/sqrt2 and e4 = (|01>-|10>)/sqrt2",
      "bell_basis", [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        Eigen::VectorXcd e1(4), e4(4);
        e1 << r, 0, 0, r;
        e4 << 0, r, -r, 0;
        c.matrix_near("e1", e1, bell(0).amplitudes(), 1e-12);
        c.matrix_near("e4", e4, bell(3).amplitudes(), 1e-12);
        return c.result();
      });

  add("bell.expansion-coefficients",
      "|00> = (e1+e2)/sqrt2 and |10> = (e3-e4)/sqrt2",
      "expand_in_bell", [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        const BellCoefficients site00 =
            expand_in_bell(PureState::basis_state(2, 0b00));
        c.near("beta1(|00>)", Complex{r, 0}, site00.beta[0], 1e-12);
        c.near("beta2(|00>)", Complex{r, 0}, site00.beta[1], 1e-12);
        c.near("beta3(|00>)", Complex{0, 0}, site00.beta[2], 1e-12);
        c.near("beta4(|00>)", Complex{0, 0}, site00.beta[3], 1e-12);
        const BellCoefficients site10 =
            expand_in_bell(PureState::basis_state(2, 0b10));
        c.near("beta1(|10>)", Complex{0, 0}, site10.beta[0], 1e-12);
        c.near("beta2(|10>)", Complex{0, 0}, site10.beta[1], 1e-12);
        c.near("beta3(|10>)", Complex{r, 0}, site10.beta[2], 1e-12);
        c.near("beta4(|10>)", Complex{-r, 0}, site10.beta[3], 1e-12);
        return c.result();
      });

  const auto phase_claim = [](int which, const std::string& name,
                              double expected) {
    return [which, name, expected](const Evaluator& ev) {
      ClaimCheck c;
      const auto phase = ev.translation_phase(bell(which));
      c.is_true(name + " is a flip eigenstate", phase.has_value(),
                "no eigenphase");
      if (phase) {
        c.near("phase(" + name + ")", Complex{expected, 0.0}, *phase, 1e-12);
      }
      return c.result();
    };
  };
  add("translate.phi-plus", "the flip fixes Phi+ with phase +1",
      "translation_symmetry", phase_claim(0, "Phi+", +1.0));
  add("translate.phi-minus", "the flip fixes Phi- with phase -1",
      "translation_symmetry", phase_claim(1, "Phi-", -1.0));
  add("translate.psi-plus", "the flip fixes Psi+ with phase +1",
      "translation_symmetry", phase_claim(2, "Psi+", +1.0));
  add("translate.psi-minus", "the flip fixes Psi- with phase -1",
      "translation_symmetry", phase_claim(3, "Psi-", -1.0));

  add("translate.site-moves",
      "the flip maps |01> to |10>, and |00> is not invariant",
      "translate", [](const Evaluator&) {
        ClaimCheck c;
        const PureState moved = translate(PureState::basis_state(2, 0b01), 1);
        c.matrix_near("T|01>", PureState::basis_state(2, 0b10).amplitudes(),
                      moved.amplitudes(), 1e-12);
        c.is_true("|00> has no flip eigenphase",
                  !translation_symmetry(PureState::basis_state(2, 0b00)),
                  "an eigenphase");
        return c.result();
      });

  add("diagram.four-qubit-block",
      "diagram p=0101 pairs into the Hadamard partners of (|0101>,|1010>)",
      "diagram_basis_states", [](const Evaluator&) {
        ClaimCheck c;
        const auto [plus, minus] =
            diagram_basis_states(diagram("0101", Sign::plus));
        const auto [ref_plus, ref_minus] =
            hadamard_pair(PureState::basis_state(4, 0b0101),
                          PureState::basis_state(4, 0b1010),
                          PairDirection::to_bloch);
        c.matrix_near("plus", ref_plus.amplitudes(), plus.amplitudes(), 1e-12);
        c.matrix_near("minus", ref_minus.amplitudes(), minus.amplitudes(),
                      1e-12);
        return c.result();
      });

  add("diagram.tripartite-blocks",
      "tripartite diagrams p=000 and p=011 pair (|000>,|111>) and "
      "(|011>,|100>)",
      "diagram_basis_states", [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        const auto [theta_p, theta_m] =
            diagram_basis_states(diagram("000", Sign::plus));
        c.near("Theta+ at |000>", Complex{r, 0}, theta_p.amplitude(0b000),
               1e-12);
        c.near("Theta+ at |111>", Complex{r, 0}, theta_p.amplitude(0b111),
               1e-12);
        c.near("Theta- at |111>", Complex{-r, 0}, theta_m.amplitude(0b111),
               1e-12);
        const auto [xi_p, xi_m] =
            diagram_basis_states(diagram("011", Sign::plus));
        c.near("Xi+ at |011>", Complex{r, 0}, xi_p.amplitude(0b011), 1e-12);
        c.near("Xi+ at |100>", Complex{r, 0}, xi_p.amplitude(0b100), 1e-12);
        c.near("Xi- at |100>", Complex{-r, 0}, xi_m.amplitude(0b100), 1e-12);
        return c.result();
      });

  add("diagram.census",
      "2, 4 and 8 canonical diagrams on 2, 3 and 4 qubits",
      "enumerate_diagrams", [](const Evaluator&) {
        ClaimCheck c;
        c.near("count(n=2)", 2.0,
               static_cast<double>(enumerate_diagrams(2).size()), 0.0);
        c.near("count(n=3)", 4.0,
               static_cast<double>(enumerate_diagrams(3).size()), 0.0);
        c.near("count(n=4)", 8.0,
               static_cast<double>(enumerate_diagrams(4).size()), 0.0);
        return c.result();
      });

  add("pseudospin.vectors",
      "e0 equals Phi+ and i*ey equals Psi-",
      "pseudo_spin_basis", [](const Evaluator&) {
        ClaimCheck c;
        const auto basis = pseudo_spin_basis();
        c.matrix_near("e0", bell(0).amplitudes(), basis[0].amplitudes(), 1e-12);
        c.matrix_near("i*ey", bell(3).amplitudes(),
                      (Complex{0.0, 1.0} * basis[2].amplitudes()).eval(),
                      1e-12);
        c.matrix_near("ez", bell(1).amplitudes(), basis[3].amplitudes(), 1e-12);
        return c.result();
      });

  add("mixed.triplet-block",
      "the mixed {|00>,|11>} operator re-expresses as the mixed Phi pair",
      "conjugate_density_basis", [](const Evaluator&) {
        ClaimCheck c;
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(4, 4);
        w(0, 0) = w(3, 3) = 0.5;
        const DensityOp mapped =
            conjugate_density_basis(DensityOp(2, w), BellBlock::triplet);
        const Eigen::MatrixXcd expected =
            0.5 * (projector(bell(0)) + projector(bell(1)));
        c.matrix_near("rho_B", expected, mapped.matrix(), 1e-12);
        return c.result();
      });

  add("mixed.singlet-block",
      "the mixed {|01>,|10>} operator re-expresses as the mixed Psi pair",
      "conjugate_density_basis", [](const Evaluator&) {
        ClaimCheck c;
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(4, 4);
        w(1, 1) = w(2, 2) = 0.5;
        const DensityOp mapped =
            conjugate_density_basis(DensityOp(2, w), BellBlock::singlet);
        const Eigen::MatrixXcd expected =
            0.5 * (projector(bell(2)) + projector(bell(3)));
        c.matrix_near("rho_B", expected, mapped.matrix(), 1e-12);
        return c.result();
      });

  // --- measures ---------------------------------------------------------

  add("concurrence.maximal",
      "the two-qubit chain state has unit concurrence",
      "concurrence_translation", [](const Evaluator&) {
        ClaimCheck c;
        c.near("C(Phi+)", 1.0, concurrence_translation(bell(0)), 1e-12);
        return c.result();
      });

  add("concurrence.partial-family",
      "alpha|01> + beta|10> has concurrence 2*alpha*beta under both "
      "definitions",
      "concurrence_translation", [](const Evaluator&) {
        ClaimCheck c;
        const double alpha = 0.6, beta = 0.8;
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
        amps(0b01) = alpha;
        amps(0b10) = beta;
        const PureState state(2, std::move(amps));
        c.near("flip overlap", 2 * alpha * beta,
               concurrence_translation(state), 1e-12);
        c.near("spin flip", 2 * alpha * beta, concurrence_wootters(state),
               1e-12);
        return c.result();
      });

  add("entropy.binary-half",
      "the binary entropy peaks at one bit", "binary_entropy",
      [](const Evaluator&) {
        ClaimCheck c;
        c.near("H(1/2)", 1.0, binary_entropy(0.5), 1e-12);
        return c.result();
      });

  add("formation.endpoints",
      "E(1) = 1 and E(0) = 0", "formation_from_concurrence",
      [](const Evaluator&) {
        ClaimCheck c;
        c.near("E(1)", 1.0, formation_from_concurrence(1.0), 1e-12);
        c.near("E(0)", 0.0, formation_from_concurrence(0.0), 1e-12);
        return c.result();
      });

  add("distance.endpoints",
      "the entropic distance is 0 at C=1 and 1 at C=0", "entropic_distance",
      [](const Evaluator&) {
        ClaimCheck c;
        c.near("dist(1)", 0.0, entropic_distance(1.0), 1e-12);
        c.near("dist(0)", 1.0, entropic_distance(0.0), 1e-12);
        return c.result();
      });

  add("classify.site-collapse",
      "(Phi+ + Phi-)/sqrt2 collapses to the site ket |00>",
      "classify_bell_superposition", [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        const std::vector<WeightedDiagram> terms{
            {diagram("00", Sign::plus), Complex{r, 0}},
            {diagram("00", Sign::minus), Complex{r, 0}}};
        const ClassifyResult result = classify_bell_superposition(terms);
        c.equal("verdict", "product", std::string(to_string(result.verdict)));
        c.matrix_near("state", PureState::basis_state(2, 0b00).amplitudes(),
                      result.state.amplitudes(), 1e-12);
        c.is_true("Schmidt rank is 1", result.schmidt_product, "rank > 1");
        return c.result();
      });

  add("classify.even-superposition",
      "(Phi+ + Psi+)/sqrt2 stays diagram-representable yet is a Schmidt "
      "product",
      "classify_bell_superposition",
      [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        const std::vector<WeightedDiagram> terms{
            {diagram("00", Sign::plus), Complex{r, 0}},
            {diagram("01", Sign::plus), Complex{r, 0}}};
        const ClassifyResult result = classify_bell_superposition(terms);
        c.equal("diagram verdict", "entangled",
                std::string(to_string(result.verdict)));
        c.is_true("Schmidt verdict is product", result.schmidt_product,
                  "entangled");
        return c.result();
      },
      /*divergence=*/true);

  add("classify.mixed-superposition",
      "(Phi+ + Psi-)/sqrt2 leaves the representable set yet is Schmidt "
      "entangled",
      "classify_bell_superposition",
      [](const Evaluator&) {
        ClaimCheck c;
        const double r = 1.0 / std::sqrt(2.0);
        const std::vector<WeightedDiagram> terms{
            {diagram("00", Sign::plus), Complex{r, 0}},
            {diagram("01", Sign::minus), Complex{r, 0}}};
        const ClassifyResult result = classify_bell_superposition(terms);
        c.equal("diagram verdict", "paper-unrepresentable",
                std::string(to_string(result.verdict)));
        c.is_true("Schmidt verdict is entangled", !result.schmidt_product,
                  "product");
        return c.result();
      },
      /*divergence=*/true);

  add("report.bell-panel",
      "the full measure panel of the two-qubit chain state",
      "measure_report", [](const Evaluator& ev) {
        ClaimCheck c;
        const MeasureReport report =
            measure_report(bell(0), Bipartition::half(2));
        const double entropy =
            ev.entanglement_entropy(bell(0), Bipartition::half(2));
        c.near("entropy", 1.0, entropy, 1e-12);
        c.near("C_translation", 1.0, report.concurrence.translation_c, 1e-12);
        c.is_true("Wootters value present",
                  report.concurrence.wootters_c.has_value(), "absent");
        if (report.concurrence.wootters_c) {
          c.near("C_wootters", 1.0, *report.concurrence.wootters_c, 1e-12);
        }
        c.near("E", 1.0, report.formation_e, 1e-12);
        c.near("distance", 0.0, report.entropic_distance, 1e-12);
        return c.result();
      });

  // --- formation ----------------------------------------------------------

  add("emergent.sigma-x",
      "exchange expectations are +1/-1 for the +/- partners",
      "emergent_sigma_x", [](const Evaluator&) {
        ClaimCheck c;
        const EmergentQubit triplet(BitPattern::parse("00"));
        const EmergentQubit singlet(BitPattern::parse("01"));
        c.near("<Phi+|x|Phi+>", 1.0, emergent_sigma_x(triplet, Sign::plus),
               1e-12);
        c.near("<Phi-|x|Phi->", -1.0, emergent_sigma_x(triplet, Sign::minus),
               1e-12);
        c.near("<Psi+|x|Psi+>", 1.0, emergent_sigma_x(singlet, Sign::plus),
               1e-12);
        c.near("<Psi-|x|Psi->", -1.0, emergent_sigma_x(singlet, Sign::minus),
               1e-12);
        return c.result();
      });

  add("chain.four-qubit",
      "the +/- chains over {0000, 0101} have the cited amplitudes",
      "chain_superposition", [](const Evaluator&) {
        ClaimCheck c;
        const PureState plus = chain_superposition(
            std::vector<DiagramBasis>{diagram("0000", Sign::plus),
                                      diagram("0101", Sign::plus)},
            Sign::plus);
        Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(16);
        expected(0b0000) = expected(0b0101) = expected(0b1010) =
            expected(0b1111) = 0.5;
        c.matrix_near("plus chain", expected, plus.amplitudes(), 1e-12);

        const PureState minus = chain_superposition(
            std::vector<DiagramBasis>{diagram("0000", Sign::minus),
                                      diagram("0101", Sign::minus)},
            Sign::minus);
        expected(0b1010) = expected(0b1111) = -0.5;
        c.matrix_near("minus chain", expected, minus.amplitudes(), 1e-12);
        return c.result();
      });

  add("chain.tripartite-full",
      "the chain over all four tripartite diagrams is the uniform state",
      "chain_superposition", [](const Evaluator&) {
        ClaimCheck c;
        const PureState chain =
            chain_superposition(enumerate_diagrams(3), Sign::plus);
        const Eigen::VectorXcd expected =
            Eigen::VectorXcd::Constant(8, Complex{1.0 / std::sqrt(8.0), 0.0});
        c.matrix_near("chain", expected, chain.amplitudes(), 1e-12);
        return c.result();
      });

  add("monogamy.counts",
      "unentangling 3, 4 and 18 parties costs 2, 3 and 17 formation qubits",
      "formation_count", [](const Evaluator&) {
        ClaimCheck c;
        c.near("N=3", 2.0,
               static_cast<double>(formation_count(PartitionTree::flat(3))),
               0.0);
        c.near("N=4", 3.0,
               static_cast<double>(formation_count(PartitionTree::flat(4))),
               0.0);
        c.near("N=18", 17.0,
               static_cast<double>(formation_count(PartitionTree::flat(18))),
               0.0);
        return c.result();
      });

  add("formation.k-qubit-halves",
      "k-qubit halves carry k bits, matching the numerically reduced chain",
      "bipartite_formation_entropy", [](const Evaluator& ev) {
        ClaimCheck c;
        for (int k = 1; k <= 3; ++k) {
          c.near("closed form k=" + std::to_string(k),
                 static_cast<double>(k), bipartite_formation_entropy(k), 0.0);
          c.near("numeric k=" + std::to_string(k), static_cast<double>(k),
                 ev.entanglement_entropy(matched_chain(k),
                                         Bipartition::half(2 * k)),
                 1e-9);
        }
        return c.result();
      });

  // --- command-line ingestion ---------------------------------------------

  add("analyze.state-file",
      "the shipped two-line state file reproduces the one-bit panel",
      "cmd_analyze", [](const Evaluator& ev) {
        ClaimCheck c;
        std::istringstream file("0.70710678 |00>\n0.70710678 |11>\n");
        const PureState state = state_from_file(file, /*normalize=*/false);
        const MeasureReport report =
            measure_report(state, Bipartition::half(2));
        c.near("entropy", 1.0,
               ev.entanglement_entropy(state, Bipartition::half(2)), 1e-9);
        c.near("C", 1.0, report.concurrence.translation_c, 1e-9);
        c.near("E", 1.0, report.formation_e, 1e-9);
        return c.result();
      });

  return claims;
}

VerifySummary run_claims(const std::vector<Claim>& claims,
                         const FaultSet& faults, Report& report) {
  const Evaluator evaluator(faults);
  VerifySummary summary;
  for (const Claim& claim : claims) {
    ++summary.total;
    const ClaimResult result = claim.run(evaluator);
    std::string status;
    if (result.pass && claim.divergence_note) {
      status = "PASS (documented divergence) " + claim.description;
      ++summary.passed;
      ++summary.divergence_notes;
    } else if (result.pass) {
      status = "PASS " + claim.description;
      ++summary.passed;
    } else {
      status = "FAIL " + claim.description + " -- expected " +
               result.expected + ", " + result.actual;
      ++summary.failed;
    }
    report.add(claim.id, status, claim.op);
  }
  report.add("claims.total", static_cast<std::int64_t>(summary.total), "");
  report.add("claims.passed", static_cast<std::int64_t>(summary.passed), "");
  report.add("claims.failed", static_cast<std::int64_t>(summary.failed), "");
  report.add("claims.divergence-notes",
             static_cast<std::int64_t>(summary.divergence_notes), "");
  return summary;
}

}  // namespace entkit::cli
