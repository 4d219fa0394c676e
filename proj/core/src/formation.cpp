#include "entkit/formation.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "entkit/measures.hpp"

namespace entkit {

EmergentQubit::EmergentQubit(const BitPattern& base)
    : base_(base),
      plus_(DiagramBasis(base, Sign::plus).state()),
      minus_(DiagramBasis(base, Sign::minus).state()) {
  if (std::abs(plus_.inner(minus_)) > kStructuralTol) {
    throw std::logic_error("EmergentQubit: partners are not orthogonal");
  }
  const auto phase_plus = translation_symmetry(plus_);
  const auto phase_minus = translation_symmetry(minus_);
  if (!phase_plus || !phase_minus) {
    throw std::logic_error("EmergentQubit: partners are not flip eigenstates");
  }
}

Eigen::Vector2cd EmergentQubit::representation(Sign which) const {
  const PureState& chosen = which == Sign::plus ? plus_ : minus_;
  Eigen::Vector2cd coords;
  coords(0) = chosen.amplitude(base_.value());
  coords(1) = chosen.amplitude(base_.complement().value());
  return coords;
}

double emergent_sigma_x(const EmergentQubit& eq, Sign which) {
  const Eigen::Vector2cd u = eq.representation(which);
  // <u| [[0,1],[1,0]] |u> = 2 Re(conj(u0) u1).
  return 2.0 * (std::conj(u(0)) * u(1)).real();
}

PartitionTree PartitionTree::leaf() { return PartitionTree(); }

PartitionTree PartitionTree::flat(int n_parties) {
  if (n_parties < 1) {
    throw std::invalid_argument("PartitionTree: need at least one party");
  }
  if (n_parties == 1) return leaf();
  std::vector<PartitionTree> children(static_cast<std::size_t>(n_parties));
  return group(std::move(children));
}

PartitionTree PartitionTree::group(std::vector<PartitionTree> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("PartitionTree: a group needs >= 2 members");
  }
  PartitionTree tree;
  tree.children_ = std::move(children);
  return tree;
}

int PartitionTree::party_count() const {
  if (is_leaf()) return 1;
  int count = 0;
  for (const PartitionTree& child : children_) count += child.party_count();
  return count;
}

namespace {

// Each node with k branches stands for k-1 pairwise unentangling steps,
// each worth one emergent qubit.
int count_steps(const PartitionTree& tree) {
  if (tree.is_leaf()) return 0;
  int steps = static_cast<int>(tree.children().size()) - 1;
  for (const PartitionTree& child : tree.children()) {
    steps += count_steps(child);
  }
  return steps;
}

}  // namespace

int formation_count(const PartitionTree& tree) {
  const int parties = tree.party_count();
  if (parties < 2) {
    throw std::invalid_argument("formation_count: need at least two parties");
  }
  return count_steps(tree);
}

PureState chain_superposition(std::span<const DiagramBasis> diagrams,
                              Sign sign) {
  if (diagrams.empty()) {
    throw std::invalid_argument("chain_superposition: no diagrams");
  }
  const int n = diagrams.front().base().size();
  std::set<std::uint32_t> seen;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (const DiagramBasis& d : diagrams) {
    if (d.base().size() != n) {
      throw std::invalid_argument("chain_superposition: mixed arities");
    }
    if (d.sign() != sign) {
      throw std::invalid_argument("chain_superposition: mixed signs");
    }
    if (!seen.insert(d.base().value()).second) {
      throw std::invalid_argument("chain_superposition: duplicate diagram " +
                                  d.label());
    }
    amps += DiagramBasis(d.base(), sign).state().amplitudes();
  }
  amps /= std::sqrt(static_cast<double>(diagrams.size()));
  return PureState(n, std::move(amps));
}

double bipartite_formation_entropy(int k) {
  if (k < 1) {
    throw std::invalid_argument(
        "bipartite_formation_entropy: need at least one qubit per side");
  }
  return static_cast<double>(k);
}

EmergentReport verify_emergent_property(
    std::span<const DiagramBasis> diagrams) {
  EmergentReport report;
  report.checks.reserve(diagrams.size());
  for (const DiagramBasis& d : diagrams) {
    const EmergentQubit eq(d.base());
    EmergentCheck check{DiagramBasis(d.base(), Sign::plus)};

    const auto phase_plus = translation_symmetry(eq.plus_state());
    const auto phase_minus = translation_symmetry(eq.minus_state());
    check.two_space_closed =
        phase_plus && phase_minus &&
        std::abs(*phase_plus - Complex{1.0, 0.0}) <= kStructuralTol &&
        std::abs(*phase_minus + Complex{1.0, 0.0}) <= kStructuralTol;

    check.sigma_x_plus = emergent_sigma_x(eq, Sign::plus);
    check.sigma_x_minus = emergent_sigma_x(eq, Sign::minus);
    check.concurrence_plus = concurrence_translation(eq.plus_state());
    check.concurrence_minus = concurrence_translation(eq.minus_state());
    check.formation_plus = formation_from_concurrence(check.concurrence_plus);
    check.formation_minus =
        formation_from_concurrence(check.concurrence_minus);

    check.pass = check.two_space_closed &&
                 std::abs(check.sigma_x_plus - 1.0) <= kEigenvalueCutoff &&
                 std::abs(check.sigma_x_minus + 1.0) <= kEigenvalueCutoff &&
                 std::abs(check.concurrence_plus - 1.0) <= kEigenvalueCutoff &&
                 std::abs(check.concurrence_minus - 1.0) <= kEigenvalueCutoff &&
                 std::abs(check.formation_plus - 1.0) <= kEigenvalueCutoff &&
                 std::abs(check.formation_minus - 1.0) <= kEigenvalueCutoff;
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace entkit
