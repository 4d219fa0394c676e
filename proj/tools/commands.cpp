#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "entkit/formation.hpp"
#include "entkit/phasespace.hpp"

namespace entkit::cli {

namespace {

std::string format_state_terms(const PureState& state) {
  std::ostringstream out;
  bool first = true;
  const int n = state.n_qubits();
  for (std::uint32_t index = 0;
       index < static_cast<std::uint32_t>(state.dim()); ++index) {
    const Complex amp = state.amplitude(index);
    if (std::abs(amp) < 1e-14) continue;
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      bits[static_cast<std::size_t>(i)] =
          static_cast<char>('0' + ((index >> (n - 1 - i)) & 1u));
    }
    char buffer[64];
    if (amp.imag() == 0.0) {
      std::snprintf(buffer, sizeof(buffer), "%.10g", std::abs(amp.real()));
      if (!first) out << (amp.real() < 0 ? " - " : " + ");
      else if (amp.real() < 0) out << "-";
      out << buffer;
    } else {
      std::snprintf(buffer, sizeof(buffer), "(%.10g%+.10gi)", amp.real(),
                    amp.imag());
      if (!first) out << " + ";
      out << buffer;
    }
    out << " |" << bits << ">";
    first = false;
  }
  return out.str();
}

std::string phase_text(const std::optional<Complex>& phase) {
  if (!phase) return "none";
  return phase->real() >= 0.0 ? "+1" : "-1";
}

void emit(const Report& report, const GlobalOptions& options,
          std::ostream& out) {
  std::string rendered;
  if (options.format == OutputFormat::json) {
    rendered = render_json(report).dump(2);
    rendered.push_back('\n');
  } else {
    rendered = render_text(report);
  }
  if (options.output_path) {
    std::ofstream file(*options.output_path);
    if (!file) {
      throw CliError(kExitParseError,
                     "cannot write to " + *options.output_path);
    }
    file << rendered;
  } else {
    out << rendered;
  }
}

void add_measure_entries(const MeasureReport& measures, Report& report) {
  report.add("entropy_bits", measures.entropy_bits, "entanglement_entropy");
  report.add("concurrence_translation", measures.concurrence.translation_c,
             "concurrence_translation");
  if (measures.concurrence.wootters_c) {
    report.add("concurrence_wootters", *measures.concurrence.wootters_c,
               "concurrence_wootters");
    report.add("concurrence_agree", measures.concurrence.agree, "");
  }
  report.add("formation_e", measures.formation_e,
             "formation_from_concurrence");
  report.add("entropic_distance", measures.entropic_distance,
             "entropic_distance");
  if (measures.translation_phase) {
    report.add("translation_phase",
               static_cast<std::int64_t>(*measures.translation_phase),
               "translation_symmetry");
  } else {
    report.add("translation_phase", std::string("none"),
               "translation_symmetry");
  }
  report.add("classification", std::string(to_string(measures.classification)),
             "classify_bell_superposition");
  report.add("schmidt_product", measures.schmidt_product, "schmidt_decompose");
}

}  // namespace

Bipartition parse_split(const std::string& descriptor, int n_qubits) {
  if (descriptor.rfind("a:", 0) != 0) {
    throw CliError(kExitRangeError,
                   "split descriptor must look like a:0,1 (got '" +
                       descriptor + "')");
  }
  std::vector<int> a_indices;
  std::stringstream list(descriptor.substr(2));
  std::string token;
  while (std::getline(list, token, ',')) {
    try {
      std::size_t used = 0;
      const int index = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      a_indices.push_back(index);
    } catch (const std::exception&) {
      throw CliError(kExitRangeError,
                     "bad qubit index '" + token + "' in split descriptor");
    }
  }
  std::vector<int> b_indices;
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(a_indices.begin(), a_indices.end(), q) == a_indices.end()) {
      b_indices.push_back(q);
    }
  }
  try {
    return Bipartition(std::move(a_indices), std::move(b_indices));
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitRangeError, e.what());
  }
}

DiagramBasis label_to_diagram(const std::string& label) {
  if (label == "Phi+") return {BitPattern::parse("00"), Sign::plus};
  if (label == "Phi-") return {BitPattern::parse("00"), Sign::minus};
  if (label == "Psi+") return {BitPattern::parse("01"), Sign::plus};
  if (label == "Psi-") return {BitPattern::parse("01"), Sign::minus};
  if (label.rfind("p=", 0) == 0) {
    const auto comma = label.find(",s=");
    if (comma != std::string::npos && comma + 3 < label.size() + 1) {
      const std::string bits = label.substr(2, comma - 2);
      const std::string sign = label.substr(comma + 3);
      try {
        if (sign == "+") return {BitPattern::parse(bits), Sign::plus};
        if (sign == "-") return {BitPattern::parse(bits), Sign::minus};
      } catch (const std::invalid_argument& e) {
        throw CliError(kExitParseError, e.what());
      }
    }
  }
  throw CliError(kExitParseError,
                 "unknown label '" + label +
                     "'; expected Phi+/Phi-/Psi+/Psi- or p=<bits>,s=<+|->");
}

int cmd_analyze(const std::string& path, const GlobalOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    std::ifstream file(path);
    if (!file) {
      throw CliError(kExitParseError, "cannot open state file: " + path);
    }
    const PureState state = state_from_file(file, options.normalize);
    if (state.n_qubits() < 2) {
      throw CliError(kExitRangeError,
                     "analysis needs at least two qubits to bipartition");
    }
    Bipartition part = options.split
                           ? parse_split(*options.split, state.n_qubits())
                           : Bipartition::half(state.n_qubits());

    const MeasureReport measures = measure_report(state, part);

    Report report{"analyze " + path, {}, {}};
    report.add("n_qubits", static_cast<std::int64_t>(state.n_qubits()),
               "parse_state_file");
    std::ostringstream split_text;
    split_text << "A={";
    for (std::size_t i = 0; i < part.a_indices().size(); ++i) {
      split_text << (i ? "," : "") << part.a_indices()[i];
    }
    split_text << "} B={";
    for (std::size_t i = 0; i < part.b_indices().size(); ++i) {
      split_text << (i ? "," : "") << part.b_indices()[i];
    }
    split_text << "}";
    report.add("split", split_text.str(), "bipartition");
    add_measure_entries(measures, report);
    report.section("state").add("terms", format_state_terms(state),
                                "parse_state_file");
    emit(report, options, out);
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

int cmd_basis(const std::string& kind, std::optional<int> n_qubits,
              const GlobalOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    Report report{"basis " + kind, {}, {}};
    if (kind == "bell" || kind == "pseudospin") {
      if (n_qubits && *n_qubits != 2) {
        throw CliError(kExitRangeError,
                       kind + " basis is defined on exactly two qubits");
      }
      const auto states = kind == "bell" ? bell_basis() : pseudo_spin_basis();
      const std::array<std::string, 4> bell_names{"e1 (Phi+)", "e2 (Phi-)",
                                                  "e3 (Psi+)", "e4 (Psi-)"};
      const std::array<std::string, 4> spin_names{"e0", "ex", "ey", "ez"};
      const auto& names = kind == "bell" ? bell_names : spin_names;
      const std::string op =
          kind == "bell" ? "bell_basis" : "pseudo_spin_basis";
      for (std::size_t i = 0; i < states.size(); ++i) {
        Report& sec = report.section(names[i]);
        sec.add("state", format_state_terms(states[i]), op);
        sec.add("translation_phase",
                phase_text(translation_symmetry(states[i])),
                "translation_symmetry");
      }
    } else if (kind == "diagrams") {
      if (!n_qubits) {
        throw CliError(kExitRangeError,
                       "the diagrams basis needs --n <qubits>");
      }
      std::vector<DiagramBasis> diagrams;
      try {
        diagrams = enumerate_diagrams(*n_qubits);
      } catch (const std::invalid_argument& e) {
        throw CliError(kExitRangeError, e.what());
      }
      report.add("diagrams", static_cast<std::int64_t>(diagrams.size()),
                 "enumerate_diagrams");
      report.add("states", static_cast<std::int64_t>(2 * diagrams.size()),
                 "diagram_basis_states");
      for (const DiagramBasis& d : diagrams) {
        const auto [plus, minus] = diagram_basis_states(d);
        Report& sec = report.section("p=" + d.base().str());
        sec.add("plus", format_state_terms(plus), "diagram_basis_states");
        sec.add("plus_phase", phase_text(translation_symmetry(plus)),
                "translation_symmetry");
        sec.add("minus", format_state_terms(minus), "diagram_basis_states");
        sec.add("minus_phase", phase_text(translation_symmetry(minus)),
                "translation_symmetry");
      }
    } else {
      throw CliError(kExitRangeError,
                     "unknown basis kind '" + kind +
                         "'; expected bell, diagrams or pseudospin");
    }
    emit(report, options, out);
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

int cmd_classify(const std::vector<std::string>& labels,
                 const GlobalOptions& options, std::ostream& out,
                 std::ostream& err) {
  try {
    if (labels.empty()) {
      throw CliError(kExitParseError, "classify needs at least one label");
    }
    std::vector<WeightedDiagram> terms;
    const Complex coefficient{1.0 / std::sqrt(double(labels.size())), 0.0};
    terms.reserve(labels.size());
    for (const std::string& label : labels) {
      terms.push_back({label_to_diagram(label), coefficient});
    }
    ClassifyResult result = [&] {
      try {
        return classify_bell_superposition(terms);
      } catch (const std::invalid_argument& e) {
        throw CliError(kExitParseError, e.what());
      }
    }();

    Report report{"classify", {}, {}};
    std::ostringstream joined;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      joined << (i ? " " : "") << labels[i];
    }
    report.add("input", joined.str(), "");
    report.add("diagram_verdict", std::string(to_string(result.verdict)),
               "classify_bell_superposition");
    report.add("schmidt_verdict",
               std::string(result.schmidt_product ? "product" : "entangled"),
               "schmidt_decompose");
    report.add("translation_phase", phase_text(result.translation_phase),
               "translation_symmetry");
    report.add("translation_concurrence", result.translation_concurrence,
               "concurrence_translation");
    const bool diverges =
        (result.verdict == Classification::entangled &&
         result.schmidt_product) ||
        (result.verdict == Classification::unrepresentable &&
         !result.schmidt_product);
    if (diverges) {
      report.add("note",
                 std::string("documented divergence: the diagram and Schmidt "
                             "verdicts disagree on this state"),
                 "");
    }
    report.section("state").add("terms", format_state_terms(result.state),
                                "classify_bell_superposition");
    emit(report, options, out);
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

int cmd_verify_paper(const GlobalOptions& options, const FaultSet& faults,
                     std::ostream& out, std::ostream& err) {
  try {
    Report report{"verify-paper", {}, {}};
    const VerifySummary summary =
        run_claims(paper_claims(), faults, report);
    emit(report, options, out);
    return summary.failed == 0 ? kExitOk : kExitClaimFailure;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

}  // namespace entkit::cli
