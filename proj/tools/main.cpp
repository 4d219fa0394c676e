#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace entkit::cli;

  CLI::App app{
      "entkit -- entanglement measures for small multi-qubit systems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  GlobalOptions options;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--normalize", options.normalize,
               "Rescale state-file amplitudes to unit norm");
  std::string split;
  app.add_option("--split", split,
                 "Bipartition of the qubits, e.g. a:0,1 (default: first "
                 "half versus second half)");
  std::string output_path;
  app.add_option("--output", output_path,
                 "Write the report to a file instead of stdout");

  auto* analyze = app.add_subcommand(
      "analyze", "Compute every measure for a state read from a file");
  std::string state_path;
  analyze->add_option("file", state_path, "State file to analyze")
      ->required();

  auto* basis = app.add_subcommand(
      "basis", "List an entangled basis with translation phases");
  std::string basis_kind;
  basis->add_option("kind", basis_kind, "bell, diagrams or pseudospin")
      ->required();
  int basis_n = 0;
  auto* basis_n_opt =
      basis->add_option("--n", basis_n, "Qubit count (diagrams: 2..12)");

  auto* classify = app.add_subcommand(
      "classify", "Classify a uniform superposition of labelled states");
  std::vector<std::string> labels;
  classify
      ->add_option("labels", labels,
                   "Labels: Phi+ Phi- Psi+ Psi- or p=<bits>,s=<+|->")
      ->required();

  auto* verify = app.add_subcommand(
      "verify-paper", "Re-run every recorded numeric claim and report "
                      "pass/fail per claim");
  std::vector<std::string> injected_faults;
  verify
      ->add_option("--inject-fault", injected_faults,
                   "Deliberately break one computation (log-base or "
                   "translation-sign); used to test the harness")
      ->check(CLI::IsMember({"log-base", "translation-sign"}))
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  options.format =
      format == "json" ? OutputFormat::json : OutputFormat::text;
  if (!split.empty()) options.split = split;
  if (!output_path.empty()) options.output_path = output_path;

  if (analyze->parsed()) {
    return cmd_analyze(state_path, options, std::cout, std::cerr);
  }
  if (basis->parsed()) {
    std::optional<int> n;
    if (basis_n_opt->count() > 0) n = basis_n;
    return cmd_basis(basis_kind, n, options, std::cout, std::cerr);
  }
  if (classify->parsed()) {
    return cmd_classify(labels, options, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    FaultSet faults;
    for (const std::string& fault : injected_faults) {
      if (fault == "log-base") faults.natural_log_entropy = true;
      if (fault == "translation-sign") faults.flip_translation_sign = true;
    }
    return cmd_verify_paper(options, faults, std::cout, std::cerr);
  }
  return kExitOk;
}
