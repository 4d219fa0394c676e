#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "claims.hpp"
#include "entkit/measures.hpp"
#include "report.hpp"
#include "statefile.hpp"

namespace entkit::cli {

enum class OutputFormat { text, json };

struct GlobalOptions {
  OutputFormat format = OutputFormat::text;
  bool normalize = false;
  std::optional<std::string> split;  // "a:<idx>,<idx>,..."
  std::optional<std::string> output_path;
};

/// Parses the --split descriptor into a bipartition of n qubits.
/// Throws CliError with exit code 4 on a malformed or invalid split.
Bipartition parse_split(const std::string& descriptor, int n_qubits);

/// Maps a label (Phi+, Phi-, Psi+, Psi- or p=<bits>,s=<+|->) onto its
/// diagram. Throws CliError with exit code 2 on unknown labels.
DiagramBasis label_to_diagram(const std::string& label);

int cmd_analyze(const std::string& path, const GlobalOptions& options,
                std::ostream& out, std::ostream& err);
int cmd_basis(const std::string& kind, std::optional<int> n_qubits,
              const GlobalOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_classify(const std::vector<std::string>& labels,
                 const GlobalOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_verify_paper(const GlobalOptions& options, const FaultSet& faults,
                     std::ostream& out, std::ostream& err);

}  // namespace entkit::cli
