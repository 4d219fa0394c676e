#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "entkit/state.hpp"

namespace entkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitNormalizationError = 3;
inline constexpr int kExitRangeError = 4;

/// Error carrying the process exit code it should map to.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Raw contents of a state file before the normalization policy is applied.
struct ParsedStateFile {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
  double norm_squared = 0.0;
};

/// Parses the state-file format: one amplitude per line,
///
///   # comment
///   0.70710678 |00>
///   0.5+0.5i   |11>
///
/// Amplitudes are real or a+bi complex literals; whitespace is free-form;
/// bitstrings must share one length and may not repeat. Throws CliError
/// with exit code 2 on any violation.
ParsedStateFile parse_state_file(std::istream& in);

/// Applies the normalization policy and builds a PureState. Amplitudes
/// within 1e-6 of unit norm are rescaled exactly; a larger deviation
/// requires `normalize`, otherwise CliError with exit code 3.
PureState state_from_file(std::istream& in, bool normalize);

/// Serializes a state in the same grammar, one nonzero amplitude per line,
/// with enough digits to round-trip exactly.
std::string write_state_file(const PureState& state);

/// Formats a complex number as a state-file amplitude literal.
std::string format_amplitude(const Complex& value);

/// Parses an amplitude literal (exposed for tests).
Complex parse_amplitude(std::string_view text);

}  // namespace entkit::cli
