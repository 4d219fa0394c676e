#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entkit/state.hpp"
#include "report.hpp"

namespace entkit::cli {

/// Deliberate faults for exercising the verification harness itself. Each
/// switch miscomputes one quantity the way a real implementation bug
/// would, so the corresponding claims must go red.
struct FaultSet {
  bool natural_log_entropy = false;  // report entropies in nats, not bits
  bool flip_translation_sign = false;  // negate the flip eigenphase
};

/// Measurement layer the claims go through; the fault switches live here.
class Evaluator {
 public:
  explicit Evaluator(FaultSet faults) : faults_(faults) {}

  double entropy(const DensityOp& rho) const;
  double entanglement_entropy(const PureState& state,
                              const Bipartition& part) const;
  std::optional<Complex> translation_phase(const PureState& state) const;

 private:
  FaultSet faults_;
};

struct ClaimResult {
  bool pass = true;
  std::string expected;
  std::string actual;
};

/// Incremental assertion recorder: keeps the first failing comparison.
class ClaimCheck {
 public:
  void near(const std::string& what, double expected, double actual,
            double tol);
  void near(const std::string& what, const Complex& expected,
            const Complex& actual, double tol);
  void is_true(const std::string& what, bool condition,
               const std::string& actual);
  void equal(const std::string& what, const std::string& expected,
             const std::string& actual);
  void matrix_near(const std::string& what, const Eigen::MatrixXcd& expected,
                   const Eigen::MatrixXcd& actual, double tol);

  ClaimResult result() const { return result_; }

 private:
  void fail(const std::string& expected, const std::string& actual);
  ClaimResult result_;
};

struct Claim {
  std::string id;
  std::string description;
  std::string op;  // operation under test, for provenance tagging
  bool divergence_note = false;
  std::function<ClaimResult(const Evaluator&)> run;
};

/// Every cited numeric value, as an executable claim.
std::vector<Claim> paper_claims();

struct VerifySummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int divergence_notes = 0;
};

/// Runs the claims against one evaluator, appending one report entry per
/// claim. Divergence claims that hold are counted as passes and annotated,
/// never as failures.
VerifySummary run_claims(const std::vector<Claim>& claims,
                         const FaultSet& faults, Report& report);

}  // namespace entkit::cli
