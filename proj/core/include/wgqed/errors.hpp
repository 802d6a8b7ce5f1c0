#pragma once

#include <stdexcept>
#include <string>

namespace wgqed {

// Raised for malformed or inconsistent configuration input (bad JSON, unknown
// keys, missing required fields).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A config value that parsed fine but violates a physical or structural
// constraint.  `field` is a dotted path into the config ("qubits[0].g_MHz").
class ValidationError : public ConfigError {
 public:
  ValidationError(std::string field, const std::string& what)
      : ConfigError(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Numerical failure inside an operation (non-convergence, singular system,
// domain violation discovered at run time).  `operation` names the entry
// point so callers can report which stage failed.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string operation, const std::string& what)
      : std::runtime_error(operation + ": " + what),
        operation_(std::move(operation)) {}

  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string operation_;
};

// The bound-state bracketing interval shows no sign change: either the qubit
// frequency sits too far above the band edge or the coupling is too weak for
// the pole to detach.  Residuals at the bracket ends are kept for diagnostics.
class NoBoundStateError : public NumericalError {
 public:
  NoBoundStateError(double residual_low, double residual_high)
      : NumericalError("bound_state",
                       "no sign change across the search interval"),
        residual_low_(residual_low),
        residual_high_(residual_high) {}

  double residual_low() const noexcept { return residual_low_; }
  double residual_high() const noexcept { return residual_high_; }

 private:
  double residual_low_;
  double residual_high_;
};

// A pair-splitting solve that found the wrong multiplicity of roots.
class DegenerateConfigError : public NumericalError {
 public:
  DegenerateConfigError(std::string operation, int roots_found,
                        const std::string& what)
      : NumericalError(std::move(operation), what), roots_found_(roots_found) {}

  int roots_found() const noexcept { return roots_found_; }

 private:
  int roots_found_;
};

// Adaptive quadrature exhausted its subdivision budget before reaching the
// requested tolerance.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(double achieved_tolerance, const std::string& what)
      : NumericalError("integrate_adaptive", what),
        achieved_tolerance_(achieved_tolerance) {}

  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

// Fixed-point iteration failed to settle.  The last two iterates are kept so
// the caller can judge whether it was oscillating or diverging.
class IterationError : public NumericalError {
 public:
  IterationError(std::string operation, double last_iterate,
                 double previous_iterate)
      : NumericalError(std::move(operation),
                       "iteration did not converge"),
        last_iterate_(last_iterate),
        previous_iterate_(previous_iterate) {}

  double last_iterate() const noexcept { return last_iterate_; }
  double previous_iterate() const noexcept { return previous_iterate_; }

 private:
  double last_iterate_;
  double previous_iterate_;
};

}  // namespace wgqed
