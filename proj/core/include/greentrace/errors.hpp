#pragma once

#include <stdexcept>
#include <string>

namespace greentrace {

/// Base class for all library errors. `code()` is the stable
/// machine-readable identifier the CLI prints in its stderr JSON.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class IoError : public Error {
public:
  explicit IoError(const std::string& w) : Error("IoError", w) {}
};

class NonPositiveSample : public Error {
public:
  explicit NonPositiveSample(const std::string& w)
      : Error("NonPositiveSample", w) {}
};

class NormalizationViolation : public Error {
public:
  NormalizationViolation(double measured, const std::string& w)
      : Error("NormalizationViolation", w), measured_integral(measured) {}
  double measured_integral;
};

class GridTooCoarse : public Error {
public:
  explicit GridTooCoarse(const std::string& w) : Error("GridTooCoarse", w) {}
};

class ConvergenceFailure : public Error {
public:
  explicit ConvergenceFailure(const std::string& w)
      : Error("ConvergenceFailure", w) {}
};

class EvaluationTooCloseToBoundary : public Error {
public:
  explicit EvaluationTooCloseToBoundary(const std::string& w)
      : Error("EvaluationTooCloseToBoundary", w) {}
};

class NonPositiveModulus : public Error {
public:
  explicit NonPositiveModulus(const std::string& w)
      : Error("NonPositiveModulus", w) {}
};

class SeriesNotConverged : public Error {
public:
  SeriesNotConverged(double tail, const std::string& w)
      : Error("SeriesNotConverged", w), tail_bound(tail) {}
  double tail_bound;
};

class UnwrapAmbiguity : public Error {
public:
  explicit UnwrapAmbiguity(const std::string& w)
      : Error("UnwrapAmbiguity", w) {}
};

class SelfIntersectingBoundary : public Error {
public:
  explicit SelfIntersectingBoundary(const std::string& w)
      : Error("SelfIntersectingBoundary", w) {}
};

class DegenerateDerivative : public Error {
public:
  explicit DegenerateDerivative(const std::string& w)
      : Error("DegenerateDerivative", w) {}
};

class InconsistentAnchors : public Error {
public:
  InconsistentAnchors(double res, const std::string& w)
      : Error("InconsistentAnchors", w), residual(res) {}
  double residual;
};

}  // namespace greentrace
