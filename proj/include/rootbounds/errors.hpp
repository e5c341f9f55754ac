#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootbounds {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All coefficients of the input were zero.
class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("zero polynomial") {}
};

/// Operation requires degree >= 1.
class ConstantPolynomialError : public Error {
 public:
  ConstantPolynomialError() : Error("constant polynomial has no derivative") {}
};

/// Input text is empty or all whitespace.
class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty polynomial text") {}
};

/// Malformed polynomial text; `offset` is the byte position of the problem.
class PolynomialSyntaxError : public Error {
 public:
  PolynomialSyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Coefficient data does not describe a valid Cauchy polynomial.
class NotCauchyError : public Error {
 public:
  using Error::Error;
};

/// Root solver failed to reach the requested tolerance.
class ToleranceNotReachedError : public Error {
 public:
  ToleranceNotReachedError() : Error("root solver did not converge") {}
};

/// Every coefficient shares one sign; the polynomial has no positive roots
/// and the upper-bound formulas do not apply.
class AllSameSignError : public Error {
 public:
  AllSameSignError() : Error("all coefficients share the same sign") {}
};

/// Requested recursion exit stage is outside [1, degree].
class StageOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Extraction degree l is not a positive-coefficient degree above every
/// negative-coefficient degree.
class ExtractionDegreeError : public Error {
 public:
  using Error::Error;
};

/// Bound requires at least one negative coefficient.
class NoNegativeCoefficientsError : public Error {
 public:
  NoNegativeCoefficientsError() : Error("no negative coefficients") {}
};

/// Root isolation exceeded the bisection depth limit.
class BisectionDepthError : public Error {
 public:
  BisectionDepthError() : Error("root isolation exceeded depth limit") {}
};

/// Invalid random-corpus generator specification.
class GeneratorSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace rootbounds
