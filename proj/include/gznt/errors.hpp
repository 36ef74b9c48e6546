#pragma once

#include <stdexcept>
#include <string>

namespace gznt {

/// Coarse category used by the CLI to pick an exit code.
enum class ErrorKind {
  Validation,  // malformed input or violated class contract (exit 2)
  Numerical,   // a numerical procedure did not converge (exit 3)
};

class Error : public std::runtime_error {
 public:
  Error(const char* name, ErrorKind kind, const std::string& what)
      : std::runtime_error(what), name_(name), kind_(kind) {}

  const char* name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  const char* name_;
  ErrorKind kind_;
};

#define GZNT_ERROR_LIST(X)              \
  /* evaluation */                      \
  X(EvaluationAtSingularity, Numerical) \
  X(BranchCutViolation, Numerical)      \
  X(PoleOfFamily, Numerical)            \
  X(QuadratureFailure, Numerical)       \
  X(LimitUnstable, Numerical)           \
  X(NotFound, Numerical)                \
  X(FitAmbiguous, Numerical)            \
  /* input / contract */                \
  X(ValidationError, Validation)        \
  X(ParseError, Validation)             \
  X(NotAGapEndpoint, Validation)        \
  X(DegenerateFactor, Validation)       \
  X(ZeroFunction, Validation)           \
  X(MultipleCandidates, Validation)     \
  X(NotAZero, Validation)               \
  X(NotHolomorphic, Validation)         \
  X(DerivativeSignatureMismatch, Validation) \
  X(FormMismatch, Validation)           \
  X(HigherOrderSingularity, Validation) \
  X(ConstraintViolation, Validation)    \
  X(DegenerateInput, Validation)

#define GZNT_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what)                              \
        : Error(#Name, ErrorKind::Kind, what) {}                        \
  };

GZNT_ERROR_LIST(GZNT_DEFINE_ERROR)

#undef GZNT_DEFINE_ERROR

/// Rethrows e as the same error type with ctx prepended to the message.
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& ctx);

}  // namespace gznt
