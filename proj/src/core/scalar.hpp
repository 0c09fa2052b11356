// Exact scalar arithmetic for the quantized coordinate algebra toolkit.
//
// The ground field is Q, realized as GMP rationals.  Every scalar is kept in
// canonical form (lowest terms, positive denominator); the helpers here are
// the only places that construct scalars from raw integers or strings.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qba {

using Scalar = mpq_class;

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidShape,
  ShapeMismatch,
  DegreeMismatch,
  NonParabolicShape,
  NotInvertible,
  DimensionMismatch,
  LabelMismatch,
  IllDefined,
  ProductMismatch,
  FormulaMismatch,
  HypothesisViolated,
  NotDiagonalizable,
  RestrictionFailure,
  IndexViolation,
  CheckFailed,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

// Parses "p", "-p", or "p/q" (q != 0) into canonical form.  Throws
// Error(Parse) on anything else, including embedded whitespace or decimals.
Scalar scalar_from_string(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string scalar_to_string(const Scalar& value);

// value^exponent for possibly negative exponents; value must be nonzero
// when exponent < 0.
Scalar scalar_pow(const Scalar& value, long exponent);

// The two deformation parameters.  Both must be nonzero (their inverses
// appear in the defining relations).
struct ParamSpec {
  Scalar alpha;
  Scalar beta;

  ParamSpec(Scalar a, Scalar b);
  static ParamSpec from_strings(const std::string& a, const std::string& b);

  Scalar alpha_inv() const;
  Scalar beta_inv() const;
  bool operator==(const ParamSpec& other) const {
    return alpha == other.alpha && beta == other.beta;
  }
};

}  // namespace qba
