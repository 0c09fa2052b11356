#include "core/scalar.hpp"

#include <cctype>

namespace qba {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonParabolicShape: return "NonParabolicShape";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::IllDefined: return "IllDefined";
    case ErrorCode::ProductMismatch: return "ProductMismatch";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::RestrictionFailure: return "RestrictionFailure";
    case ErrorCode::IndexViolation: return "IndexViolation";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  }
  // mpz_class rejects an explicit leading '+'.
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Scalar value{mpz_class(num), mpz_class(den)};
  if (value.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string scalar_to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar scalar_pow(const Scalar& value, long exponent) {
  if (exponent == 0) return Scalar(1);
  if (value == 0 && exponent < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative power of zero");
  }
  Scalar base = exponent > 0 ? value : Scalar(1) / value;
  unsigned long k = exponent > 0 ? static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(-exponent);
  Scalar out(1);
  while (k > 0) {
    if (k & 1UL) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

ParamSpec::ParamSpec(Scalar a, Scalar b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha == 0 || beta == 0) {
    throw Error(ErrorCode::InvalidArgument, "parameters must be nonzero");
  }
}

ParamSpec ParamSpec::from_strings(const std::string& a, const std::string& b) {
  return ParamSpec(scalar_from_string(a), scalar_from_string(b));
}

Scalar ParamSpec::alpha_inv() const { return Scalar(1) / alpha; }
Scalar ParamSpec::beta_inv() const { return Scalar(1) / beta; }

}  // namespace qba
