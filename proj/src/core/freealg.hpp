// The free algebra F(n) on generators x_{ij} (1 <= i,j <= n) together with
// the two-parameter quantization relations, its rewriting system, and the
// shape quotients A(b).
//
// Generator order: x_{js} > x_{it} iff j > i, or j = i and s > t (row-major).
// Words are compared by length first, then lexicographically on letters.
// Normal words are the non-decreasing ones; they biject with n x n matrices
// of multiplicities ("exponents").  A shape b = (b_1,...,b_n) kills every
// generator x_{is} with s > b_i; exponents supported on the surviving
// positions are called admissible.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/scalar.hpp"

namespace qba {

// ------------------------------------------------------------------ shape ---

struct Shape {
  std::vector<int> b;  // b[i] = largest allowed column in row i+1, in [1..n]

  Shape() = default;
  explicit Shape(std::vector<int> bounds);

  int n() const { return static_cast<int>(b.size()); }

  static Shape delta(int n);        // (1, 2, ..., n)
  static Shape a(int n, int l);     // delta + v_l, 1 <= l <= n-1
  static Shape full(int n);         // (n, ..., n): no generator killed

  bool is_nondecreasing() const;
  // b comes from a composition lambda of n, i.e. consists of blocks where
  // the value equals the index of the last entry of the block (1-based).
  bool is_parabolic() const;
  bool leq(const Shape& other) const;  // componentwise
  bool operator==(const Shape& other) const { return b == other.b; }

  Shape plus_v(int l) const;   // b + v_l
  Shape minus_v(int l) const;  // b - v_l

  std::string to_string() const;
};

// ------------------------------------------------------- words & exponents ---

// Letters are flat generator codes: code = (row-1)*n + (col-1).
using Word = std::vector<std::int16_t>;

inline int gen_code(int n, int row, int col) { return (row - 1) * n + (col - 1); }
inline int gen_row(int n, int code) { return code / n + 1; }
inline int gen_col(int n, int code) { return code % n + 1; }
std::string gen_name(int n, int code);  // "c[i,j]"

struct Exponent {
  int n = 0;
  std::vector<std::int32_t> e;  // n*n, row-major

  Exponent() = default;
  explicit Exponent(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {}
  static Exponent from_word(int n, const Word& word);
  static Exponent diagonal(const std::vector<int>& weight);
  static Exponent unit(int n, int row, int col);

  std::int32_t& at(int row, int col) { return e[(row - 1) * n + (col - 1)]; }
  std::int32_t at(int row, int col) const { return e[(row - 1) * n + (col - 1)]; }

  int degree() const;
  std::vector<int> row_weight() const;
  std::vector<int> col_weight() const;
  bool is_diagonal() const;
  bool admissible(const Shape& shape) const;
  Word to_word() const;  // letters in non-decreasing order

  Exponent operator+(const Exponent& other) const;

  bool operator<(const Exponent& other) const { return e < other.e; }  // lex
  bool operator==(const Exponent& other) const { return e == other.e; }

  std::string to_string() const;  // "c11.c22" style; "1" for the empty word
};

// Length-then-lex order on the normal words attached to two exponents.
bool word_order_less(const Exponent& a, const Exponent& b);

// --------------------------------------------------------------- elements ---

// An element of A(n) (shape empty) or of the quotient A(b) (shape set),
// expressed on the normal-monomial basis.  Invariants: no zero coefficients;
// when shaped, every exponent is admissible.
struct AlgebraElement {
  int n = 0;
  std::optional<Shape> shape;
  std::map<Exponent, Scalar> terms;

  static AlgebraElement zero(int n, std::optional<Shape> shape = std::nullopt);
  static AlgebraElement monomial(int n, const Exponent& omega, const Scalar& c = 1,
                                 std::optional<Shape> shape = std::nullopt);

  void add_term(const Exponent& omega, const Scalar& coeff);
  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const Exponent& omega) const;
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement scaled(const Scalar& c) const;
  bool operator==(const AlgebraElement& other) const;

  // Leading exponent in the length-then-lex word order; errors on zero.
  const Exponent& leading() const;

  std::string to_string() const;
};

// ----------------------------------------------------------------- rules ---

struct RewriteRule {
  Word lhs;                                    // length 2 (quadratic) or 1 (kill)
  std::vector<std::pair<Scalar, Word>> rhs;    // empty for kills
};

// The rewriting system of A(n) resp. A(b): one quadratic rule per strictly
// decreasing two-letter word, plus one kill rule per dead generator.
class RuleSet {
 public:
  RuleSet(int n, ParamSpec params, std::optional<Shape> shape = std::nullopt);

  int n() const { return n_; }
  const ParamSpec& params() const { return params_; }
  const std::optional<Shape>& shape() const { return shape_; }

  bool killed(int code) const;
  // Replacement for the decreasing two-letter word [hi, lo] (hi > lo).
  std::vector<std::pair<Scalar, Word>> rewrite_pair(int hi, int lo) const;
  std::vector<RewriteRule> rules() const;

  // Normal form of a single word (leftmost reducible pair first); memoized.
  const std::map<Exponent, Scalar>& normalize(const Word& word) const;

  AlgebraElement reduce(const std::vector<std::pair<Scalar, Word>>& input) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const {
      std::size_t h = 1469598103934665603ull;
      for (auto c : w) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ull;
      return h;
    }
  };

  int n_;
  ParamSpec params_;
  std::optional<Shape> shape_;
  mutable std::unordered_map<Word, std::map<Exponent, Scalar>, WordHash> memo_;
};

// --------------------------------------------------------------- operations ---

// All admissible exponents of the given degree, in lexicographic order.
std::vector<Exponent> monomial_basis(int n, const std::optional<Shape>& shape,
                                     int degree);

// Support filtering onto the target shape (which must refine the current one).
AlgebraElement project(const AlgebraElement& x, const Shape& target);

struct DiamondFailure {
  Word overlap;
  AlgebraElement left_first;
  AlgebraElement right_first;
};

struct DiamondReport {
  std::size_t ambiguities = 0;
  std::vector<DiamondFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Resolves every overlap ambiguity of the rewriting system both ways and
// compares normal forms.
DiamondReport check_diamond(const RuleSet& rules);

// The quantum determinant of A(n), computed from the row expansion and
// checked against the column expansion (FormulaMismatch when they differ).
AlgebraElement quantum_determinant(int n, const ParamSpec& params);

}  // namespace qba
