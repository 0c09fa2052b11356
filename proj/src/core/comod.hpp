// Finite-dimensional comodules over graded pieces A(b;r): construction,
// validation, tensor products, cotensor products (with the induced right
// comodule structure used by the induction functors), weight decomposition,
// formal characters, isomorphism search, and the graded short exact
// sequences 0 -> A(b;r-1) (x) k_{v_{b_l}} -> A(b;r) -> A(b-v_l;r) -> 0.
#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "core/coalg.hpp"
#include "core/linalg.hpp"

namespace qba {

// ---------------------------------------------------------------- modules ---

// A right comodule over a graded piece: rho(e_m) = sum c * e_j (x) basis_q,
// stored as per-basis-vector lists of (j, q, c).  validate() checks both
// comodule axioms exactly and throws CheckFailed on violation.
struct Comodule {
  CoalgebraPtr coalgebra;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> rho;
  std::vector<std::string> labels;

  std::size_t dim() const { return rho.size(); }
  void validate() const;
  bool is_valid() const;
};

// A left comodule: lambda(e_m) = sum c * basis_q (x) e_j, stored as lists
// of (q, j, c).
struct LeftComodule {
  CoalgebraPtr coalgebra;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> lambda;
  std::vector<std::string> labels;

  std::size_t dim() const { return lambda.size(); }
  void validate() const;
};

// The one-dimensional comodule k_a with rho(1) = 1 (x) [c^{diag a}].
// Throws DegreeMismatch unless sum(a) equals the degree of the piece.
Comodule one_dim(const std::vector<int>& weight, const CoalgebraPtr& over);

// A(b;r) as a right A(delta;r)-comodule, for any non-decreasing shape b.
Comodule regular_comodule(int n, const Shape& b, int degree,
                          const ParamSpec& params);

// A parabolic piece as the right regular comodule over itself (rho = Delta).
Comodule coalgebra_as_comodule(const CoalgebraPtr& piece);

// The left A(b';r)-comodule structure on A(b;r), b' parabolic and <= b:
// [x] -> sum [x_(1)]_{b'} (x) [x_(2)]_b.  When b' = a[l] the underlying
// result needs that no component of b equals l; HypothesisViolated otherwise.
LeftComodule left_coaction(int n, const Shape& b, const Shape& over, int degree,
                           const ParamSpec& params);

// Tensor product of comodules over pieces of the same parabolic shape;
// the coalgebra legs multiply in A(b).  Basis ordering: (m, n) flattened
// with the second factor fastest.
Comodule tensor(const Comodule& M, const Comodule& N);

// Direct sum (block coaction); basis of M first.
Comodule direct_sum(const Comodule& M, const Comodule& N);

// phi intertwines the coactions: rho_N(phi(m)) = (phi (x) id)(rho_M(m)).
bool intertwines(const LinearMap& phi, const Comodule& M, const Comodule& N);

// Searches the space of comodule maps M -> N for an invertible element:
// solves the intertwiner equations exactly, then tries basis elements and
// small deterministic combinations.  nullopt when none is found.
std::optional<LinearMap> find_isomorphism(const Comodule& M, const Comodule& N);

// ---------------------------------------------------------------- cotensor ---

// A(b;r) for parabolic b, delta <= b, as an (A(delta;r), A(delta;r))-
// bicomodule: lambda = (proj_delta (x) id) Delta, rho = (id (x) proj_delta)
// Delta.  This is the right-hand factor of the cotensor defining the
// induction functors (b = a[i]) and of the counit identity (b = delta).
struct InductionPiece {
  CoalgebraPtr over;   // A(delta;r)
  CoalgebraPtr piece;  // A(b;r)
  std::vector<std::vector<std::tuple<int, int, Scalar>>> lambda;  // (q, j, c)
  std::vector<std::vector<std::tuple<int, int, Scalar>>> rho;     // (j, q, c)

  std::size_t dim() const { return piece->dim(); }
};

// Cached; shape must be parabolic.
const InductionPiece& induction_piece(int n, const Shape& b, int degree,
                                      const ParamSpec& params);

// The cotensor M (x)^C N for C = A(delta;r): the kernel of
// rho_M (x) id - id (x) lambda_N inside M (x) N, together with the right
// comodule structure obtained by restricting id (x) rho_N.
struct CotensorSpace {
  Comodule module;
  // Basis vectors over pair coordinates Key{m, j} (M index, N index);
  // deterministic reduced-echelon form.
  std::vector<SparseVec> basis;
};

CotensorSpace cotensor(const Comodule& M, const InductionPiece& N);

// ----------------------------------------------------- weights & characters ---

struct WeightSpace {
  std::vector<int> weight;
  std::vector<std::vector<Scalar>> vectors;  // dense in M coordinates
};

// Simultaneous eigenspaces of the torus part of the coaction, in
// lexicographic weight order.  Throws NotDiagonalizable when the weight
// spaces fail to span (signals an invalid input comodule).
std::vector<WeightSpace> weight_decompose(const Comodule& M);

// Formal characters: Z-linear combinations of monomials x^a.
struct CharPoly {
  std::map<std::vector<int>, long long> coeffs;

  static CharPoly monomial(const std::vector<int>& exponents, long long c = 1);
  void add_term(const std::vector<int>& exponents, long long c);
  CharPoly operator+(const CharPoly& other) const;
  CharPoly operator-(const CharPoly& other) const;
  CharPoly operator*(const CharPoly& other) const;
  bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }
  bool is_zero() const { return coeffs.empty(); }
  std::string to_string() const;  // e.g. "x1*x2 + x1*x3"; "0" when zero
};

CharPoly character(const Comodule& M);

// ---------------------------------------------------------- exact sequences ---

// The graded strand 0 -> A(b;r-1) (x) k_{v_{b_l}} -f-> A(b;r) -pi-> A(b-v_l;r)
// -> 0 with f = right multiplication by c_{l,b_l} and pi the support
// projection.  Four checks: f injective, pi surjective, im f = ker pi,
// and both maps intertwine the right A(delta)-coactions (f with the
// k_{v_{b_l}} twist on the second tensor leg).
struct ExactSequenceReport {
  Shape b;
  int l = 0;
  int degree = 0;
  std::size_t dim_sub = 0, dim_mid = 0, dim_quot = 0;
  bool f_injective = false;
  bool pi_surjective = false;
  bool middle_exact = false;
  bool intertwines = false;
  bool ok() const {
    return f_injective && pi_surjective && middle_exact && intertwines;
  }
};

ExactSequenceReport check_exact_sequence(int n, const Shape& b, int l, int degree,
                                         const ParamSpec& params);

}  // namespace qba
