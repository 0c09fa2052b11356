// Coalgebra structure: the comultiplication Delta(c_ij) = sum_k c_ik (x) c_kj
// of A(n), its restriction to graded pieces A(b;r) of parabolic shape
// quotients, multi-leg projections, and the parameter-change isomorphism.
#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "core/freealg.hpp"
#include "core/linalg.hpp"

namespace qba {

// --------------------------------------------------------- tensor elements ---

// An element of a k-fold tensor power of shape quotients of A(n), expressed
// on normal monomials leg by leg.
struct TensorElement {
  int n = 0;
  std::vector<std::optional<Shape>> leg_shapes;
  std::map<std::vector<Exponent>, Scalar> terms;

  void add_term(const std::vector<Exponent>& key, const Scalar& coeff);
  bool operator==(const TensorElement& other) const {
    return n == other.n && terms == other.terms;
  }
};

// (proj_{t_1} (x) ... (x) proj_{t_k}) of the iterated comultiplication of x,
// computed in A(n) with dead terms pruned as soon as a leg is final.  A leg
// without a shape stays unprojected.
TensorElement comultiply_legs(const AlgebraElement& x, const RuleSet& ambient_rules,
                              const std::vector<std::optional<Shape>>& leg_shapes);

// Two-leg comultiplication of an element of A(n) or A(b).  Shaped input
// requires a parabolic shape (NonParabolicShape otherwise); both output legs
// carry the input shape.
TensorElement comultiply(const AlgebraElement& x, const ParamSpec& params);

// ----------------------------------------------------------- graded pieces ---

// The degree-r piece A(b;r) of a parabolic shape quotient, with its
// comultiplication A(b;r) -> A(b;r) (x) A(b;r) and counit as exact structure
// constants on the admissible-monomial basis.  Coassociativity and the
// counit laws are verified at construction.
class GradedCoalgebra {
 public:
  GradedCoalgebra(int n, Shape shape, int degree, ParamSpec params);

  int n() const { return n_; }
  int degree() const { return r_; }
  const Shape& shape() const { return shape_; }
  const ParamSpec& params() const { return params_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const Exponent& basis_at(std::size_t i) const { return basis_[i]; }
  int index_of(const Exponent& omega) const;  // -1 if absent

  // Delta(e_i) = sum coeff (e_j (x) e_k).
  const std::vector<std::tuple<int, int, Scalar>>& delta(std::size_t i) const {
    return delta_[i];
  }
  const Scalar& counit(std::size_t i) const { return counit_[i]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string description() const;  // e.g. "A((1,2,3);2)"

 private:
  int n_;
  int r_;
  Shape shape_;
  ParamSpec params_;
  std::vector<Exponent> basis_;
  std::map<Exponent, int> index_;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> delta_;
  std::vector<Scalar> counit_;
  std::vector<std::string> labels_;

  void validate() const;
};

using CoalgebraPtr = std::shared_ptr<const GradedCoalgebra>;

// Cached constructor (pieces are requested repeatedly by the functor layer).
CoalgebraPtr graded_coalgebra(int n, const Shape& shape, int degree,
                              const ParamSpec& params);

// -------------------------------------------------------- multi-projection ---

// rho_{b; t_1,...,t_k}: A(b;r) -> A(t_1;r) (x) ... (x) A(t_k;r), the
// projected iterated comultiplication.  Columns are stored sparsely over
// tuples of target basis indices.  Construction verifies well-definedness:
// the same composite kills every non-admissible degree-r monomial of A(n).
struct MultiProjection {
  CoalgebraPtr source;
  std::vector<CoalgebraPtr> targets;
  std::vector<SparseVec> columns;  // one per source basis vector

  LinearMap to_linear_map() const;  // dense, full tensor codomain
  std::vector<std::string> tensor_labels() const;
};

MultiProjection multi_projection(int n, const Shape& b,
                                 const std::vector<Shape>& targets, int degree,
                                 const ParamSpec& params);

// The right A(delta;r)-coaction on A(b;r) for an arbitrary shape b:
// x -> x_(1) (x) x_(2) with its first leg in A(b;r) and second in
// A(delta;r).  Returned as sparse structure constants
// (source index) -> [(A(b;r) index, A(delta;r) index, coeff)].
// Well-definedness is verified the same way as for multi_projection.
std::vector<std::vector<std::tuple<int, int, Scalar>>> right_delta_coaction(
    int n, const Shape& b, int degree, const ParamSpec& params,
    const std::vector<Exponent>& basis, const std::vector<Exponent>& delta_basis);

// ------------------------------------------------- parameter-change twist ---

// J(omega) = sum_{i<j, s<t} omega_{it} * omega_{js}.
long jw(const Exponent& omega);

// The coalgebra isomorphism A_{alpha,beta}(n) -> A_{alpha',beta'}(n),
// c^omega -> (alpha/alpha')^{J(omega)} c^omega, defined when
// alpha*beta = alpha'*beta' (ProductMismatch otherwise).
AlgebraElement param_iso(const AlgebraElement& x, const ParamSpec& from,
                         const ParamSpec& to);

// Verifies Delta'(phi(c^omega)) = (phi (x) phi)(Delta(c^omega)) for every
// basis monomial of A(b;r); returns the number of monomials checked.
std::size_t check_param_iso_transport(int n, const Shape& shape, int degree,
                                      const ParamSpec& from, const ParamSpec& to);

// --------------------------------------------------------------- the torus ---

// The torus projection pi: A(b;r) -> span of diagonal monomials,
// pi(c^omega) = c^omega if omega is diagonal, else 0.
AlgebraElement torus_projection(const AlgebraElement& x);

}  // namespace qba
