// The negative quantised Borel-Schur algebra S^-(n,r): the algebra dual to
// the graded coalgebra A(delta;r), with basis {xi_omega} dual to the normal
// monomial basis, and the equivalence between its modules and right
// A(delta;r)-comodules.
#pragma once

#include <map>
#include <vector>

#include "core/comod.hpp"

namespace qba {

// Dual of A(delta;r).  Elements are coordinate vectors on the dual basis
// {xi_omega}; products are stored as sparse structure constants
//   xi_p * xi_q = sum_nu K[nu] xi_nu,
// where K[nu] is the coefficient of c^p (x) c^q in Delta(c^nu).
class DualAlgebra {
 public:
  using Element = std::map<int, Scalar>;

  const CoalgebraPtr& piece() const { return piece_; }
  std::size_t dim() const { return piece_->dim(); }

  // Structure constants of xi_p * xi_q.
  const Element& product(std::size_t p, std::size_t q) const {
    return products_[p * dim() + q];
  }

  const Element& unit() const { return unit_; }

  Element multiply(const Element& x, const Element& y) const;

  // Label "xi[omega]" with the exponent matrix of the dual basis vector.
  std::string label(std::size_t p) const;

 private:
  friend DualAlgebra schur_algebra(int n, int r, const ParamSpec& params);
  CoalgebraPtr piece_;
  std::vector<Element> products_;  // row-major dim x dim
  Element unit_;
};

// Builds S^-(n,r) and verifies, before returning: the unit law on every
// basis vector and associativity on every triple of basis vectors
// (Error(CheckFailed) on any violation).
DualAlgebra schur_algebra(int n, int r, const ParamSpec& params);

// The action matrices of the dual basis on a comodule M over A(delta;r):
//   xi . m = (id (x) xi)(rho(m)).
// Verifies that the unit acts as the identity and that the action agrees
// with the structure constants on every pair (Error(CheckFailed) if not);
// ShapeMismatch unless M lives over the algebra's piece.
std::vector<LinearMap> comodule_to_module(const DualAlgebra& algebra,
                                          const Comodule& M);

// Inverse construction: the coaction rho(m) = sum_nu (xi_nu . m) (x) c^nu
// recovered from action matrices.  The result is a valid comodule with the
// given labels; DimensionMismatch unless there is one matrix per dual basis
// vector and all are square of equal size.
Comodule module_to_comodule(const DualAlgebra& algebra,
                            const std::vector<LinearMap>& action,
                            const std::vector<std::string>& labels);

}  // namespace qba
