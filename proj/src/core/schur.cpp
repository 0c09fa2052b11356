#include "core/schur.hpp"

#include <string>

namespace qba {

DualAlgebra::Element DualAlgebra::multiply(const Element& x,
                                           const Element& y) const {
  Element out;
  for (const auto& [p, a] : x) {
    for (const auto& [q, b] : y) {
      for (const auto& [nu, k] : product(p, q)) {
        Scalar& slot = out[nu];
        slot += a * b * k;
        if (slot == 0) out.erase(nu);
      }
    }
  }
  return out;
}

std::string DualAlgebra::label(std::size_t p) const {
  return "xi[" + piece_->basis_at(p).to_string() + "]";
}

namespace {

bool element_equal(const DualAlgebra::Element& a, const DualAlgebra::Element& b) {
  return a == b;
}

}  // namespace

DualAlgebra schur_algebra(int n, int r, const ParamSpec& params) {
  DualAlgebra algebra;
  algebra.piece_ = graded_coalgebra(n, Shape::delta(n), r, params);
  const std::size_t dim = algebra.piece_->dim();

  algebra.products_.assign(dim * dim, {});
  for (std::size_t nu = 0; nu < dim; ++nu) {
    for (const auto& [p, q, c] : algebra.piece_->delta(nu)) {
      DualAlgebra::Element& slot =
          algebra.products_[static_cast<std::size_t>(p) * dim +
                            static_cast<std::size_t>(q)];
      Scalar& value = slot[static_cast<int>(nu)];
      value += c;
      if (value == 0) slot.erase(static_cast<int>(nu));
    }
  }
  for (std::size_t nu = 0; nu < dim; ++nu) {
    const Scalar e = algebra.piece_->counit(nu);
    if (e != 0) algebra.unit_[static_cast<int>(nu)] = e;
  }

  for (std::size_t p = 0; p < dim; ++p) {
    const DualAlgebra::Element basis_p{{static_cast<int>(p), Scalar(1)}};
    if (!element_equal(algebra.multiply(algebra.unit_, basis_p), basis_p) ||
        !element_equal(algebra.multiply(basis_p, algebra.unit_), basis_p)) {
      throw Error(ErrorCode::CheckFailed,
                  "dual algebra unit law fails on " + algebra.label(p));
    }
  }
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) {
      const DualAlgebra::Element pq = algebra.product(p, q);
      for (std::size_t s = 0; s < dim; ++s) {
        const DualAlgebra::Element basis_s{{static_cast<int>(s), Scalar(1)}};
        const DualAlgebra::Element basis_p{{static_cast<int>(p), Scalar(1)}};
        if (!element_equal(algebra.multiply(pq, basis_s),
                           algebra.multiply(basis_p, algebra.product(q, s)))) {
          throw Error(ErrorCode::CheckFailed,
                      "dual algebra associativity fails on (" +
                          algebra.label(p) + ", " + algebra.label(q) + ", " +
                          algebra.label(s) + ")");
        }
      }
    }
  }
  return algebra;
}

std::vector<LinearMap> comodule_to_module(const DualAlgebra& algebra,
                                          const Comodule& M) {
  if (!M.coalgebra || !(M.coalgebra->shape() == algebra.piece()->shape()) ||
      M.coalgebra->degree() != algebra.piece()->degree() ||
      M.coalgebra->n() != algebra.piece()->n() ||
      !(M.coalgebra->params() == algebra.piece()->params())) {
    throw Error(ErrorCode::ShapeMismatch,
                "module conversion requires a comodule over the dual's piece");
  }
  const std::size_t dim = algebra.dim();
  std::vector<LinearMap> action(dim, LinearMap(M.labels, M.labels));
  for (std::size_t m = 0; m < M.dim(); ++m) {
    for (const auto& [j, q, c] : M.rho[m]) {
      action[static_cast<std::size_t>(q)].at(static_cast<std::size_t>(j), m) += c;
    }
  }

  LinearMap unit_action = LinearMap::zero(M.labels, M.labels);
  for (const auto& [nu, c] : algebra.unit()) {
    for (std::size_t row = 0; row < M.dim(); ++row) {
      for (std::size_t col = 0; col < M.dim(); ++col) {
        unit_action.at(row, col) +=
            c * action[static_cast<std::size_t>(nu)].at(row, col);
      }
    }
  }
  if (!(unit_action == LinearMap::identity(M.labels))) {
    throw Error(ErrorCode::CheckFailed, "dual algebra unit does not act as identity");
  }
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) {
      LinearMap lhs = action[p].compose(action[q]);
      LinearMap rhs = LinearMap::zero(M.labels, M.labels);
      for (const auto& [nu, k] : algebra.product(p, q)) {
        for (std::size_t row = 0; row < M.dim(); ++row) {
          for (std::size_t col = 0; col < M.dim(); ++col) {
            rhs.at(row, col) += k * action[static_cast<std::size_t>(nu)].at(row, col);
          }
        }
      }
      if (!(lhs == rhs)) {
        throw Error(ErrorCode::CheckFailed,
                    "module action disagrees with the structure constants at (" +
                        algebra.label(p) + ", " + algebra.label(q) + ")");
      }
    }
  }
  return action;
}

Comodule module_to_comodule(const DualAlgebra& algebra,
                            const std::vector<LinearMap>& action,
                            const std::vector<std::string>& labels) {
  if (action.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "need one action matrix per dual basis vector");
  }
  const std::size_t module_dim = labels.size();
  for (const auto& matrix : action) {
    if (matrix.domain_dim() != module_dim || matrix.codomain_dim() != module_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "action matrices must be square on the labelled space");
    }
  }
  Comodule out;
  out.coalgebra = algebra.piece();
  out.labels = labels;
  out.rho.resize(module_dim);
  for (std::size_t m = 0; m < module_dim; ++m) {
    for (std::size_t nu = 0; nu < algebra.dim(); ++nu) {
      for (std::size_t j = 0; j < module_dim; ++j) {
        const Scalar& c = action[nu].at(j, m);
        if (c != 0) {
          out.rho[m].emplace_back(static_cast<int>(j), static_cast<int>(nu), c);
        }
      }
    }
  }
  out.validate();
  return out;
}

}  // namespace qba
