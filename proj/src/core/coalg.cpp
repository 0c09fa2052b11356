#include "core/coalg.hpp"

#include <sstream>

namespace qba {

void TensorElement::add_term(const std::vector<Exponent>& key, const Scalar& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

TensorElement comultiply_legs(const AlgebraElement& x, const RuleSet& ambient_rules,
                              const std::vector<std::optional<Shape>>& leg_shapes) {
  const int n = x.n;
  const std::size_t k = leg_shapes.size();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least one leg");

  TensorElement out;
  out.n = n;
  out.leg_shapes = leg_shapes;

  const auto admissible_leg = [&](const Exponent& omega, std::size_t leg) {
    return !leg_shapes[leg] || omega.admissible(*leg_shapes[leg]);
  };

  for (const auto& [omega, coeff] : x.terms) {
    // Expand Delta^{(k-1)}(c^omega) letter by letter: every letter c_{ij}
    // splits into all paths c_{i,t1} (x) c_{t1,t2} (x) ... (x) c_{t_{k-1},j}.
    std::map<std::vector<Exponent>, Scalar> partial;
    partial.emplace(std::vector<Exponent>(k, Exponent(n)), Scalar(1));

    const Word word = omega.to_word();
    for (const auto code : word) {
      const int i = gen_row(n, code), j = gen_col(n, code);
      std::map<std::vector<Exponent>, Scalar> next;
      std::vector<int> path(k + 1);
      path[0] = i;
      path[k] = j;
      // Enumerate interior indices t_1..t_{k-1} in {1..n}.
      std::vector<int> t(k - 1, 1);
      while (true) {
        for (std::size_t m = 0; m < k - 1; ++m) path[m + 1] = t[m];
        for (const auto& [legs, c] : partial) {
          // Multiply leg m by the letter c_{path[m], path[m+1]}.
          std::vector<std::map<Exponent, Scalar>> leg_products(k);
          bool dead = false;
          for (std::size_t m = 0; m < k && !dead; ++m) {
            Word w = legs[m].to_word();
            w.push_back(static_cast<std::int16_t>(gen_code(n, path[m], path[m + 1])));
            for (const auto& [om, cc] : ambient_rules.normalize(w)) {
              if (admissible_leg(om, m)) leg_products[m].emplace(om, cc);
            }
            if (leg_products[m].empty()) dead = true;
          }
          if (dead) continue;
          // Distribute the product across legs.
          std::vector<std::map<Exponent, Scalar>::const_iterator> its(k);
          for (std::size_t m = 0; m < k; ++m) its[m] = leg_products[m].begin();
          while (true) {
            std::vector<Exponent> key(k);
            Scalar value = c;
            for (std::size_t m = 0; m < k; ++m) {
              key[m] = its[m]->first;
              value *= its[m]->second;
            }
            auto [slot, inserted] = next.emplace(std::move(key), value);
            if (!inserted) {
              slot->second += value;
              if (slot->second == 0) next.erase(slot);
            }
            std::size_t m = 0;
            while (m < k && ++its[m] == leg_products[m].end()) {
              its[m] = leg_products[m].begin();
              ++m;
            }
            if (m == k) break;
          }
        }
        std::size_t m = 0;
        while (m < k - 1 && ++t[m] > n) {
          t[m] = 1;
          ++m;
        }
        if (m == k - 1) break;
      }
      partial = std::move(next);
    }
    for (const auto& [legs, c] : partial) out.add_term(legs, coeff * c);
  }
  return out;
}

TensorElement comultiply(const AlgebraElement& x, const ParamSpec& params) {
  if (x.shape && !x.shape->is_parabolic()) {
    throw Error(ErrorCode::NonParabolicShape,
                "comultiplication requires a parabolic shape, got " +
                    x.shape->to_string());
  }
  const RuleSet ambient(x.n, params);
  return comultiply_legs(x, ambient, {x.shape, x.shape});
}

// ----------------------------------------------------------- graded pieces ---

GradedCoalgebra::GradedCoalgebra(int n, Shape shape, int degree, ParamSpec params)
    : n_(n), r_(degree), shape_(std::move(shape)), params_(std::move(params)) {
  if (!shape_.is_parabolic()) {
    throw Error(ErrorCode::NonParabolicShape,
                "graded coalgebra requires a parabolic shape, got " +
                    shape_.to_string());
  }
  if (r_ < 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");

  basis_ = monomial_basis(n_, shape_, r_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(basis_[i], static_cast<int>(i));
    labels_.push_back(basis_[i].to_string());
  }

  const RuleSet ambient(n_, params_);
  delta_.resize(basis_.size());
  counit_.resize(basis_.size(), Scalar(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const AlgebraElement mono =
        AlgebraElement::monomial(n_, basis_[i], Scalar(1), shape_);
    const TensorElement dd = comultiply_legs(mono, ambient, {shape_, shape_});
    for (const auto& [legs, c] : dd.terms) {
      const int a = index_of(legs[0]);
      const int b = index_of(legs[1]);
      if (a < 0 || b < 0) {
        throw Error(ErrorCode::Internal, "comultiplication left the graded piece");
      }
      delta_[i].emplace_back(a, b, c);
    }
    // The counit is 1 on diagonal monomials and 0 otherwise.
    counit_[i] = basis_[i].is_diagonal() ? Scalar(1) : Scalar(0);
  }
  validate();
}

int GradedCoalgebra::index_of(const Exponent& omega) const {
  auto it = index_.find(omega);
  return it == index_.end() ? -1 : it->second;
}

std::string GradedCoalgebra::description() const {
  std::ostringstream os;
  os << "A(" << shape_.to_string() << ";" << r_ << ")";
  return os.str();
}

void GradedCoalgebra::validate() const {
  const std::size_t d = dim();
  // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
  for (std::size_t i = 0; i < d; ++i) {
    std::map<Key, Scalar> left, right;
    for (const auto& [a, b, c] : delta_[i]) {
      for (const auto& [p, q, cc] : delta_[a]) {
        sparse_add(left, Key{p, q, b}, c * cc);
      }
      for (const auto& [p, q, cc] : delta_[b]) {
        sparse_add(right, Key{a, p, q}, c * cc);
      }
    }
    if (left != right) {
      throw Error(ErrorCode::CheckFailed,
                  "coassociativity fails in " + description() + " at " +
                      basis_[i].to_string());
    }
    // Counit: (eps (x) id) Delta = id = (id (x) eps) Delta.
    std::map<int, Scalar> lcounit, rcounit;
    for (const auto& [a, b, c] : delta_[i]) {
      if (counit_[a] != 0) lcounit[b] += c * counit_[a];
      if (counit_[b] != 0) rcounit[a] += c * counit_[b];
    }
    std::erase_if(lcounit, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rcounit, [](const auto& kv) { return kv.second == 0; });
    const std::map<int, Scalar> expected{{static_cast<int>(i), Scalar(1)}};
    if (lcounit != expected || rcounit != expected) {
      throw Error(ErrorCode::CheckFailed,
                  "counit law fails in " + description() + " at " +
                      basis_[i].to_string());
    }
  }
}

namespace {

struct PieceKey {
  int n;
  std::vector<int> shape;
  int degree;
  std::string alpha, beta;
  bool operator<(const PieceKey& other) const {
    return std::tie(n, shape, degree, alpha, beta) <
           std::tie(other.n, other.shape, other.degree, other.alpha, other.beta);
  }
};

}  // namespace

CoalgebraPtr graded_coalgebra(int n, const Shape& shape, int degree,
                              const ParamSpec& params) {
  static std::map<PieceKey, CoalgebraPtr> cache;
  const PieceKey key{n, shape.b, degree, scalar_to_string(params.alpha),
                     scalar_to_string(params.beta)};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto piece = std::make_shared<const GradedCoalgebra>(n, shape, degree, params);
  cache.emplace(key, piece);
  return piece;
}

// -------------------------------------------------------- multi-projection ---

namespace {

// Shared workhorse: projected iterated comultiplication columns for every
// degree-r monomial of A(n), verifying that non-admissible ones die.
std::vector<SparseVec> projected_delta_columns(
    int n, const Shape& b, const std::vector<CoalgebraPtr>& targets, int degree,
    const ParamSpec& params, const std::vector<Exponent>& source_basis) {
  const RuleSet ambient(n, params);
  std::vector<std::optional<Shape>> leg_shapes;
  leg_shapes.reserve(targets.size());
  for (const auto& t : targets) leg_shapes.emplace_back(t->shape());

  const auto column_of = [&](const Exponent& omega) {
    const AlgebraElement mono = AlgebraElement::monomial(n, omega);
    const TensorElement image = comultiply_legs(mono, ambient, leg_shapes);
    SparseVec column;
    for (const auto& [legs, c] : image.terms) {
      Key key(legs.size());
      for (std::size_t m = 0; m < legs.size(); ++m) {
        const int idx = targets[m]->index_of(legs[m]);
        if (idx < 0) throw Error(ErrorCode::Internal, "projection left the piece");
        key[m] = idx;
      }
      sparse_add(column, key, c);
    }
    return column;
  };

  std::vector<SparseVec> columns;
  columns.reserve(source_basis.size());
  for (const auto& omega : source_basis) columns.push_back(column_of(omega));

  // Well-definedness: the composite factors through A(b;r), i.e. it kills
  // the non-admissible monomials spanning the kernel of A(n;r) -> A(b;r).
  for (const auto& omega : monomial_basis(n, std::nullopt, degree)) {
    if (omega.admissible(b)) continue;
    if (!column_of(omega).empty()) {
      throw Error(ErrorCode::IllDefined,
                  "projection does not factor through the quotient at " +
                      omega.to_string());
    }
  }
  return columns;
}

}  // namespace

MultiProjection multi_projection(int n, const Shape& b,
                                 const std::vector<Shape>& target_shapes,
                                 int degree, const ParamSpec& params) {
  if (target_shapes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need at least one target");
  }
  const Shape delta_shape = Shape::delta(n);
  for (const auto& t : target_shapes) {
    if (!t.is_parabolic()) {
      throw Error(ErrorCode::NonParabolicShape,
                  "multi-projection target must be parabolic, got " + t.to_string());
    }
    if (!delta_shape.leq(t) || !t.leq(b)) {
      throw Error(ErrorCode::InvalidArgument,
                  "multi-projection target must lie between delta and the source");
    }
  }
  MultiProjection out;
  out.source = graded_coalgebra(n, b, degree, params);
  for (const auto& t : target_shapes) {
    out.targets.push_back(graded_coalgebra(n, t, degree, params));
  }
  out.columns = projected_delta_columns(n, b, out.targets, degree, params,
                                        out.source->basis());
  return out;
}

std::vector<std::string> MultiProjection::tensor_labels() const {
  std::vector<std::string> labels{""};
  for (const auto& t : targets) {
    std::vector<std::string> next;
    next.reserve(labels.size() * t->dim());
    for (const auto& prefix : labels) {
      for (const auto& l : t->labels()) {
        next.push_back(prefix.empty() ? l : prefix + "(x)" + l);
      }
    }
    labels = std::move(next);
  }
  return labels;
}

LinearMap MultiProjection::to_linear_map() const {
  const std::vector<std::string> cod = tensor_labels();
  std::vector<std::size_t> strides(targets.size(), 1);
  for (std::size_t m = targets.size(); m-- > 1;) {
    strides[m - 1] = strides[m] * targets[m]->dim();
  }
  LinearMap map(source->labels(), cod);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, c] : columns[j]) {
      std::size_t row = 0;
      for (std::size_t m = 0; m < key.size(); ++m) {
        row += static_cast<std::size_t>(key[m]) * strides[m];
      }
      map.at(row, j) = c;
    }
  }
  return map;
}

std::vector<std::vector<std::tuple<int, int, Scalar>>> right_delta_coaction(
    int n, const Shape& b, int degree, const ParamSpec& params,
    const std::vector<Exponent>& basis, const std::vector<Exponent>& delta_basis) {
  const RuleSet ambient(n, params);
  const Shape delta_shape = Shape::delta(n);
  std::map<Exponent, int> b_index, d_index;
  for (std::size_t i = 0; i < basis.size(); ++i) b_index.emplace(basis[i], i);
  for (std::size_t i = 0; i < delta_basis.size(); ++i) {
    d_index.emplace(delta_basis[i], i);
  }
  const std::vector<std::optional<Shape>> legs{b, delta_shape};

  const auto expand = [&](const Exponent& omega) {
    std::vector<std::tuple<int, int, Scalar>> out;
    const TensorElement image = comultiply_legs(
        AlgebraElement::monomial(n, omega), ambient, legs);
    for (const auto& [pair, c] : image.terms) {
      auto ib = b_index.find(pair[0]);
      auto id = d_index.find(pair[1]);
      if (ib == b_index.end() || id == d_index.end()) {
        throw Error(ErrorCode::Internal, "coaction left the graded piece");
      }
      out.emplace_back(ib->second, id->second, c);
    }
    return out;
  };

  std::vector<std::vector<std::tuple<int, int, Scalar>>> rho;
  rho.reserve(basis.size());
  for (const auto& omega : basis) rho.push_back(expand(omega));
  for (const auto& omega : monomial_basis(n, std::nullopt, degree)) {
    if (omega.admissible(b)) continue;
    if (!expand(omega).empty()) {
      throw Error(ErrorCode::IllDefined,
                  "coaction does not factor through the quotient at " +
                      omega.to_string());
    }
  }
  return rho;
}

// ------------------------------------------------- parameter-change twist ---

long jw(const Exponent& omega) {
  long total = 0;
  const int n = omega.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
          total += static_cast<long>(omega.at(i, t)) * omega.at(j, s);
        }
      }
    }
  }
  return total;
}

AlgebraElement param_iso(const AlgebraElement& x, const ParamSpec& from,
                         const ParamSpec& to) {
  if (from.alpha * from.beta != to.alpha * to.beta) {
    throw Error(ErrorCode::ProductMismatch,
                "parameter change requires alpha*beta = alpha'*beta'");
  }
  const Scalar ratio = from.alpha / to.alpha;
  AlgebraElement out = AlgebraElement::zero(x.n, x.shape);
  for (const auto& [omega, c] : x.terms) {
    out.add_term(omega, c * scalar_pow(ratio, jw(omega)));
  }
  return out;
}

std::size_t check_param_iso_transport(int n, const Shape& shape, int degree,
                                      const ParamSpec& from, const ParamSpec& to) {
  const CoalgebraPtr source = graded_coalgebra(n, shape, degree, from);
  const CoalgebraPtr target = graded_coalgebra(n, shape, degree, to);
  const Scalar ratio = from.alpha / to.alpha;
  if (from.alpha * from.beta != to.alpha * to.beta) {
    throw Error(ErrorCode::ProductMismatch,
                "parameter change requires alpha*beta = alpha'*beta'");
  }
  for (std::size_t i = 0; i < source->dim(); ++i) {
    // Delta'(phi(e_i)) and (phi (x) phi)(Delta(e_i)) as sparse vectors.
    std::map<Key, Scalar> lhs, rhs;
    const Scalar scale = scalar_pow(ratio, jw(source->basis_at(i)));
    for (const auto& [a, b, c] : target->delta(i)) {
      sparse_add(lhs, Key{a, b}, scale * c);
    }
    for (const auto& [a, b, c] : source->delta(i)) {
      const Scalar twist = scalar_pow(ratio, jw(source->basis_at(a)) +
                                                 jw(source->basis_at(b)));
      sparse_add(rhs, Key{a, b}, twist * c);
    }
    if (lhs != rhs) {
      throw Error(ErrorCode::CheckFailed,
                  "parameter-change map does not transport comultiplication at " +
                      source->basis_at(i).to_string());
    }
  }
  return source->dim();
}

// --------------------------------------------------------------- the torus ---

AlgebraElement torus_projection(const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(x.n, x.shape);
  for (const auto& [omega, c] : x.terms) {
    if (omega.is_diagonal()) out.terms.emplace(omega, c);
  }
  return out;
}

}  // namespace qba
