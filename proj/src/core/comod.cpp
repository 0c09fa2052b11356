#include "core/comod.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qba {

namespace {

bool same_piece(const CoalgebraPtr& a, const CoalgebraPtr& b) {
  return a == b || (a && b && a->n() == b->n() && a->shape() == b->shape() &&
                    a->degree() == b->degree() && a->params() == b->params());
}

std::string check_failure(const std::string& what, const std::string& where) {
  return what + " fails for " + where;
}

}  // namespace

// ----------------------------------------------------------------- modules ---

void Comodule::validate() const {
  if (!coalgebra) throw Error(ErrorCode::InvalidArgument, "comodule without coalgebra");
  const auto cdim = static_cast<int>(coalgebra->dim());
  const auto mdim = static_cast<int>(dim());
  for (std::size_t m = 0; m < dim(); ++m) {
    std::map<int, Scalar> counit_row;
    std::map<Key, Scalar> lhs, rhs;
    for (const auto& [j, q, c] : rho[m]) {
      if (j < 0 || j >= mdim || q < 0 || q >= cdim) {
        throw Error(ErrorCode::InvalidArgument, "coaction entry out of range");
      }
      if (coalgebra->counit(q) != 0) counit_row[j] += c * coalgebra->counit(q);
      // (rho (x) id) rho
      for (const auto& [j2, q2, c2] : rho[j]) {
        sparse_add(lhs, Key{j2, q2, q}, c * c2);
      }
      // (id (x) Delta) rho
      for (const auto& [u, v, d] : coalgebra->delta(q)) {
        sparse_add(rhs, Key{j, u, v}, c * d);
      }
    }
    std::erase_if(counit_row, [](const auto& kv) { return kv.second == 0; });
    const std::map<int, Scalar> expected{{static_cast<int>(m), Scalar(1)}};
    if (counit_row != expected) {
      throw Error(ErrorCode::CheckFailed,
                  check_failure("comodule counit axiom",
                                labels.empty() ? std::to_string(m) : labels[m]));
    }
    if (lhs != rhs) {
      throw Error(ErrorCode::CheckFailed,
                  check_failure("comodule coassociativity axiom",
                                labels.empty() ? std::to_string(m) : labels[m]));
    }
  }
}

bool Comodule::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

void LeftComodule::validate() const {
  if (!coalgebra) throw Error(ErrorCode::InvalidArgument, "comodule without coalgebra");
  const auto cdim = static_cast<int>(coalgebra->dim());
  const auto mdim = static_cast<int>(dim());
  for (std::size_t m = 0; m < dim(); ++m) {
    std::map<int, Scalar> counit_row;
    std::map<Key, Scalar> lhs, rhs;
    for (const auto& [q, j, c] : lambda[m]) {
      if (j < 0 || j >= mdim || q < 0 || q >= cdim) {
        throw Error(ErrorCode::InvalidArgument, "coaction entry out of range");
      }
      if (coalgebra->counit(q) != 0) counit_row[j] += c * coalgebra->counit(q);
      // (Delta (x) id) lambda
      for (const auto& [u, v, d] : coalgebra->delta(q)) {
        sparse_add(lhs, Key{u, v, j}, c * d);
      }
      // (id (x) lambda) lambda
      for (const auto& [q2, j2, c2] : lambda[j]) {
        sparse_add(rhs, Key{q, q2, j2}, c * c2);
      }
    }
    std::erase_if(counit_row, [](const auto& kv) { return kv.second == 0; });
    const std::map<int, Scalar> expected{{static_cast<int>(m), Scalar(1)}};
    if (counit_row != expected) {
      throw Error(ErrorCode::CheckFailed,
                  check_failure("left comodule counit axiom", std::to_string(m)));
    }
    if (lhs != rhs) {
      throw Error(ErrorCode::CheckFailed,
                  check_failure("left comodule coassociativity axiom",
                                std::to_string(m)));
    }
  }
}

Comodule one_dim(const std::vector<int>& weight, const CoalgebraPtr& over) {
  if (!over) throw Error(ErrorCode::InvalidArgument, "one_dim: missing coalgebra");
  if (static_cast<int>(weight.size()) != over->n()) {
    throw Error(ErrorCode::InvalidArgument, "one_dim: weight length != n");
  }
  int total = 0;
  for (int a : weight) {
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "one_dim: negative weight");
    total += a;
  }
  if (total != over->degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                "one_dim: |weight| must equal the degree of the piece");
  }
  const Exponent diag = Exponent::diagonal(weight);
  const int idx = over->index_of(diag);
  if (idx < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "one_dim: diagonal monomial not admissible for the shape");
  }
  Comodule out;
  out.coalgebra = over;
  out.rho = {{{0, idx, Scalar(1)}}};
  out.labels = {"1"};
  out.validate();
  return out;
}

namespace {

struct DeltaCoaction {
  std::vector<Exponent> basis;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> rho;
};

const DeltaCoaction& cached_delta_coaction(int n, const Shape& b, int degree,
                                           const ParamSpec& params) {
  using CacheKey = std::tuple<int, std::vector<int>, int, std::string, std::string>;
  static std::map<CacheKey, DeltaCoaction> cache;
  const CacheKey key{n, b.b, degree, scalar_to_string(params.alpha),
                     scalar_to_string(params.beta)};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  DeltaCoaction entry;
  entry.basis = monomial_basis(n, b, degree);
  const CoalgebraPtr over = graded_coalgebra(n, Shape::delta(n), degree, params);
  entry.rho = right_delta_coaction(n, b, degree, params, entry.basis, over->basis());
  return cache.emplace(key, std::move(entry)).first->second;
}

}  // namespace

Comodule regular_comodule(int n, const Shape& b, int degree,
                          const ParamSpec& params) {
  if (!b.is_nondecreasing()) {
    throw Error(ErrorCode::InvalidShape, "regular_comodule: shape not non-decreasing");
  }
  const DeltaCoaction& data = cached_delta_coaction(n, b, degree, params);
  Comodule out;
  out.coalgebra = graded_coalgebra(n, Shape::delta(n), degree, params);
  out.rho = data.rho;
  out.labels.reserve(data.basis.size());
  for (const auto& omega : data.basis) out.labels.push_back(omega.to_string());
  out.validate();
  return out;
}

Comodule coalgebra_as_comodule(const CoalgebraPtr& piece) {
  if (!piece) throw Error(ErrorCode::InvalidArgument, "missing coalgebra");
  Comodule out;
  out.coalgebra = piece;
  out.rho.resize(piece->dim());
  for (std::size_t i = 0; i < piece->dim(); ++i) {
    for (const auto& [a, b, c] : piece->delta(i)) {
      out.rho[i].emplace_back(a, b, c);
    }
  }
  out.labels = piece->labels();
  out.validate();
  return out;
}

LeftComodule left_coaction(int n, const Shape& b, const Shape& over, int degree,
                           const ParamSpec& params) {
  if (!b.is_nondecreasing()) {
    throw Error(ErrorCode::InvalidShape, "left_coaction: shape not non-decreasing");
  }
  if (!over.is_parabolic()) {
    throw Error(ErrorCode::NonParabolicShape,
                "left_coaction: coacting shape must be parabolic");
  }
  if (!over.leq(b)) {
    throw Error(ErrorCode::InvalidArgument, "left_coaction: need over <= b");
  }
  for (int l = 1; l <= n - 1; ++l) {
    if (over == Shape::a(n, l)) {
      for (int component : b.b) {
        if (component == l) {
          throw Error(ErrorCode::HypothesisViolated,
                      "left_coaction over a[" + std::to_string(l) +
                          "] requires that no component of b equals " +
                          std::to_string(l));
        }
      }
    }
  }

  const RuleSet ambient(n, params);
  const CoalgebraPtr over_piece = graded_coalgebra(n, over, degree, params);
  const std::vector<Exponent> basis = monomial_basis(n, b, degree);
  std::map<Exponent, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::vector<std::optional<Shape>> legs{over, b};

  const auto expand = [&](const Exponent& omega) {
    std::vector<std::tuple<int, int, Scalar>> out;
    const TensorElement image =
        comultiply_legs(AlgebraElement::monomial(n, omega), ambient, legs);
    for (const auto& [pair, c] : image.terms) {
      const int q = over_piece->index_of(pair[0]);
      auto jt = index.find(pair[1]);
      if (q < 0 || jt == index.end()) {
        throw Error(ErrorCode::Internal, "left coaction left the graded piece");
      }
      out.emplace_back(q, jt->second, c);
    }
    return out;
  };

  LeftComodule out;
  out.coalgebra = over_piece;
  out.lambda.reserve(basis.size());
  for (const auto& omega : basis) {
    out.lambda.push_back(expand(omega));
    out.labels.push_back(omega.to_string());
  }
  for (const auto& omega : monomial_basis(n, std::nullopt, degree)) {
    if (omega.admissible(b)) continue;
    if (!expand(omega).empty()) {
      throw Error(ErrorCode::IllDefined,
                  "left coaction does not factor through the quotient at " +
                      omega.to_string());
    }
  }
  out.validate();
  return out;
}

Comodule tensor(const Comodule& M, const Comodule& N) {
  if (!M.coalgebra || !N.coalgebra) {
    throw Error(ErrorCode::InvalidArgument, "tensor: missing coalgebra");
  }
  const int n = M.coalgebra->n();
  if (n != N.coalgebra->n() || !(M.coalgebra->shape() == N.coalgebra->shape()) ||
      !(M.coalgebra->params() == N.coalgebra->params())) {
    throw Error(ErrorCode::ShapeMismatch,
                "tensor: factors must live over pieces of the same shape");
  }
  const Shape& shape = M.coalgebra->shape();
  const ParamSpec& params = M.coalgebra->params();
  const int degree = M.coalgebra->degree() + N.coalgebra->degree();
  const CoalgebraPtr target = graded_coalgebra(n, shape, degree, params);
  const RuleSet rules(n, params, shape);

  Comodule out;
  out.coalgebra = target;
  out.rho.resize(M.dim() * N.dim());
  out.labels.reserve(out.rho.size());
  for (std::size_t i = 0; i < M.dim(); ++i) {
    for (std::size_t j = 0; j < N.dim(); ++j) {
      const std::size_t flat = i * N.dim() + j;
      out.labels.push_back(M.labels[i] + "(x)" + N.labels[j]);
      std::map<Key, Scalar> acc;
      for (const auto& [i2, q1, c1] : M.rho[i]) {
        const AlgebraElement left = AlgebraElement::monomial(
            n, M.coalgebra->basis_at(q1), Scalar(1), shape);
        for (const auto& [j2, q2, c2] : N.rho[j]) {
          const AlgebraElement right = AlgebraElement::monomial(
              n, N.coalgebra->basis_at(q2), Scalar(1), shape);
          const AlgebraElement product = rules.multiply(left, right);
          for (const auto& [omega, cp] : product.terms) {
            const int q = target->index_of(omega);
            if (q < 0) throw Error(ErrorCode::Internal, "tensor: product escaped");
            sparse_add(acc, Key{static_cast<int>(i2 * N.dim() + j2), q},
                       c1 * c2 * cp);
          }
        }
      }
      for (const auto& [key, c] : acc) out.rho[flat].emplace_back(key[0], key[1], c);
    }
  }
  out.validate();
  return out;
}

Comodule direct_sum(const Comodule& M, const Comodule& N) {
  if (!same_piece(M.coalgebra, N.coalgebra)) {
    throw Error(ErrorCode::ShapeMismatch, "direct_sum: different coalgebras");
  }
  Comodule out;
  out.coalgebra = M.coalgebra;
  out.rho = M.rho;
  for (const auto& row : N.rho) {
    auto shifted = row;
    for (auto& [j, q, c] : shifted) j += static_cast<int>(M.dim());
    out.rho.push_back(std::move(shifted));
  }
  out.labels = M.labels;
  out.labels.insert(out.labels.end(), N.labels.begin(), N.labels.end());
  return out;
}

bool intertwines(const LinearMap& phi, const Comodule& M, const Comodule& N) {
  if (phi.domain_dim() != M.dim() || phi.codomain_dim() != N.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "intertwines: size mismatch");
  }
  if (!same_piece(M.coalgebra, N.coalgebra)) return false;
  for (std::size_t m = 0; m < M.dim(); ++m) {
    std::map<Key, Scalar> lhs, rhs;
    for (std::size_t p = 0; p < N.dim(); ++p) {
      const Scalar& t = phi.at(p, m);
      if (t == 0) continue;
      for (const auto& [p2, q, c] : N.rho[p]) {
        sparse_add(lhs, Key{p2, q}, t * c);
      }
    }
    for (const auto& [j, q, c] : M.rho[m]) {
      for (std::size_t p = 0; p < N.dim(); ++p) {
        const Scalar& t = phi.at(p, static_cast<std::size_t>(j));
        if (t == 0) continue;
        sparse_add(rhs, Key{static_cast<int>(p), q}, c * t);
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<LinearMap> find_isomorphism(const Comodule& M, const Comodule& N) {
  if (!same_piece(M.coalgebra, N.coalgebra)) return std::nullopt;
  if (M.dim() != N.dim()) return std::nullopt;
  const std::size_t dm = M.dim(), dn = N.dim();
  if (dm == 0) return LinearMap(M.labels, N.labels);

  // Unknowns T_{p,u} (p in N, u in M) flattened as p*dm + u; equations are
  // rho_N(T e_m) - (T (x) id) rho_M(e_m) = 0, coordinates Key{m, p', q}.
  std::vector<SparseVec> columns(dn * dm);
  for (std::size_t p = 0; p < dn; ++p) {
    for (std::size_t u = 0; u < dm; ++u) {
      SparseVec& col = columns[p * dm + u];
      for (const auto& [p2, q, c] : N.rho[p]) {
        sparse_add(col, Key{static_cast<int>(u), p2, q}, c);
      }
      for (std::size_t m = 0; m < dm; ++m) {
        for (const auto& [j, q, c] : M.rho[m]) {
          if (static_cast<std::size_t>(j) != u) continue;
          sparse_add(col, Key{static_cast<int>(m), static_cast<int>(p), q}, -c);
        }
      }
    }
  }
  const std::vector<std::vector<Scalar>> homs = sparse_kernel(columns);
  if (homs.empty()) return std::nullopt;

  const auto as_map = [&](const std::vector<Scalar>& flat) {
    LinearMap map(M.labels, N.labels);
    for (std::size_t p = 0; p < dn; ++p) {
      for (std::size_t u = 0; u < dm; ++u) map.at(p, u) = flat[p * dm + u];
    }
    return map;
  };

  for (const auto& hom : homs) {
    LinearMap candidate = as_map(hom);
    if (candidate.rank() == dm) return candidate;
  }
  // Deterministic one-parameter family of combinations sum_i k^i * hom_i.
  for (long k = 1; k <= static_cast<long>(3 * homs.size() + 3); ++k) {
    std::vector<Scalar> flat(dn * dm, Scalar(0));
    Scalar power(1);
    for (const auto& hom : homs) {
      for (std::size_t t = 0; t < flat.size(); ++t) flat[t] += power * hom[t];
      power *= k;
    }
    LinearMap candidate = as_map(flat);
    if (candidate.rank() == dm) return candidate;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- cotensor ---

const InductionPiece& induction_piece(int n, const Shape& b, int degree,
                                      const ParamSpec& params) {
  using CacheKey = std::tuple<int, std::vector<int>, int, std::string, std::string>;
  static std::map<CacheKey, InductionPiece> cache;
  const CacheKey key{n, b.b, degree, scalar_to_string(params.alpha),
                     scalar_to_string(params.beta)};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const Shape delta = Shape::delta(n);
  InductionPiece entry;
  entry.over = graded_coalgebra(n, delta, degree, params);
  entry.piece = graded_coalgebra(n, b, degree, params);

  const MultiProjection left = multi_projection(n, b, {delta, b}, degree, params);
  const MultiProjection right = multi_projection(n, b, {b, delta}, degree, params);
  entry.lambda.resize(entry.piece->dim());
  entry.rho.resize(entry.piece->dim());
  for (std::size_t j = 0; j < entry.piece->dim(); ++j) {
    for (const auto& [key2, c] : left.columns[j]) {
      entry.lambda[j].emplace_back(key2[0], key2[1], c);
    }
    for (const auto& [key2, c] : right.columns[j]) {
      entry.rho[j].emplace_back(key2[0], key2[1], c);
    }
  }

  LeftComodule as_left;
  as_left.coalgebra = entry.over;
  as_left.lambda = entry.lambda;
  as_left.labels = entry.piece->labels();
  as_left.validate();
  Comodule as_right;
  as_right.coalgebra = entry.over;
  as_right.rho = entry.rho;
  as_right.labels = entry.piece->labels();
  as_right.validate();

  return cache.emplace(key, std::move(entry)).first->second;
}

CotensorSpace cotensor(const Comodule& M, const InductionPiece& N) {
  if (!same_piece(M.coalgebra, N.over)) {
    throw Error(ErrorCode::ShapeMismatch,
                "cotensor: factors must agree over the same A(delta;r)");
  }
  const std::size_t dm = M.dim(), da = N.dim();

  // Kernel of rho_M (x) id - id (x) lambda_N over coordinates Key{p, q, j}.
  std::vector<SparseVec> columns(dm * da);
  for (std::size_t mi = 0; mi < dm; ++mi) {
    for (std::size_t aj = 0; aj < da; ++aj) {
      SparseVec& col = columns[mi * da + aj];
      for (const auto& [p, q, c] : M.rho[mi]) {
        sparse_add(col, Key{p, q, static_cast<int>(aj)}, c);
      }
      for (const auto& [q, j2, c] : N.lambda[aj]) {
        sparse_add(col, Key{static_cast<int>(mi), q, j2}, -c);
      }
    }
  }
  const std::vector<std::vector<Scalar>> kernel = sparse_kernel(columns);

  CotensorSpace out;
  out.basis.reserve(kernel.size());
  SparseEchelon echelon;
  for (const auto& vec : kernel) {
    SparseVec sparse;
    for (std::size_t t = 0; t < vec.size(); ++t) {
      if (vec[t] != 0) {
        sparse.emplace(Key{static_cast<int>(t / da), static_cast<int>(t % da)},
                       vec[t]);
      }
    }
    if (!echelon.insert(sparse)) {
      throw Error(ErrorCode::Internal, "cotensor kernel basis not independent");
    }
    out.basis.push_back(std::move(sparse));
  }

  out.module.coalgebra = M.coalgebra;
  out.module.rho.resize(out.basis.size());
  for (std::size_t v = 0; v < out.basis.size(); ++v) {
    out.module.labels.push_back("v" + std::to_string(v));
    // (id (x) rho_N) restricted to the subspace, collected per coalgebra leg.
    std::map<int, SparseVec> by_leg;
    for (const auto& [key, coeff] : out.basis[v]) {
      const int mi = key[0], aj = key[1];
      for (const auto& [j2, q, c] : N.rho[aj]) {
        sparse_add(by_leg[q], Key{mi, j2}, coeff * c);
      }
    }
    for (const auto& [q, w] : by_leg) {
      if (w.empty()) continue;
      const auto coeffs = echelon.express(w);
      if (!coeffs) {
        throw Error(ErrorCode::CheckFailed,
                    "restricting the right coaction must preserve the cotensor "
                    "subspace, but it does not");
      }
      for (std::size_t p = 0; p < coeffs->size(); ++p) {
        if ((*coeffs)[p] != 0) {
          out.module.rho[v].emplace_back(static_cast<int>(p), q, (*coeffs)[p]);
        }
      }
    }
  }
  out.module.validate();
  return out;
}

// ------------------------------------------------------ weights & characters ---

std::vector<WeightSpace> weight_decompose(const Comodule& M) {
  const int n = M.coalgebra->n();
  const std::size_t d = M.dim();

  std::set<std::vector<int>> candidates;
  for (const auto& row : M.rho) {
    for (const auto& [j, q, c] : row) {
      const Exponent& omega = M.coalgebra->basis_at(q);
      if (!omega.is_diagonal()) continue;
      std::vector<int> weight(n);
      for (int i = 1; i <= n; ++i) weight[i - 1] = omega.at(i, i);
      candidates.insert(std::move(weight));
    }
  }

  std::vector<WeightSpace> out;
  std::size_t total = 0;
  std::vector<std::string> coords(d);
  for (std::size_t i = 0; i < d; ++i) coords[i] = "e" + std::to_string(i);
  for (const auto& weight : candidates) {
    const int q_target = M.coalgebra->index_of(Exponent::diagonal(weight));
    if (q_target < 0) continue;
    // W - I where W is the weight-a block of the torus-projected coaction.
    LinearMap shifted(coords, coords);
    for (std::size_t m = 0; m < d; ++m) {
      for (const auto& [j, q, c] : M.rho[m]) {
        if (q == q_target) shifted.at(static_cast<std::size_t>(j), m) += c;
      }
      shifted.at(m, m) -= 1;
    }
    auto vectors = shifted.kernel();
    if (vectors.empty()) continue;
    total += vectors.size();
    out.push_back(WeightSpace{weight, std::move(vectors)});
  }
  if (total != d) {
    throw Error(ErrorCode::NotDiagonalizable,
                "weight spaces span " + std::to_string(total) + " of " +
                    std::to_string(d) + " dimensions");
  }
  return out;
}

CharPoly CharPoly::monomial(const std::vector<int>& exponents, long long c) {
  CharPoly out;
  out.add_term(exponents, c);
  return out;
}

void CharPoly::add_term(const std::vector<int>& exponents, long long c) {
  if (c == 0) return;
  auto it = coeffs.find(exponents);
  if (it == coeffs.end()) {
    coeffs.emplace(exponents, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

CharPoly CharPoly::operator+(const CharPoly& other) const {
  CharPoly out = *this;
  for (const auto& [e, c] : other.coeffs) out.add_term(e, c);
  return out;
}

CharPoly CharPoly::operator-(const CharPoly& other) const {
  CharPoly out = *this;
  for (const auto& [e, c] : other.coeffs) out.add_term(e, -c);
  return out;
}

CharPoly CharPoly::operator*(const CharPoly& other) const {
  CharPoly out;
  for (const auto& [e1, c1] : coeffs) {
    for (const auto& [e2, c2] : other.coeffs) {
      if (e1.size() != e2.size()) {
        throw Error(ErrorCode::DimensionMismatch, "character variable mismatch");
      }
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

std::string CharPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const long long abs = c < 0 ? -c : c;
    std::string term;
    if (mono.empty()) {
      term = std::to_string(abs);
    } else if (abs == 1) {
      term = mono;
    } else {
      term = std::to_string(abs) + "*" + mono;
    }
    if (first) {
      os << (c < 0 ? "-" : "") << term;
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ") << term;
    }
  }
  return os.str();
}

CharPoly character(const Comodule& M) {
  CharPoly out;
  for (const auto& space : weight_decompose(M)) {
    out.add_term(space.weight, static_cast<long long>(space.vectors.size()));
  }
  return out;
}

// ----------------------------------------------------------- exact sequences ---

ExactSequenceReport check_exact_sequence(int n, const Shape& b, int l, int degree,
                                         const ParamSpec& params) {
  if (!b.is_nondecreasing()) {
    throw Error(ErrorCode::InvalidShape, "exact sequence: b not non-decreasing");
  }
  if (l < 1 || l > n) {
    throw Error(ErrorCode::IndexViolation, "exact sequence: l out of range");
  }
  const Shape quotient_shape = b.minus_v(l);
  if (!quotient_shape.is_nondecreasing()) {
    throw Error(ErrorCode::InvalidShape,
                "exact sequence: b - v_l not non-decreasing");
  }
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const int bl = b.b[l - 1];

  ExactSequenceReport report;
  report.b = b;
  report.l = l;
  report.degree = degree;

  const std::vector<Exponent> mid_basis = monomial_basis(n, b, degree);
  const std::vector<Exponent> quot_basis = monomial_basis(n, quotient_shape, degree);
  const std::vector<Exponent> sub_basis =
      degree == 0 ? std::vector<Exponent>{} : monomial_basis(n, b, degree - 1);
  report.dim_mid = mid_basis.size();
  report.dim_quot = quot_basis.size();
  report.dim_sub = sub_basis.size();

  std::map<Exponent, int> mid_index, quot_index;
  for (std::size_t i = 0; i < mid_basis.size(); ++i) mid_index.emplace(mid_basis[i], i);
  for (std::size_t i = 0; i < quot_basis.size(); ++i) {
    quot_index.emplace(quot_basis[i], i);
  }

  const auto labels_of = [](const std::vector<Exponent>& basis) {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const auto& omega : basis) out.push_back(omega.to_string());
    return out;
  };
  const std::vector<std::string> mid_labels = labels_of(mid_basis);

  // f: x -> [x * c_{l, b_l}]_b on the degree-(r-1) piece.
  const RuleSet rules_b(n, params, b);
  LinearMap f(labels_of(sub_basis), mid_labels);
  for (std::size_t s = 0; s < sub_basis.size(); ++s) {
    Word word = sub_basis[s].to_word();
    word.push_back(static_cast<std::int16_t>(gen_code(n, l, bl)));
    for (const auto& [omega, c] : rules_b.normalize(word)) {
      auto it = mid_index.find(omega);
      if (it == mid_index.end()) {
        throw Error(ErrorCode::Internal, "multiplication escaped the piece");
      }
      f.at(static_cast<std::size_t>(it->second), s) = c;
    }
  }

  // pi: support projection onto the admissible monomials of b - v_l.
  LinearMap pi(mid_labels, labels_of(quot_basis));
  for (std::size_t m = 0; m < mid_basis.size(); ++m) {
    auto it = quot_index.find(mid_basis[m]);
    if (it != quot_index.end()) {
      pi.at(static_cast<std::size_t>(it->second), m) = 1;
    }
  }

  const std::size_t rank_f = f.rank();
  const std::size_t rank_pi = pi.rank();
  report.f_injective = rank_f == report.dim_sub;
  report.pi_surjective = rank_pi == report.dim_quot;
  report.middle_exact =
      pi.compose(f).is_zero() && rank_f + rank_pi == report.dim_mid;

  // Coaction intertwining.  rho_mid and rho_quot are the right
  // A(delta;degree)-coactions; rho_sub is at degree-1 and f twists the
  // second leg by right multiplication with c_{b_l, b_l}.
  const DeltaCoaction& mid_co = cached_delta_coaction(n, b, degree, params);
  const DeltaCoaction& quot_co =
      cached_delta_coaction(n, quotient_shape, degree, params);

  bool ok = true;
  // pi intertwines plainly.
  for (std::size_t m = 0; m < mid_basis.size() && ok; ++m) {
    std::map<Key, Scalar> lhs, rhs;
    for (const auto& [j, q, c] : mid_co.rho[m]) {
      auto it = quot_index.find(mid_basis[j]);
      if (it != quot_index.end()) sparse_add(lhs, Key{it->second, q}, c);
    }
    auto it = quot_index.find(mid_basis[m]);
    if (it != quot_index.end()) {
      for (const auto& [j, q, c] : quot_co.rho[it->second]) {
        sparse_add(rhs, Key{j, q}, c);
      }
    }
    ok = lhs == rhs;
  }
  // f intertwines with the twist.
  if (degree > 0 && ok) {
    const DeltaCoaction& sub_co = cached_delta_coaction(n, b, degree - 1, params);
    const Shape delta = Shape::delta(n);
    const RuleSet rules_delta(n, params, delta);
    const CoalgebraPtr delta_sub = graded_coalgebra(n, delta, degree - 1, params);
    const CoalgebraPtr delta_mid = graded_coalgebra(n, delta, degree, params);
    for (std::size_t s = 0; s < sub_basis.size() && ok; ++s) {
      std::map<Key, Scalar> lhs, rhs;
      for (std::size_t m = 0; m < mid_basis.size(); ++m) {
        const Scalar& fm = f.at(m, s);
        if (fm == 0) continue;
        for (const auto& [j, q, c] : mid_co.rho[m]) {
          sparse_add(lhs, Key{j, q}, fm * c);
        }
      }
      for (const auto& [j, q, c] : sub_co.rho[s]) {
        // Second leg: [x_(2) * c_{b_l, b_l}]_delta.
        Word word = delta_sub->basis_at(q).to_word();
        word.push_back(static_cast<std::int16_t>(gen_code(n, bl, bl)));
        for (const auto& [tau, d] : rules_delta.normalize(word)) {
          const int q2 = delta_mid->index_of(tau);
          if (q2 < 0) throw Error(ErrorCode::Internal, "twist escaped the piece");
          for (std::size_t m = 0; m < mid_basis.size(); ++m) {
            const Scalar& fm = f.at(m, static_cast<std::size_t>(j));
            if (fm == 0) continue;
            sparse_add(rhs, Key{static_cast<int>(m), q2}, c * d * fm);
          }
        }
      }
      ok = lhs == rhs;
    }
  }
  report.intertwines = ok;
  return report;
}

}  // namespace qba
