#include "core/functors.hpp"

#include <algorithm>
#include <sstream>

namespace qba {

namespace {

std::vector<int> reversed(const std::vector<int>& word) {
  return std::vector<int>(word.rbegin(), word.rend());
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string word_str(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(word[t]);
  }
  return out + "]";
}

}  // namespace

// ----------------------------------------------------------------- tau kinds ---

TauKind TauKind::equal(int i) {
  if (i < 1) throw Error(ErrorCode::IndexViolation, "tau_ii requires i >= 1");
  TauKind k;
  k.type = Type::Equal;
  k.i = i;
  return k;
}

TauKind TauKind::distant(int i, int j) {
  if (i < 1 || j < i + 2) {
    throw Error(ErrorCode::IndexViolation, "tau_ij requires j >= i + 2");
  }
  TauKind k;
  k.type = Type::Distant;
  k.i = i;
  k.j = j;
  return k;
}

TauKind TauKind::adjacent(int i) {
  if (i < 1) throw Error(ErrorCode::IndexViolation, "tau_{i,i+1} requires i >= 1");
  TauKind k;
  k.type = Type::Adjacent;
  k.i = i;
  return k;
}

std::vector<int> TauKind::src_word() const {
  switch (type) {
    case Type::Equal: return {i, i};
    case Type::Distant: return {j, i};
    case Type::Adjacent: return {i + 1, i, i + 1};
  }
  return {};
}

std::vector<int> TauKind::dst_word() const {
  switch (type) {
    case Type::Equal: return {i};
    case Type::Distant: return {i, j};
    case Type::Adjacent: return {i, i + 1, i};
  }
  return {};
}

std::string TauKind::name() const {
  switch (type) {
    case Type::Equal: return "tau_{" + std::to_string(i) + "," + std::to_string(i) + "}";
    case Type::Distant: return "tau_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case Type::Adjacent:
      return "tau_{" + std::to_string(i) + "," + std::to_string(i + 1) + "}";
  }
  return "tau";
}

// -------------------------------------------------------------------- towers ---

std::vector<SparseVec> Tower::flatten_top(std::size_t depth) const {
  if (depth > height()) {
    throw Error(ErrorCode::InvalidArgument, "flatten depth exceeds tower height");
  }
  std::vector<SparseVec> out;
  if (depth == 0) {
    out.resize(top().dim());
    for (std::size_t v = 0; v < out.size(); ++v) {
      out[v].emplace(Key{static_cast<int>(v)}, Scalar(1));
    }
    return out;
  }
  out = levels_.back().basis;
  for (std::size_t d = 1; d < depth; ++d) {
    const std::vector<SparseVec>& lower = levels_[height() - 1 - d].basis;
    std::vector<SparseVec> next(out.size());
    for (std::size_t v = 0; v < out.size(); ++v) {
      for (const auto& [key, c] : out[v]) {
        for (const auto& [key2, c2] : lower[static_cast<std::size_t>(key[0])]) {
          Key merged = key2;
          merged.insert(merged.end(), key.begin() + 1, key.end());
          sparse_add(next[v], merged, c * c2);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

// ------------------------------------------------------------- single steps ---

CotensorSpace apply_F_step(int i, const Comodule& M) {
  if (!M.coalgebra) throw Error(ErrorCode::InvalidArgument, "module without piece");
  const int n = M.coalgebra->n();
  if (i < 1 || i > n - 1) {
    throw Error(ErrorCode::IndexViolation, "F_i requires 1 <= i <= n-1");
  }
  if (!(M.coalgebra->shape() == Shape::delta(n))) {
    throw Error(ErrorCode::ShapeMismatch, "F_i applies to comodules over A(delta;r)");
  }
  return cotensor(M, induction_piece(n, Shape::a(n, i), M.coalgebra->degree(),
                                     M.coalgebra->params()));
}

Comodule apply_F(int i, const Comodule& M) { return apply_F_step(i, M).module; }

Comodule apply_word(const std::vector<int>& word, const Comodule& M) {
  Comodule out = M;
  for (int i : word) out = apply_F(i, out);
  return out;
}

// --------------------------------------------------------------- t-map data ---

namespace {

// Image of the multi-projection must satisfy the cotensor equalizer
// equations at every interface of consecutive legs.
void verify_cotensor_membership(const MultiProjection& mp, int n, int degree,
                                const ParamSpec& params, const std::string& who) {
  const std::size_t legs = mp.targets.size();
  for (std::size_t s = 0; s + 1 < legs; ++s) {
    const InductionPiece& left =
        induction_piece(n, mp.targets[s]->shape(), degree, params);
    const InductionPiece& right =
        induction_piece(n, mp.targets[s + 1]->shape(), degree, params);
    for (std::size_t col = 0; col < mp.columns.size(); ++col) {
      SparseVec acc;
      for (const auto& [key, c] : mp.columns[col]) {
        for (const auto& [j2, q, d] : left.rho[key[s]]) {
          Key merged(key.begin(), key.begin() + s);
          merged.push_back(j2);
          merged.push_back(q);
          merged.insert(merged.end(), key.begin() + s + 1, key.end());
          sparse_add(acc, merged, c * d);
        }
        for (const auto& [q, j2, d] : right.lambda[key[s + 1]]) {
          Key merged(key.begin(), key.begin() + s + 1);
          merged.push_back(q);
          merged.push_back(j2);
          merged.insert(merged.end(), key.begin() + s + 2, key.end());
          sparse_add(acc, merged, -(c * d));
        }
      }
      if (!acc.empty()) {
        throw Error(ErrorCode::CheckFailed,
                    who + ": projected column " + std::to_string(col) +
                        " violates the cotensor equations at interface " +
                        std::to_string(s));
      }
    }
  }
}

}  // namespace

const TMapData& t_map_data(int n, const TauKind& kind, int degree,
                           const ParamSpec& params) {
  if (kind.type == TauKind::Type::Equal) {
    throw Error(ErrorCode::InvalidArgument, "t-map data exists for distant/adjacent");
  }
  using CacheKey = std::tuple<int, int, int, int, int, std::string, std::string>;
  static std::map<CacheKey, TMapData> cache;
  const CacheKey cache_key{n, static_cast<int>(kind.type), kind.i, kind.j, degree,
                           scalar_to_string(params.alpha),
                           scalar_to_string(params.beta)};
  auto it = cache.find(cache_key);
  if (it != cache.end()) return it->second;

  Shape big = Shape::delta(n);
  std::vector<Shape> source_legs, target_legs;
  if (kind.type == TauKind::Type::Distant) {
    big = big.plus_v(kind.i).plus_v(kind.j);
    source_legs = {Shape::a(n, kind.i), Shape::a(n, kind.j)};
    target_legs = {Shape::a(n, kind.j), Shape::a(n, kind.i)};
  } else {
    big = big.plus_v(kind.i).plus_v(kind.i).plus_v(kind.i + 1);
    source_legs = {Shape::a(n, kind.i + 1), Shape::a(n, kind.i),
                   Shape::a(n, kind.i + 1)};
    target_legs = {Shape::a(n, kind.i), Shape::a(n, kind.i + 1),
                   Shape::a(n, kind.i)};
  }

  TMapData data;
  data.source = multi_projection(n, big, source_legs, degree, params);
  data.target = multi_projection(n, big, target_legs, degree, params);
  verify_cotensor_membership(data.source, n, degree, params,
                             kind.name() + " source");
  verify_cotensor_membership(data.target, n, degree, params,
                             kind.name() + " target");
  for (const auto& column : data.source.columns) {
    if (!data.source_echelon.insert(column)) {
      throw Error(ErrorCode::NotInvertible,
                  kind.name() + ": source projection is not injective (rank " +
                      std::to_string(data.source_echelon.rank()) + " of " +
                      std::to_string(data.source.columns.size()) + ")");
    }
  }
  SparseEchelon target_check;
  for (const auto& column : data.target.columns) {
    if (!target_check.insert(column)) {
      throw Error(ErrorCode::NotInvertible,
                  kind.name() + ": target projection is not injective (rank " +
                      std::to_string(target_check.rank()) + " of " +
                      std::to_string(data.target.columns.size()) + ")");
    }
  }
  return cache.emplace(cache_key, std::move(data)).first->second;
}

// ---------------------------------------------------------------- the arrows ---

std::vector<int> Arrow::source_word() const {
  return concat(concat(pre, inverted ? kind.dst_word() : kind.src_word()), post);
}

std::vector<int> Arrow::target_word() const {
  return concat(concat(pre, inverted ? kind.src_word() : kind.dst_word()), post);
}

FunctorContext::FunctorContext(Comodule base)
    : base_(std::move(base)),
      base_n_(base_.coalgebra ? base_.coalgebra->n() : 0),
      degree_(base_.coalgebra ? base_.coalgebra->degree() : 0),
      params_(base_.coalgebra ? base_.coalgebra->params() : ParamSpec(1, 1)) {
  if (!base_.coalgebra) {
    throw Error(ErrorCode::InvalidArgument, "functor context without base piece");
  }
  if (!(base_.coalgebra->shape() == Shape::delta(base_n_))) {
    throw Error(ErrorCode::ShapeMismatch,
                "functor context requires a comodule over A(delta;r)");
  }
}

const Tower& FunctorContext::tower(const std::vector<int>& word) {
  auto it = towers_.find(word);
  if (it != towers_.end()) return *it->second;
  auto built = std::make_unique<Tower>(base_);
  if (!word.empty()) {
    const std::vector<int> prefix(word.begin(), word.end() - 1);
    const Tower& below = tower(prefix);
    built->levels_ = below.levels_;
    CotensorSpace step = apply_F_step(word.back(), below.top());
    built->levels_.push_back(
        TowerLevel{word.back(), std::move(step.module), std::move(step.basis)});
  }
  return *towers_.emplace(word, std::move(built)).first->second;
}

LinearMap FunctorContext::rho_ind_matrix(int i, const std::vector<int>& post) {
  const std::vector<int> app = reversed(post);
  const std::vector<int> word_single = concat(app, {i});
  const std::vector<int> word_double = concat(app, {i, i});
  const Tower& single = tower(word_single);
  const Tower& twice = tower(word_double);

  SparseEchelon flat;
  for (const auto& vec : twice.flatten_top(2)) {
    if (!flat.insert(vec)) {
      throw Error(ErrorCode::Internal, "flattened tower basis not independent");
    }
  }
  const InductionPiece& piece =
      induction_piece(base_n_, Shape::a(base_n_, i), degree_, params_);

  LinearMap rho(single.top().labels, twice.top().labels);
  const TowerLevel& level = single.level(single.height() - 1);
  for (std::size_t v = 0; v < level.basis.size(); ++v) {
    SparseVec image;
    for (const auto& [key, c] : level.basis[v]) {
      for (const auto& [a1, a2, d] : piece.piece->delta(key[1])) {
        sparse_add(image, Key{key[0], a1, a2}, c * d);
      }
    }
    const auto coeffs = flat.express(image);
    if (!coeffs) {
      throw Error(ErrorCode::CheckFailed,
                  "the adjunction coaction must land in the iterated cotensor, "
                  "but it does not");
    }
    for (std::size_t p = 0; p < coeffs->size(); ++p) {
      if ((*coeffs)[p] != 0) rho.at(p, v) = (*coeffs)[p];
    }
  }
  return rho;
}

const LinearMap& FunctorContext::tau_matrix(const TauKind& kind,
                                            const std::vector<int>& post) {
  std::string cache_key = kind.name() + "@" + word_str(post);
  auto it = tau_cache_.find(cache_key);
  if (it != tau_cache_.end()) return it->second;

  const std::vector<int> app = reversed(post);
  const std::vector<int> word_src = concat(app, reversed(kind.src_word()));
  const std::vector<int> word_dst = concat(app, reversed(kind.dst_word()));

  LinearMap result;
  if (kind.type == TauKind::Type::Equal) {
    result = rho_ind_matrix(kind.i, post).inverse();
  } else {
    const std::size_t depth = kind.type == TauKind::Type::Distant ? 2 : 3;
    const Tower& src_tower = tower(word_src);
    const Tower& dst_tower = tower(word_dst);
    const TMapData& data = t_map_data(base_n_, kind, degree_, params_);

    SparseEchelon dst_flat;
    for (const auto& vec : dst_tower.flatten_top(depth)) {
      if (!dst_flat.insert(vec)) {
        throw Error(ErrorCode::Internal, "flattened tower basis not independent");
      }
    }

    const std::vector<SparseVec> src_flat = src_tower.flatten_top(depth);
    LinearMap matrix(src_tower.top().labels, dst_tower.top().labels);
    for (std::size_t v = 0; v < src_flat.size(); ++v) {
      // Split into tails over the top `depth` legs per lower-level index.
      std::map<int, SparseVec> tails;
      for (const auto& [key, c] : src_flat[v]) {
        tails[key[0]].emplace(Key(key.begin() + 1, key.end()), c);
      }
      SparseVec image;
      for (const auto& [lower, tail] : tails) {
        const auto coeffs = data.source_echelon.express(tail);
        if (!coeffs) {
          throw Error(ErrorCode::CheckFailed,
                      kind.name() +
                          ": a cotensor tail lies outside the span of the "
                          "projected working basis");
        }
        for (std::size_t k = 0; k < coeffs->size(); ++k) {
          if ((*coeffs)[k] == 0) continue;
          for (const auto& [tkey, tc] : data.target.columns[k]) {
            Key merged{lower};
            merged.insert(merged.end(), tkey.begin(), tkey.end());
            sparse_add(image, merged, (*coeffs)[k] * tc);
          }
        }
      }
      const auto column = dst_flat.express(image);
      if (!column) {
        throw Error(ErrorCode::CheckFailed,
                    kind.name() + ": image escapes the destination cotensor");
      }
      for (std::size_t p = 0; p < column->size(); ++p) {
        if ((*column)[p] != 0) matrix.at(p, v) = (*column)[p];
      }
    }
    result = std::move(matrix);
  }

  const Tower& src_tower = tower(word_src);
  const Tower& dst_tower = tower(word_dst);
  if (src_tower.top().dim() != dst_tower.top().dim() ||
      result.rank() != src_tower.top().dim()) {
    throw Error(ErrorCode::NotInvertible,
                kind.name() + " at " + word_str(post) + ": rank " +
                    std::to_string(result.rank()) + ", dims " +
                    std::to_string(src_tower.top().dim()) + " -> " +
                    std::to_string(dst_tower.top().dim()));
  }
  if (!intertwines(result, src_tower.top(), dst_tower.top())) {
    throw Error(ErrorCode::CheckFailed,
                kind.name() + " does not intertwine the coactions");
  }
  return tau_cache_.emplace(std::move(cache_key), std::move(result)).first->second;
}

LinearMap FunctorContext::apply_F_to_map(int i, const LinearMap& phi,
                                         const Tower& src_tower,
                                         const Tower& dst_tower) {
  if (src_tower.height() == 0 || dst_tower.height() == 0) {
    throw Error(ErrorCode::InvalidArgument, "apply_F_to_map needs one step");
  }
  const TowerLevel& src_level = src_tower.level(src_tower.height() - 1);
  const TowerLevel& dst_level = dst_tower.level(dst_tower.height() - 1);
  if (src_level.index != i || dst_level.index != i) {
    throw Error(ErrorCode::InvalidArgument, "towers do not end with F_i");
  }
  const Comodule& src_below = src_tower.height() == 1
                                  ? src_tower.base()
                                  : src_tower.level(src_tower.height() - 2).module;
  const Comodule& dst_below = dst_tower.height() == 1
                                  ? dst_tower.base()
                                  : dst_tower.level(dst_tower.height() - 2).module;
  if (phi.domain_dim() != src_below.dim() || phi.codomain_dim() != dst_below.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "apply_F_to_map: size mismatch");
  }

  SparseEchelon dst_basis;
  for (const auto& vec : dst_level.basis) {
    if (!dst_basis.insert(vec)) {
      throw Error(ErrorCode::Internal, "cotensor basis not independent");
    }
  }
  LinearMap out(src_level.module.labels, dst_level.module.labels);
  for (std::size_t v = 0; v < src_level.basis.size(); ++v) {
    SparseVec image;
    for (const auto& [key, c] : src_level.basis[v]) {
      for (std::size_t p = 0; p < phi.codomain_dim(); ++p) {
        const Scalar& t = phi.at(p, static_cast<std::size_t>(key[0]));
        if (t == 0) continue;
        sparse_add(image, Key{static_cast<int>(p), key[1]}, c * t);
      }
    }
    const auto column = dst_basis.express(image);
    if (!column) {
      throw Error(ErrorCode::RestrictionFailure,
                  "F_" + std::to_string(i) +
                      "(phi): image leaves the destination cotensor subspace");
    }
    for (std::size_t p = 0; p < column->size(); ++p) {
      if ((*column)[p] != 0) out.at(p, v) = (*column)[p];
    }
  }
  return out;
}

const LinearMap& FunctorContext::arrow_matrix(const Arrow& arrow) {
  std::ostringstream key_stream;
  key_stream << word_str(arrow.pre) << (arrow.inverted ? "~" : "|") << arrow.kind.name()
             << word_str(arrow.post);
  std::string cache_key = key_stream.str();
  auto it = arrow_cache_.find(cache_key);
  if (it != arrow_cache_.end()) return it->second;

  LinearMap matrix = tau_matrix(arrow.kind, arrow.post);
  if (arrow.inverted) matrix = matrix.inverse();

  const std::vector<int> mid_src = arrow.inverted ? arrow.kind.dst_word()
                                                  : arrow.kind.src_word();
  const std::vector<int> mid_dst = arrow.inverted ? arrow.kind.src_word()
                                                  : arrow.kind.dst_word();
  std::vector<int> src_app = concat(reversed(arrow.post), reversed(mid_src));
  std::vector<int> dst_app = concat(reversed(arrow.post), reversed(mid_dst));
  for (std::size_t t = arrow.pre.size(); t-- > 0;) {
    const int i = arrow.pre[t];
    src_app.push_back(i);
    dst_app.push_back(i);
    matrix = apply_F_to_map(i, matrix, tower(src_app), tower(dst_app));
  }
  return arrow_cache_.emplace(std::move(cache_key), std::move(matrix))
      .first->second;
}

// ----------------------------------------------------------- tensor identity ---

LinearMap tensor_identity(int i, const Comodule& M, const Comodule& N) {
  if (!M.coalgebra || !N.coalgebra) {
    throw Error(ErrorCode::InvalidArgument, "tensor_identity: missing piece");
  }
  const int n = M.coalgebra->n();
  const ParamSpec& params = M.coalgebra->params();
  const Shape ai = Shape::a(n, i);
  const Shape delta = Shape::delta(n);
  if (!(M.coalgebra->shape() == ai)) {
    throw Error(ErrorCode::ShapeMismatch, "tensor_identity: M must be over A(a[i];r)");
  }
  if (!(N.coalgebra->shape() == delta) || N.coalgebra->n() != n ||
      !(N.coalgebra->params() == params)) {
    throw Error(ErrorCode::ShapeMismatch,
                "tensor_identity: N must be over A(delta;r) at the same parameters");
  }
  const int r1 = M.coalgebra->degree();
  const int r2 = N.coalgebra->degree();

  // M corestricted along A(a[i];r1) -> A(delta;r1).
  Comodule m_delta;
  m_delta.coalgebra = graded_coalgebra(n, delta, r1, params);
  m_delta.labels = M.labels;
  m_delta.rho.resize(M.dim());
  for (std::size_t m = 0; m < M.dim(); ++m) {
    for (const auto& [j, q, c] : M.rho[m]) {
      const Exponent& omega = M.coalgebra->basis_at(q);
      if (!omega.admissible(delta)) continue;
      const int idx = m_delta.coalgebra->index_of(omega);
      if (idx < 0) throw Error(ErrorCode::Internal, "corestriction escaped");
      m_delta.rho[m].emplace_back(j, idx, c);
    }
  }
  m_delta.validate();

  const Comodule mn = tensor(m_delta, N);
  const CotensorSpace fin = apply_F_step(i, N);
  const CotensorSpace fimn = apply_F_step(i, mn);

  SparseEchelon target_basis;
  for (const auto& vec : fimn.basis) {
    if (!target_basis.insert(vec)) {
      throw Error(ErrorCode::Internal, "cotensor basis not independent");
    }
  }
  const RuleSet rules_ai(n, params, ai);
  const CoalgebraPtr ai_big = graded_coalgebra(n, ai, r1 + r2, params);

  std::vector<std::string> domain_labels;
  domain_labels.reserve(M.dim() * fin.module.dim());
  for (std::size_t m = 0; m < M.dim(); ++m) {
    for (std::size_t t = 0; t < fin.module.dim(); ++t) {
      domain_labels.push_back(M.labels[m] + "(x)" + fin.module.labels[t]);
    }
  }
  const InductionPiece& ind = induction_piece(n, ai, r2, params);
  LinearMap out(domain_labels, fimn.module.labels);
  for (std::size_t m = 0; m < M.dim(); ++m) {
    for (std::size_t t = 0; t < fin.module.dim(); ++t) {
      SparseVec image;
      for (const auto& [jm, q1, cm] : M.rho[m]) {
        const Word left = M.coalgebra->basis_at(q1).to_word();
        for (const auto& [key, co] : fin.basis[t]) {
          Word product = left;
          const Word tail = ind.piece->basis_at(key[1]).to_word();
          product.insert(product.end(), tail.begin(), tail.end());
          for (const auto& [omega, cp] : rules_ai.normalize(product)) {
            const int big = ai_big->index_of(omega);
            if (big < 0) throw Error(ErrorCode::Internal, "product escaped");
            sparse_add(image,
                       Key{static_cast<int>(jm * N.dim() + key[0]), big},
                       cm * co * cp);
          }
        }
      }
      const auto column = target_basis.express(image);
      if (!column) {
        throw Error(ErrorCode::CheckFailed,
                    "tensor identity image must lie in the cotensor subspace");
      }
      for (std::size_t p = 0; p < column->size(); ++p) {
        if ((*column)[p] != 0) out.at(p, m * fin.module.dim() + t) = (*column)[p];
      }
    }
  }
  if (out.domain_dim() != out.codomain_dim() || out.rank() != out.domain_dim()) {
    throw Error(ErrorCode::NotInvertible,
                "tensor identity map is not bijective: rank " +
                    std::to_string(out.rank()) + ", dims " +
                    std::to_string(out.domain_dim()) + " -> " +
                    std::to_string(out.codomain_dim()));
  }
  return out;
}

// ------------------------------------------------------------------- diagrams ---

namespace {

Arrow make_arrow(std::vector<int> pre, TauKind kind, std::vector<int> post,
                 bool inverted = false) {
  Arrow a;
  a.pre = std::move(pre);
  a.kind = std::move(kind);
  a.post = std::move(post);
  a.inverted = inverted;
  return a;
}

void verify_instance(const DiagramInstance& inst) {
  const auto verify_path = [&](const std::vector<Arrow>& path) {
    for (std::size_t t = 1; t < path.size(); ++t) {
      if (path[t].source_word() != path[t - 1].target_word()) {
        throw Error(ErrorCode::Internal,
                    "diagram family " + std::to_string(inst.family) +
                        ": arrows do not chain");
      }
    }
  };
  verify_path(inst.path1);
  verify_path(inst.path2);
  if (inst.path1.front().source_word() != inst.path2.front().source_word() ||
      inst.path1.back().target_word() != inst.path2.back().target_word()) {
    throw Error(ErrorCode::Internal,
                "diagram family " + std::to_string(inst.family) +
                    ": paths have different endpoints");
  }
}

}  // namespace

std::vector<DiagramInstance> diagram_instances(int n,
                                               const std::vector<int>& families) {
  const auto wanted = [&](int f) {
    return std::find(families.begin(), families.end(), f) != families.end();
  };
  std::vector<DiagramInstance> out;
  const auto add = [&](int family, std::vector<int> indices,
                       std::vector<Arrow> path1, std::vector<Arrow> path2) {
    DiagramInstance inst;
    inst.family = family;
    inst.indices = std::move(indices);
    inst.path1 = std::move(path1);
    inst.path2 = std::move(path2);
    verify_instance(inst);
    out.push_back(std::move(inst));
  };

  for (int i = 1; i <= n - 1; ++i) {
    if (wanted(1)) {
      const TauKind eq = TauKind::equal(i);
      add(1, {i},
          {make_arrow({}, eq, {i}), make_arrow({}, eq, {})},
          {make_arrow({i}, eq, {}), make_arrow({}, eq, {})});
    }
    if (i + 1 <= n - 1) {
      const int j = i + 1;
      const TauKind eqi = TauKind::equal(i);
      const TauKind eqj = TauKind::equal(j);
      const TauKind adj = TauKind::adjacent(i);
      if (wanted(2)) {
        add(2, {i},
            {make_arrow({}, eqj, {i, j}), make_arrow({}, adj, {})},
            {make_arrow({j}, adj, {}), make_arrow({}, adj, {i}),
             make_arrow({i, j}, eqi, {})});
      }
      if (wanted(3)) {
        add(3, {i},
            {make_arrow({j, i}, eqj, {}), make_arrow({}, adj, {})},
            {make_arrow({}, adj, {j}), make_arrow({i}, adj, {}),
             make_arrow({}, eqi, {j, i})});
      }
      if (wanted(6)) {
        add(6, {i},
            {make_arrow({j, i}, adj, {}), make_arrow({j}, eqi, {j, i}),
             make_arrow({}, adj, {i}), make_arrow({i, j}, eqi, {})},
            {make_arrow({}, adj, {i, j}), make_arrow({i, j}, eqi, {j}),
             make_arrow({i}, adj, {}), make_arrow({}, eqi, {j, i})});
      }
    }
    for (int j = i + 2; j <= n - 1; ++j) {
      const TauKind eqi = TauKind::equal(i);
      const TauKind eqj = TauKind::equal(j);
      const TauKind dist = TauKind::distant(i, j);
      if (wanted(4)) {
        add(4, {i, j},
            {make_arrow({j}, eqi, {}), make_arrow({}, dist, {})},
            {make_arrow({}, dist, {i}), make_arrow({i}, dist, {}),
             make_arrow({}, eqi, {j})});
      }
      if (wanted(5)) {
        add(5, {i, j},
            {make_arrow({}, eqj, {i}), make_arrow({}, dist, {})},
            {make_arrow({j}, dist, {}), make_arrow({}, dist, {j}),
             make_arrow({i}, eqj, {})});
      }
    }
  }
  if (wanted(7)) {
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        const int h = i - 1;
        const TauKind dij = TauKind::distant(i, j);
        const TauKind dhj = TauKind::distant(h, j);
        const TauKind adjh = TauKind::adjacent(h);
        add(7, {h, i, j},
            {make_arrow({}, dij, {h, i}), make_arrow({i}, dhj, {i}),
             make_arrow({i, h}, dij, {}), make_arrow({}, adjh, {j})},
            {make_arrow({j}, adjh, {}), make_arrow({}, dhj, {i, h}),
             make_arrow({h}, dij, {h}), make_arrow({h, i}, dhj, {})});
      }
    }
  }
  if (wanted(8)) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j + 1 <= n - 1; ++j) {
        const int k = j + 1;
        const TauKind dik = TauKind::distant(i, k);
        const TauKind dij = TauKind::distant(i, j);
        const TauKind adjj = TauKind::adjacent(j);
        add(8, {i, j, k},
            {make_arrow({k, j}, dik, {}), make_arrow({k}, dij, {k}),
             make_arrow({}, dik, {j, k}), make_arrow({i}, adjj, {})},
            {make_arrow({}, adjj, {i}), make_arrow({j, k}, dij, {}),
             make_arrow({j}, dik, {j}), make_arrow({}, dij, {k, j})});
      }
    }
  }
  if (wanted(9)) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        for (int k = j + 2; k <= n - 1; ++k) {
          const TauKind dij = TauKind::distant(i, j);
          const TauKind dik = TauKind::distant(i, k);
          const TauKind djk = TauKind::distant(j, k);
          add(9, {i, j, k},
              {make_arrow({k}, dij, {}), make_arrow({}, dik, {j}),
               make_arrow({i}, djk, {})},
              {make_arrow({}, djk, {i}), make_arrow({j}, dik, {}),
               make_arrow({}, dij, {k})});
        }
      }
    }
  }
  if (wanted(10)) {
    for (int i = 1; i + 2 <= n - 1; ++i) {
      const int j = i + 1, k = i + 2;
      const TauKind dik = TauKind::distant(i, k);
      const TauKind adji = TauKind::adjacent(i);
      const TauKind adjj = TauKind::adjacent(j);
      add(10, {i, j, k},
          {make_arrow({k, j}, dik, {j, k}, true), make_arrow({}, adjj, {i, j, k}),
           make_arrow({j, k}, adji, {k}), make_arrow({j}, dik, {j, i, k}),
           make_arrow({j, i, k, j}, dik, {}, true), make_arrow({j, i}, adjj, {i}),
           make_arrow({}, adji, {k, j, i})},
          {make_arrow({k, j, i}, adjj, {}), make_arrow({k}, adji, {k, j}),
           make_arrow({}, dik, {j, i, k, j}), make_arrow({i, k, j}, dik, {j}, true),
           make_arrow({i}, adjj, {i, j}), make_arrow({i, j, k}, adji, {}),
           make_arrow({i, j}, dik, {j, i})});
    }
  }
  return out;
}

std::vector<DiagramCheck> check_preaction_diagrams(
    int n, const std::vector<std::pair<std::string, Comodule>>& modules,
    const std::vector<int>& families) {
  const std::vector<DiagramInstance> instances = diagram_instances(n, families);
  std::vector<DiagramCheck> out;
  for (const auto& [label, module] : modules) {
    FunctorContext ctx(module);
    for (const auto& inst : instances) {
      DiagramCheck check;
      check.family = inst.family;
      check.indices = inst.indices;
      check.module_label = label;
      check.start_word = inst.path1.front().source_word();
      check.end_word = inst.path1.back().target_word();
      try {
        const auto compose_path = [&](const std::vector<Arrow>& path) {
          LinearMap acc = LinearMap::identity(
              ctx.tower(reversed(path.front().source_word())).top().labels);
          for (const auto& arrow : path) {
            acc = ctx.arrow_matrix(arrow).compose(acc);
          }
          return acc;
        };
        const LinearMap p1 = compose_path(inst.path1);
        const LinearMap p2 = compose_path(inst.path2);
        check.start_dim = p1.domain_dim();
        check.end_dim = p1.codomain_dim();
        check.pass = p1 == p2;
        check.detail = check.pass ? "paths agree" : "path matrices differ";
      } catch (const Error& e) {
        check.pass = false;
        check.detail = std::string(error_code_name(e.code())) + ": " + e.what();
      }
      out.push_back(std::move(check));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const DiagramCheck& a,
                                              const DiagramCheck& b) {
    return std::tie(a.family, a.indices, a.module_label) <
           std::tie(b.family, b.indices, b.module_label);
  });
  return out;
}

}  // namespace qba
