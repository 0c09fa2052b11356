// The induction endofunctors F_i on comodules over A(delta;r), the natural
// isomorphisms between their composites (equal, distant, and adjacent
// indices), and the mechanical checker for the ten commutative-diagram
// families they must satisfy.
//
// Composites are materialized as towers: F_{w_k}...F_{w_1}M is built one
// cotensor step at a time, each level keeping its basis sparsely over
// (previous-level index, A(a[i];r) index) pairs.  Natural maps flatten only
// the top two or three levels.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/comod.hpp"

namespace qba {

// ---------------------------------------------------------------- tau kinds ---

struct TauKind {
  enum class Type { Equal, Distant, Adjacent };
  Type type = Type::Equal;
  int i = 0;
  int j = 0;  // Distant only; then j >= i + 2

  static TauKind equal(int i);
  static TauKind distant(int i, int j);    // IndexViolation unless j >= i+2
  static TauKind adjacent(int i);

  // Source and destination functor words in composition order:
  //   Equal(i):    F_iF_i -> F_i
  //   Distant(i,j): F_jF_i -> F_iF_j
  //   Adjacent(i): F_{i+1}F_iF_{i+1} -> F_iF_{i+1}F_i
  std::vector<int> src_word() const;
  std::vector<int> dst_word() const;
  std::string name() const;
  bool operator<(const TauKind& other) const {
    return std::tie(type, i, j) < std::tie(other.type, other.i, other.j);
  }
};

// ------------------------------------------------------------------- towers ---

struct TowerLevel {
  int index = 0;                 // the i of A(a[i];r)
  Comodule module;               // right A(delta;r)-comodule at this level
  std::vector<SparseVec> basis;  // over Key{previous-level index, a index}
};

class Tower {
 public:
  explicit Tower(Comodule base) : base_(std::move(base)) {}

  const Comodule& base() const { return base_; }
  std::size_t height() const { return levels_.size(); }
  const TowerLevel& level(std::size_t k) const { return levels_[k]; }
  const Comodule& top() const {
    return levels_.empty() ? base_ : levels_.back().module;
  }

  // Top-level basis vectors expanded `depth` levels down: coordinates
  // Key{index at height-depth, a index at height-depth+1, ..., a index at
  // height}; depth = 0 gives unit vectors.
  std::vector<SparseVec> flatten_top(std::size_t depth) const;

 private:
  friend class FunctorContext;
  Comodule base_;
  std::vector<TowerLevel> levels_;
};

// ------------------------------------------------------------ single steps ---

// One induction step: the cotensor of M with A(a[i];r); M must live over
// A(delta;r) and the parameters are taken from its piece.
CotensorSpace apply_F_step(int i, const Comodule& M);

Comodule apply_F(int i, const Comodule& M);

// word in application order: word.front() is applied first, so the result
// is F_{word.back()} ... F_{word.front()} M.
Comodule apply_word(const std::vector<int>& word, const Comodule& M);

// -------------------------------------------------------------- t-map data ---

// Working bases for the cotensor products of induction pieces: the columns
// of the two multi-projections out of A(c;r), where c = delta+v_i+v_j
// (distant) or delta+2v_i+v_{i+1} (adjacent).  Construction verifies, for
// both column families: linear independence (the projections are injective)
// and the cotensor equalizer equations at every interface.  The t-map sends
// source column k to target column k.
struct TMapData {
  MultiProjection source;  // legs in source tower order
  MultiProjection target;  // legs in target tower order
  SparseEchelon source_echelon;
};

const TMapData& t_map_data(int n, const TauKind& kind, int degree,
                           const ParamSpec& params);

// --------------------------------------------------------- functor context ---

// An arrow F_{pre} tau F_{post} between composite applications to the base
// module; pre and post are in composition order.  inverted means the arrow
// is the inverse isomorphism (running against tau's direction).
struct Arrow {
  std::vector<int> pre;
  TauKind kind;
  bool inverted = false;
  std::vector<int> post;

  std::vector<int> source_word() const;  // composition order
  std::vector<int> target_word() const;
};

class FunctorContext {
 public:
  explicit FunctorContext(Comodule base);

  int n() const { return base_n_; }
  const ParamSpec& params() const { return params_; }

  // word in application order (reverse of composition order).
  const Tower& tower(const std::vector<int>& word);

  // Matrix of rho_ind: F_i(F_post M) -> F_iF_i(F_post M), the coaction of
  // the induction adjunction whose inverse defines tau_ii.
  LinearMap rho_ind_matrix(int i, const std::vector<int>& post);

  // Natural map of tau at the object F_post(base): a matrix
  // tower(rev(post)+rev(src)) -> tower(rev(post)+rev(dst)).  Verified to be
  // invertible (NotInvertible) and to intertwine the coactions.
  const LinearMap& tau_matrix(const TauKind& kind, const std::vector<int>& post);

  // F_i(phi) for phi between the tops of the towers one step below
  // src_tower and dst_tower.  RestrictionFailure when (phi (x) id) leaves
  // the destination cotensor subspace.
  LinearMap apply_F_to_map(int i, const LinearMap& phi, const Tower& src_tower,
                           const Tower& dst_tower);

  const LinearMap& arrow_matrix(const Arrow& arrow);

 private:
  Comodule base_;
  int base_n_;
  int degree_;
  ParamSpec params_;
  std::map<std::vector<int>, std::unique_ptr<Tower>> towers_;
  std::map<std::string, LinearMap> tau_cache_;
  std::map<std::string, LinearMap> arrow_cache_;
};

// --------------------------------------------------------- tensor identity ---

// The isomorphism M (x) F_i N -> F_i(M (x) N) for M a comodule over
// A(a[i];r1) and N over A(delta;r2):
//   x (x) (y (x) c) -> x_(0) (x) y (x) x_(1)*c.
// Returns the matrix in the bases (M basis) x (F_iN basis) -> F_i(M (x) N)
// basis; throws NotInvertible unless bijective.
LinearMap tensor_identity(int i, const Comodule& M, const Comodule& N);

// ----------------------------------------------------------------- diagrams ---

struct DiagramCheck {
  int family = 0;
  std::vector<int> indices;
  std::string module_label;
  std::vector<int> start_word, end_word;  // composition order
  std::size_t start_dim = 0, end_dim = 0;
  bool pass = false;
  std::string detail;
};

// The two boundary paths of one diagram family instance, as arrow lists in
// application order (first arrow acts first).
struct DiagramInstance {
  int family = 0;
  std::vector<int> indices;
  std::vector<Arrow> path1, path2;
};

// All instances of the given families admissible at this n (indices range
// over 1..n-1; vacuous families contribute no instances).
std::vector<DiagramInstance> diagram_instances(int n, const std::vector<int>& families);

// Composes both paths of every instance on every test module and compares
// the matrices entry by entry.
std::vector<DiagramCheck> check_preaction_diagrams(
    int n, const std::vector<std::pair<std::string, Comodule>>& modules,
    const std::vector<int>& families);

}  // namespace qba
