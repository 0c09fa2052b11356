// Acceptance suite: ten exact criteria, one PASS/FAIL line each.
// Exit code 0 iff every criterion passes.  All arithmetic is exact
// rational; every comparison below is equality with zero tolerance.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/functors.hpp"
#include "core/heckedem.hpp"
#include "core/schur.hpp"

using namespace qba;

namespace {

int g_failures = 0;

void verdict(int number, const std::string& name, bool ok,
             const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// Runs one criterion body; an uncaught Error or exception means FAIL.
void criterion(int number, const std::string& name,
               const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    verdict(number, name, true, detail);
  } catch (const Error& e) {
    verdict(number, name, false,
            std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    verdict(number, name, false, std::string("exception: ") + e.what());
  }
}

struct Check {
  bool ok = true;
  std::string first_failure;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
  void finish(const std::string& summary) const {
    if (!ok) throw Error(ErrorCode::CheckFailed, first_failure);
  }
};

unsigned long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  unsigned long long out = 1;
  for (int k = 1; k <= b; ++k) out = out * static_cast<unsigned long long>(a - b + k) / static_cast<unsigned long long>(k);
  return out;
}

std::vector<ParamSpec> suite_params() {
  return {ParamSpec(1, 1), ParamSpec(2, 3), ParamSpec::from_strings("2", "1/2")};
}

std::vector<std::vector<int>> weights_of_degree(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      w[static_cast<std::size_t>(pos)] = rem;
      out.push_back(w);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      w[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, r);
  return out;
}

std::string weight_label(const std::vector<int>& w) {
  std::string lab = "k_(";
  for (std::size_t k = 0; k < w.size(); ++k)
    lab += std::to_string(w[k]) + (k + 1 < w.size() ? "," : ")");
  return lab;
}

std::vector<std::pair<std::string, Comodule>> weight_modules(int n, int r,
                                                             const ParamSpec& params) {
  auto piece = graded_coalgebra(n, Shape::delta(n), r, params);
  std::vector<std::pair<std::string, Comodule>> mods;
  for (const auto& w : weights_of_degree(n, r))
    mods.emplace_back(weight_label(w), one_dim(w, piece));
  return mods;
}

// Canonical form of a coaction row for order-insensitive comparison.
std::vector<std::vector<std::tuple<int, int, Scalar>>> sorted_rho(const Comodule& M) {
  auto rows = M.rho;
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return rows;
}

// ------------------------------------------------------------ criterion 1 ---

std::string run_diamond() {
  auto start = std::chrono::steady_clock::now();
  Check chk;
  std::size_t cases = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::optional<Shape>> shapes;
    shapes.emplace_back(std::nullopt);
    shapes.emplace_back(Shape::delta(n));
    for (int i = 1; i <= n - 1; ++i) shapes.emplace_back(Shape::a(n, i));
    for (const auto& pr : suite_params()) {
      for (const auto& shape : shapes) {
        RuleSet rules(n, pr, shape);
        DiamondReport rep = check_diamond(rules);
        chk.require(rep.ok(), "diamond ambiguity unresolved at n=" + std::to_string(n));
        chk.require(rep.ambiguities > 0, "no ambiguities enumerated");
        ++cases;
      }
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  chk.require(elapsed < 5000, "runtime " + std::to_string(elapsed) + " ms >= 5 s");
  chk.finish("");
  return std::to_string(cases) + " rule systems confluent, " +
         std::to_string(elapsed) + " ms";
}

// ------------------------------------------------------------ criterion 2 ---

std::string run_dimensions() {
  Check chk;
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    int g = n * (n + 1) / 2;
    for (int r = 0; r <= 4; ++r) {
      std::size_t got = monomial_basis(n, Shape::delta(n), r).size();
      chk.require(got == binom(r + g - 1, r),
                  "dim A(delta;" + std::to_string(r) + ") at n=" + std::to_string(n));
      ++cases;
      for (int i = 1; i <= n - 1; ++i) {
        std::size_t gota = monomial_basis(n, Shape::a(n, i), r).size();
        chk.require(gota == binom(r + g, r),
                    "dim A(a_" + std::to_string(i) + ";" + std::to_string(r) +
                        ") at n=" + std::to_string(n));
        ++cases;
      }
    }
  }
  chk.finish("");
  return std::to_string(cases) + " dimension identities";
}

// ------------------------------------------------------------ criterion 3 ---

std::string run_determinant() {
  Check chk;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& pr : suite_params()) {
      // Construction itself compares the row and column expansions.
      AlgebraElement d = quantum_determinant(n, pr);
      chk.require(static_cast<int>(d.terms.size()) >= 1, "empty determinant");

      // Group-like: Delta(d) = d (x) d in the full bialgebra.
      TensorElement dd = comultiply(d, pr);
      TensorElement want{n, {std::nullopt, std::nullopt}, {}};
      for (const auto& [w1, c1] : d.terms)
        for (const auto& [w2, c2] : d.terms) want.add_term({w1, w2}, c1 * c2);
      chk.require(dd == want, "Delta(d) != d(x)d at n=" + std::to_string(n));

      // Commutation with every surviving generator in A(delta).
      RuleSet rules(n, pr, Shape::delta(n));
      AlgebraElement dbar = project(d, Shape::delta(n));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
          AlgebraElement cij = AlgebraElement::monomial(
              n, Exponent::unit(n, i, j), 1, Shape::delta(n));
          AlgebraElement lhs = rules.multiply(cij, dbar);
          AlgebraElement rhs = rules.multiply(dbar, cij)
                                   .scaled(scalar_pow(pr.alpha_inv() * pr.beta, i - j));
          chk.require(lhs == rhs, "commutation fails at n=" + std::to_string(n) +
                                      " c_{" + std::to_string(i) + std::to_string(j) + "}");
        }
      }
    }
  }
  chk.finish("");
  return "row=col, group-like, and commutation at n<=3, all specializations";
}

// ------------------------------------------------------------ criterion 4 ---

std::string run_exact_sequences() {
  Check chk;
  ParamSpec params(1, 1);
  std::size_t cases = 0;
  // All non-decreasing shapes 1 <= b_1 <= b_2 <= b_3 <= 3.
  for (int b1 = 1; b1 <= 3; ++b1)
    for (int b2 = b1; b2 <= 3; ++b2)
      for (int b3 = b2; b3 <= 3; ++b3) {
        Shape b(std::vector<int>{b1, b2, b3});
        for (int l = 1; l <= 3; ++l) {
          bool valid = true;
          try {
            valid = b.minus_v(l).is_nondecreasing();
          } catch (const Error&) {
            valid = false;
          }
          if (!valid) continue;
          for (int r = 0; r <= 3; ++r) {
            ExactSequenceReport rep = check_exact_sequence(3, b, l, r, params);
            chk.require(rep.ok(), "sequence fails at b=(" + std::to_string(b1) + "," +
                                      std::to_string(b2) + "," + std::to_string(b3) +
                                      ") l=" + std::to_string(l) +
                                      " r=" + std::to_string(r));
            chk.require(rep.dim_sub + rep.dim_quot == rep.dim_mid,
                        "rank identity fails");
            ++cases;
          }
        }
      }
  chk.finish("");
  return std::to_string(cases) + " graded strands exact";
}

// ------------------------------------------------------------ criterion 5 ---

std::string run_goldens() {
  Check chk;
  ParamSpec params(1, 1);
  auto piece = graded_coalgebra(3, Shape::delta(3), 2, params);
  Comodule k110 = one_dim({1, 1, 0}, piece);

  // F1 k_(1,1,0) is one-dimensional and isomorphic to k_(1,1,0).
  Comodule f1 = apply_F(1, k110);
  chk.require(f1.dim() == 1, "dim F1 k110 != 1");
  chk.require(find_isomorphism(f1, k110).has_value(), "F1 k110 not isomorphic to k110");

  // F2 k_(1,1,0) is two-dimensional and matches the explicit coaction
  // rho(m1) = m1 (x) c11c22 + m2 (x) c11c32, rho(m2) = m2 (x) c11c33.
  Comodule f2 = apply_F(2, k110);
  chk.require(f2.dim() == 2, "dim F2 k110 != 2");
  {
    Comodule explicit_model;
    explicit_model.coalgebra = piece;
    Exponent c11c22 = Exponent::unit(3, 1, 1) + Exponent::unit(3, 2, 2);
    Exponent c11c32 = Exponent::unit(3, 1, 1) + Exponent::unit(3, 3, 2);
    Exponent c11c33 = Exponent::unit(3, 1, 1) + Exponent::unit(3, 3, 3);
    int q22 = piece->index_of(c11c22), q32 = piece->index_of(c11c32),
        q33 = piece->index_of(c11c33);
    chk.require(q22 >= 0 && q32 >= 0 && q33 >= 0, "explicit monomials missing");
    explicit_model.rho = {{{0, q22, 1}, {1, q32, 1}}, {{1, q33, 1}}};
    explicit_model.labels = {"m1", "m2"};
    explicit_model.validate();
    chk.require(find_isomorphism(f2, explicit_model).has_value(),
                "F2 k110 does not match the explicit coaction");
  }

  // F2 k_(1,0,1) vanishes.
  chk.require(apply_F(2, one_dim({1, 0, 1}, piece)).dim() == 0, "F2 k101 != 0");

  // F1 F2 k_(1,1,0): dimension 3, weights (1,1,0),(1,0,1),(0,1,1); the
  // structure element on the lowest weight line is c21c32 - c22c31 up to
  // one free scalar.
  Comodule f1f2 = apply_F(1, f2);
  chk.require(f1f2.dim() == 3, "dim F1F2 k110 != 3");
  auto spaces = weight_decompose(f1f2);
  chk.require(spaces.size() == 3, "wrong number of weights");
  std::vector<std::vector<int>> expected_weights = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  std::vector<std::vector<Scalar>> basis_by_weight(3);
  for (const auto& ws : spaces) {
    bool found = false;
    for (std::size_t k = 0; k < expected_weights.size(); ++k) {
      if (ws.weight == expected_weights[k]) {
        chk.require(ws.vectors.size() == 1, "weight multiplicity != 1");
        basis_by_weight[k] = ws.vectors.front();
        found = true;
      }
    }
    chk.require(found, "unexpected weight in F1F2 k110");
  }
  if (chk.ok) {
    // Change of basis to (w, v, u) = weights ((0,1,1), (1,0,1), (1,1,0));
    // read off the coefficient of w (x) A in rho(u).
    LinearMap P({"w", "v", "u"}, f1f2.labels);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t m = 0; m < 3; ++m) P.at(m, k) = basis_by_weight[k][m];
    LinearMap Pinv = P.inverse();
    std::map<int, Scalar> entry;  // coalgebra index -> coefficient
    for (std::size_t m = 0; m < 3; ++m) {
      const Scalar& um = P.at(m, 2);  // u expanded in the cotensor basis
      if (um == 0) continue;
      for (const auto& [j, q, c] : f1f2.rho[m]) {
        const Scalar& wj = Pinv.at(0, static_cast<std::size_t>(j));
        if (wj == 0) continue;
        Scalar& slot = entry[q];
        slot += um * c * wj;
        if (slot == 0) entry.erase(q);
      }
    }
    Exponent c21c32 = Exponent::unit(3, 2, 1) + Exponent::unit(3, 3, 2);
    Exponent c22c31 = Exponent::unit(3, 2, 2) + Exponent::unit(3, 3, 1);
    int qa = piece->index_of(c21c32), qb = piece->index_of(c22c31);
    chk.require(entry.size() == 2 && entry.count(qa) == 1 && entry.count(qb) == 1,
                "structure element has wrong support");
    if (chk.ok) {
      Scalar lambda = entry[qa];
      chk.require(lambda != 0 && entry[qb] == -lambda,
                  "structure element is not a multiple of c21c32 - c22c31");
    }
  }

  chk.finish("");
  return "all section-independent golden values reproduced";
}

// ------------------------------------------------------------ criterion 6 ---

std::string run_diagrams() {
  Check chk;
  ParamSpec params(1, 1);
  struct Batch {
    int n;
    int r;
    std::vector<int> families;
    std::size_t expected_checks;
  };
  // Families 7, 8, 9 have no admissible indices below n = 5, 5, 6; the
  // n=4 run covers them vacuously and the n=5/n=6 batches execute them.
  std::vector<Batch> batches = {
      {3, 1, {1, 2, 3, 6}, 15},
      {3, 2, {1, 2, 3, 6}, 30},
      {4, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 48},
      {5, 1, {7, 8}, 10},
      {6, 1, {9}, 6},
  };
  std::size_t total = 0;
  for (const auto& batch : batches) {
    auto checks = check_preaction_diagrams(batch.n, weight_modules(batch.n, batch.r, params),
                                           batch.families);
    chk.require(checks.size() == batch.expected_checks,
                "expected " + std::to_string(batch.expected_checks) + " checks at n=" +
                    std::to_string(batch.n) + " r=" + std::to_string(batch.r) + ", got " +
                    std::to_string(checks.size()));
    for (const auto& c : checks) {
      chk.require(c.pass, "family " + std::to_string(c.family) + " on " + c.module_label +
                              " at n=" + std::to_string(batch.n) +
                              " r=" + std::to_string(batch.r) + ": " + c.detail);
      ++total;
    }
  }
  chk.finish("");
  return std::to_string(total) + " diagram instances commute";
}

// ------------------------------------------------------------ criterion 7 ---

std::string run_isomorphisms() {
  Check chk;
  ParamSpec params(1, 1);
  std::size_t cases = 0;

  // t-map data: construction verifies cotensor membership and that both
  // multi-projection column families are full rank (the comultiso legs).
  std::vector<std::tuple<int, TauKind, int>> tmaps = {
      {3, TauKind::adjacent(1), 1}, {3, TauKind::adjacent(1), 2},
      {4, TauKind::distant(1, 3), 1}, {4, TauKind::adjacent(1), 1},
      {4, TauKind::adjacent(2), 1},
  };
  for (const auto& [n, kind, r] : tmaps) {
    (void)t_map_data(n, kind, r, params);
    ++cases;
  }

  // rho_Ind invertibility via tau_{ii} on the golden modules.
  {
    auto piece2 = graded_coalgebra(3, Shape::delta(3), 2, params);
    FunctorContext ctx(one_dim({1, 1, 0}, piece2));
    for (int i = 1; i <= 2; ++i) {
      const LinearMap& t = ctx.tau_matrix(TauKind::equal(i), {});
      chk.require(t.rank() == t.domain_dim(), "tau_ii not invertible");
      ++cases;
    }
    const LinearMap& adj = ctx.tau_matrix(TauKind::adjacent(1), {});
    chk.require(adj.rank() == adj.domain_dim() &&
                    adj.domain_dim() == adj.codomain_dim(),
                "tau_{i,i+1} not invertible");
    ++cases;
  }

  // tensor_identity: bijective by construction in each exercised case.
  {
    auto dpiece = graded_coalgebra(3, Shape::delta(3), 1, params);
    for (int i = 1; i <= 2; ++i) {
      Comodule M = coalgebra_as_comodule(graded_coalgebra(3, Shape::a(3, i), 1, params));
      for (const auto& w : weights_of_degree(3, 1)) {
        (void)tensor_identity(i, M, one_dim(w, dpiece));
        ++cases;
      }
      (void)tensor_identity(i, M, coalgebra_as_comodule(dpiece));
      ++cases;
    }
    auto dpiece4 = graded_coalgebra(4, Shape::delta(4), 1, params);
    Comodule M4 = coalgebra_as_comodule(graded_coalgebra(4, Shape::a(4, 1), 1, params));
    (void)tensor_identity(1, M4, one_dim({1, 0, 0, 0}, dpiece4));
    ++cases;
  }

  // Direct surjectivity cross-check of the comultiso projection at r=1:
  // the multi-projection rank must equal the brute-force cotensor dimension.
  {
    const TMapData& adj = t_map_data(3, TauKind::adjacent(1), 1, params);
    const InductionPiece& p2 = induction_piece(3, Shape::a(3, 2), 1, params);
    const InductionPiece& p1 = induction_piece(3, Shape::a(3, 1), 1, params);
    std::vector<SparseVec> cols;
    for (std::size_t x = 0; x < p2.dim(); ++x)
      for (std::size_t y = 0; y < p1.dim(); ++y)
        for (std::size_t z = 0; z < p2.dim(); ++z) {
          SparseVec col;
          for (const auto& [j2, q, c] : p2.rho[x])
            sparse_add(col, Key{0, j2, q, static_cast<int>(y), static_cast<int>(z)}, c);
          for (const auto& [q, j2, c] : p1.lambda[y])
            sparse_add(col, Key{0, static_cast<int>(x), q, j2, static_cast<int>(z)}, -c);
          for (const auto& [j2, q, c] : p1.rho[y])
            sparse_add(col, Key{1, static_cast<int>(x), j2, q, static_cast<int>(z)}, c);
          for (const auto& [q, j2, c] : p2.lambda[z])
            sparse_add(col, Key{1, static_cast<int>(x), static_cast<int>(y), q, j2}, -c);
          cols.push_back(col);
        }
    std::size_t direct = sparse_kernel(cols).size();
    chk.require(adj.source.columns.size() == direct &&
                    adj.source_echelon.rank() == direct,
                "multi-projection rank != cotensor dimension (3 legs)");
    ++cases;

    const TMapData& dist = t_map_data(4, TauKind::distant(1, 3), 1, params);
    const InductionPiece& q1 = induction_piece(4, Shape::a(4, 1), 1, params);
    const InductionPiece& q3 = induction_piece(4, Shape::a(4, 3), 1, params);
    std::vector<SparseVec> cols2;
    for (std::size_t x = 0; x < q3.dim(); ++x)
      for (std::size_t y = 0; y < q1.dim(); ++y) {
        SparseVec col;
        for (const auto& [j2, q, c] : q3.rho[x])
          sparse_add(col, Key{j2, q, static_cast<int>(y)}, c);
        for (const auto& [q, j2, c] : q1.lambda[y])
          sparse_add(col, Key{static_cast<int>(x), q, j2}, -c);
        cols2.push_back(col);
      }
    std::size_t direct2 = sparse_kernel(cols2).size();
    chk.require(dist.source.columns.size() == direct2 &&
                    dist.source_echelon.rank() == direct2,
                "multi-projection rank != cotensor dimension (2 legs)");
    ++cases;
  }

  chk.finish("");
  return std::to_string(cases) + " rank/bijectivity certificates";
}

// ------------------------------------------------------------ criterion 8 ---

std::string run_demazure() {
  Check chk;
  ParamSpec params(1, 1);
  std::vector<std::vector<int>> words = {{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int s = 1; s <= 2; ++s) {
          auto ext = w;
          ext.push_back(s);
          next.push_back(ext);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::vector<std::vector<int>> lambdas = {{1, 1, 0}, {2, 1, 0}, {1, 0, 0}};
  std::size_t licensed = 0, skipped = 0;
  for (const auto& lambda : lambdas) {
    for (const auto& word : words) {
      CharCompareReport rep = compare_character(word, lambda, 3, params);
      if (!rep.all_licensed) {
        ++skipped;
        continue;
      }
      chk.require(rep.equal, "character mismatch for a licensed chain");
      ++licensed;
    }
  }
  // The three explicit character identities.
  CharPoly x12 = CharPoly::monomial({1, 1, 0});
  CharPoly e2 = CharPoly::monomial({1, 1, 0}) + CharPoly::monomial({1, 0, 1}) +
                CharPoly::monomial({0, 1, 1});
  CharPoly pi2 = CharPoly::monomial({1, 1, 0}) + CharPoly::monomial({1, 0, 1});
  struct Identity {
    std::vector<int> word;
    CharPoly expect;
  };
  for (const auto& [word, expect] :
       std::vector<Identity>{{{1}, x12}, {{2}, pi2}, {{2, 1}, e2}}) {
    CharCompareReport rep = compare_character(word, {1, 1, 0}, 3, params);
    chk.require(rep.all_licensed && rep.equal && rep.functor_side == expect &&
                    rep.demazure_side == expect,
                "explicit character identity fails");
  }
  chk.finish("");
  return std::to_string(licensed) + " licensed chains equal (" +
         std::to_string(skipped) + " unlicensed skipped)";
}

// ------------------------------------------------------------ criterion 9 ---

std::string run_schur() {
  Check chk;
  ParamSpec params(1, 1);
  // Constructor certifies associativity and the unit law.
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r) (void)schur_algebra(n, r, params);

  // xi relations at n=2, r=1.
  {
    DualAlgebra S = schur_algebra(2, 1, params);
    chk.require(S.dim() == 3, "dim S-(2,1) != 3");
    auto piece = S.piece();
    int i11 = piece->index_of(Exponent::unit(2, 1, 1));
    int i21 = piece->index_of(Exponent::unit(2, 2, 1));
    chk.require(i11 >= 0 && i21 >= 0, "basis lookup failed");
    auto p = static_cast<std::size_t>(i11);
    auto q = static_cast<std::size_t>(i21);
    DualAlgebra::Element xi21;
    xi21[i21] = 1;
    chk.require(S.product(q, p) == xi21, "xi21 * xi11 != xi21");
    chk.require(S.product(p, q).empty(), "xi11 * xi21 != 0");
    chk.require(!(S.product(q, p) == S.product(p, q)), "products unexpectedly equal");
  }

  // Round trips on the golden comodules over S-(3,2).
  {
    DualAlgebra S = schur_algebra(3, 2, params);
    auto piece = S.piece();
    std::vector<std::pair<std::string, Comodule>> goldens = weight_modules(3, 2, params);
    Comodule k110 = one_dim({1, 1, 0}, piece);
    Comodule f2 = apply_F(2, k110);
    goldens.emplace_back("F1 k110", apply_F(1, k110));
    goldens.emplace_back("F2 k110", f2);
    goldens.emplace_back("F1F2 k110", apply_F(1, f2));
    goldens.emplace_back("regular", coalgebra_as_comodule(piece));
    for (const auto& [label, M] : goldens) {
      auto action = comodule_to_module(S, M);
      Comodule back = module_to_comodule(S, action, M.labels);
      chk.require(back.dim() == M.dim() && sorted_rho(back) == sorted_rho(M),
                  "round trip not the identity on " + label);
    }
  }
  chk.finish("");
  return "algebras verified for n<=3, r<=3; round trips exact";
}

// ----------------------------------------------------------- criterion 10 ---

std::string run_param_change() {
  Check chk;
  std::size_t cases = 0;
  std::vector<std::pair<ParamSpec, ParamSpec>> pairs = {
      {ParamSpec(2, 3), ParamSpec(1, 6)},
      {ParamSpec(2, 3), ParamSpec(3, 2)},
  };
  for (const auto& [from, to] : pairs) {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 0; r <= 2; ++r) {
        (void)check_param_iso_transport(n, Shape::delta(n), r, from, to);
        (void)check_param_iso_transport(n, Shape::delta(n), r, to, from);
        cases += 2;
      }
    }
  }
  chk.finish("");
  return std::to_string(cases) + " structure-constant transports exact";
}

}  // namespace

int main() {
  criterion(1, "diamond confluence (n in {2,3}, all shapes, all specializations, < 5 s)",
            run_diamond);
  criterion(2, "graded basis dimensions (n <= 4, r <= 4)", run_dimensions);
  criterion(3, "quantum determinant (row=col, group-like, commutation)", run_determinant);
  criterion(4, "graded exact sequences (n=3, all shapes, r <= 3)", run_exact_sequences);
  criterion(5, "golden comodule computations at (1,1), n=3, r=2", run_goldens);
  criterion(6, "preaction diagram families on weight modules", run_diagrams);
  criterion(7, "isomorphism/full-rank certificates", run_isomorphisms);
  criterion(8, "Demazure character consistency (words over {1,2}, length <= 3)",
            run_demazure);
  criterion(9, "Borel-Schur duality (associativity, unit, round trips, xi relations)",
            run_schur);
  criterion(10, "parameter-change transport (2,3)<->(1,6), (2,3)<->(3,2)",
            run_param_change);
  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
