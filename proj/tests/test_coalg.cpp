#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/coalg.hpp"

using namespace qba;

namespace {
template <typename F>
std::optional<ErrorCode> thrown_code(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Exponent unit(int n, int i, int j) { return Exponent::unit(n, i, j); }
}  // namespace

TEST_CASE("comultiplication of generators") {
  ParamSpec p(2, 3);
  // Delta(c21) = c21 (x) c11 + c22 (x) c21.
  AlgebraElement c21 = AlgebraElement::monomial(2, unit(2, 2, 1));
  TensorElement d = comultiply(c21, p);
  TensorElement want{2, {std::nullopt, std::nullopt}, {}};
  want.add_term({unit(2, 2, 1), unit(2, 1, 1)}, 1);
  want.add_term({unit(2, 2, 2), unit(2, 2, 1)}, 1);
  CHECK(d == want);
}

TEST_CASE("comultiplication is multiplicative on a quadratic element") {
  // Delta(c21^2) = c21^2 (x) c11^2 + (1 + alpha beta) c21c22 (x) c11c21
  //              + c22^2 (x) c21^2, already in the Borel quotient.
  ParamSpec p(2, 3);
  RuleSet ambient(2, p);
  AlgebraElement sq = ambient.reduce(
      {{Scalar(1), Word{static_cast<std::int16_t>(gen_code(2, 2, 1)),
                        static_cast<std::int16_t>(gen_code(2, 2, 1))}}});
  Shape delta = Shape::delta(2);
  TensorElement d = comultiply_legs(sq, ambient, {delta, delta});
  TensorElement want{2, {delta, delta}, {}};
  want.add_term({unit(2, 2, 1) + unit(2, 2, 1), unit(2, 1, 1) + unit(2, 1, 1)}, 1);
  want.add_term({unit(2, 2, 1) + unit(2, 2, 2), unit(2, 1, 1) + unit(2, 2, 1)}, 7);
  want.add_term({unit(2, 2, 2) + unit(2, 2, 2), unit(2, 2, 1) + unit(2, 2, 1)}, 1);
  CHECK(d == want);
}

TEST_CASE("graded coalgebra pieces") {
  ParamSpec p(2, 3);
  auto piece = graded_coalgebra(2, Shape::delta(2), 2, p);
  CHECK(piece->n() == 2);
  CHECK(piece->degree() == 2);
  CHECK(piece->dim() == 6);
  CHECK(piece->shape() == Shape::delta(2));
  CHECK_FALSE(piece->description().empty());

  // The same piece is cached.
  CHECK(piece == graded_coalgebra(2, Shape::delta(2), 2, p));
  CHECK(piece != graded_coalgebra(2, Shape::delta(2), 2, ParamSpec(1, 1)));

  // index_of round trip and counit values.
  int diag = piece->index_of(Exponent::diagonal({1, 1}));
  int off = piece->index_of(unit(2, 2, 1) + unit(2, 2, 2));
  REQUIRE(diag >= 0);
  REQUIRE(off >= 0);
  CHECK(piece->basis_at(static_cast<std::size_t>(diag)) == Exponent::diagonal({1, 1}));
  CHECK(piece->counit(static_cast<std::size_t>(diag)) == 1);
  CHECK(piece->counit(static_cast<std::size_t>(off)) == 0);
  CHECK(piece->index_of(unit(2, 1, 2) + unit(2, 1, 2)) == -1);  // not admissible

  // Structure constants of Delta(c21^2) match the hand computation.
  int sq21 = piece->index_of(unit(2, 2, 1) + unit(2, 2, 1));
  int sq11 = piece->index_of(Exponent::diagonal({2, 0}));
  int m2122 = piece->index_of(unit(2, 2, 1) + unit(2, 2, 2));
  int m1121 = piece->index_of(unit(2, 1, 1) + unit(2, 2, 1));
  int sq22 = piece->index_of(Exponent::diagonal({0, 2}));
  REQUIRE(sq21 >= 0);
  const auto& row = piece->delta(static_cast<std::size_t>(sq21));
  REQUIRE(row.size() == 3);
  std::map<std::pair<int, int>, Scalar> got;
  for (const auto& [a, b, c] : row) got[{a, b}] = c;
  CHECK(got.at({sq21, sq11}) == 1);
  CHECK(got.at({m2122, m1121}) == 7);
  CHECK(got.at({sq22, sq21}) == 1);

  // Diagonal monomials are group-like in the Borel piece.
  auto piece3 = graded_coalgebra(3, Shape::delta(3), 2, ParamSpec(1, 1));
  int g = piece3->index_of(Exponent::diagonal({1, 0, 1}));
  REQUIRE(g >= 0);
  const auto& grow = piece3->delta(static_cast<std::size_t>(g));
  REQUIRE(grow.size() == 1);
  CHECK(std::get<0>(grow[0]) == g);
  CHECK(std::get<1>(grow[0]) == g);
  CHECK(std::get<2>(grow[0]) == 1);

  // Only parabolic shapes carry a coalgebra structure.
  CHECK(thrown_code([&] { graded_coalgebra(3, Shape(std::vector<int>{1, 1, 3}), 1, p); }) ==
        ErrorCode::NonParabolicShape);
}

TEST_CASE("multi-projection onto parabolic legs") {
  ParamSpec p(1, 1);
  Shape big(std::vector<int>{2, 2, 4, 4});  // delta + v1 + v3
  MultiProjection mp =
      multi_projection(4, big, {Shape::a(4, 1), Shape::a(4, 3)}, 1, p);
  CHECK(mp.columns.size() == 12);  // dim A(big;1)
  CHECK(mp.targets.size() == 2);
  // Injective in this range: the columns are linearly independent.
  CHECK(sparse_rank(mp.columns) == 12);
  LinearMap dense = mp.to_linear_map();
  CHECK(dense.domain_dim() == 12);
  CHECK(dense.codomain_dim() == 11 * 11);
  CHECK(dense.rank() == 12);

  CHECK(thrown_code([&] {
          multi_projection(3, Shape::full(3), {Shape(std::vector<int>{1, 1, 3})}, 1, p);
        }) == ErrorCode::NonParabolicShape);
}

TEST_CASE("right Borel coaction on the full piece") {
  ParamSpec p(2, 3);
  auto basis = monomial_basis(2, Shape::full(2), 1);
  auto delta_basis = monomial_basis(2, Shape::delta(2), 1);
  auto table = right_delta_coaction(2, Shape::full(2), 1, p, basis, delta_basis);
  REQUIRE(table.size() == 4);
  auto index = [&](const Exponent& e) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == e) return static_cast<int>(k);
    return -1;
  };
  auto dindex = [&](const Exponent& e) {
    for (std::size_t k = 0; k < delta_basis.size(); ++k)
      if (delta_basis[k] == e) return static_cast<int>(k);
    return -1;
  };
  // c12 -> c12 (x) c22 (the term c11 (x) c12 dies in the Borel leg).
  {
    const auto& row = table[static_cast<std::size_t>(index(unit(2, 1, 2)))];
    REQUIRE(row.size() == 1);
    CHECK(std::get<0>(row[0]) == index(unit(2, 1, 2)));
    CHECK(std::get<1>(row[0]) == dindex(unit(2, 2, 2)));
    CHECK(std::get<2>(row[0]) == 1);
  }
  // c11 -> c11 (x) c11 + c12 (x) c21.
  {
    const auto& row = table[static_cast<std::size_t>(index(unit(2, 1, 1)))];
    CHECK(row.size() == 2);
  }
}

TEST_CASE("right Borel coaction on a non-parabolic piece") {
  // b = (1,1,3) is not parabolic, yet A(b;r) still carries the right
  // Borel coaction: c32 -> c32 (x) c22 + c33 (x) c32.
  ParamSpec p(1, 1);
  Shape b(std::vector<int>{1, 1, 3});
  auto basis = monomial_basis(3, b, 1);
  auto delta_basis = monomial_basis(3, Shape::delta(3), 1);
  REQUIRE(basis.size() == 5);
  auto table = right_delta_coaction(3, b, 1, p, basis, delta_basis);
  auto index = [&](const Exponent& e) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == e) return static_cast<int>(k);
    return -1;
  };
  auto dindex = [&](const Exponent& e) {
    for (std::size_t k = 0; k < delta_basis.size(); ++k)
      if (delta_basis[k] == e) return static_cast<int>(k);
    return -1;
  };
  const auto& row = table[static_cast<std::size_t>(index(unit(3, 3, 2)))];
  REQUIRE(row.size() == 2);
  std::map<std::pair<int, int>, Scalar> got;
  for (const auto& [a, q, c] : row) got[{a, q}] = c;
  CHECK(got.at({index(unit(3, 3, 2)), dindex(unit(3, 2, 2))}) == 1);
  CHECK(got.at({index(unit(3, 3, 3)), dindex(unit(3, 3, 2))}) == 1);
}

TEST_CASE("parameter-change twist") {
  CHECK(jw(Exponent::diagonal({1, 1, 1})) == 0);
  CHECK(jw(unit(2, 1, 2) + unit(2, 2, 1)) == 1);
  CHECK(jw(unit(3, 1, 3) + unit(3, 2, 2) + unit(3, 3, 1)) == 3);

  ParamSpec from(2, 3), to(1, 6);
  AlgebraElement x = AlgebraElement::monomial(2, unit(2, 1, 2) + unit(2, 2, 1), 5);
  AlgebraElement y = param_iso(x, from, to);
  REQUIRE(y.terms.size() == 1);
  CHECK(y.terms.at(unit(2, 1, 2) + unit(2, 2, 1)) == 10);  // 5 * (2/1)^1

  // Transport of the full Delta structure constants.
  CHECK(check_param_iso_transport(2, Shape::delta(2), 2, from, to) == 6);
  CHECK(thrown_code([&] { param_iso(x, from, ParamSpec(2, 4)); }) ==
        ErrorCode::ProductMismatch);
  CHECK(thrown_code([&] {
          check_param_iso_transport(2, Shape::delta(2), 1, from, ParamSpec(1, 1));
        }) == ErrorCode::ProductMismatch);
}

TEST_CASE("torus projection") {
  ParamSpec p(2, 3);
  AlgebraElement d = quantum_determinant(2, p);
  AlgebraElement diag = torus_projection(d);
  REQUIRE(diag.terms.size() == 1);
  CHECK(diag.terms.at(Exponent::diagonal({1, 1})) == 1);
  CHECK(torus_projection(AlgebraElement::monomial(2, unit(2, 2, 1))).is_zero());
}
