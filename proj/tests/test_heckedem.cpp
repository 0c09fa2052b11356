#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "core/heckedem.hpp"

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

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<CharPoly> monomials_up_to(int n, int maxdeg) {
  std::vector<CharPoly> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      out.push_back(CharPoly::monomial(e));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, maxdeg);
  return out;
}
}  // namespace

TEST_CASE("permutations") {
  Permutation id(3);
  CHECK(id.one_line() == std::vector<int>{1, 2, 3});
  CHECK(id.length() == 0);

  Permutation s1 = Permutation::transposition(3, 1);
  Permutation s2 = Permutation::transposition(3, 2);
  CHECK(s1.one_line() == std::vector<int>{2, 1, 3});
  CHECK(s1.length() == 1);
  CHECK(s1.compose(s2).one_line() == std::vector<int>{2, 3, 1});
  CHECK(s2.compose(s1).one_line() == std::vector<int>{3, 1, 2});
  CHECK(s1.compose(s1) == id);
  CHECK(s1.inverse() == s1);
  CHECK(s1.compose(s2).inverse() == s2.compose(s1));

  Permutation w0(std::vector<int>{3, 2, 1});
  CHECK(w0.length() == 3);
  CHECK(w0(1) == 3);
  CHECK(w0(3) == 1);

  CHECK(thrown_code([] { Permutation(std::vector<int>{1, 1}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { Permutation(std::vector<int>{0, 2}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { Permutation::transposition(3, 0); }) ==
        ErrorCode::IndexViolation);
  CHECK(thrown_code([] { Permutation::transposition(3, 3); }) ==
        ErrorCode::IndexViolation);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation(3)).empty());
  CHECK(reduced_word(Permutation::transposition(3, 1)) == std::vector<int>{1});
  CHECK(reduced_word(Permutation(std::vector<int>{3, 2, 1})) ==
        std::vector<int>{1, 2, 1});
  CHECK(reduced_word(Permutation(std::vector<int>{2, 3, 1})) == std::vector<int>{1, 2});
  CHECK(reduced_word(Permutation(std::vector<int>{3, 1, 2})) == std::vector<int>{2, 1});
  // Reduced words have length equal to the inversion count and multiply
  // back to the permutation.
  for (const auto& w : symmetric_group(4)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    Permutation acc(4);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = Permutation::transposition(4, *it).compose(acc);
    CHECK(acc == w);
  }
}

TEST_CASE("0-Hecke monoid products") {
  Permutation s1 = Permutation::transposition(3, 1);
  Permutation s2 = Permutation::transposition(3, 2);
  Permutation w0(std::vector<int>{3, 2, 1});

  // Quadratic relation T_i T_i = T_i.
  CHECK(hecke_product(s1, s1) == s1);
  CHECK(hecke_product(s2, s2) == s2);
  // Length-additive case agrees with the group product.
  CHECK(hecke_product(s1, s2) == s1.compose(s2));
  // The longest element absorbs.
  for (const auto& u : symmetric_group(3)) {
    CHECK(hecke_product(w0, u) == w0);
    CHECK(hecke_product(u, w0) == w0);
  }
  // Identity is the unit; lengths never decrease.
  Permutation id(3);
  for (const auto& u : symmetric_group(3)) {
    CHECK(hecke_product(id, u) == u);
    CHECK(hecke_product(u, id) == u);
    for (const auto& v : symmetric_group(3)) {
      Permutation uv = hecke_product(u, v);
      CHECK(uv.length() >= std::max(u.length(), v.length()));
    }
  }
  // Associativity over all of Sigma_3.
  auto s3 = symmetric_group(3);
  for (const auto& a : s3)
    for (const auto& b : s3)
      for (const auto& c : s3)
        CHECK(hecke_product(hecke_product(a, b), c) ==
              hecke_product(a, hecke_product(b, c)));
  // Associativity on pseudo-random triples in Sigma_4.
  auto s4 = symmetric_group(4);
  std::mt19937 rng(2026);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation& a = s4[pick(rng)];
    const Permutation& b = s4[pick(rng)];
    const Permutation& c = s4[pick(rng)];
    CHECK(hecke_product(hecke_product(a, b), c) ==
          hecke_product(a, hecke_product(b, c)));
  }
}

TEST_CASE("Demazure operators") {
  CHECK(demazure(1, CharPoly::monomial({0, 0})) == CharPoly::monomial({0, 0}));
  CHECK(demazure(1, CharPoly::monomial({1, 0})) ==
        CharPoly::monomial({1, 0}) + CharPoly::monomial({0, 1}));
  CHECK(demazure(1, CharPoly::monomial({0, 1})).is_zero());
  CHECK(demazure(1, CharPoly::monomial({0, 2})) == CharPoly::monomial({1, 1}, -1));
  CHECK(demazure(1, CharPoly::monomial({1, 1})) == CharPoly::monomial({1, 1}));
  CHECK(demazure(2, CharPoly::monomial({1, 1, 0})) ==
        CharPoly::monomial({1, 1, 0}) + CharPoly::monomial({1, 0, 1}));
  // pi_1 pi_2 x^(1,1,0) fills in the full degree-2 elementary symmetric sum.
  CHECK(demazure_word({2, 1}, CharPoly::monomial({1, 1, 0})) ==
        CharPoly::monomial({1, 1, 0}) + CharPoly::monomial({1, 0, 1}) +
            CharPoly::monomial({0, 1, 1}));
  CHECK(thrown_code([] { demazure(3, CharPoly::monomial({1, 0, 0})); }) ==
        ErrorCode::IndexViolation);

  // Idempotence and the braid relation on all monomials of degree <= 4.
  for (const auto& m : monomials_up_to(3, 4)) {
    for (int i = 1; i <= 2; ++i) {
      CHECK(demazure(i, demazure(i, m)) == demazure(i, m));
    }
    CHECK(demazure_word({1, 2, 1}, m) == demazure_word({2, 1, 2}, m));
  }
  // Distant generators commute.
  for (const auto& m : monomials_up_to(4, 3)) {
    CHECK(demazure_word({1, 3}, m) == demazure_word({3, 1}, m));
  }
  // Word invariance under the 0-Hecke congruence: concatenating words
  // matches the reduced word of the monoid product.
  auto s3 = symmetric_group(3);
  for (const auto& u : s3) {
    for (const auto& v : s3) {
      auto word = reduced_word(u);
      auto wv = reduced_word(v);
      word.insert(word.end(), wv.begin(), wv.end());
      auto collapsed = reduced_word(hecke_product(u, v));
      for (const auto& m : monomials_up_to(3, 3)) {
        CHECK(demazure_word(word, m) == demazure_word(collapsed, m));
      }
    }
  }
}

TEST_CASE("character comparison") {
  ParamSpec p(1, 1);
  CharCompareReport rep = compare_character({2, 1}, {1, 1, 0}, 3, p);
  CHECK(rep.all_licensed);
  CHECK(rep.equal);
  REQUIRE(rep.steps.size() == 2);
  CHECK(rep.steps[0].i == 2);
  CHECK(rep.steps[0].licensed);
  CHECK(rep.steps[0].dim_after == 2);
  CHECK(rep.steps[1].dim_after == 3);
  CHECK(rep.functor_side == CharPoly::monomial({1, 1, 0}) +
                                CharPoly::monomial({1, 0, 1}) +
                                CharPoly::monomial({0, 1, 1}));
  CHECK(rep.functor_side == rep.demazure_side);

  // Empty word: both sides are the starting character.
  rep = compare_character({}, {2, 1, 0}, 3, p);
  CHECK(rep.all_licensed);
  CHECK(rep.equal);
  CHECK(rep.functor_side == CharPoly::monomial({2, 1, 0}));

  // Unlicensed step: lambda_i - lambda_{i+1} <= -2 breaks the hypothesis;
  // the Demazure side goes negative while the functor side cannot.
  rep = compare_character({2}, {0, 0, 2}, 3, p);
  CHECK_FALSE(rep.all_licensed);
  REQUIRE(rep.steps.size() == 1);
  CHECK_FALSE(rep.steps[0].licensed);
  CHECK(rep.demazure_side == CharPoly::monomial({0, 1, 1}, -1));
  CHECK_FALSE(rep.equal);

  // A boundary case a_i - a_{i+1} = -1 is licensed and kills the module.
  rep = compare_character({2}, {1, 0, 1}, 3, p);
  CHECK(rep.all_licensed);
  CHECK(rep.equal);
  CHECK(rep.functor_side.is_zero());
  CHECK(rep.demazure_side.is_zero());

  CHECK(thrown_code([&] { compare_character({3}, {1, 1, 0}, 3, p); }) ==
        ErrorCode::IndexViolation);
}
