// Hecke-monoid word arithmetic on permutations, Demazure operators on
// integer polynomials, and the character-level consistency check tying
// induction words F_{i_k}...F_{i_1} to Demazure words pi_{i_k}...pi_{i_1}.
#pragma once

#include <string>
#include <vector>

#include "core/comod.hpp"

namespace qba {

// ---------------------------------------------------------------- symmetric ---

// A permutation of {1..n} in one-line notation (1-based values).
class Permutation {
 public:
  explicit Permutation(int n);                    // identity
  explicit Permutation(std::vector<int> one_line);  // InvalidArgument unless a bijection
  static Permutation transposition(int n, int i);   // s_i; IndexViolation unless 1<=i<n

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  int length() const;  // inversion count

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// The Hecke monoid on symbols T_w: T_{s_i} T_w = T_{s_i w} when the length
// goes up, T_w when it goes down.  Elements are stored as the underlying
// permutations; the product folds any reduced word of the left factor
// (the result does not depend on the choice).
Permutation hecke_product(const Permutation& u, const Permutation& v);

// The lexicographically smallest reduced word of w: indices i with
// w = s_{i_1} s_{i_2} ... s_{i_l}, picked greedily by smallest left descent.
std::vector<int> reduced_word(const Permutation& w);

// ------------------------------------------------------------------ Demazure ---

// The isobaric Demazure operator
//   pi_i f = (x_i f - x_{i+1} (s_i f)) / (x_i - x_{i+1}),
// evaluated term by term through the closed form on monomials.  All
// exponent vectors in f must have length >= i+1 (IndexViolation).
CharPoly demazure(int i, const CharPoly& f);

// Left fold: word.front() is applied first.
CharPoly demazure_word(const std::vector<int>& word, const CharPoly& f);

// ---------------------------------------------------- character consistency ---

// One induction step in a character comparison.
struct CharCompareStep {
  int i = 0;
  bool licensed = false;  // every weight a of the input had a_i - a_{i+1} >= -1
  std::size_t dim_after = 0;
};

struct CharCompareReport {
  std::vector<int> word;    // application order: word.front() acts first
  std::vector<int> lambda;
  std::vector<CharCompareStep> steps;
  CharPoly functor_side;    // ch(F_{word} k_lambda)
  CharPoly demazure_side;   // pi_{word} x^lambda
  bool all_licensed = false;
  bool equal = false;
};

// Builds k_lambda over A(delta;|lambda|), applies the F-word on one side and
// the Demazure word on the other, and compares the characters exactly.
// Steps whose input comodule has a weight a with a_i - a_{i+1} < -1 are
// marked unlicensed ("unverified"); both sides are still computed.
CharCompareReport compare_character(const std::vector<int>& word,
                                    const std::vector<int>& lambda, int n,
                                    const ParamSpec& params);

}  // namespace qba
