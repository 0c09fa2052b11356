#include "core/heckedem.hpp"

#include <algorithm>
#include <numeric>

#include "core/functors.hpp"

namespace qba {

// ---------------------------------------------------------------- symmetric ---

Permutation::Permutation(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "permutation needs n >= 1");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation in one-line form");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  if (images_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "permutation needs n >= 1");
  }
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) {
    throw Error(ErrorCode::IndexViolation, "s_i requires 1 <= i <= n-1");
  }
  Permutation s(n);
  std::swap(s.images_[static_cast<std::size_t>(i - 1)],
            s.images_[static_cast<std::size_t>(i)]);
  return s;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n() != other.n()) {
    throw Error(ErrorCode::DimensionMismatch, "permutation sizes differ");
  }
  std::vector<int> images(images_.size());
  for (int k = 1; k <= n(); ++k) {
    images[static_cast<std::size_t>(k - 1)] = (*this)(other(k));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int k = 1; k <= n(); ++k) images[static_cast<std::size_t>((*this)(k)-1)] = k;
  return Permutation(std::move(images));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++inversions;
    }
  }
  return inversions;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(images_[k]);
  }
  return out + "]";
}

namespace {

// Left multiplication by s_i (swaps the values i and i+1).
Permutation left_mult(int i, const Permutation& w) {
  std::vector<int> images = w.one_line();
  for (int& v : images) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return Permutation(std::move(images));
}

// l(s_i w) = l(w) + 1 exactly when i appears before i+1 in w's value order.
bool left_ascent(int i, const Permutation& w) {
  return w.inverse()(i) < w.inverse()(i + 1);
}

}  // namespace

Permutation hecke_product(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) {
    throw Error(ErrorCode::DimensionMismatch, "permutation sizes differ");
  }
  const std::vector<int> word = reduced_word(u);
  Permutation result = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (left_ascent(*it, result)) result = left_mult(*it, result);
  }
  return result;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation current = w;
  for (int remaining = current.length(); remaining > 0; --remaining) {
    for (int i = 1; i < current.n(); ++i) {
      if (!left_ascent(i, current)) {
        word.push_back(i);
        current = left_mult(i, current);
        break;
      }
    }
  }
  return word;
}

// ------------------------------------------------------------------ Demazure ---

CharPoly demazure(int i, const CharPoly& f) {
  if (i < 1) throw Error(ErrorCode::IndexViolation, "pi_i requires i >= 1");
  CharPoly out;
  for (const auto& [exponents, c] : f.coeffs) {
    if (static_cast<std::size_t>(i + 1) > exponents.size()) {
      throw Error(ErrorCode::IndexViolation,
                  "pi_" + std::to_string(i) + " exceeds the variable count");
    }
    const int p = exponents[static_cast<std::size_t>(i - 1)];
    const int q = exponents[static_cast<std::size_t>(i)];
    std::vector<int> term = exponents;
    if (p >= q) {
      for (int k = q; k <= p; ++k) {
        term[static_cast<std::size_t>(i - 1)] = k;
        term[static_cast<std::size_t>(i)] = p + q - k;
        out.add_term(term, c);
      }
    } else {
      for (int k = p + 1; k <= q - 1; ++k) {
        term[static_cast<std::size_t>(i - 1)] = k;
        term[static_cast<std::size_t>(i)] = p + q - k;
        out.add_term(term, -c);
      }
    }
  }
  return out;
}

CharPoly demazure_word(const std::vector<int>& word, const CharPoly& f) {
  CharPoly out = f;
  for (int i : word) out = demazure(i, out);
  return out;
}

// ---------------------------------------------------- character consistency ---

CharCompareReport compare_character(const std::vector<int>& word,
                                    const std::vector<int>& lambda, int n,
                                    const ParamSpec& params) {
  if (static_cast<int>(lambda.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "weight length must equal n");
  }
  int degree = 0;
  for (int a : lambda) {
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "weights are non-negative");
    degree += a;
  }
  for (int i : word) {
    if (i < 1 || i >= n) {
      throw Error(ErrorCode::IndexViolation, "word letters must lie in [1, n-1]");
    }
  }

  CharCompareReport report;
  report.word = word;
  report.lambda = lambda;

  Comodule module =
      one_dim(lambda, graded_coalgebra(n, Shape::delta(n), degree, params));
  CharPoly poly = CharPoly::monomial(lambda);

  report.all_licensed = true;
  for (int i : word) {
    CharCompareStep step;
    step.i = i;
    step.licensed = true;
    for (const WeightSpace& space : weight_decompose(module)) {
      if (space.weight[static_cast<std::size_t>(i - 1)] -
              space.weight[static_cast<std::size_t>(i)] <
          -1) {
        step.licensed = false;
        break;
      }
    }
    module = apply_F(i, module);
    poly = demazure(i, poly);
    step.dim_after = module.dim();
    report.all_licensed = report.all_licensed && step.licensed;
    report.steps.push_back(step);
  }

  report.functor_side = character(module);
  report.demazure_side = poly;
  report.equal = report.functor_side == report.demazure_side;
  return report;
}

}  // namespace qba
