#include "core/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qba {

// ------------------------------------------------------------------ shape ---

Shape::Shape(std::vector<int> bounds) : b(std::move(bounds)) {
  const int size = n();
  for (int value : b) {
    if (value < 0 || value > size) {
      throw Error(ErrorCode::InvalidShape, "shape entries must lie in [0..n]");
    }
  }
}

Shape Shape::delta(int n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 1);
  return Shape(std::move(b));
}

Shape Shape::a(int n, int l) {
  if (l < 1 || l > n - 1) {
    throw Error(ErrorCode::IndexViolation, "a[l] requires 1 <= l <= n-1");
  }
  Shape s = delta(n);
  s.b[l - 1] += 1;
  return s;
}

Shape Shape::full(int n) { return Shape(std::vector<int>(n, n)); }

bool Shape::is_nondecreasing() const {
  return std::is_sorted(b.begin(), b.end());
}

bool Shape::is_parabolic() const {
  const int size = n();
  int i = 0;
  while (i < size) {
    const int value = b[i];
    // The block starting at position i+1 (1-based) must consist of entries
    // equal to value and end exactly at position value.
    if (value < i + 1) return false;
    for (int k = i; k < value; ++k) {
      if (k >= size || b[k] != value) return false;
    }
    i = value;
  }
  return i == size;
}

bool Shape::leq(const Shape& other) const {
  if (n() != other.n()) return false;
  for (int i = 0; i < n(); ++i) {
    if (b[i] > other.b[i]) return false;
  }
  return true;
}

Shape Shape::plus_v(int l) const {
  Shape out = *this;
  out.b[l - 1] += 1;
  if (out.b[l - 1] > n()) throw Error(ErrorCode::InvalidShape, "shape exceeds n");
  return out;
}

Shape Shape::minus_v(int l) const {
  Shape out = *this;
  out.b[l - 1] -= 1;
  if (out.b[l - 1] < 0) throw Error(ErrorCode::InvalidShape, "shape entry below 0");
  return out;
}

std::string Shape::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << b[i];
  os << ')';
  return os.str();
}

// ------------------------------------------------------- words & exponents ---

std::string gen_name(int n, int code) {
  std::ostringstream os;
  os << "c[" << gen_row(n, code) << "," << gen_col(n, code) << "]";
  return os.str();
}

Exponent Exponent::from_word(int n, const Word& word) {
  Exponent out(n);
  for (auto code : word) out.e[code] += 1;
  return out;
}

Exponent Exponent::diagonal(const std::vector<int>& weight) {
  Exponent out(static_cast<int>(weight.size()));
  for (int i = 1; i <= out.n; ++i) out.at(i, i) = weight[i - 1];
  return out;
}

Exponent Exponent::unit(int n, int row, int col) {
  Exponent out(n);
  out.at(row, col) = 1;
  return out;
}

int Exponent::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<int> Exponent::row_weight() const {
  std::vector<int> w(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) w[i - 1] += at(i, j);
  }
  return w;
}

std::vector<int> Exponent::col_weight() const {
  std::vector<int> w(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) w[j - 1] += at(i, j);
  }
  return w;
}

bool Exponent::is_diagonal() const {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && at(i, j) != 0) return false;
    }
  }
  return true;
}

bool Exponent::admissible(const Shape& shape) const {
  for (int i = 1; i <= n; ++i) {
    for (int j = shape.b[i - 1] + 1; j <= n; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

Word Exponent::to_word() const {
  Word out;
  for (std::size_t code = 0; code < e.size(); ++code) {
    for (std::int32_t k = 0; k < e[code]; ++k) {
      out.push_back(static_cast<std::int16_t>(code));
    }
  }
  return out;
}

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent out = *this;
  for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += other.e[i];
  return out;
}

std::string Exponent::to_string() const {
  if (degree() == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::int32_t k = at(i, j);
      if (k == 0) continue;
      if (!first) os << '.';
      first = false;
      os << 'c' << i << j;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

bool word_order_less(const Exponent& a, const Exponent& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal degrees: the normal words, compared letter by letter.  At the
  // first generator where the multiplicities differ, the word with the
  // larger multiplicity of that (smaller) generator is lexicographically
  // smaller.
  for (std::size_t code = 0; code < a.e.size(); ++code) {
    if (a.e[code] != b.e[code]) return a.e[code] > b.e[code];
  }
  return false;
}

// --------------------------------------------------------------- elements ---

AlgebraElement AlgebraElement::zero(int n, std::optional<Shape> shape) {
  AlgebraElement out;
  out.n = n;
  out.shape = std::move(shape);
  return out;
}

AlgebraElement AlgebraElement::monomial(int n, const Exponent& omega,
                                        const Scalar& c,
                                        std::optional<Shape> shape) {
  AlgebraElement out = zero(n, std::move(shape));
  if (out.shape && !omega.admissible(*out.shape)) {
    throw Error(ErrorCode::InvalidShape, "monomial not admissible for shape");
  }
  out.add_term(omega, c);
  return out;
}

void AlgebraElement::add_term(const Exponent& omega, const Scalar& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(omega);
  if (it == terms.end()) {
    terms.emplace(omega, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Scalar AlgebraElement::coeff(const Exponent& omega) const {
  auto it = terms.find(omega);
  return it == terms.end() ? Scalar(0) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  for (const auto& [omega, c] : other.terms) out.add_term(omega, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  for (const auto& [omega, c] : other.terms) out.add_term(omega, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out = zero(n, shape);
  if (c == 0) return out;
  for (const auto& [omega, coeff] : terms) out.terms.emplace(omega, coeff * c);
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return n == other.n && terms == other.terms;
}

const Exponent& AlgebraElement::leading() const {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidArgument, "leading term of zero");
  }
  const Exponent* best = nullptr;
  for (const auto& [omega, c] : terms) {
    if (best == nullptr || word_order_less(*best, omega)) best = &omega;
  }
  return *best;
}

std::string AlgebraElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [omega, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << scalar_to_string(c) << "*" << omega.to_string();
  }
  return os.str();
}

// ----------------------------------------------------------------- rules ---

RuleSet::RuleSet(int n, ParamSpec params, std::optional<Shape> shape)
    : n_(n), params_(std::move(params)), shape_(std::move(shape)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (shape_ && shape_->n() != n) {
    throw Error(ErrorCode::InvalidShape, "shape size does not match n");
  }
}

bool RuleSet::killed(int code) const {
  return shape_ && gen_col(n_, code) > shape_->b[gen_row(n_, code) - 1];
}

std::vector<std::pair<Scalar, Word>> RuleSet::rewrite_pair(int hi, int lo) const {
  const int j = gen_row(n_, hi), s = gen_col(n_, hi);
  const int i = gen_row(n_, lo), t = gen_col(n_, lo);
  const auto word2 = [](int a, int b) {
    return Word{static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)};
  };
  if (j == i) {
    // x_{is} x_{it}, s > t: same-row swap picks up alpha.
    return {{params_.alpha, word2(lo, hi)}};
  }
  if (s == t) {
    // x_{js} x_{is}, j > i: same-column swap picks up beta.
    return {{params_.beta, word2(lo, hi)}};
  }
  if (s < t) {
    // x_{js} x_{it}, j > i, s < t: swap picks up alpha^{-1} beta.
    return {{params_.alpha_inv() * params_.beta, word2(lo, hi)}};
  }
  // x_{js} x_{it}, j > i, s > t: straightening rule with the extra
  // column-exchanged term.
  const int cross_hi = gen_code(n_, i, s);
  const int cross_lo = gen_code(n_, j, t);
  return {{Scalar(1), word2(lo, hi)},
          {params_.beta - params_.alpha_inv(), word2(cross_hi, cross_lo)}};
}

std::vector<RewriteRule> RuleSet::rules() const {
  std::vector<RewriteRule> out;
  const int n2 = n_ * n_;
  for (int hi = 0; hi < n2; ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      out.push_back(RewriteRule{
          Word{static_cast<std::int16_t>(hi), static_cast<std::int16_t>(lo)},
          rewrite_pair(hi, lo)});
    }
  }
  if (shape_) {
    for (int code = 0; code < n2; ++code) {
      if (killed(code)) {
        out.push_back(RewriteRule{Word{static_cast<std::int16_t>(code)}, {}});
      }
    }
  }
  return out;
}

const std::map<Exponent, Scalar>& RuleSet::normalize(const Word& word) const {
  auto it = memo_.find(word);
  if (it != memo_.end()) return it->second;

  std::map<Exponent, Scalar> result;
  if (shape_) {
    for (auto code : word) {
      if (killed(code)) {
        return memo_.emplace(word, std::move(result)).first->second;
      }
    }
  }
  std::size_t pos = 0;
  while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
  if (word.size() < 2 || pos + 1 == word.size()) {
    result.emplace(Exponent::from_word(n_, word), Scalar(1));
    return memo_.emplace(word, std::move(result)).first->second;
  }
  for (const auto& [coeff, replacement] : rewrite_pair(word[pos], word[pos + 1])) {
    Word next;
    next.reserve(word.size());
    next.insert(next.end(), word.begin(), word.begin() + pos);
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), word.begin() + pos + 2, word.end());
    for (const auto& [omega, c] : normalize(next)) {
      const Scalar contribution = coeff * c;
      if (contribution == 0) continue;
      auto [slot, inserted] = result.emplace(omega, contribution);
      if (!inserted) {
        slot->second += contribution;
        if (slot->second == 0) result.erase(slot);
      }
    }
  }
  return memo_.emplace(word, std::move(result)).first->second;
}

AlgebraElement RuleSet::reduce(
    const std::vector<std::pair<Scalar, Word>>& input) const {
  AlgebraElement out = AlgebraElement::zero(n_, shape_);
  for (const auto& [coeff, word] : input) {
    if (coeff == 0) continue;
    for (const auto& [omega, c] : normalize(word)) out.add_term(omega, coeff * c);
  }
  return out;
}

AlgebraElement RuleSet::multiply(const AlgebraElement& a,
                                 const AlgebraElement& b) const {
  if (a.n != n_ || b.n != n_) {
    throw Error(ErrorCode::DimensionMismatch, "multiply: n mismatch");
  }
  if (a.shape != shape_ || b.shape != shape_) {
    throw Error(ErrorCode::ShapeMismatch,
                "multiply: operand shape differs from rule set");
  }
  AlgebraElement out = AlgebraElement::zero(n_, shape_);
  for (const auto& [oa, ca] : a.terms) {
    const Word wa = oa.to_word();
    for (const auto& [ob, cb] : b.terms) {
      Word w = wa;
      const Word wb = ob.to_word();
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [omega, c] : normalize(w)) out.add_term(omega, ca * cb * c);
    }
  }
  return out;
}

// --------------------------------------------------------------- operations ---

namespace {

void enumerate_rec(const std::vector<int>& allowed, std::size_t idx, int remaining,
                   Exponent& current, std::vector<Exponent>& out) {
  if (idx == allowed.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  // Lexicographic order on the exponent vector: smaller entries first.
  for (int k = 0; k <= remaining; ++k) {
    current.e[allowed[idx]] = k;
    enumerate_rec(allowed, idx + 1, remaining - k, current, out);
  }
  current.e[allowed[idx]] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(int n, const std::optional<Shape>& shape,
                                     int degree) {
  if (degree < 0) return {};
  std::vector<int> allowed;
  for (int code = 0; code < n * n; ++code) {
    if (!shape || gen_col(n, code) <= shape->b[gen_row(n, code) - 1]) {
      allowed.push_back(code);
    }
  }
  std::vector<Exponent> out;
  Exponent current(n);
  enumerate_rec(allowed, 0, degree, current, out);
  return out;
}

AlgebraElement project(const AlgebraElement& x, const Shape& target) {
  if (target.n() != x.n) {
    throw Error(ErrorCode::InvalidShape, "project: shape size does not match n");
  }
  if (x.shape && !target.leq(*x.shape)) {
    throw Error(ErrorCode::InvalidShape, "project: target does not refine current shape");
  }
  AlgebraElement out = AlgebraElement::zero(x.n, target);
  for (const auto& [omega, c] : x.terms) {
    if (omega.admissible(target)) out.terms.emplace(omega, c);
  }
  return out;
}

DiamondReport check_diamond(const RuleSet& rules) {
  DiamondReport report;
  const int n2 = rules.n() * rules.n();

  const auto one_step_then_normalize = [&](const Word& word, std::size_t pos) {
    // Apply the quadratic rule at (pos, pos+1), then fully normalize.
    std::vector<std::pair<Scalar, Word>> terms;
    for (const auto& [coeff, replacement] : rules.rewrite_pair(word[pos], word[pos + 1])) {
      Word next;
      next.insert(next.end(), word.begin(), word.begin() + pos);
      next.insert(next.end(), replacement.begin(), replacement.end());
      next.insert(next.end(), word.begin() + pos + 2, word.end());
      terms.emplace_back(coeff, std::move(next));
    }
    return rules.reduce(terms);
  };

  // Quadratic/quadratic overlaps: strictly decreasing three-letter words.
  for (int a = 2; a < n2; ++a) {
    for (int b = 1; b < a; ++b) {
      for (int c = 0; c < b; ++c) {
        const Word w{static_cast<std::int16_t>(a), static_cast<std::int16_t>(b),
                     static_cast<std::int16_t>(c)};
        ++report.ambiguities;
        AlgebraElement left = one_step_then_normalize(w, 0);
        AlgebraElement right = one_step_then_normalize(w, 1);
        if (!(left == right)) {
          report.failures.push_back(DiamondFailure{w, left, right});
        }
      }
    }
  }

  // Quadratic/kill overlaps: decreasing two-letter words with a dead letter.
  if (rules.shape()) {
    for (int a = 1; a < n2; ++a) {
      for (int b = 0; b < a; ++b) {
        if (!rules.killed(a) && !rules.killed(b)) continue;
        const Word w{static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)};
        ++report.ambiguities;
        AlgebraElement left = one_step_then_normalize(w, 0);
        if (!left.is_zero()) {
          report.failures.push_back(
              DiamondFailure{w, left, AlgebraElement::zero(rules.n(), rules.shape())});
        }
      }
    }
  }
  return report;
}

namespace {

void permutations_rec(std::vector<int>& perm, std::vector<bool>& used,
                      std::vector<std::vector<int>>& out) {
  const std::size_t n = used.size();
  if (perm.size() == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (used[v - 1]) continue;
    used[v - 1] = true;
    perm.push_back(static_cast<int>(v));
    permutations_rec(perm, used, out);
    perm.pop_back();
    used[v - 1] = false;
  }
}

int inversions(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++count;
    }
  }
  return count;
}

}  // namespace

AlgebraElement quantum_determinant(int n, const ParamSpec& params) {
  std::vector<std::vector<int>> perms;
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  permutations_rec(perm, used, perms);

  const RuleSet rules(n, params);
  std::vector<std::pair<Scalar, Word>> row_terms;
  std::vector<std::pair<Scalar, Word>> col_terms;
  for (const auto& sigma : perms) {
    const int l = inversions(sigma);
    Word row_word, col_word;
    for (int k = 1; k <= n; ++k) {
      row_word.push_back(static_cast<std::int16_t>(gen_code(n, k, sigma[k - 1])));
      col_word.push_back(static_cast<std::int16_t>(gen_code(n, sigma[k - 1], k)));
    }
    const Scalar sign = (l % 2 == 0) ? Scalar(1) : Scalar(-1);
    row_terms.emplace_back(sign * scalar_pow(params.alpha, -l), row_word);
    col_terms.emplace_back(sign * scalar_pow(params.beta, -l), col_word);
  }
  AlgebraElement row = rules.reduce(row_terms);
  AlgebraElement col = rules.reduce(col_terms);
  if (!(row == col)) {
    throw Error(ErrorCode::FormulaMismatch,
                "quantum determinant: row and column expansions differ");
  }
  return row;
}

}  // namespace qba
