#include "core/linalg.hpp"

#include <algorithm>

namespace qba {

LinearMap::LinearMap(std::vector<std::string> domain_labels,
                     std::vector<std::string> codomain_labels)
    : domain_(std::move(domain_labels)),
      codomain_(std::move(codomain_labels)),
      entries_(domain_.size() * codomain_.size(), Scalar(0)) {}

LinearMap LinearMap::identity(const std::vector<std::string>& labels) {
  LinearMap m(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = 1;
  return m;
}

LinearMap LinearMap::zero(std::vector<std::string> domain_labels,
                          std::vector<std::string> codomain_labels) {
  return LinearMap(std::move(domain_labels), std::move(codomain_labels));
}

const Scalar& LinearMap::at(std::size_t row, std::size_t col) const {
  return entries_[row * domain_.size() + col];
}

Scalar& LinearMap::at(std::size_t row, std::size_t col) {
  return entries_[row * domain_.size() + col];
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& column) const {
  if (column.size() != domain_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "apply: wrong column size");
  }
  std::vector<Scalar> out(codomain_.size(), Scalar(0));
  for (std::size_t i = 0; i < codomain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) {
      if (at(i, j) != 0 && column[j] != 0) out[i] += at(i, j) * column[j];
    }
  }
  return out;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  if (domain_ != other.codomain_) {
    throw Error(ErrorCode::LabelMismatch,
                "compose: codomain of inner map does not match domain of outer map");
  }
  LinearMap out(other.domain_, codomain_);
  for (std::size_t i = 0; i < codomain_.size(); ++i) {
    for (std::size_t k = 0; k < domain_.size(); ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.domain_.size(); ++j) {
        const Scalar& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  if (domain_ != other.domain_ || codomain_ != other.codomain_) {
    throw Error(ErrorCode::LabelMismatch, "sum: bases differ");
  }
  LinearMap out(domain_, codomain_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  if (domain_ != other.domain_ || codomain_ != other.codomain_) {
    throw Error(ErrorCode::LabelMismatch, "difference: bases differ");
  }
  LinearMap out(domain_, codomain_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

bool LinearMap::operator==(const LinearMap& other) const {
  return domain_ == other.domain_ && codomain_ == other.codomain_ &&
         entries_ == other.entries_;
}

bool LinearMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s == 0; });
}

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelonize(std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Scalar inv = Scalar(1) / rows[rank][col];
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Scalar factor = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] -= factor * rows[rank][j];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

std::size_t LinearMap::rank() const {
  std::vector<std::vector<Scalar>> rows(codomain_.size(),
                                        std::vector<Scalar>(domain_.size()));
  for (std::size_t i = 0; i < codomain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) rows[i][j] = at(i, j);
  }
  return echelonize(rows).size();
}

std::vector<std::vector<Scalar>> LinearMap::kernel() const {
  std::vector<std::vector<Scalar>> rows(codomain_.size(),
                                        std::vector<Scalar>(domain_.size()));
  for (std::size_t i = 0; i < codomain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) rows[i][j] = at(i, j);
  }
  const std::vector<std::size_t> pivots = echelonize(rows);
  std::vector<bool> is_pivot(domain_.size(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < domain_.size(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(domain_.size(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearMap LinearMap::inverse() const {
  if (domain_.size() != codomain_.size()) {
    throw Error(ErrorCode::NotInvertible, "inverse: map is not square");
  }
  const std::size_t n = domain_.size();
  // Augmented Gauss-Jordan [A | I].
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = at(i, j);
    rows[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && rows[sel][col] == 0) ++sel;
    if (sel == n) {
      throw Error(ErrorCode::NotInvertible, "inverse: matrix is singular");
    }
    std::swap(rows[col], rows[sel]);
    const Scalar inv = Scalar(1) / rows[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) rows[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      const Scalar factor = rows[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) rows[i][j] -= factor * rows[col][j];
    }
  }
  LinearMap out(codomain_, domain_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = rows[i][n + j];
  }
  return out;
}

std::optional<std::vector<Scalar>> LinearMap::solve(
    const std::vector<Scalar>& column) const {
  if (column.size() != codomain_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "solve: wrong column size");
  }
  std::vector<std::vector<Scalar>> rows(codomain_.size(),
                                        std::vector<Scalar>(domain_.size() + 1));
  for (std::size_t i = 0; i < codomain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) rows[i][j] = at(i, j);
    rows[i][domain_.size()] = column[i];
  }
  // Echelonize only over the coefficient columns.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < domain_.size() && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Scalar inv = Scalar(1) / rows[rank][col];
    for (std::size_t j = col; j <= domain_.size(); ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Scalar factor = rows[i][col];
      for (std::size_t j = col; j <= domain_.size(); ++j) {
        rows[i][j] -= factor * rows[rank][j];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i][domain_.size()] != 0) return std::nullopt;
  }
  std::vector<Scalar> x(domain_.size(), Scalar(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = rows[r][domain_.size()];
  return x;
}

// ----------------------------------------------------------- sparse layer ---

void sparse_add(SparseVec& target, const Key& key, const Scalar& value) {
  if (value == 0) return;
  auto it = target.find(key);
  if (it == target.end()) {
    target.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) target.erase(it);
  }
}

void sparse_axpy(SparseVec& target, const Scalar& coeff, const SparseVec& source) {
  if (coeff == 0) return;
  for (const auto& [key, value] : source) sparse_add(target, key, coeff * value);
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

bool SparseEchelon::insert(const SparseVec& v) {
  SparseVec residue = v;
  std::vector<Scalar> coeffs(n_inserted_ + 1, Scalar(0));
  coeffs[n_inserted_] = 1;
  ++n_inserted_;
  for (auto& row : rows_) row.coeffs.resize(n_inserted_, Scalar(0));

  for (const auto& row : rows_) {
    auto it = residue.find(row.pivot);
    if (it == residue.end()) continue;
    const Scalar factor = it->second;
    sparse_axpy(residue, -factor, row.vec);
    for (std::size_t k = 0; k < n_inserted_; ++k) {
      coeffs[k] -= factor * row.coeffs[k];
    }
  }
  if (residue.empty()) return false;

  const auto pivot_it = residue.begin();
  const Key pivot = pivot_it->first;
  const Scalar inv = Scalar(1) / pivot_it->second;
  SparseVec vec;
  for (const auto& [key, value] : residue) vec.emplace(key, value * inv);
  for (auto& c : coeffs) c *= inv;

  // Keep the family fully reduced.
  for (auto& row : rows_) {
    auto it = row.vec.find(pivot);
    if (it == row.vec.end()) continue;
    const Scalar factor = it->second;
    sparse_axpy(row.vec, -factor, vec);
    for (std::size_t k = 0; k < n_inserted_; ++k) {
      row.coeffs[k] -= factor * coeffs[k];
    }
  }
  rows_.push_back(Row{pivot, std::move(vec), std::move(coeffs)});
  return true;
}

std::optional<std::vector<Scalar>> SparseEchelon::express(const SparseVec& v) const {
  SparseVec residue = v;
  std::vector<Scalar> coeffs(n_inserted_, Scalar(0));
  for (const auto& row : rows_) {
    auto it = residue.find(row.pivot);
    if (it == residue.end()) continue;
    const Scalar factor = it->second;
    sparse_axpy(residue, -factor, row.vec);
    for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
      coeffs[k] += factor * row.coeffs[k];
    }
  }
  if (!residue.empty()) return std::nullopt;
  return coeffs;
}

bool SparseEchelon::contains(const SparseVec& v) const {
  SparseVec residue = v;
  for (const auto& row : rows_) {
    auto it = residue.find(row.pivot);
    if (it == residue.end()) continue;
    sparse_axpy(residue, -it->second, row.vec);
  }
  return residue.empty();
}

std::vector<std::vector<Scalar>> sparse_kernel(const std::vector<SparseVec>& columns) {
  const std::size_t n_cols = columns.size();
  // Assemble the nonzero rows of the matrix: one row per Key that appears.
  std::map<Key, std::map<std::size_t, Scalar>> rows_by_key;
  for (std::size_t j = 0; j < n_cols; ++j) {
    for (const auto& [key, value] : columns[j]) rows_by_key[key][j] = value;
  }
  // Incremental reduced row echelon over the (small) column space.
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivots;
  for (const auto& [key, sparse_row] : rows_by_key) {
    std::vector<Scalar> row(n_cols, Scalar(0));
    for (const auto& [j, value] : sparse_row) row[j] = value;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row[pivots[r]] == 0) continue;
      const Scalar factor = row[pivots[r]];
      for (std::size_t j = 0; j < n_cols; ++j) row[j] -= factor * rows[r][j];
    }
    std::size_t pivot = 0;
    while (pivot < n_cols && row[pivot] == 0) ++pivot;
    if (pivot == n_cols) continue;
    const Scalar inv = Scalar(1) / row[pivot];
    for (std::size_t j = pivot; j < n_cols; ++j) row[j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][pivot] == 0) continue;
      const Scalar factor = rows[r][pivot];
      for (std::size_t j = 0; j < n_cols; ++j) rows[r][j] -= factor * row[j];
    }
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
  }
  // Sort echelon rows by pivot for a deterministic free-variable pass.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

  std::vector<bool> is_pivot(n_cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < n_cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n_cols, Scalar(0));
    v[free] = 1;
    for (std::size_t idx : order) v[pivots[idx]] = -rows[idx][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t sparse_rank(const std::vector<SparseVec>& vectors) {
  SparseEchelon ech;
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

}  // namespace qba
