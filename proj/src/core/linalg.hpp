// Exact linear algebra over Q: dense labelled linear maps plus a sparse
// echelon structure for subspaces of large tensor-product coordinate spaces.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace qba {

// ------------------------------------------------------------ dense maps ---

// A matrix between two based spaces.  Convention: the map eats coordinate
// columns, so the matrix has one row per codomain basis vector and one
// column per domain basis vector.  Bases are identified by label vectors;
// composition and comparison require exact label equality.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::vector<std::string> domain_labels,
            std::vector<std::string> codomain_labels);

  static LinearMap identity(const std::vector<std::string>& labels);
  static LinearMap zero(std::vector<std::string> domain_labels,
                        std::vector<std::string> codomain_labels);

  std::size_t domain_dim() const { return domain_.size(); }
  std::size_t codomain_dim() const { return codomain_.size(); }
  const std::vector<std::string>& domain_labels() const { return domain_; }
  const std::vector<std::string>& codomain_labels() const { return codomain_; }

  const Scalar& at(std::size_t row, std::size_t col) const;
  Scalar& at(std::size_t row, std::size_t col);

  std::vector<Scalar> apply(const std::vector<Scalar>& column) const;

  // this ∘ other (other first).  Throws LabelMismatch unless the bases agree.
  LinearMap compose(const LinearMap& other) const;
  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  bool operator==(const LinearMap& other) const;

  std::size_t rank() const;
  bool is_zero() const;

  // Reduced column-echelon basis of the kernel, deterministic:
  // Gauss-Jordan with first-nonzero pivots, free columns in increasing
  // order, each kernel vector normalized with 1 at its free coordinate.
  std::vector<std::vector<Scalar>> kernel() const;

  // Inverse map; throws NotInvertible unless square and full rank.
  LinearMap inverse() const;

  // Solve this * x = column; returns nullopt when inconsistent.  When the
  // kernel is nonzero the particular solution with free variables = 0 is
  // returned (deterministic).
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& column) const;

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> codomain_;
  std::vector<Scalar> entries_;  // row-major, codomain_dim x domain_dim
};

// ----------------------------------------------------------- sparse layer ---

// Coordinates of tensor-product spaces are tuples of factor indices.
using Key = std::vector<std::int32_t>;
using SparseVec = std::map<Key, Scalar>;

void sparse_add(SparseVec& target, const Key& key, const Scalar& value);
void sparse_axpy(SparseVec& target, const Scalar& coeff, const SparseVec& source);
bool sparse_equal(const SparseVec& a, const SparseVec& b);

// A growing reduced-echelon family of sparse vectors over Key coordinates,
// remembering how each echelon row was formed from the inserted vectors so
// that membership queries can return coefficients in the original family.
class SparseEchelon {
 public:
  // Inserts v (coefficients on previously inserted vectors are tracked).
  // Returns true when v was independent from the current span.
  bool insert(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return n_inserted_; }

  // Expresses v in terms of the *inserted* vectors.  Returns nullopt when v
  // is not in the span.  Size of the result = inserted().
  std::optional<std::vector<Scalar>> express(const SparseVec& v) const;

  bool contains(const SparseVec& v) const;

 private:
  struct Row {
    Key pivot;
    SparseVec vec;               // pivot coefficient normalized to 1
    std::vector<Scalar> coeffs;  // in terms of inserted vectors
  };
  std::vector<Row> rows_;
  std::size_t n_inserted_ = 0;
};

// Kernel of a linear map given by sparse columns: the map sends domain
// coordinate j to columns[j] in some Key-coordinate space.  Returns the
// deterministic reduced-echelon kernel basis (dense in domain coordinates),
// computed with first-nonzero pivoting on the assembled row space.
std::vector<std::vector<Scalar>> sparse_kernel(const std::vector<SparseVec>& columns);

// Rank of the span of the given sparse vectors.
std::size_t sparse_rank(const std::vector<SparseVec>& vectors);

}  // namespace qba
