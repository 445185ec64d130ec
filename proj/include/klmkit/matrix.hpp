#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "klmkit/field.hpp"

namespace klmkit {

/// Dense matrix over an exact field, row-major.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), field_(FieldSpec::rational()) {}
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f),
        a_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(std::size_t n, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transposed() const;

  bool is_identity() const;
  bool is_zero() const;

  /// Copies src into this matrix with upper-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src);
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t h,
                    std::size_t w) const;

  std::vector<Scalar> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Columns glued side by side; rows must agree.
  static ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);
  static ExactMatrix from_columns(std::size_t ambient, const FieldSpec& f,
                                  const std::vector<std::vector<Scalar>>& cols);

  std::string str() const;  // for error messages and debugging

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  ExactMatrix mat;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);  // throws domain_error if singular

/// Linear subspace of k^ambient, held as a basis matrix in reduced column
/// echelon form (pivot rows strictly increasing, pivot entries 1, pivot rows
/// zero elsewhere). Two subspaces are equal iff the bases are entrywise equal.
class Subspace {
 public:
  Subspace(std::size_t ambient, const FieldSpec& f)
      : basis_(ambient, 0, f) {}

  /// Span of the given columns, canonicalized.
  static Subspace span(const ExactMatrix& columns);
  static Subspace zero(std::size_t ambient, const FieldSpec& f);
  static Subspace full(std::size_t ambient, const FieldSpec& f);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const FieldSpec& field() const { return basis_.field(); }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in this basis; empty optional if v is outside.
  std::optional<std::vector<Scalar>> coordinates(
      const std::vector<Scalar>& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace() : basis_() {}
  ExactMatrix basis_;                 // ambient x dim
  std::vector<std::size_t> pivots_;   // pivot row of each basis column
};

Subspace kernel(const ExactMatrix& m);
Subspace image(const ExactMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

struct QuotientAction {
  std::vector<ExactMatrix> induced;      // action on the quotient
  ExactMatrix complement;                // ambient x q, chosen standard vectors
  std::vector<std::size_t> complement_indices;
};

/// Quotient of k^ambient by an invariant subspace K. The complement is the
/// greedy extension of K's basis by standard vectors (lowest index first);
/// the induced matrices are expressed in the complement-coset basis.
/// Throws domain_error naming the offending action if K is not invariant.
QuotientAction quotient_action(const Subspace& K,
                               const std::vector<ExactMatrix>& actions);

/// Action of A on an invariant subspace S, in the basis of S.
/// Throws domain_error if A does not map S into S.
ExactMatrix restrict_action(const Subspace& S, const ExactMatrix& A);

}  // namespace klmkit
