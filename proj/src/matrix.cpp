#include "klmkit/matrix.hpp"

#include <sstream>

namespace klmkit {

namespace {

void check_fields(const FieldSpec& a, const FieldSpec& b, const char* op) {
  if (a != b)
    throw domain_error(std::string(op) + ": field mismatch (" + a.str() +
                       " vs " + b.str() + ")");
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         a_ == o.a_;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_fields(field_, o.field_, "matrix add");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw domain_error("matrix add: shape mismatch");
  ExactMatrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_fields(field_, o.field_, "matrix sub");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw domain_error("matrix sub: shape mismatch");
  ExactMatrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  check_fields(field_, o.field_, "matrix mul");
  if (cols_ != o.rows_) throw domain_error("matrix mul: shape mismatch");
  ExactMatrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  check_fields(field_, c.field(), "matrix scale");
  ExactMatrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0,
                            const ExactMatrix& src) {
  check_fields(field_, src.field_, "set_block");
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
    throw domain_error("set_block: out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j)
      at(r0 + i, c0 + j) = src.at(i, j);
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t h,
                               std::size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_)
    throw domain_error("block: out of range");
  ExactMatrix r(h, w, field_);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

std::vector<Scalar> ExactMatrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void ExactMatrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw domain_error("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw domain_error("apply: length mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& a, const ExactMatrix& b) {
  check_fields(a.field_, b.field_, "hcat");
  if (a.rows_ != b.rows_) throw domain_error("hcat: row mismatch");
  ExactMatrix r(a.rows_, a.cols_ + b.cols_, a.field_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

ExactMatrix ExactMatrix::from_columns(
    std::size_t ambient, const FieldSpec& f,
    const std::vector<std::vector<Scalar>>& cols) {
  ExactMatrix r(ambient, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) r.set_col(j, cols[j]);
  return r;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult res;
  res.mat = m;
  ExactMatrix& a = res.mat;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

bool is_invertible(const ExactMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(ExactMatrix::hcat(m, ExactMatrix::identity(n, m.field())));
  // all pivots must land in the left block, else m is singular
  if (r.rank != n || (n > 0 && r.pivots.back() >= n))
    throw domain_error("inverse: singular matrix");
  return r.mat.block(0, n, n, n);
}

Subspace Subspace::span(const ExactMatrix& columns) {
  // Canonical form: row-reduce the transpose, keep nonzero rows as columns.
  RrefResult r = rref(columns.transposed());
  Subspace s(columns.rows(), columns.field());
  s.basis_ = ExactMatrix(columns.rows(), r.rank, columns.field());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < columns.rows(); ++j)
      s.basis_.at(j, i) = r.mat.at(i, j);
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
  return Subspace(ambient, f);
}

Subspace Subspace::full(std::size_t ambient, const FieldSpec& f) {
  return span(ExactMatrix::identity(ambient, f));
}

std::optional<std::vector<Scalar>> Subspace::coordinates(
    const std::vector<Scalar>& v) const {
  if (v.size() != ambient_dim())
    throw domain_error("subspace membership: length mismatch");
  // Pivot rows of distinct basis columns carry 1 in their own column and 0
  // in the others, so peeling off pivot coordinates is exact reduction.
  std::vector<Scalar> rest = v;
  std::vector<Scalar> coeff;
  coeff.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Scalar c = rest[pivots_[j]];
    coeff.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_dim(); ++i)
      rest[i] = rest[i] - c * basis_.at(i, j);
  }
  for (const Scalar& s : rest)
    if (!s.is_zero()) return std::nullopt;
  return coeff;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.col(j))) return false;
  return true;
}

Subspace kernel(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(ExactMatrix::from_columns(cols, m.field(), basis));
}

Subspace image(const ExactMatrix& m) { return Subspace::span(m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw domain_error("subspace_sum: ambient/field mismatch");
  return Subspace::span(ExactMatrix::hcat(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw domain_error("subspace_intersect: ambient/field mismatch");
  if (a.dim() == 0 || b.dim() == 0)
    return Subspace::zero(a.ambient_dim(), a.field());
  // Solve A u = B w via the kernel of the stacked system [A | -B].
  ExactMatrix stacked =
      ExactMatrix::hcat(a.basis(), b.basis().scaled(-Scalar::one(a.field())));
  Subspace null = kernel(stacked);
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < null.dim(); ++j) {
    std::vector<Scalar> uw = null.basis().col(j);
    std::vector<Scalar> u(uw.begin(), uw.begin() + a.dim());
    cols.push_back(a.basis().apply(u));
  }
  return Subspace::span(
      ExactMatrix::from_columns(a.ambient_dim(), a.field(), cols));
}

QuotientAction quotient_action(const Subspace& K,
                               const std::vector<ExactMatrix>& actions) {
  const std::size_t n = K.ambient_dim();
  const FieldSpec f = K.field();
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const ExactMatrix& A = actions[a];
    if (A.rows() != n || A.cols() != n)
      throw domain_error("quotient_action: action " + std::to_string(a) +
                         " has wrong shape");
    if (A.field() != f)
      throw domain_error("quotient_action: action " + std::to_string(a) +
                         " field mismatch");
    for (std::size_t j = 0; j < K.dim(); ++j)
      if (!K.contains(A.apply(K.basis().col(j))))
        throw domain_error("quotient_action: subspace not invariant under "
                           "action " +
                           std::to_string(a));
  }

  // Greedy complement by standard vectors, lowest index first.
  std::vector<std::size_t> comp_idx;
  ExactMatrix work = K.basis();
  std::size_t cur_rank = K.dim();
  for (std::size_t e = 0; e < n && cur_rank + comp_idx.size() < n; ++e) {
    ExactMatrix unit(n, 1, f);
    unit.at(e, 0) = Scalar::one(f);
    ExactMatrix cand = ExactMatrix::hcat(work, unit);
    if (rank(cand) > work.cols()) {
      work = Subspace::span(cand).basis();
      comp_idx.push_back(e);
    }
  }
  const std::size_t q = comp_idx.size();

  QuotientAction res;
  res.complement = ExactMatrix(n, q, f);
  for (std::size_t j = 0; j < q; ++j)
    res.complement.at(comp_idx[j], j) = Scalar::one(f);
  res.complement_indices = comp_idx;

  // Change of basis C = [K basis | complement]; the induced matrix is the
  // complement block of C^{-1} A C.
  ExactMatrix C = ExactMatrix::hcat(K.basis(), res.complement);
  ExactMatrix Cinv = q + K.dim() > 0 ? inverse(C) : ExactMatrix(0, 0, f);
  for (const ExactMatrix& A : actions) {
    ExactMatrix full = Cinv * A * C;
    res.induced.push_back(full.block(K.dim(), K.dim(), q, q));
  }
  return res;
}

ExactMatrix restrict_action(const Subspace& S, const ExactMatrix& A) {
  if (A.rows() != S.ambient_dim() || A.cols() != S.ambient_dim())
    throw domain_error("restrict_action: shape mismatch");
  ExactMatrix r(S.dim(), S.dim(), S.field());
  for (std::size_t j = 0; j < S.dim(); ++j) {
    auto coords = S.coordinates(A.apply(S.basis().col(j)));
    if (!coords)
      throw domain_error("restrict_action: subspace not invariant");
    r.set_col(j, *coords);
  }
  return r;
}

}  // namespace klmkit
