#include "minv/linalg.hpp"

#include <sstream>
#include <utility>

#include "minv/errors.hpp"

namespace minv {

RatVector::RatVector(std::vector<Rational> entries, Orientation orient)
    : entries_(std::move(entries)), orient_(orient) {
  if (entries_.empty()) throw DimensionError("vector must have at least one entry");
}

RatVector RatVector::row(std::vector<Rational> entries) {
  return RatVector(std::move(entries), Orientation::Row);
}

RatVector RatVector::column(std::vector<Rational> entries) {
  return RatVector(std::move(entries), Orientation::Column);
}

RatVector RatVector::zero(std::size_t n, Orientation orient) {
  return RatVector(std::vector<Rational>(n), orient);
}

RatVector RatVector::unit(std::size_t n, std::size_t i, Orientation orient) {
  std::vector<Rational> e(n);
  e.at(i) = 1;
  return RatVector(std::move(e), orient);
}

bool RatVector::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

RatVector RatVector::transposed() const {
  return RatVector(entries_, is_row() ? Orientation::Column : Orientation::Row);
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (size() != o.size() || orient_ != o.orient_)
    throw DimensionError("vector addition shape mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (size() != o.size() || orient_ != o.orient_)
    throw DimensionError("vector subtraction shape mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

RatVector RatVector::operator-() const {
  RatVector r = *this;
  for (auto& x : r.entries_) x = -x;
  return r;
}

int RatVector::lex_compare(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

std::string RatVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Rational inner_product(const RatVector& b, const RatVector& c) {
  if (b.size() != c.size())
    throw DimensionError("inner product of vectors of lengths " + std::to_string(b.size()) +
                         " and " + std::to_string(c.size()));
  Rational acc;
  for (std::size_t i = 0; i < b.size(); ++i) acc += b[i] * c[i];
  return acc;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> rowMajor)
    : rows_(rows), cols_(cols), a_(std::move(rowMajor)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (a_.size() != rows * cols) throw DimensionError("matrix entry count mismatch");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) throw DimensionError("matrix needs at least one column");
  RatMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw DimensionError("ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::row_vec(std::size_t i) const {
  std::vector<Rational> e(cols_);
  for (std::size_t j = 0; j < cols_; ++j) e[j] = at(i, j);
  return RatVector::row(std::move(e));
}

RatVector RatMatrix::column_vec(std::size_t j) const {
  std::vector<Rational> e(rows_);
  for (std::size_t i = 0; i < rows_; ++i) e[i] = at(i, j);
  return RatVector::column(std::move(e));
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::without_column(std::size_t j) const {
  if (cols_ < 2) throw DimensionError("cannot drop the only column");
  RatMatrix m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (k == j) continue;
      m.at(i, out++) = at(i, k);
    }
  }
  return m;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, {}, 0};
  RatMatrix& a = res.reduced;
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < a.cols() && pivotRow < a.rows(); ++col) {
    std::size_t sel = pivotRow;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivotRow)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivotRow, j));
    const Rational inv = a.at(pivotRow, col).reciprocal();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivotRow, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivotRow || a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pivotRow, j);
    }
    res.pivots.push_back(col);
    ++pivotRow;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

RatVector primitive_scaled(const RatVector& v) {
  if (v.is_zero()) return v;
  mpz_class denLcm = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), denLcm.get_mpz_t(), v[i].den().get_mpz_t());
    denLcm = l;
  }
  mpz_class numGcd = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (denLcm / v[i].den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), numGcd.get_mpz_t(), ints[i].get_mpz_t());
    numGcd = g;
  }
  int lead = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ints[i] != 0) {
      lead = sgn(ints[i]);
      break;
    }
  }
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = Rational(mpq_class(lead < 0 ? -ints[i] : ints[i], numGcd));
  return RatVector(std::move(out), v.orientation());
}

std::vector<RatVector> null_space(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : r.pivots) isPivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t freeCol = 0; freeCol < m.cols(); ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<Rational> v(m.cols());
    v[freeCol] = 1;
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
      v[r.pivots[pr]] = -r.reduced.at(pr, freeCol);
    basis.push_back(primitive_scaled(RatVector::column(std::move(v))));
  }
  return basis;
}

SolveResult solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: rhs length must equal row count");

  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  for (std::size_t p : r.pivots)
    if (p == a.cols()) return SolveResult{SolveKind::Inconsistent, {}, {}};

  std::vector<Rational> x(a.cols());  // free variables stay zero
  for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) x[r.pivots[pr]] = r.reduced.at(pr, a.cols());

  SolveResult res;
  res.particular = RatVector::column(std::move(x));
  res.nullspace = null_space(a);
  res.kind = res.nullspace.empty() ? SolveKind::Unique : SolveKind::Affine;
  return res;
}

}  // namespace minv
