#include "shimfol/linalg.hpp"

#include <set>

namespace shimfol::gf {

Matrix::Matrix(const FiniteField& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, field.zero()) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

Matrix Matrix::identity(const FiniteField& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_ints(const FiniteField& field, const std::vector<std::vector<std::int64_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const FiniteField& field, int rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(columns[j].size()) != rows) throw InputError("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

Vector Matrix::column(int c) const {
    Vector v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("matrix-vector dimension mismatch");
    Vector r(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) r[i] += at(i, k) * v[k];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::frobenius_twist(int t) const {
    const int n = field_.degree();
    int steps = ((t % n) + n) % n;
    if (steps == 0) return *this;
    Matrix r = *this;
    for (auto& x : r.a_) x = frobenius(x, steps);
    return r;
}

RowEchelon rref(const Matrix& a) {
    RowEchelon out{a, {}};
    Matrix& m = out.reduced;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

int rank(const Matrix& a) { return rref(a).rank(); }

Kernel kernel_basis(const Matrix& a) {
    RowEchelon e = rref(a);
    Kernel k;
    k.rank = e.rank();
    std::set<int> pivot_cols(e.pivots.begin(), e.pivots.end());
    const FiniteField& f = a.field();
    for (int free = 0; free < a.cols(); ++free) {
        if (pivot_cols.count(free)) continue;
        Vector v(a.cols(), f.zero());
        v[free] = f.one();
        for (int r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
        k.basis.push_back(std::move(v));
    }
    return k;
}

int semilinear_kernel_dim(const Matrix& a, int /*twist*/) { return a.cols() - rank(a); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw InputError("solve: right-hand side length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols(), a.field().zero());
    for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced.at(r, a.cols());
    return x;
}

}  // namespace shimfol::gf
