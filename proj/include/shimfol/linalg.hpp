#pragma once

// Dense linear algebra over a finite field.

#include <optional>
#include <vector>

#include "shimfol/gfpn.hpp"

namespace shimfol::gf {

using Vector = std::vector<FieldElement>;

class Matrix {
public:
    Matrix() = default;
    Matrix(const FiniteField& field, int rows, int cols);
    static Matrix identity(const FiniteField& field, int n);
    /// Rows given as integer residues.
    static Matrix from_ints(const FiniteField& field, const std::vector<std::vector<std::int64_t>>& rows);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const FiniteField& field, int rows, const std::vector<Vector>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FiniteField& field() const { return field_; }

    const FieldElement& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    FieldElement& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vector column(int c) const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Entrywise x -> x^(p^t); t may be negative (inverse Frobenius).
    Matrix frobenius_twist(int t) const;

private:
    FiniteField field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FieldElement> a_;
};

struct RowEchelon {
    Matrix reduced;             // reduced row echelon form
    std::vector<int> pivots;    // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

RowEchelon rref(const Matrix& a);
int rank(const Matrix& a);

struct Kernel {
    int rank = 0;
    std::vector<Vector> basis;
};

/// Basis of {x : A x = 0}, one vector per free column.
Kernel kernel_basis(const Matrix& a);

/// dim ker(x -> A * phi^twist(x)). Coordinatewise p-power is a bijection on
/// a finite field, so this is cols - rank(A) for every twist.
int semilinear_kernel_dim(const Matrix& a, int twist);

/// Some x with A x = b, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace shimfol::gf
