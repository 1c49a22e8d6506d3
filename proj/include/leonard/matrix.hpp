#pragma once

#include <vector>

#include "leonard/field.hpp"

namespace leonard {

enum class TridiagonalClass { NotTridiagonal, Tridiagonal, IrreducibleTridiagonal };

/// Dense square matrix over a FieldCtx, rows and columns indexed 0..order-1.
/// All arithmetic is exact; there is no tolerance anywhere.
class Matrix {
public:
    /// Empty placeholder; assign a real matrix before use.
    Matrix() : order_(0) {}
    Matrix(FieldCtxPtr ctx, int order);
    static Matrix identity(const FieldCtxPtr& ctx, int order);
    static Matrix diagonal(const std::vector<FieldElem>& entries);

    int order() const { return order_; }
    const FieldCtxPtr& ctx() const { return ctx_; }

    const FieldElem& at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, const FieldElem& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElem& c) const;
    Matrix transpose() const;
    FieldElem trace() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Matrix-vector product.
    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

    /// Exact Gauss-Jordan inverse with first-nonzero pivoting.
    Matrix inverse() const;
    /// Rank by exact Gaussian elimination.
    int rank() const;

    /// Solve M x = rhs for one vector; M must be nonsingular.
    std::vector<FieldElem> solve(const std::vector<FieldElem>& rhs) const;

    TridiagonalClass tridiagonal_class() const;

    std::string str() const;

private:
    FieldCtxPtr ctx_;
    int order_;
    std::vector<FieldElem> entries_;
    int index(int i, int j) const { return i * order_ + j; }
    void require_conformable(const Matrix& o) const;
};

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

/// Column j of M as a vector.
std::vector<FieldElem> column(const Matrix& m, int j);
/// Matrix whose columns are the given vectors.
Matrix from_columns(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElem>>& cols);

/// Primitive idempotents of a multiplicity-free matrix, one per claimed
/// eigenvalue, computed by the product formula
///   E_i = prod_{j != i} (M - eigs_j I) / (eigs_i - eigs_j)
/// and validated: E_i E_j = delta_ij E_i, sum E_i = I, M E_i = eigs_i E_i,
/// rank(E_i) = 1, tr(E_i) = 1.
std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<FieldElem>& eigs);

} // namespace leonard
