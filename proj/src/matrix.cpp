#include "leonard/matrix.hpp"

#include <sstream>

namespace leonard {

Matrix::Matrix(FieldCtxPtr ctx, int order) : ctx_(std::move(ctx)), order_(order) {
    if (order < 1) throw Error(Errc::OrderMismatch, "matrix order must be positive");
    entries_.assign(static_cast<size_t>(order) * order, ctx_->zero());
}

Matrix Matrix::identity(const FieldCtxPtr& ctx, int order) {
    Matrix m(ctx, order);
    for (int i = 0; i < order; ++i) m.set(i, i, ctx->one());
    return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElem>& entries) {
    if (entries.empty()) throw Error(Errc::OrderMismatch, "empty diagonal");
    Matrix m(entries[0].ctx(), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
    return m;
}

void Matrix::set(int i, int j, const FieldElem& v) {
    if (!same_ctx(ctx_, v.ctx())) throw Error(Errc::CtxMismatch, "entry from a different field");
    entries_[index(i, j)] = v;
}

void Matrix::require_conformable(const Matrix& o) const {
    if (order_ != o.order_) throw Error(Errc::OrderMismatch, "matrix orders differ");
    if (!same_ctx(ctx_, o.ctx_)) throw Error(Errc::CtxMismatch, "matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_conformable(o);
    Matrix r(*this);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_conformable(o);
    Matrix r(*this);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& e : r.entries_) e = -e;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_conformable(o);
    Matrix r(ctx_, order_);
    for (int i = 0; i < order_; ++i) {
        for (int k = 0; k < order_; ++k) {
            const FieldElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < order_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.entries_[r.index(i, j)] = r.at(i, j) + aik * o.at(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const FieldElem& c) const {
    Matrix r(*this);
    for (auto& e : r.entries_) e = e * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ctx_, order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.set(j, i, at(i, j));
    return r;
}

FieldElem Matrix::trace() const {
    FieldElem t = ctx_->zero();
    for (int i = 0; i < order_; ++i) t = t + at(i, i);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (order_ != o.order_ || !same_ctx(ctx_, o.ctx_)) return false;
    return entries_ == o.entries_;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
    if (static_cast<int>(v.size()) != order_)
        throw Error(Errc::OrderMismatch, "vector length differs from matrix order");
    std::vector<FieldElem> out(order_, ctx_->zero());
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

Matrix Matrix::inverse() const {
    Matrix a(*this);
    Matrix inv = identity(ctx_, order_);
    for (int col = 0; col < order_; ++col) {
        int piv = -1;
        for (int r = col; r < order_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(Errc::Singular, "matrix is singular");
        if (piv != col) {
            for (int j = 0; j < order_; ++j) {
                std::swap(a.entries_[a.index(col, j)], a.entries_[a.index(piv, j)]);
                std::swap(inv.entries_[inv.index(col, j)], inv.entries_[inv.index(piv, j)]);
            }
        }
        FieldElem s = a.at(col, col).inverse();
        for (int j = 0; j < order_; ++j) {
            a.entries_[a.index(col, j)] = a.at(col, j) * s;
            inv.entries_[inv.index(col, j)] = inv.at(col, j) * s;
        }
        for (int r = 0; r < order_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            FieldElem f = a.at(r, col);
            for (int j = 0; j < order_; ++j) {
                a.entries_[a.index(r, j)] = a.at(r, j) - f * a.at(col, j);
                inv.entries_[inv.index(r, j)] = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

int Matrix::rank() const {
    Matrix a(*this);
    int rank = 0;
    for (int col = 0; col < order_ && rank < order_; ++col) {
        int piv = -1;
        for (int r = rank; r < order_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < order_; ++j)
                std::swap(a.entries_[a.index(rank, j)], a.entries_[a.index(piv, j)]);
        FieldElem s = a.at(rank, col).inverse();
        for (int j = 0; j < order_; ++j) a.entries_[a.index(rank, j)] = a.at(rank, j) * s;
        for (int r = 0; r < order_; ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            FieldElem f = a.at(r, col);
            for (int j = 0; j < order_; ++j)
                a.entries_[a.index(r, j)] = a.at(r, j) - f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<FieldElem> Matrix::solve(const std::vector<FieldElem>& rhs) const {
    Matrix a(*this);
    std::vector<FieldElem> b = rhs;
    if (static_cast<int>(b.size()) != order_)
        throw Error(Errc::OrderMismatch, "rhs length differs from matrix order");
    for (int col = 0; col < order_; ++col) {
        int piv = -1;
        for (int r = col; r < order_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(Errc::Singular, "matrix is singular");
        if (piv != col) {
            for (int j = 0; j < order_; ++j)
                std::swap(a.entries_[a.index(col, j)], a.entries_[a.index(piv, j)]);
            std::swap(b[col], b[piv]);
        }
        FieldElem s = a.at(col, col).inverse();
        for (int j = 0; j < order_; ++j) a.entries_[a.index(col, j)] = a.at(col, j) * s;
        b[col] = b[col] * s;
        for (int r = 0; r < order_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            FieldElem f = a.at(r, col);
            for (int j = 0; j < order_; ++j)
                a.entries_[a.index(r, j)] = a.at(r, j) - f * a.at(col, j);
            b[r] = b[r] - f * b[col];
        }
    }
    return b;
}

TridiagonalClass Matrix::tridiagonal_class() const {
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            if ((i > j + 1 || j > i + 1) && !at(i, j).is_zero())
                return TridiagonalClass::NotTridiagonal;
    for (int i = 0; i + 1 < order_; ++i)
        if (at(i + 1, i).is_zero() || at(i, i + 1).is_zero())
            return TridiagonalClass::Tridiagonal;
    return TridiagonalClass::IrreducibleTridiagonal;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < order_; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < order_; ++j) out << (j ? "," : "") << at(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

std::vector<FieldElem> column(const Matrix& m, int j) {
    std::vector<FieldElem> out;
    out.reserve(m.order());
    for (int i = 0; i < m.order(); ++i) out.push_back(m.at(i, j));
    return out;
}

Matrix from_columns(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElem>>& cols) {
    Matrix m(ctx, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != cols.size())
            throw Error(Errc::OrderMismatch, "column length differs from order");
        for (size_t i = 0; i < cols.size(); ++i)
            m.set(static_cast<int>(i), static_cast<int>(j), cols[j][i]);
    }
    return m;
}

std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<FieldElem>& eigs) {
    const int n = m.order();
    if (static_cast<int>(eigs.size()) != n)
        throw Error(Errc::OrderMismatch, "need exactly one eigenvalue per dimension");
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] == eigs[j])
                throw Error(Errc::RepeatedEigenvalue,
                            "eigenvalue " + eigs[i].str() + " repeats at positions " +
                                std::to_string(i) + "," + std::to_string(j));
    const auto& ctx = m.ctx();
    Matrix id = Matrix::identity(ctx, n);
    std::vector<Matrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Matrix e = id;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            e = e * (m - id.scaled(eigs[j])).scaled((eigs[i] - eigs[j]).inverse());
        }
        out.push_back(std::move(e));
    }
    // Validate the full list of projector properties; any failure means the
    // supplied scalars were not the eigenvalues of a multiplicity-free matrix.
    Matrix sum(ctx, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix prod = out[i] * out[j];
            if (i == j ? !(prod == out[i]) : !prod.is_zero())
                throw Error(Errc::NotAnEigenvalue, "projector orthogonality fails");
        }
        if (!(m * out[i] == out[i].scaled(eigs[i])))
            throw Error(Errc::NotAnEigenvalue, eigs[i].str() + " is not an eigenvalue");
        if (out[i].rank() != 1)
            throw Error(Errc::NotAnEigenvalue, "projector for " + eigs[i].str() + " has rank != 1");
        if (!(out[i].trace() == ctx->one()))
            throw Error(Errc::NotAnEigenvalue, "projector trace differs from 1");
        sum = sum + out[i];
    }
    if (!(sum == id)) throw Error(Errc::NotAnEigenvalue, "projectors do not sum to the identity");
    return out;
}

} // namespace leonard
