#pragma once

#include <vector>

#include "leonard/field.hpp"

namespace leonard {

class Matrix;

/// Dense univariate polynomial over a FieldCtx.  Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is the
/// empty list.
class DensePoly {
public:
    explicit DensePoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    DensePoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs);

    static DensePoly constant(const FieldElem& c);
    /// The monic product (x - r_0)(x - r_1)...(x - r_{n-1}).
    static DensePoly from_roots(const FieldCtxPtr& ctx, const std::vector<FieldElem>& roots);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    DensePoly operator+(const DensePoly& o) const;
    DensePoly operator-(const DensePoly& o) const;
    DensePoly operator*(const DensePoly& o) const;
    bool operator==(const DensePoly& o) const;

    FieldElem eval(const FieldElem& at) const;
    /// Substitutes a square matrix for the indeterminate; the constant term
    /// contributes c*I.
    Matrix eval(const Matrix& at) const;

private:
    FieldCtxPtr ctx_;
    std::vector<FieldElem> coeffs_;
    void normalize();
};

} // namespace leonard
