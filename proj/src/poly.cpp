#include "leonard/poly.hpp"

#include "leonard/matrix.hpp"

namespace leonard {

DensePoly::DensePoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_ctx(ctx_, c.ctx()))
            throw Error(Errc::CtxMismatch, "coefficient from a different field");
    normalize();
}

void DensePoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DensePoly DensePoly::constant(const FieldElem& c) {
    return DensePoly(c.ctx(), std::vector<FieldElem>{c});
}

DensePoly DensePoly::from_roots(const FieldCtxPtr& ctx, const std::vector<FieldElem>& roots) {
    DensePoly acc(ctx, {ctx->one()});
    for (const auto& r : roots) {
        DensePoly lin(ctx, {-r, ctx->one()});
        acc = acc * lin;
    }
    return acc;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
    if (!same_ctx(ctx_, o.ctx_)) throw Error(Errc::CtxMismatch, "polynomials over different fields");
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return DensePoly(ctx_, std::move(out));
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
    if (!same_ctx(ctx_, o.ctx_)) throw Error(Errc::CtxMismatch, "polynomials over different fields");
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] - o.coeffs_[i];
    return DensePoly(ctx_, std::move(out));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
    if (!same_ctx(ctx_, o.ctx_)) throw Error(Errc::CtxMismatch, "polynomials over different fields");
    if (is_zero() || o.is_zero()) return DensePoly(ctx_);
    std::vector<FieldElem> out(coeffs_.size() + o.coeffs_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    return DensePoly(ctx_, std::move(out));
}

bool DensePoly::operator==(const DensePoly& o) const {
    return same_ctx(ctx_, o.ctx_) && coeffs_ == o.coeffs_;
}

FieldElem DensePoly::eval(const FieldElem& at) const {
    FieldElem acc = ctx_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Matrix DensePoly::eval(const Matrix& at) const {
    if (!same_ctx(ctx_, at.ctx())) throw Error(Errc::CtxMismatch, "matrix over a different field");
    Matrix acc(ctx_, at.order());
    Matrix id = Matrix::identity(ctx_, at.order());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + id.scaled(*it);
    return acc;
}

} // namespace leonard
