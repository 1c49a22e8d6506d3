#include "leonard/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace leonard {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CompositeP: return "CompositeP";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NonMonicModulus: return "NonMonicModulus";
        case Errc::CtxMismatch: return "CtxMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ParseError: return "ParseError";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::Singular: return "Singular";
        case Errc::RepeatedEigenvalue: return "RepeatedEigenvalue";
        case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
        case Errc::NotRecurrent: return "NotRecurrent";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::InconsistentFit: return "InconsistentFit";
        case Errc::NoQSupplied: return "NoQSupplied";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::StructuralError: return "StructuralError";
        case Errc::PostValidationFailed: return "PostValidationFailed";
        case Errc::PA2Failure: return "PA2Failure";
        case Errc::PrereqFailure: return "PrereqFailure";
        case Errc::InvalidParameterArray: return "InvalidParameterArray";
        case Errc::CrossCheckFailed: return "CrossCheckFailed";
        case Errc::PatternViolation: return "PatternViolation";
        case Errc::NotLeonard: return "NotLeonard";
        case Errc::TDNonzero: return "TDNonzero";
        case Errc::PreconditionD: return "PreconditionD";
        case Errc::MethodPrecondition: return "MethodPrecondition";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::Inadmissible: return "Inadmissible";
        case Errc::ExhaustedSearch: return "ExhaustedSearch";
    }
    return "Unknown";
}

namespace {

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    for (mpz_class f = 2; f * f <= p; ++f) {
        if (p % f == 0) return false;
    }
    return true;
}

mpz_class mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
}

// GF(p)[x] helpers on coefficient vectors (constant term first, trailing
// zeros trimmed).

void trim(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<mpz_class> poly_mul_modp(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
    trim(out);
    return out;
}

// Remainder of a by monic-after-normalization b over GF(p).
std::vector<mpz_class> poly_rem_modp(std::vector<mpz_class> a, const std::vector<mpz_class>& b,
                                     const mpz_class& p) {
    trim(a);
    mpz_class lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
    while (a.size() >= b.size()) {
        mpz_class f = mod(a.back() * lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - f * b[i], p);
        trim(a);
    }
    return a;
}

// Extended Euclid over GF(p)[x]: returns u with u*a = gcd (mod m), and gcd.
void poly_ext_gcd_modp(std::vector<mpz_class> a, std::vector<mpz_class> m, const mpz_class& p,
                       std::vector<mpz_class>& u_out, std::vector<mpz_class>& gcd_out) {
    std::vector<mpz_class> r0 = std::move(m), r1 = std::move(a);
    std::vector<mpz_class> s0 = {}, s1 = {mpz_class(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<mpz_class> q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1,
                                 mpz_class(0));
        std::vector<mpz_class> rem = r0;
        mpz_class lead_inv;
        mpz_invert(lead_inv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        while (rem.size() >= r1.size()) {
            mpz_class f = mod(rem.back() * lead_inv, p);
            size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod(rem[shift + i] - f * r1[i], p);
            trim(rem);
        }
        trim(q);
        // (r0, r1) <- (r1, rem);  (s0, s1) <- (s1, s0 - q*s1)
        std::vector<mpz_class> qs = poly_mul_modp(q, s1, p);
        std::vector<mpz_class> s2(std::max(s0.size(), qs.size()), mpz_class(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod(s2[i] - qs[i], p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    u_out = std::move(s0);
    gcd_out = std::move(r0);
}

// Enumerate monic polynomials of the given degree over GF(p) to test
// divisibility; feasible for the small p, k this library targets.
bool is_irreducible_modp(const std::vector<mpz_class>& modulus, const mpz_class& p) {
    int k = static_cast<int>(modulus.size()) - 1;
    if (k < 1) return false;
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    for (int deg = 1; 2 * deg <= k; ++deg) {
        // candidates: x^deg + c_{deg-1} x^{deg-1} + ... + c_0
        std::vector<unsigned long> c(deg, 0);
        while (true) {
            std::vector<mpz_class> cand(deg + 1);
            for (int i = 0; i < deg; ++i) cand[i] = c[i];
            cand[deg] = 1;
            if (poly_rem_modp(modulus, cand, p).empty()) return false;
            int pos = 0;
            while (pos < deg && ++c[pos] == pl) c[pos++] = 0;
            if (pos == deg) break;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const FieldCtx> FieldCtx::wrap(FieldCtx&& ctx) {
    return std::shared_ptr<const FieldCtx>(new FieldCtx(std::move(ctx)));
}

std::shared_ptr<const FieldCtx> FieldCtx::rationals() {
    FieldCtx ctx;
    ctx.kind_ = Kind::Rationals;
    return wrap(std::move(ctx));
}

std::shared_ptr<const FieldCtx> FieldCtx::prime(const mpz_class& p) {
    if (!is_prime(p)) throw Error(Errc::CompositeP, p.get_str() + " is not prime");
    FieldCtx ctx;
    ctx.kind_ = Kind::Prime;
    ctx.p_ = p;
    ctx.degree_ = 1;
    return wrap(std::move(ctx));
}

std::shared_ptr<const FieldCtx> FieldCtx::ext(const mpz_class& p,
                                              const std::vector<mpz_class>& modulus) {
    if (!is_prime(p)) throw Error(Errc::CompositeP, p.get_str() + " is not prime");
    if (modulus.size() < 3)
        throw Error(Errc::ReducibleModulus, "extension degree must be at least 2");
    std::vector<mpz_class> m(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) m[i] = mod(modulus[i], p);
    if (m.back() != 1) throw Error(Errc::NonMonicModulus, "modulus must be monic");
    if (!is_irreducible_modp(m, p))
        throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + p.get_str() + ")");
    FieldCtx ctx;
    ctx.kind_ = Kind::Ext;
    ctx.p_ = p;
    ctx.degree_ = static_cast<int>(m.size()) - 1;
    ctx.modulus_ = std::move(m);
    return wrap(std::move(ctx));
}

std::shared_ptr<const FieldCtx> FieldCtx::from_descriptor(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) != 0)
        throw Error(Errc::ParseError, "unknown field descriptor '" + text + "'");
    std::string rest = text.substr(3);
    size_t colon = rest.find(':');
    try {
        if (colon == std::string::npos) return prime(mpz_class(rest));
        mpz_class p(rest.substr(0, colon));
        std::vector<mpz_class> coeffs;
        std::stringstream ss(rest.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.emplace_back(item);
        return ext(p, coeffs);
    } catch (const std::invalid_argument&) {
        throw Error(Errc::ParseError, "malformed field descriptor '" + text + "'");
    }
}

std::string FieldCtx::descriptor() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "GF:" + p_.get_str();
        case Kind::Ext: {
            std::string out = "GF:" + p_.get_str() + ":";
            for (size_t i = 0; i < modulus_.size(); ++i) {
                if (i) out += ",";
                out += modulus_[i].get_str();
            }
            return out;
        }
    }
    return "?";
}

bool FieldCtx::operator==(const FieldCtx& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && modulus_ == other.modulus_;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(long n) const { return from_int(mpz_class(n)); }

FieldElem FieldCtx::from_int(const mpz_class& n) const {
    FieldElem e;
    e.ctx_ = shared_from_this();
    switch (kind_) {
        case Kind::Rationals: e.rat_ = mpq_class(n); break;
        case Kind::Prime: e.coeffs_ = {mod(n, p_)}; break;
        case Kind::Ext:
            e.coeffs_.assign(degree_, mpz_class(0));
            e.coeffs_[0] = mod(n, p_);
            break;
    }
    return e;
}

FieldElem FieldCtx::from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (kind_ != Kind::Rationals)
        throw Error(Errc::CtxMismatch, "fractions exist only over the rationals");
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    FieldElem e;
    e.ctx_ = shared_from_this();
    e.rat_ = mpq_class(num, den);
    e.rat_.canonicalize();
    return e;
}

FieldElem FieldCtx::from_coeffs(const std::vector<mpz_class>& coeffs) const {
    if (kind_ != Kind::Ext)
        throw Error(Errc::CtxMismatch, "coefficient vectors exist only over extensions");
    if (coeffs.size() > static_cast<size_t>(degree_))
        throw Error(Errc::OutOfRange, "coefficient vector longer than the extension degree");
    FieldElem e;
    e.ctx_ = shared_from_this();
    e.coeffs_.assign(degree_, mpz_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i) e.coeffs_[i] = mod(coeffs[i], p_);
    return e;
}

FieldElem FieldCtx::parse(const std::string& text) const {
    auto fail = [&] { throw Error(Errc::ParseError, "cannot parse '" + text + "'"); };
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty()) fail();
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    switch (kind_) {
        case Kind::Rationals: {
            size_t slash = t.find('/');
            if (slash == std::string::npos) {
                if (!is_int(t)) fail();
                return from_int(mpz_class(t));
            }
            std::string num = t.substr(0, slash), den = t.substr(slash + 1);
            if (!is_int(num) || !is_int(den)) fail();
            return from_fraction(mpz_class(num), mpz_class(den));
        }
        case Kind::Prime: {
            if (!is_int(t)) fail();
            return from_int(mpz_class(t));
        }
        case Kind::Ext: {
            if (t.front() != '[' || t.back() != ']') fail();
            std::vector<mpz_class> coeffs;
            std::stringstream ss(t.substr(1, t.size() - 2));
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!is_int(item)) fail();
                coeffs.emplace_back(item);
            }
            if (coeffs.size() != static_cast<size_t>(degree_))
                throw Error(Errc::OutOfRange, "expected " + std::to_string(degree_) +
                                                  " coefficients in '" + text + "'");
            return from_coeffs(coeffs);
        }
    }
    fail();
    return FieldElem();
}

std::vector<FieldElem> FieldCtx::enumerate() const {
    if (kind_ == Kind::Rationals)
        throw Error(Errc::OutOfRange, "cannot enumerate the rationals");
    std::vector<FieldElem> out;
    std::vector<mpz_class> c(degree_, mpz_class(0));
    while (true) {
        out.push_back(kind_ == Kind::Prime ? from_int(c[0]) : from_coeffs(c));
        int pos = 0;
        while (pos < degree_) {
            ++c[pos];
            if (c[pos] < p_) break;
            c[pos++] = 0;
        }
        if (pos == degree_) break;
    }
    return out;
}

mpz_class FieldCtx::order() const {
    if (kind_ == Kind::Rationals) throw Error(Errc::OutOfRange, "the rationals are infinite");
    mpz_class o;
    mpz_pow_ui(o.get_mpz_t(), p_.get_mpz_t(), degree_);
    return o;
}

void FieldElem::require_same_ctx(const FieldElem& o) const {
    if (!valid() || !o.valid() || !same_ctx(ctx_, o.ctx_))
        throw Error(Errc::CtxMismatch, "operands live in different fields");
}

bool FieldElem::is_zero() const {
    if (ctx_->kind() == FieldCtx::Kind::Rationals) return rat_ == 0;
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElem::is_one() const {
    if (ctx_->kind() == FieldCtx::Kind::Rationals) return rat_ == 1;
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_ctx(o);
    FieldElem r(*this);
    if (ctx_->kind() == FieldCtx::Kind::Rationals) {
        r.rat_ = rat_ + o.rat_;
    } else {
        const mpz_class& p = ctx_->characteristic();
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    if (ctx_->kind() == FieldCtx::Kind::Rationals) {
        r.rat_ = -rat_;
    } else {
        const mpz_class& p = ctx_->characteristic();
        for (auto& c : r.coeffs_) c = (p - c) % p;
    }
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_ctx(o);
    FieldElem r(*this);
    switch (ctx_->kind()) {
        case FieldCtx::Kind::Rationals: r.rat_ = rat_ * o.rat_; break;
        case FieldCtx::Kind::Prime:
            r.coeffs_[0] = (coeffs_[0] * o.coeffs_[0]) % ctx_->characteristic();
            break;
        case FieldCtx::Kind::Ext: {
            const mpz_class& p = ctx_->characteristic();
            auto prod = poly_mul_modp(coeffs_, o.coeffs_, p);
            prod = poly_rem_modp(std::move(prod), ctx_->modulus(), p);
            r.coeffs_.assign(ctx_->degree(), mpz_class(0));
            for (size_t i = 0; i < prod.size(); ++i) r.coeffs_[i] = prod[i];
            break;
        }
    }
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "zero has no inverse");
    FieldElem r(*this);
    switch (ctx_->kind()) {
        case FieldCtx::Kind::Rationals: r.rat_ = 1 / rat_; break;
        case FieldCtx::Kind::Prime: {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), coeffs_[0].get_mpz_t(),
                       ctx_->characteristic().get_mpz_t());
            r.coeffs_[0] = inv;
            break;
        }
        case FieldCtx::Kind::Ext: {
            const mpz_class& p = ctx_->characteristic();
            std::vector<mpz_class> a = coeffs_;
            trim(a);
            std::vector<mpz_class> u, g;
            poly_ext_gcd_modp(a, ctx_->modulus(), p, u, g);
            // gcd is a nonzero constant; scale u by its inverse
            mpz_class ginv;
            mpz_invert(ginv.get_mpz_t(), g[0].get_mpz_t(), p.get_mpz_t());
            u = poly_rem_modp(std::move(u), ctx_->modulus(), p);
            r.coeffs_.assign(ctx_->degree(), mpz_class(0));
            for (size_t i = 0; i < u.size(); ++i) r.coeffs_[i] = mod(u[i] * ginv, p);
            break;
        }
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc = ctx_->one();
    FieldElem base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!same_ctx(ctx_, o.ctx_)) return false;
    if (ctx_->kind() == FieldCtx::Kind::Rationals) return rat_ == o.rat_;
    return coeffs_ == o.coeffs_;
}

std::string FieldElem::str() const {
    switch (ctx_->kind()) {
        case FieldCtx::Kind::Rationals: return rat_.get_str();
        case FieldCtx::Kind::Prime: return coeffs_[0].get_str();
        case FieldCtx::Kind::Ext: {
            std::string out = "[";
            for (size_t i = 0; i < coeffs_.size(); ++i) {
                if (i) out += ",";
                out += coeffs_[i].get_str();
            }
            return out + "]";
        }
    }
    return "?";
}

const mpq_class& FieldElem::rational() const {
    if (ctx_->kind() != FieldCtx::Kind::Rationals)
        throw Error(Errc::CtxMismatch, "not a rational element");
    return rat_;
}

const std::vector<mpz_class>& FieldElem::coeffs() const {
    if (ctx_->kind() == FieldCtx::Kind::Rationals)
        throw Error(Errc::CtxMismatch, "rational elements carry no coefficient vector");
    return coeffs_;
}

FieldElem FieldElem::embed(const FieldCtxPtr& into) const {
    if (same_ctx(ctx_, into)) return *this;
    if (ctx_->kind() == FieldCtx::Kind::Prime && into->kind() == FieldCtx::Kind::Ext &&
        ctx_->characteristic() == into->characteristic()) {
        return into->from_int(coeffs_[0]);
    }
    throw Error(Errc::CtxMismatch,
                "no embedding from " + ctx_->descriptor() + " into " + into->descriptor());
}

} // namespace leonard
