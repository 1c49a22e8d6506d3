#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "leonard/errors.hpp"

namespace leonard {

class FieldElem;

/// Exact coefficient field: the rationals, a prime field GF(p), or an
/// extension GF(p^k) presented as GF(p)[x] modulo a monic irreducible
/// polynomial.  Immutable; share via FieldCtxPtr.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    enum class Kind { Rationals, Prime, Ext };

    static std::shared_ptr<const FieldCtx> rationals();
    static std::shared_ptr<const FieldCtx> prime(const mpz_class& p);
    /// modulus: coefficients c0..ck, constant term first, ck must be 1.
    /// Irreducibility over GF(p) is verified by exhaustive trial division.
    static std::shared_ptr<const FieldCtx> ext(const mpz_class& p,
                                               const std::vector<mpz_class>& modulus);

    /// Parses "Q", "GF:p" or "GF:p:c0,c1,...,1".
    static std::shared_ptr<const FieldCtx> from_descriptor(const std::string& text);
    std::string descriptor() const;

    Kind kind() const { return kind_; }
    const mpz_class& characteristic() const { return p_; }
    /// Extension degree k; 1 for GF(p), 0 for the rationals.
    int degree() const { return degree_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    bool operator==(const FieldCtx& other) const;

    FieldElem zero() const;
    FieldElem one() const;
    /// Image of an integer under the canonical ring map Z -> F.
    FieldElem from_int(long n) const;
    FieldElem from_int(const mpz_class& n) const;
    /// Rationals only.
    FieldElem from_fraction(const mpz_class& num, const mpz_class& den) const;
    /// GF(p^k): element with the given coefficient vector (reduced mod p).
    FieldElem from_coeffs(const std::vector<mpz_class>& coeffs) const;

    FieldElem parse(const std::string& text) const;

    /// All field elements, smallest representation first.  Finite fields only.
    std::vector<FieldElem> enumerate() const;
    /// p^k; finite fields only.
    mpz_class order() const;

private:
    FieldCtx() = default;

    Kind kind_ = Kind::Rationals;
    mpz_class p_ = 0; // characteristic; 0 for the rationals
    int degree_ = 0;
    std::vector<mpz_class> modulus_; // c0..ck, monic

    friend class FieldElem;
    static std::shared_ptr<const FieldCtx> wrap(FieldCtx&& ctx);
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of a FieldCtx in canonical form: reduced fraction with positive
/// denominator over Q, residue in [0,p) over GF(p), coefficient vector of
/// length k (entries in [0,p)) over GF(p^k).  Equality is representation
/// equality.  Immutable value type.
class FieldElem {
public:
    FieldElem() = default; // invalid until assigned; ctx() is null

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    /// Exact division; throws DivisionByZero.
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    /// Integer power, negative exponents via the inverse.
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

    /// Rationals payload; valid only on a Rationals ctx.
    const mpq_class& rational() const;
    /// Residue / coefficient payload; valid only on finite-field ctxs.
    const std::vector<mpz_class>& coeffs() const;

    /// Lift into an extension of the same characteristic (or same ctx).
    FieldElem embed(const FieldCtxPtr& into) const;

private:
    friend class FieldCtx;
    FieldCtxPtr ctx_;
    mpq_class rat_;
    std::vector<mpz_class> coeffs_;

    void require_same_ctx(const FieldElem& o) const;
};

inline bool same_ctx(const FieldCtxPtr& a, const FieldCtxPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace leonard
