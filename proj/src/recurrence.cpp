#include "leonard/recurrence.hpp"

#include "leonard/matrix.hpp"

namespace leonard {

namespace {

int diameter(const std::vector<FieldElem>& seq) {
    if (seq.empty()) throw Error(Errc::StructuralError, "empty sequence");
    return static_cast<int>(seq.size()) - 1;
}

bool char_is_two(const FieldCtxPtr& ctx) { return ctx->characteristic() == 2; }

// i(i-1)/2 with the characteristic-2 reading: 0 for i = 0,1 (mod 4) and
// 1 for i = 2,3 (mod 4).
FieldElem half_binomial(const FieldCtxPtr& ctx, long i) {
    if (char_is_two(ctx)) return ctx->from_int((i % 4 == 2 || i % 4 == 3) ? 1 : 0);
    return ctx->from_int(mpz_class(i) * (i - 1) / 2);
}

FieldElem sign_pow(const FieldCtxPtr& ctx, long i) { return ctx->from_int(i % 2 == 0 ? 1 : -1); }

ClosedFormCase pick_case(const FieldCtxPtr& ctx, const FieldElem& beta) {
    if (char_is_two(ctx)) {
        if (beta.is_zero()) return ClosedFormCase::Beta0Char2;
        return ClosedFormCase::Generic;
    }
    if (beta == ctx->from_int(2)) return ClosedFormCase::Beta2;
    if (beta == ctx->from_int(-2)) return ClosedFormCase::BetaMinus2;
    return ClosedFormCase::Generic;
}

// Basis functions of the closed form: theta_i = a1*g0(i) + a2*g1(i) + a3*g2(i).
std::vector<FieldElem> basis_at(ClosedFormCase kind, const FieldCtxPtr& ctx,
                                const std::optional<FieldElem>& q, long i) {
    switch (kind) {
        case ClosedFormCase::Generic: return {ctx->one(), q->pow(i), q->pow(-i)};
        case ClosedFormCase::Beta2:
        case ClosedFormCase::Beta0Char2:
            return {ctx->one(), ctx->from_int(i), half_binomial(ctx, i)};
        case ClosedFormCase::BetaMinus2:
            return {ctx->one(), sign_pow(ctx, i), ctx->from_int(i) * sign_pow(ctx, i)};
    }
    throw Error(Errc::VerificationFailed, "unreachable");
}

} // namespace

RecurrenceClass detect_beta(const std::vector<FieldElem>& seq) {
    int d = diameter(seq);
    RecurrenceClass out;
    if (d <= 2) {
        out.unconstrained = true;
        return out;
    }
    std::optional<FieldElem> common;
    for (int i = 2; i <= d - 1; ++i) {
        FieldElem den = seq[i - 1] - seq[i];
        if (den.is_zero())
            throw Error(Errc::ZeroDenominator,
                        "consecutive entries equal at index " + std::to_string(i));
        FieldElem ratio = (seq[i - 2] - seq[i + 1]) / den;
        if (!common) {
            common = ratio;
        } else if (!(*common == ratio)) {
            throw Error(Errc::NotRecurrent, "ratio changes at index " + std::to_string(i));
        }
    }
    out.beta = *common - seq[0].ctx()->one();
    return out;
}

bool classify_recurrence(const std::vector<FieldElem>& seq, RecurrenceLevel level,
                         const FieldElem& beta, const FieldElem* gamma,
                         const FieldElem* varrho) {
    int d = diameter(seq);
    auto one = seq[0].ctx()->one();
    switch (level) {
        case RecurrenceLevel::Beta: {
            FieldElem b1 = beta + one;
            for (int i = 2; i <= d - 1; ++i) {
                FieldElem v = seq[i - 2] - b1 * seq[i - 1] + b1 * seq[i] - seq[i + 1];
                if (!v.is_zero()) return false;
            }
            return true;
        }
        case RecurrenceLevel::BetaGamma: {
            if (!gamma) throw Error(Errc::StructuralError, "gamma required for this level");
            for (int i = 1; i <= d - 1; ++i) {
                FieldElem v = seq[i - 1] - beta * seq[i] + seq[i + 1];
                if (!(v == *gamma)) return false;
            }
            return true;
        }
        case RecurrenceLevel::BetaGammaRho: {
            if (!gamma || !varrho)
                throw Error(Errc::StructuralError, "gamma and varrho required for this level");
            for (int i = 1; i <= d; ++i) {
                FieldElem v = seq[i - 1] * seq[i - 1] - beta * seq[i - 1] * seq[i] +
                              seq[i] * seq[i] - *gamma * (seq[i - 1] + seq[i]);
                if (!(v == *varrho)) return false;
            }
            return true;
        }
    }
    return false;
}

std::pair<FieldElem, FieldElem> fit_gamma_rho(const std::vector<FieldElem>& seq,
                                              const FieldElem& beta) {
    int d = diameter(seq);
    if (d < 2) throw Error(Errc::StructuralError, "need at least three entries to fit gamma");
    FieldElem gamma = seq[0] - beta * seq[1] + seq[2];
    FieldElem varrho = seq[0] * seq[0] - beta * seq[0] * seq[1] + seq[1] * seq[1] -
                       gamma * (seq[0] + seq[1]);
    if (!classify_recurrence(seq, RecurrenceLevel::BetaGamma, beta, &gamma) ||
        !classify_recurrence(seq, RecurrenceLevel::BetaGammaRho, beta, &gamma, &varrho))
        throw Error(Errc::InconsistentFit, "sequence is not (beta,gamma,varrho)-recurrent");
    return {gamma, varrho};
}

ClosedFormFit closed_form_fit(const std::vector<FieldElem>& seq, const FieldElem& beta,
                              const std::optional<FieldElem>& q) {
    int d = diameter(seq);
    const FieldCtxPtr& base = seq[0].ctx();
    ClosedFormFit fit;
    fit.kind = pick_case(base, beta);
    fit.ext_ctx = base;

    std::optional<FieldElem> qe;
    if (fit.kind == ClosedFormCase::Generic) {
        if (!q) throw Error(Errc::NoQSupplied, "the generic case needs q with q + 1/q = beta");
        fit.ext_ctx = q->ctx();
        qe = *q;
        FieldElem beta_e = beta.embed(fit.ext_ctx);
        if (!(*qe + qe->inverse() == beta_e))
            throw Error(Errc::VerificationFailed, "q + 1/q differs from beta");
        fit.q = qe;
    }

    auto lift = [&](const FieldElem& x) { return x.embed(fit.ext_ctx); };

    int unknowns = std::min(3, d + 1);
    Matrix system(fit.ext_ctx, unknowns);
    std::vector<FieldElem> rhs;
    for (int i = 0; i < unknowns; ++i) {
        auto row = basis_at(fit.kind, fit.ext_ctx, qe, i);
        for (int j = 0; j < unknowns; ++j) system.set(i, j, row[j]);
        rhs.push_back(lift(seq[i]));
    }
    auto sol = system.solve(rhs);
    fit.alpha.assign(3, fit.ext_ctx->zero());
    for (int j = 0; j < unknowns; ++j) fit.alpha[j] = sol[j];

    for (int i = 0; i <= d; ++i) {
        auto row = basis_at(fit.kind, fit.ext_ctx, qe, i);
        FieldElem v = fit.alpha[0] * row[0] + fit.alpha[1] * row[1] + fit.alpha[2] * row[2];
        if (!(v == lift(seq[i])))
            throw Error(Errc::VerificationFailed,
                        "closed form misses the sequence at index " + std::to_string(i));
    }
    return fit;
}

std::vector<FieldElem> vartheta_sums(const std::vector<FieldElem>& theta) {
    int d = diameter(theta);
    if (d < 1) throw Error(Errc::StructuralError, "need d >= 1");
    FieldElem den = theta[0] - theta[d];
    if (den.is_zero()) throw Error(Errc::ZeroDenominator, "theta_0 equals theta_d");
    FieldElem den_inv = den.inverse();
    const FieldCtxPtr& ctx = theta[0].ctx();
    std::vector<FieldElem> out;
    out.reserve(d + 2);
    FieldElem acc = ctx->zero();
    out.push_back(acc);
    for (int i = 1; i <= d + 1; ++i) {
        acc = acc + (theta[i - 1] - theta[d - i + 1]) * den_inv;
        out.push_back(acc);
    }
    bool ok = out[0].is_zero() && out[1].is_one() && out[d].is_one() && out[d + 1].is_zero();
    for (int i = 0; ok && i <= d + 1; ++i) ok = out[i] == out[d - i + 1];
    if (!ok) throw Error(Errc::VerificationFailed, "partial-sum boundary identities broken");
    return out;
}

bool vartheta_closed_check(const std::vector<FieldElem>& theta, const FieldElem& beta,
                           const std::optional<FieldElem>& q) {
    int d = diameter(theta);
    if (d < 3) throw Error(Errc::PreconditionD, "closed forms are stated for d >= 3");
    const FieldCtxPtr& ctx = theta[0].ctx();
    auto direct = vartheta_sums(theta);
    ClosedFormCase kind = pick_case(ctx, beta);

    if (kind == ClosedFormCase::Generic) {
        if (!q) throw Error(Errc::NoQSupplied, "the generic case needs q");
        const FieldCtxPtr& ext = q->ctx();
        FieldElem qe = *q;
        FieldElem scale = ((qe - ext->one()) * (qe.pow(d) - ext->one())).inverse();
        for (int i = 0; i <= d + 1; ++i) {
            FieldElem closed = (qe.pow(i) - ext->one()) * (qe.pow(d - i + 1) - ext->one()) * scale;
            if (!(closed == direct[i].embed(ext))) return false;
        }
        return true;
    }

    for (int i = 0; i <= d + 1; ++i) {
        FieldElem closed = ctx->zero();
        switch (kind) {
            case ClosedFormCase::Beta2:
                closed = ctx->from_int(i) * ctx->from_int(d - i + 1) / ctx->from_int(d);
                break;
            case ClosedFormCase::BetaMinus2:
                if (d % 2 == 1) {
                    closed = ctx->from_int(i % 2 == 0 ? 0 : 1);
                } else {
                    closed = (i % 2 == 0 ? ctx->from_int(i) : ctx->from_int(d - i + 1)) /
                             ctx->from_int(d);
                }
                break;
            case ClosedFormCase::Beta0Char2:
                if (d != 3)
                    throw Error(Errc::PreconditionD, "beta = 0 in characteristic 2 forces d = 3");
                closed = ctx->from_int(i % 2 == 0 ? 0 : 1);
                break;
            case ClosedFormCase::Generic: break;
        }
        if (!(closed == direct[i])) return false;
    }
    return true;
}

std::vector<FieldElem> psi_products(const std::vector<FieldElem>& theta) {
    int d = diameter(theta);
    std::vector<FieldElem> out;
    for (int i = 1; i <= d - 1; ++i) {
        FieldElem prod = theta[0].ctx()->one();
        for (int h = 0; h <= i - 2; ++h) {
            FieldElem den = theta[i + 1] - theta[h];
            if (den.is_zero())
                throw Error(Errc::ZeroDenominator, "theta_" + std::to_string(i + 1) +
                                                       " equals theta_" + std::to_string(h));
            prod = prod * (theta[i] - theta[h + 1]) / den;
        }
        out.push_back(prod);
    }
    if (!out.empty() && !out[0].is_one())
        throw Error(Errc::VerificationFailed, "psi_1 must be 1");
    return out;
}

bool psi_closed_check(const std::vector<FieldElem>& theta, const FieldElem& beta,
                      const std::optional<FieldElem>& q) {
    int d = diameter(theta);
    if (d < 3) throw Error(Errc::PreconditionD, "closed forms are stated for d >= 3");
    const FieldCtxPtr& ctx = theta[0].ctx();
    auto direct = psi_products(theta);
    ClosedFormCase kind = pick_case(ctx, beta);

    for (int i = 1; i <= d - 1; ++i) {
        const FieldElem& got = direct[i - 1];
        switch (kind) {
            case ClosedFormCase::Generic: {
                if (!q) throw Error(Errc::NoQSupplied, "the generic case needs q");
                const FieldCtxPtr& ext = q->ctx();
                FieldElem qe = *q;
                FieldElem closed = qe.pow(i - 1) * (qe - ext->one()) *
                                   (qe.pow(2) - ext->one()) /
                                   ((qe.pow(i) - ext->one()) * (qe.pow(i + 1) - ext->one()));
                if (!(closed == got.embed(ext))) return false;
                break;
            }
            case ClosedFormCase::Beta2:
                if (!(got == ctx->from_int(2) / (ctx->from_int(i) * ctx->from_int(i + 1))))
                    return false;
                break;
            case ClosedFormCase::BetaMinus2: {
                FieldElem closed = i % 2 == 0 ? ctx->from_int(-2) / ctx->from_int(i)
                                              : ctx->from_int(2) / ctx->from_int(i + 1);
                if (!(closed == got)) return false;
                break;
            }
            case ClosedFormCase::Beta0Char2:
                if (!got.is_one()) return false;
                break;
        }
    }
    return true;
}

FieldElem p_eval(const FieldElem& beta, const FieldElem& gamma, const FieldElem& varrho,
                 const FieldElem& x, const FieldElem& y) {
    return x * x - beta * x * y + y * y - gamma * (x + y) - varrho;
}

} // namespace leonard
