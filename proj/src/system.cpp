#include "leonard/system.hpp"

#include <sstream>

#include "leonard/recurrence.hpp"

namespace leonard {

std::string VerificationReport::summary() const {
    if (failures.empty()) return "ok";
    std::ostringstream out;
    for (size_t k = 0; k < failures.size(); ++k) {
        if (k) out << "; ";
        out << failures[k].condition << ": " << failures[k].detail;
    }
    return out.str();
}

Matrix lower_bidiagonal(const std::vector<FieldElem>& diag) {
    Matrix m = Matrix::diagonal(diag);
    for (size_t i = 1; i < diag.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(i) - 1, diag[0].ctx()->one());
    return m;
}

Matrix upper_bidiagonal(const std::vector<FieldElem>& diag,
                        const std::vector<FieldElem>& super) {
    if (super.size() + 1 != diag.size())
        throw Error(Errc::OrderMismatch, "superdiagonal must have order-1 entries");
    Matrix m = Matrix::diagonal(diag);
    for (size_t i = 0; i < super.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(i) + 1, super[i]);
    return m;
}

Realization build_split(const ParameterArray& pa) {
    auto report = validate(pa);
    if (!report.valid()) throw Error(Errc::InvalidParameterArray, report.summary());
    Realization real;
    real.ctx = pa.ctx;
    real.d = pa.d;
    real.A = lower_bidiagonal(pa.theta);
    real.A_star = upper_bidiagonal(pa.theta_star, pa.varphi);
    real.theta = pa.theta;
    real.theta_star = pa.theta_star;
    real.E = primitive_idempotents(real.A, real.theta);
    real.E_star = primitive_idempotents(real.A_star, real.theta_star);
    real.source = pa;
    return real;
}

Realization make_realization(const Matrix& a, const Matrix& a_star,
                             const std::vector<FieldElem>& theta,
                             const std::vector<FieldElem>& theta_star) {
    Realization real;
    real.ctx = a.ctx();
    real.d = a.order() - 1;
    real.A = a;
    real.A_star = a_star;
    real.theta = theta;
    real.theta_star = theta_star;
    real.E = primitive_idempotents(a, theta);
    real.E_star = primitive_idempotents(a_star, theta_star);
    return real;
}

Realization relative(const Realization& real, D4Generator g) {
    Realization out = real;
    auto rev_m = [](std::vector<Matrix>& v) { std::reverse(v.begin(), v.end()); };
    auto rev_e = [](std::vector<FieldElem>& v) { std::reverse(v.begin(), v.end()); };
    switch (g) {
        case D4Generator::Down:
            rev_m(out.E);
            rev_e(out.theta);
            break;
        case D4Generator::down:
            rev_m(out.E_star);
            rev_e(out.theta_star);
            break;
        case D4Generator::star:
            std::swap(out.A, out.A_star);
            std::swap(out.E, out.E_star);
            std::swap(out.theta, out.theta_star);
            break;
    }
    if (real.source) {
        D4Element e;
        e.append(g);
        out.source = transform_d4(*real.source, e);
    }
    return out;
}

Matrix rep_in_basis(const Matrix& x, const Matrix& s) { return s.inverse() * x * s; }

std::vector<FieldElem> canonical_vector(const Matrix& projector) {
    const int n = projector.order();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!projector.at(i, j).is_zero()) {
                auto col = column(projector, j);
                FieldElem lead_inv = projector.at(i, j).inverse();
                for (auto& e : col) e = e * lead_inv;
                return col;
            }
        }
    }
    throw Error(Errc::Singular, "projector is zero");
}

namespace {

// Support pattern of the products F_i X G_j: zero iff |i-j| > 1, nonzero iff
// |i-j| = 1; failures are reported with (i,j) witnesses.
void check_pattern(const std::vector<Matrix>& f, const Matrix& x, const std::vector<Matrix>& g,
                   const std::string& name, VerificationReport& report) {
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (std::abs(i - j) == 0) continue;
            Matrix prod = f[i] * x * g[j];
            if (std::abs(i - j) > 1 && !prod.is_zero())
                report.failures.push_back(
                    {name, i, "expected zero at (" + std::to_string(i) + "," + std::to_string(j) + ")"});
            if (std::abs(i - j) == 1 && prod.is_zero())
                report.failures.push_back(
                    {name, i,
                     "expected nonzero at (" + std::to_string(i) + "," + std::to_string(j) + ")"});
        }
    }
}

void check_idempotent_family(const Matrix& m, const std::vector<Matrix>& es,
                             const std::vector<FieldElem>& eigs, const std::string& name,
                             VerificationReport& report) {
    const int n = m.order();
    Matrix sum(m.ctx(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix prod = es[i] * es[j];
            bool ok = (i == j) ? prod == es[i] : prod.is_zero();
            if (!ok)
                report.failures.push_back({name, i, "projector product fails at (" +
                                                        std::to_string(i) + "," +
                                                        std::to_string(j) + ")"});
        }
        if (!(m * es[i] == es[i].scaled(eigs[i])) || !(es[i] * m == es[i].scaled(eigs[i])))
            report.failures.push_back({name, i, "eigen relation fails at " + std::to_string(i)});
        sum = sum + es[i];
    }
    if (!(sum == Matrix::identity(m.ctx(), n)))
        report.failures.push_back({name, -1, "projectors do not sum to the identity"});
}

} // namespace

VerificationReport verify_leonard(const Realization& real) {
    VerificationReport report;
    const int d = real.d;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            if (real.theta[i] == real.theta[j])
                report.failures.push_back({"multiplicity-free", i, "theta repeats"});
            if (real.theta_star[i] == real.theta_star[j])
                report.failures.push_back({"multiplicity-free", i, "theta_star repeats"});
        }
    check_idempotent_family(real.A, real.E, real.theta, "idempotents", report);
    check_idempotent_family(real.A_star, real.E_star, real.theta_star, "dual-idempotents", report);
    check_pattern(real.E_star, real.A, real.E_star, "A-on-dual-eigenbasis", report);
    check_pattern(real.E, real.A_star, real.E, "Astar-on-eigenbasis", report);
    return report;
}

std::array<bool, 4> four_conditions(const Realization& real) {
    const int d = real.d;
    auto one_sided = [&](const std::vector<Matrix>& f, const Matrix& x,
                         const std::vector<Matrix>& g, bool lower) {
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                int delta = lower ? i - j : j - i;
                if (delta < 1) continue;
                Matrix prod = f[i] * x * g[j];
                if (delta > 1 && !prod.is_zero()) return false;
                if (delta == 1 && prod.is_zero()) return false;
            }
        return true;
    };
    return {one_sided(real.E_star, real.A, real.E_star, true),
            one_sided(real.E_star, real.A, real.E_star, false),
            one_sided(real.E, real.A_star, real.E, true),
            one_sided(real.E, real.A_star, real.E, false)};
}

DiagonalData diagonal_sequences(const Realization& real) {
    const int d = real.d;
    DiagonalData out;
    for (int i = 0; i <= d; ++i) {
        out.a.push_back((real.A * real.E_star[i]).trace());
        out.a_star.push_back((real.A_star * real.E[i]).trace());
    }
    // matrix-exact cross-check
    for (int i = 0; i <= d; ++i) {
        if (!(real.E_star[i] * real.A * real.E_star[i] == real.E_star[i].scaled(out.a[i])))
            throw Error(Errc::CrossCheckFailed, "sandwich identity fails for a_" + std::to_string(i));
        if (!(real.E[i] * real.A_star * real.E[i] == real.E[i].scaled(out.a_star[i])))
            throw Error(Errc::CrossCheckFailed,
                        "sandwich identity fails for a*_" + std::to_string(i));
    }
    FieldElem sum_a = real.ctx->zero(), sum_t = real.ctx->zero();
    FieldElem sum_as = real.ctx->zero(), sum_ts = real.ctx->zero();
    for (int i = 0; i <= d; ++i) {
        sum_a = sum_a + out.a[i];
        sum_t = sum_t + real.theta[i];
        sum_as = sum_as + out.a_star[i];
        sum_ts = sum_ts + real.theta_star[i];
    }
    if (!(sum_a == sum_t) || !(sum_as == sum_ts))
        throw Error(Errc::CrossCheckFailed, "diagonal sums differ from eigenvalue sums");

    if (real.source && d >= 1) {
        const auto& pa = *real.source;
        auto expect = [&](int i, const std::vector<FieldElem>& th,
                          const std::vector<FieldElem>& ths, const std::vector<FieldElem>& f) {
            // th carries the additive term, ths the denominators
            FieldElem v = th[i];
            if (i >= 1) v = v + f[i - 1] / (ths[i] - ths[i - 1]);
            if (i <= d - 1) v = v + f[i] / (ths[i] - ths[i + 1]);
            return v;
        };
        for (int i = 0; i <= d; ++i) {
            if (!(out.a[i] == expect(i, pa.theta, pa.theta_star, pa.varphi)))
                throw Error(Errc::CrossCheckFailed, "first-split formula for a_" + std::to_string(i));
            if (!(out.a_star[i] == expect(i, pa.theta_star, pa.theta, pa.varphi)))
                throw Error(Errc::CrossCheckFailed,
                            "first-split formula for a*_" + std::to_string(i));
        }
        // second-split versions
        std::vector<FieldElem> theta_rev(pa.theta.rbegin(), pa.theta.rend());
        for (int i = 0; i <= d; ++i) {
            if (!(out.a[i] == expect(i, theta_rev, pa.theta_star, pa.phi)))
                throw Error(Errc::CrossCheckFailed, "second-split formula for a_" + std::to_string(i));
        }
        std::vector<FieldElem> phi_rev(pa.phi.rbegin(), pa.phi.rend());
        std::vector<FieldElem> ts_rev(pa.theta_star.rbegin(), pa.theta_star.rend());
        for (int i = 0; i <= d; ++i) {
            if (!(out.a_star[i] == expect(i, ts_rev, pa.theta, phi_rev)))
                throw Error(Errc::CrossCheckFailed,
                            "second-split formula for a*_" + std::to_string(i));
        }
    }
    return out;
}

bool is_normalizing(const Realization& real, NormalizingWhich which) {
    const int d = real.d;
    const auto& outer = which == NormalizingWhich::E_star_0 ? real.E : real.E_star;
    const auto& inner0 = which == NormalizingWhich::E_star_0 ? real.E_star[0] : real.E[0];
    const Matrix& op = which == NormalizingWhich::E_star_0 ? real.A : real.A_star;
    bool direct = true;
    for (int i = 0; i <= d && direct; ++i) direct = !(outer[i] * inner0).is_zero();

    // Krylov cross-check: {op^i xi} spans the whole space iff normalizing.
    auto xi = canonical_vector(inner0);
    std::vector<std::vector<FieldElem>> cols{xi};
    for (int i = 1; i <= d; ++i) cols.push_back(op.apply(cols.back()));
    bool krylov = from_columns(real.ctx, cols).rank() == d + 1;
    if (direct != krylov)
        throw Error(Errc::CrossCheckFailed, "product test and Krylov test disagree");
    return direct;
}

DaggerConjugator dagger_conjugator(const Realization& real) {
    const int d = real.d;
    std::vector<std::vector<FieldElem>> cols;
    for (int i = 0; i <= d; ++i) cols.push_back(canonical_vector(real.E_star[i]));
    Matrix s = from_columns(real.ctx, cols);
    Matrix b = rep_in_basis(real.A, s);
    if (b.tridiagonal_class() != TridiagonalClass::IrreducibleTridiagonal)
        throw Error(Errc::PatternViolation,
                    "A is not irreducible tridiagonal on the dual eigenbasis");

    Matrix k(real.ctx, d + 1);
    FieldElem acc = real.ctx->one();
    k.set(0, 0, acc);
    for (int i = 1; i <= d; ++i) {
        acc = acc * b.at(i - 1, i) / b.at(i, i - 1);
        k.set(i, i, acc);
    }

    Matrix k_inv = k.inverse();
    auto conj_t = [&](const Matrix& x) { return k_inv * x.transpose() * k; };
    if (!(conj_t(b) == b))
        throw Error(Errc::CrossCheckFailed, "conjugator does not fix the representation of A");
    Matrix bs = rep_in_basis(real.A_star, s);
    if (!(conj_t(bs) == bs))
        throw Error(Errc::CrossCheckFailed, "conjugator does not fix the representation of A*");
    for (int i = 0; i <= d; ++i) {
        Matrix re = rep_in_basis(real.E[i], s);
        Matrix rs = rep_in_basis(real.E_star[i], s);
        if (!(conj_t(re) == re) || !(conj_t(rs) == rs))
            throw Error(Errc::CrossCheckFailed,
                        "conjugator moves a represented idempotent at " + std::to_string(i));
    }
    return {k, s};
}

SplitDecomposition split_decomposition(const Realization& real) {
    SplitDecomposition out;
    out.xi = canonical_vector(real.E_star[0]);
    out.basis.push_back(out.xi);
    Matrix id = Matrix::identity(real.ctx, real.d + 1);
    for (int i = 0; i + 1 <= real.d; ++i) {
        Matrix shifted = real.A - id.scaled(real.theta[i]);
        out.basis.push_back(shifted.apply(out.basis.back()));
    }
    return out;
}

namespace {

// A* in the basis {p_i(A) xi} where p_{i+1} = (lambda - roots[i]) p_i; the
// result must be upper bidiagonal with the dual eigenvalues on the diagonal.
std::vector<FieldElem> read_superdiagonal(const Realization& real,
                                          const std::vector<FieldElem>& roots,
                                          const std::vector<FieldElem>& expected_diag) {
    const int d = real.d;
    Matrix id = Matrix::identity(real.ctx, d + 1);
    std::vector<std::vector<FieldElem>> cols{canonical_vector(real.E_star[0])};
    for (int i = 0; i + 1 <= d; ++i)
        cols.push_back((real.A - id.scaled(roots[i])).apply(cols.back()));
    Matrix u = from_columns(real.ctx, cols);
    Matrix rep = rep_in_basis(real.A_star, u);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            bool on_band = (j == i) || (j == i + 1);
            if (!on_band && !rep.at(i, j).is_zero())
                throw Error(Errc::CrossCheckFailed, "A* is not upper bidiagonal in a split basis");
            if (j == i && !(rep.at(i, j) == expected_diag[i]))
                throw Error(Errc::CrossCheckFailed, "split diagonal misses the dual eigenvalues");
        }
    std::vector<FieldElem> super;
    for (int i = 1; i <= d; ++i) super.push_back(rep.at(i - 1, i));
    return super;
}

} // namespace

ParameterArray extract_parray(const Realization& real) {
    auto report = verify_leonard(real);
    if (!report.ok()) throw Error(Errc::NotLeonard, report.summary());

    ParameterArray pa;
    pa.ctx = real.ctx;
    pa.d = real.d;
    pa.theta = real.theta;
    pa.theta_star = real.theta_star;
    if (real.d == 0) {
        require_valid(pa);
        return pa;
    }
    pa.varphi = read_superdiagonal(real, real.theta, real.theta_star);
    std::vector<FieldElem> theta_rev(real.theta.rbegin(), real.theta.rend());
    pa.phi = read_superdiagonal(real, theta_rev, real.theta_star);
    auto check = validate(pa);
    if (!check.valid()) throw Error(Errc::PostValidationFailed, check.summary());
    return pa;
}

Matrix td_commutator(const Matrix& a, const Matrix& a_star, const FieldElem& beta,
                     const FieldElem& gamma, const FieldElem& varrho) {
    Matrix a2 = a * a;
    Matrix inner = a2 * a_star - (a * a_star * a).scaled(beta) + a_star * a2 -
                   (a * a_star + a_star * a).scaled(gamma) - a_star.scaled(varrho);
    return commutator(a, inner);
}

TDCoefficients td_coefficients(const Realization& real) {
    const int d = real.d;
    const FieldCtxPtr& ctx = real.ctx;
    FieldElem beta = ctx->zero();
    if (d >= 3) {
        auto rc = detect_beta(real.theta);
        auto rcs = detect_beta(real.theta_star);
        if (!rc.beta || !rcs.beta || !(*rc.beta == *rcs.beta))
            throw Error(Errc::CrossCheckFailed, "eigenvalue and dual ratios disagree");
        beta = *rc.beta;
    } else {
        // free parameter below the uniqueness threshold; fixed deterministically
        beta = ctx->characteristic() == 2 ? ctx->zero() : ctx->from_int(2);
    }
    auto derive = [&](const std::vector<FieldElem>& th) {
        FieldElem gamma = ctx->zero();
        if (d >= 2) gamma = th[0] - beta * th[1] + th[2];
        FieldElem varrho = ctx->zero();
        if (d >= 1)
            varrho = th[0] * th[0] - beta * th[0] * th[1] + th[1] * th[1] - gamma * (th[0] + th[1]);
        return std::make_pair(gamma, varrho);
    };
    auto [gamma, varrho] = derive(real.theta);
    auto [gamma_star, varrho_star] = derive(real.theta_star);
    TDCoefficients td{beta, gamma, gamma_star, varrho, varrho_star};
    if (!td_commutator(real.A, real.A_star, beta, gamma, varrho).is_zero())
        throw Error(Errc::TDNonzero, "first relation does not vanish");
    if (!td_commutator(real.A_star, real.A, beta, gamma_star, varrho_star).is_zero())
        throw Error(Errc::TDNonzero, "second relation does not vanish");
    return td;
}

bool wraparound_check(const Realization& real) {
    const int d = real.d;
    if (d < 2) throw Error(Errc::PreconditionD, "wrap-around needs d >= 2");
    ParameterArray pa = real.source ? *real.source : extract_parray(real);
    auto vt = vartheta_of(pa);
    FieldElem gap = vt[1] - vt[d];

    Matrix lhs(real.ctx, d + 1);
    for (int i = 0; i <= d - 2; ++i)
        lhs = lhs + (real.E[d] * real.A_star * real.E[i] * real.E_star[0])
                        .scaled(real.theta[i] - real.theta[d - 1]);
    Matrix rhs = (real.E[d] * real.E_star[0]).scaled(gap);
    if (!(lhs == rhs)) return false;

    Matrix lhs2(real.ctx, d + 1);
    for (int i = 2; i <= d; ++i)
        lhs2 = lhs2 + (real.E_star[0] * real.A * real.E_star[i] * real.E[d])
                          .scaled(real.theta_star[1] - real.theta_star[i]);
    Matrix rhs2 = (real.E_star[0] * real.E[d]).scaled(gap);
    return lhs2 == rhs2;
}

Matrix commutator_entry_formulas(const std::vector<FieldElem>& theta,
                                 const std::vector<FieldElem>& theta_star,
                                 const std::vector<FieldElem>& varphi, const FieldElem& beta,
                                 const FieldElem& gamma, const FieldElem& varrho) {
    const int d = static_cast<int>(theta.size()) - 1;
    const FieldCtxPtr& ctx = theta[0].ctx();
    const FieldElem one = ctx->one();
    const FieldElem b1 = beta + one;

    // varphi padded with varphi_0 = varphi_{d+1} = 0
    auto vp = [&](int i) { return (i >= 1 && i <= d) ? varphi[i - 1] : ctx->zero(); };
    auto vt = [&](int i) {
        if (i < 1 || i > d) return ctx->zero();
        return varphi[i - 1] - (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d]);
    };
    auto quad = [&](const FieldElem& x, const FieldElem& y) {
        return x * x - beta * x * y + y * y - gamma * (x + y) - varrho;
    };
    auto third = [&](const std::vector<FieldElem>& s, int i) {
        // s_{i-3} - (beta+1) s_{i-2} + (beta+1) s_{i-1} - s_i
        return s[i - 3] - b1 * s[i - 2] + b1 * s[i - 1] - s[i];
    };

    Matrix x(ctx, d + 1);
    // third subdiagonal
    for (int i = 2; i <= d - 1; ++i)
        x.set(i + 1, i - 2, third(theta_star, i + 1));
    // second subdiagonal
    for (int i = 2; i <= d; ++i) {
        FieldElem v = vt(i - 2) - b1 * vt(i - 1) + b1 * vt(i) - vt(i + 1);
        if (i >= 3) v = v + (theta_star[i - 2] - theta_star[0]) * third(theta, i);
        if (i <= d - 1) v = v + (theta[i] - theta[d]) * third(theta_star, i + 1);
        v = v + (theta_star[i - 2] - theta_star[i]) *
                    (theta[i - 2] - beta * theta[i - 1] + theta[i] - gamma);
        x.set(i, i - 2, v);
    }
    // first subdiagonal
    for (int i = 1; i <= d; ++i) {
        FieldElem v = (theta_star[i - 1] - theta_star[i]) * quad(theta[i - 1], theta[i]);
        if (i >= 2)
            v = v + vp(i - 1) * (theta[i - 2] - beta * theta[i - 1] + theta[i] - gamma);
        if (i <= d - 1)
            v = v - vp(i + 1) * (theta[i - 1] - beta * theta[i] + theta[i + 1] - gamma);
        x.set(i, i - 1, v);
    }
    // diagonal
    for (int i = 0; i <= d; ++i) {
        FieldElem v = ctx->zero();
        if (i >= 1) v = v + vp(i) * quad(theta[i - 1], theta[i]);
        if (i <= d - 1) v = v - vp(i + 1) * quad(theta[i], theta[i + 1]);
        x.set(i, i, v);
    }
    // superdiagonal
    for (int i = 1; i <= d; ++i)
        x.set(i - 1, i, vp(i) * (theta[i - 1] - theta[i]) * quad(theta[i - 1], theta[i]));
    return x;
}

bool commutator_entry_oracle(const std::vector<FieldElem>& theta,
                             const std::vector<FieldElem>& theta_star,
                             const std::vector<FieldElem>& varphi, const FieldElem& beta,
                             const FieldElem& gamma, const FieldElem& varrho) {
    Matrix a = lower_bidiagonal(theta);
    Matrix a_star = upper_bidiagonal(theta_star, varphi);
    Matrix direct = td_commutator(a, a_star, beta, gamma, varrho);
    Matrix formulas = commutator_entry_formulas(theta, theta_star, varphi, beta, gamma, varrho);
    return direct == formulas;
}

Matrix transition_G(const ParameterArray& pa) {
    auto report = validate(pa);
    if (!report.valid()) throw Error(Errc::NotLeonard, report.summary());
    const int d = pa.d;
    const FieldCtxPtr& ctx = pa.ctx;
    if (d == 0) return Matrix::identity(ctx, 1);

    // tau_i from theta prefixes, eta_j from theta suffixes
    std::vector<DensePoly> tau, eta;
    for (int i = 0; i <= d; ++i) {
        tau.push_back(DensePoly::from_roots(
            ctx, std::vector<FieldElem>(pa.theta.begin(), pa.theta.begin() + i)));
        eta.push_back(DensePoly::from_roots(
            ctx, std::vector<FieldElem>(pa.theta.rbegin(), pa.theta.rbegin() + i)));
    }

    // expand each eta_j over the tau basis; both are monic of matching degree
    Matrix g(ctx, d + 1);
    for (int j = 0; j <= d; ++j) {
        DensePoly rem = eta[j];
        for (int i = j; i >= 0; --i) {
            FieldElem c = rem.degree() == i ? rem.coeffs()[i] : ctx->zero();
            if (!c.is_zero()) rem = rem - DensePoly::constant(c) * tau[i];
            g.set(i, j, c);
        }
        if (!rem.is_zero()) throw Error(Errc::CrossCheckFailed, "basis expansion left a remainder");
    }

    Matrix g_inv = g.inverse();
    std::vector<FieldElem> theta_rev(pa.theta.rbegin(), pa.theta.rend());
    if (!(g_inv * lower_bidiagonal(pa.theta) * g == lower_bidiagonal(theta_rev)))
        throw Error(Errc::CrossCheckFailed, "transition misses the reversed split form of A");
    if (!(g_inv * upper_bidiagonal(pa.theta_star, pa.varphi) * g ==
          upper_bidiagonal(pa.theta_star, pa.phi)))
        throw Error(Errc::CrossCheckFailed, "transition misses the second split form of A*");
    return g;
}

} // namespace leonard
