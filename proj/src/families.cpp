#include "leonard/families.hpp"

#include <algorithm>

namespace leonard {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::QRacah, "q-racah",
         {"q", "h", "h_star", "s", "s_star", "r1", "r2", "theta0", "theta0_star"}},
        {Family::QHahn, "q-hahn", {"q", "h", "h_star", "s_star", "r", "theta0", "theta0_star"}},
        {Family::DualQHahn, "dual-q-hahn", {"q", "h", "h_star", "s", "r", "theta0", "theta0_star"}},
        {Family::QuantumQKrawtchouk, "quantum-q-krawtchouk",
         {"q", "h_star", "s", "r", "theta0", "theta0_star"}},
        {Family::QKrawtchouk, "q-krawtchouk", {"q", "h", "h_star", "s_star", "theta0", "theta0_star"}},
        {Family::AffineQKrawtchouk, "affine-q-krawtchouk",
         {"q", "h", "h_star", "r", "theta0", "theta0_star"}},
        {Family::DualQKrawtchouk, "dual-q-krawtchouk",
         {"q", "h", "h_star", "s", "theta0", "theta0_star"}},
        {Family::Racah, "racah",
         {"h", "h_star", "s", "s_star", "r1", "r2", "theta0", "theta0_star"}},
        {Family::Hahn, "hahn", {"h_star", "s", "s_star", "r", "theta0", "theta0_star"}},
        {Family::DualHahn, "dual-hahn", {"h", "s", "s_star", "r", "theta0", "theta0_star"}},
        {Family::Krawtchouk, "krawtchouk", {"s", "s_star", "r", "theta0", "theta0_star"}},
        {Family::BannaiIto, "bannai-ito",
         {"h", "h_star", "s", "s_star", "r1", "r2", "theta0", "theta0_star"}},
        {Family::Orphan, "orphan", {"h", "h_star", "s", "s_star", "r", "theta0", "theta0_star"}},
    };
    return table;
}

const FamilyInfo& info_of(Family f) {
    for (const auto& fi : family_table())
        if (fi.family == f) return fi;
    throw Error(Errc::ParseError, "unknown family");
}

// Evaluation context binding a spec's scalars plus small-integer casts.
struct Env {
    const FamilySpec& spec;
    FieldCtxPtr ctx;
    int d;

    FieldElem P(const std::string& name) const { return spec.param(name); }
    FieldElem I(long n) const { return ctx->from_int(n); }
    FieldElem q_pow(long e) const { return spec.param("q").pow(e); }
    FieldElem sgn(long i) const { return ctx->from_int(i % 2 == 0 ? 1 : -1); }
};

struct Lists {
    std::vector<FieldElem> theta, theta_star, varphi, phi;
};

struct BCLists {
    std::vector<FieldElem> b, c;
};

void require_nonzero(const FieldElem& x, const std::string& what) {
    if (x.is_zero()) throw Error(Errc::ZeroDenominator, what + " must be nonzero");
}

void check_constraint(const FamilySpec& spec) {
    const Env e{spec, spec.ctx, spec.d};
    switch (spec.family) {
        case Family::QRacah: {
            require_nonzero(e.P("q"), "q");
            if (!(e.P("r1") * e.P("r2") == e.P("s") * e.P("s_star") * e.q_pow(spec.d + 1)))
                throw Error(Errc::ConstraintViolated, "r1 r2 must equal s s* q^(d+1)");
            break;
        }
        case Family::Racah:
            if (!(e.P("r1") + e.P("r2") == e.P("s") + e.P("s_star") + e.I(spec.d + 1)))
                throw Error(Errc::ConstraintViolated, "r1 + r2 must equal s + s* + d + 1");
            break;
        case Family::BannaiIto:
            if (!(e.P("r1") + e.P("r2") == e.I(spec.d + 1) - e.P("s") - e.P("s_star")))
                throw Error(Errc::ConstraintViolated, "r1 + r2 must equal -s - s* + d + 1");
            break;
        case Family::Orphan:
            if (!(spec.ctx->characteristic() == 2) || spec.d != 3)
                throw Error(Errc::ConstraintViolated,
                            "this family exists only in characteristic 2 with d = 3");
            break;
        default:
            if (!info_of(spec.family).params.empty() &&
                info_of(spec.family).params.front() == "q")
                require_nonzero(e.P("q"), "q");
            break;
    }
}

Lists family_lists(const FamilySpec& spec) {
    const Env e{spec, spec.ctx, spec.d};
    const int d = spec.d;
    Lists out;
    auto one = spec.ctx->one();

    auto fill = [&](auto&& th, auto&& ths, auto&& vp, auto&& ph) {
        for (long i = 0; i <= d; ++i) {
            out.theta.push_back(th(i));
            out.theta_star.push_back(ths(i));
        }
        for (long i = 1; i <= d; ++i) {
            out.varphi.push_back(vp(i));
            out.phi.push_back(ph(i));
        }
    };

    switch (spec.family) {
        case Family::QRacah: {
            auto q = e.P("q"), h = e.P("h"), hs = e.P("h_star"), s = e.P("s"),
                 ss = e.P("s_star"), r1 = e.P("r1"), r2 = e.P("r2");
            require_nonzero(ss, "s*");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * (one - s * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * (one - ss * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (one - r1 * e.q_pow(i)) *
                            (one - r2 * e.q_pow(i));
                 },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (r1 - ss * e.q_pow(i)) *
                            (r2 - ss * e.q_pow(i)) / ss;
                 });
            break;
        }
        case Family::QHahn: {
            auto h = e.P("h"), hs = e.P("h_star"), ss = e.P("s_star"), r = e.P("r");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * (one - ss * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (one - r * e.q_pow(i));
                 },
                 [&](long i) {
                     return -(h * hs * e.q_pow(1 - i) * (one - e.q_pow(i)) *
                              (one - e.q_pow(i - d - 1)) * (r - ss * e.q_pow(i)));
                 });
            break;
        }
        case Family::DualQHahn: {
            auto h = e.P("h"), hs = e.P("h_star"), s = e.P("s"), r = e.P("r");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * (one - s * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (one - r * e.q_pow(i));
                 },
                 [&](long i) {
                     return h * hs * e.q_pow(d + 2 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (s - r * e.q_pow(i - d - 1));
                 });
            break;
        }
        case Family::QuantumQKrawtchouk: {
            auto hs = e.P("h_star"), s = e.P("s"), r = e.P("r"), q = e.P("q");
            fill([&](long i) { return e.P("theta0") - s * q * (one - e.q_pow(i)); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) {
                     return -(r * hs * e.q_pow(1 - i) * (one - e.q_pow(i)) *
                              (one - e.q_pow(i - d - 1)));
                 },
                 [&](long i) {
                     return hs * e.q_pow(d + 2 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (s - r * e.q_pow(i - d - 1));
                 });
            break;
        }
        case Family::QKrawtchouk: {
            auto h = e.P("h"), hs = e.P("h_star"), ss = e.P("s_star"), q = e.P("q");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * (one - ss * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1));
                 },
                 [&](long i) {
                     return h * hs * ss * q * (one - e.q_pow(i)) * (one - e.q_pow(i - d - 1));
                 });
            break;
        }
        case Family::AffineQKrawtchouk: {
            auto h = e.P("h"), hs = e.P("h_star"), r = e.P("r"), q = e.P("q");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1)) * (one - r * e.q_pow(i));
                 },
                 [&](long i) {
                     return -(h * hs * r * e.q_pow(1 - i) * (one - e.q_pow(i)) *
                              (one - e.q_pow(i - d - 1)));
                 });
            (void)q;
            break;
        }
        case Family::DualQKrawtchouk: {
            auto h = e.P("h"), hs = e.P("h_star"), s = e.P("s");
            fill([&](long i) { return e.P("theta0") + h * (one - e.q_pow(i)) * (one - s * e.q_pow(i + 1)) * e.q_pow(-i); },
                 [&](long i) { return e.P("theta0_star") + hs * (one - e.q_pow(i)) * e.q_pow(-i); },
                 [&](long i) {
                     return h * hs * e.q_pow(1 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1));
                 },
                 [&](long i) {
                     return h * hs * s * e.q_pow(d + 2 - 2 * i) * (one - e.q_pow(i)) *
                            (one - e.q_pow(i - d - 1));
                 });
            break;
        }
        case Family::Racah: {
            auto h = e.P("h"), hs = e.P("h_star"), s = e.P("s"), ss = e.P("s_star"),
                 r1 = e.P("r1"), r2 = e.P("r2");
            fill([&](long i) { return e.P("theta0") + h * e.I(i) * (e.I(i + 1) + s); },
                 [&](long i) { return e.P("theta0_star") + hs * e.I(i) * (e.I(i + 1) + ss); },
                 [&](long i) {
                     return h * hs * e.I(i) * e.I(i - d - 1) * (e.I(i) + r1) * (e.I(i) + r2);
                 },
                 [&](long i) {
                     return h * hs * e.I(i) * e.I(i - d - 1) * (e.I(i) + ss - r1) *
                            (e.I(i) + ss - r2);
                 });
            break;
        }
        case Family::Hahn: {
            auto hs = e.P("h_star"), s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            fill([&](long i) { return e.P("theta0") + s * e.I(i); },
                 [&](long i) { return e.P("theta0_star") + hs * e.I(i) * (e.I(i + 1) + ss); },
                 [&](long i) { return hs * s * e.I(i) * e.I(i - d - 1) * (e.I(i) + r); },
                 [&](long i) { return -(hs * s * e.I(i) * e.I(i - d - 1) * (e.I(i) + ss - r)); });
            break;
        }
        case Family::DualHahn: {
            auto h = e.P("h"), s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            fill([&](long i) { return e.P("theta0") + h * e.I(i) * (e.I(i + 1) + s); },
                 [&](long i) { return e.P("theta0_star") + ss * e.I(i); },
                 [&](long i) { return h * ss * e.I(i) * e.I(i - d - 1) * (e.I(i) + r); },
                 [&](long i) {
                     return h * ss * e.I(i) * e.I(i - d - 1) * (e.I(i) + r - s - e.I(d + 1));
                 });
            break;
        }
        case Family::Krawtchouk: {
            auto s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            fill([&](long i) { return e.P("theta0") + s * e.I(i); },
                 [&](long i) { return e.P("theta0_star") + ss * e.I(i); },
                 [&](long i) { return r * e.I(i) * e.I(i - d - 1); },
                 [&](long i) { return (r - s * ss) * e.I(i) * e.I(i - d - 1); });
            break;
        }
        case Family::BannaiIto: {
            auto h = e.P("h"), hs = e.P("h_star"), s = e.P("s"), ss = e.P("s_star"),
                 r1 = e.P("r1"), r2 = e.P("r2");
            auto sgn_d = e.sgn(d);
            fill([&](long i) { return e.P("theta0") + h * (s - one + (one - s + e.I(2 * i)) * e.sgn(i)); },
                 [&](long i) { return e.P("theta0_star") + hs * (ss - one + (one - ss + e.I(2 * i)) * e.sgn(i)); },
                 [&](long i) {
                     return h * hs * (e.sgn(i) * r2 - e.I(2 * i) - r2) *
                            (e.I(2 * i) + r1 - e.I(d + 1) + e.sgn(i) * sgn_d * (r1 + e.I(d + 1)));
                 },
                 [&](long i) {
                     return h * hs * (ss + r2 + e.sgn(i) * (e.I(2 * i) - ss - r2)) *
                            (e.I(d + 1) - ss - r1 +
                             e.sgn(i) * sgn_d * (e.I(2 * i) - e.I(d + 1) - ss - r1));
                 });
            break;
        }
        case Family::Orphan: {
            auto h = e.P("h"), hs = e.P("h_star"), s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            auto t0 = e.P("theta0"), ts0 = e.P("theta0_star");
            out.theta = {t0, t0 + h * (one + s), t0 + h, t0 + h * s};
            out.theta_star = {ts0, ts0 + hs * (one + ss), ts0 + hs, ts0 + hs * ss};
            out.varphi = {h * hs * r, h * hs, h * hs * (r + s + ss)};
            out.phi = {h * hs * (r + s + s * ss), h * hs, h * hs * (r + ss + s * ss)};
            break;
        }
    }
    return out;
}

// The displayed b and c sequences of the family (the primal half only; the
// dual half is produced by the caller).
BCLists family_bc(const FamilySpec& spec) {
    const Env e{spec, spec.ctx, spec.d};
    const int d = spec.d;
    auto one = spec.ctx->one();
    BCLists out;

    switch (spec.family) {
        case Family::QRacah: {
            auto h = e.P("h"), ss = e.P("s_star"), r1 = e.P("r1"), r2 = e.P("r2");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(h * (one - e.q_pow(-d)) * (one - r1 * e.q_pow(1)) *
                                    (one - r2 * e.q_pow(1)) / (one - ss * e.q_pow(2)));
                else
                    out.b.push_back(h * (one - e.q_pow(i - d)) * (one - ss * e.q_pow(i + 1)) *
                                    (one - r1 * e.q_pow(i + 1)) * (one - r2 * e.q_pow(i + 1)) /
                                    ((one - ss * e.q_pow(2 * i + 1)) *
                                     (one - ss * e.q_pow(2 * i + 2))));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(h * (one - e.q_pow(d)) * (r1 - ss * e.q_pow(d)) *
                                    (r2 - ss * e.q_pow(d)) /
                                    (ss * e.q_pow(d) * (one - ss * e.q_pow(2 * d))));
                else
                    out.c.push_back(h * (one - e.q_pow(i)) * (one - ss * e.q_pow(i + d + 1)) *
                                    (r1 - ss * e.q_pow(i)) * (r2 - ss * e.q_pow(i)) /
                                    (ss * e.q_pow(d) * (one - ss * e.q_pow(2 * i)) *
                                     (one - ss * e.q_pow(2 * i + 1))));
            }
            break;
        }
        case Family::QHahn: {
            auto h = e.P("h"), ss = e.P("s_star"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(h * (one - e.q_pow(-d)) * (one - r * e.q_pow(1)) /
                                    (one - ss * e.q_pow(2)));
                else
                    out.b.push_back(h * (one - e.q_pow(i - d)) * (one - ss * e.q_pow(i + 1)) *
                                    (one - r * e.q_pow(i + 1)) /
                                    ((one - ss * e.q_pow(2 * i + 1)) *
                                     (one - ss * e.q_pow(2 * i + 2))));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(-(h * (one - e.q_pow(d)) * (r - ss * e.q_pow(d)) /
                                      (one - ss * e.q_pow(2 * d))));
                else
                    out.c.push_back(-(h * e.q_pow(i - d) * (one - e.q_pow(i)) *
                                      (one - ss * e.q_pow(i + d + 1)) * (r - ss * e.q_pow(i)) /
                                      ((one - ss * e.q_pow(2 * i)) *
                                       (one - ss * e.q_pow(2 * i + 1)))));
            }
            break;
        }
        case Family::DualQHahn: {
            auto h = e.P("h"), s = e.P("s"), r = e.P("r"), q = e.P("q");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(h * (one - e.q_pow(i - d)) * (one - r * e.q_pow(i + 1)));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(h * (one - e.q_pow(i)) * (q * s - r * e.q_pow(i - d)));
            break;
        }
        case Family::QuantumQKrawtchouk: {
            auto s = e.P("s"), r = e.P("r"), q = e.P("q");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(-(r * e.q_pow(i + 1) * (one - e.q_pow(i - d))));
            for (long i = 1; i <= d; ++i)
                out.c.push_back((one - e.q_pow(i)) * (q * s - r * e.q_pow(i - d)));
            break;
        }
        case Family::QKrawtchouk: {
            auto h = e.P("h"), ss = e.P("s_star");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(h * (one - e.q_pow(-d)) / (one - ss * e.q_pow(2)));
                else
                    out.b.push_back(h * (one - e.q_pow(i - d)) * (one - ss * e.q_pow(i + 1)) /
                                    ((one - ss * e.q_pow(2 * i + 1)) *
                                     (one - ss * e.q_pow(2 * i + 2))));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(h * ss * e.q_pow(d) * (one - e.q_pow(d)) /
                                    (one - ss * e.q_pow(2 * d)));
                else
                    out.c.push_back(h * ss * e.q_pow(2 * i - d) * (one - e.q_pow(i)) *
                                    (one - ss * e.q_pow(i + d + 1)) /
                                    ((one - ss * e.q_pow(2 * i)) *
                                     (one - ss * e.q_pow(2 * i + 1))));
            }
            break;
        }
        case Family::AffineQKrawtchouk: {
            auto h = e.P("h"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(h * (one - e.q_pow(i - d)) * (one - r * e.q_pow(i + 1)));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(-(h * r * e.q_pow(i - d) * (one - e.q_pow(i))));
            break;
        }
        case Family::DualQKrawtchouk: {
            auto h = e.P("h"), s = e.P("s"), q = e.P("q");
            for (long i = 0; i <= d - 1; ++i) out.b.push_back(h * (one - e.q_pow(i - d)));
            for (long i = 1; i <= d; ++i) out.c.push_back(h * s * q * (one - e.q_pow(i)));
            break;
        }
        case Family::Racah: {
            auto h = e.P("h"), ss = e.P("s_star"), r1 = e.P("r1"), r2 = e.P("r2");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(-(h * e.I(d) * (one + r1) * (one + r2) / (e.I(2) + ss)));
                else
                    out.b.push_back(h * e.I(i - d) * (e.I(i + 1) + ss) * (e.I(i + 1) + r1) *
                                    (e.I(i + 1) + r2) /
                                    ((e.I(2 * i + 1) + ss) * (e.I(2 * i + 2) + ss)));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(h * e.I(d) * (e.I(d) + ss - r1) * (e.I(d) + ss - r2) /
                                    (e.I(2 * d) + ss));
                else
                    out.c.push_back(h * e.I(i) * (e.I(i + d + 1) + ss) * (e.I(i) + ss - r1) *
                                    (e.I(i) + ss - r2) /
                                    ((e.I(2 * i) + ss) * (e.I(2 * i + 1) + ss)));
            }
            break;
        }
        case Family::Hahn: {
            auto s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(-(s * e.I(d) * (one + r) / (e.I(2) + ss)));
                else
                    out.b.push_back(s * e.I(i - d) * (e.I(i + 1) + ss) * (e.I(i + 1) + r) /
                                    ((e.I(2 * i + 1) + ss) * (e.I(2 * i + 2) + ss)));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(-(s * e.I(d) * (e.I(d) + ss - r) / (e.I(2 * d) + ss)));
                else
                    out.c.push_back(-(s * e.I(i) * (e.I(i + d + 1) + ss) * (e.I(i) + ss - r) /
                                      ((e.I(2 * i) + ss) * (e.I(2 * i + 1) + ss))));
            }
            break;
        }
        case Family::DualHahn: {
            auto h = e.P("h"), s = e.P("s"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(h * e.I(i - d) * (e.I(i + 1) + r));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(h * e.I(i) * (e.I(i - d - 1) - s + r));
            break;
        }
        case Family::Krawtchouk: {
            auto s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            require_nonzero(ss, "s*");
            for (long i = 0; i <= d - 1; ++i) out.b.push_back(r * e.I(i - d) / ss);
            for (long i = 1; i <= d; ++i) out.c.push_back(e.I(i) * (r - s * ss) / ss);
            break;
        }
        case Family::BannaiIto: {
            auto h = e.P("h"), ss = e.P("s_star"), r1 = e.P("r1"), r2 = e.P("r2");
            auto sgn_d = e.sgn(d);
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(h * (e.I(2 * i + 2) + r2 - ss + e.sgn(i) * (r2 + ss)) *
                                (e.I(2 * i) + r1 - e.I(d) + one -
                                 e.sgn(i) * sgn_d * (r1 + e.I(d + 1))) /
                                (e.I(2) * (e.I(2 * i + 2) - ss)));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(-(h * (e.I(2 * i) - r2 - ss + e.sgn(i) * (r2 + ss)) *
                                  (e.I(2 * i) - e.I(2) * ss - r1 + e.I(d + 1) -
                                   e.sgn(i) * sgn_d * (r1 + e.I(d + 1))) /
                                  (e.I(2) * (e.I(2 * i) - ss))));
            break;
        }
        case Family::Orphan: {
            auto h = e.P("h"), s = e.P("s"), ss = e.P("s_star"), r = e.P("r");
            out.b = {h * r / (one + ss), h * (one + ss) / ss, h * (r + s + ss) / (one + ss)};
            out.c = {h * (r + s + s * ss) / (one + ss), h * (one + ss) / ss,
                     h * (r + ss + s * ss) / (one + ss)};
            break;
        }
    }
    return out;
}

// Families whose dual half comes from exchanging named parameters; the rest
// carry explicitly displayed dual formulas, realized as the primal formulas
// of a sibling family.
FamilySpec dual_spec(const FamilySpec& spec) {
    FamilySpec dual = spec;
    auto swap_params = [&](const char* x, const char* y) {
        std::swap(dual.params.at(x), dual.params.at(y));
    };
    swap_params("theta0", "theta0_star");
    switch (spec.family) {
        case Family::QRacah:
        case Family::Racah:
        case Family::BannaiIto:
        case Family::Orphan:
            swap_params("h", "h_star");
            swap_params("s", "s_star");
            return dual;
        case Family::AffineQKrawtchouk: swap_params("h", "h_star"); return dual;
        case Family::Krawtchouk: swap_params("s", "s_star"); return dual;
        default: break;
    }
    throw Error(Errc::MethodPrecondition, "family has explicit duals");
}

// Explicit dual displays for the remaining families.
BCLists family_bc_dual(const FamilySpec& spec) {
    const Env e{spec, spec.ctx, spec.d};
    const int d = spec.d;
    auto one = spec.ctx->one();
    BCLists out;
    switch (spec.family) {
        case Family::QHahn: {
            auto hs = e.P("h_star"), ss = e.P("s_star"), r = e.P("r"), q = e.P("q");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(hs * (one - e.q_pow(i - d)) * (one - r * e.q_pow(i + 1)));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(hs * (one - e.q_pow(i)) * (q * ss - r * e.q_pow(i - d)));
            break;
        }
        case Family::DualQHahn: {
            auto hs = e.P("h_star"), s = e.P("s"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(hs * (one - e.q_pow(-d)) * (one - r * e.q_pow(1)) /
                                    (one - s * e.q_pow(2)));
                else
                    out.b.push_back(hs * (one - e.q_pow(i - d)) * (one - s * e.q_pow(i + 1)) *
                                    (one - r * e.q_pow(i + 1)) /
                                    ((one - s * e.q_pow(2 * i + 1)) *
                                     (one - s * e.q_pow(2 * i + 2))));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(-(hs * (one - e.q_pow(d)) * (r - s * e.q_pow(d)) /
                                      (one - s * e.q_pow(2 * d))));
                else
                    out.c.push_back(-(hs * e.q_pow(i - d) * (one - e.q_pow(i)) *
                                      (one - s * e.q_pow(i + d + 1)) * (r - s * e.q_pow(i)) /
                                      ((one - s * e.q_pow(2 * i)) *
                                       (one - s * e.q_pow(2 * i + 1)))));
            }
            break;
        }
        case Family::QuantumQKrawtchouk: {
            auto hs = e.P("h_star"), s = e.P("s"), r = e.P("r");
            require_nonzero(s, "s");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(hs * r * (one - e.q_pow(i - d)) / (s * e.q_pow(2 * i + 1)));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(hs * (one - e.q_pow(i)) * (r - s * e.q_pow(i)) /
                                (s * e.q_pow(2 * i)));
            break;
        }
        case Family::QKrawtchouk: {
            auto hs = e.P("h_star"), ss = e.P("s_star"), q = e.P("q");
            for (long i = 0; i <= d - 1; ++i) out.b.push_back(hs * (one - e.q_pow(i - d)));
            for (long i = 1; i <= d; ++i) out.c.push_back(hs * ss * q * (one - e.q_pow(i)));
            break;
        }
        case Family::DualQKrawtchouk: {
            auto hs = e.P("h_star"), s = e.P("s");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(hs * (one - e.q_pow(-d)) / (one - s * e.q_pow(2)));
                else
                    out.b.push_back(hs * (one - e.q_pow(i - d)) * (one - s * e.q_pow(i + 1)) /
                                    ((one - s * e.q_pow(2 * i + 1)) *
                                     (one - s * e.q_pow(2 * i + 2))));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(hs * s * e.q_pow(d) * (one - e.q_pow(d)) /
                                    (one - s * e.q_pow(2 * d)));
                else
                    out.c.push_back(hs * s * e.q_pow(2 * i - d) * (one - e.q_pow(i)) *
                                    (one - s * e.q_pow(i + d + 1)) /
                                    ((one - s * e.q_pow(2 * i)) *
                                     (one - s * e.q_pow(2 * i + 1))));
            }
            break;
        }
        case Family::Hahn: {
            auto hs = e.P("h_star"), ss = e.P("s_star"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i)
                out.b.push_back(hs * e.I(i - d) * (e.I(i + 1) + r));
            for (long i = 1; i <= d; ++i)
                out.c.push_back(hs * e.I(i) * (e.I(i - d - 1) - ss + r));
            break;
        }
        case Family::DualHahn: {
            auto ss = e.P("s_star"), s = e.P("s"), r = e.P("r");
            for (long i = 0; i <= d - 1; ++i) {
                if (i == 0)
                    out.b.push_back(-(ss * e.I(d) * (one + r) / (e.I(2) + s)));
                else
                    out.b.push_back(ss * e.I(i - d) * (e.I(i + 1) + s) * (e.I(i + 1) + r) /
                                    ((e.I(2 * i + 1) + s) * (e.I(2 * i + 2) + s)));
            }
            for (long i = 1; i <= d; ++i) {
                if (i == d)
                    out.c.push_back(-(ss * e.I(d) * (e.I(d) + s - r) / (e.I(2 * d) + s)));
                else
                    out.c.push_back(-(ss * e.I(i) * (e.I(i + d + 1) + s) * (e.I(i) + s - r) /
                                      ((e.I(2 * i) + s) * (e.I(2 * i + 1) + s))));
            }
            break;
        }
        default: return family_bc(dual_spec(spec));
    }
    return out;
}

} // namespace

Family family_from_name(const std::string& name) {
    for (const auto& fi : family_table())
        if (name == fi.name) return fi.family;
    throw Error(Errc::ParseError, "unknown family '" + name + "'");
}

std::string family_name(Family f) { return info_of(f).name; }

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = [] {
        std::vector<Family> v;
        for (const auto& fi : family_table()) v.push_back(fi.family);
        return v;
    }();
    return fams;
}

const std::vector<std::string>& family_param_names(Family f) { return info_of(f).params; }

const FieldElem& FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw Error(Errc::StructuralError,
                    family_name(family) + " needs parameter '" + name + "'");
    return it->second;
}

ParameterArray generate_parray(const FamilySpec& spec) {
    if (!spec.ctx) throw Error(Errc::StructuralError, "missing field context");
    if (spec.d < 1) throw Error(Errc::StructuralError, "diameter must be at least 1");
    for (const auto& name : family_param_names(spec.family)) spec.param(name);
    check_constraint(spec);
    Lists lists = family_lists(spec);
    ParameterArray pa;
    pa.ctx = spec.ctx;
    pa.d = spec.d;
    pa.theta = std::move(lists.theta);
    pa.theta_star = std::move(lists.theta_star);
    pa.varphi = std::move(lists.varphi);
    pa.phi = std::move(lists.phi);
    auto report = validate(pa);
    if (!report.valid()) throw Error(Errc::Inadmissible, report.summary());
    return pa;
}

IntersectionData closed_intersection(const FamilySpec& spec) {
    check_constraint(spec);
    const int d = spec.d;
    BCLists main, dual;
    try {
        main = family_bc(spec);
        dual = family_bc_dual(spec);
    } catch (const Error& err) {
        if (err.code() == Errc::DivisionByZero)
            throw Error(Errc::ZeroDenominator, err.what());
        throw;
    }
    IntersectionData data;
    data.b = main.b;
    data.c = main.c;
    data.b_star = dual.b;
    data.c_star = dual.c;
    const FieldElem& t0 = spec.param("theta0");
    const FieldElem& ts0 = spec.param("theta0_star");
    for (int i = 0; i <= d; ++i) {
        FieldElem a = t0, as = ts0;
        if (i <= d - 1) {
            a = a - data.b[i];
            as = as - data.b_star[i];
        }
        if (i >= 1) {
            a = a - data.c[i - 1];
            as = as - data.c_star[i - 1];
        }
        data.a.push_back(a);
        data.a_star.push_back(as);
    }
    return data;
}

namespace {

struct SearchRng {
    uint64_t state;
    explicit SearchRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::vector<FieldElem> rational_pool(const FieldCtxPtr& ctx) {
    std::vector<FieldElem> pool;
    for (long n = 1; n <= 6; ++n) {
        pool.push_back(ctx->from_int(n));
        pool.push_back(ctx->from_int(-n));
    }
    for (auto [num, den] : {std::pair<long, long>{1, 2}, {1, 3}, {2, 3}, {3, 2}}) {
        pool.push_back(ctx->from_fraction(num, den));
        pool.push_back(ctx->from_fraction(-num, den));
    }
    return pool;
}

} // namespace

std::vector<FamilySpec> sample_admissible(Family family, int d, const FieldCtxPtr& ctx,
                                          uint64_t seed, int count) {
    if (count < 1) return {};
    if (family == Family::Orphan && (!(ctx->characteristic() == 2) || d != 3))
        throw Error(Errc::ExhaustedSearch, "this family needs characteristic 2 and d = 3");

    std::vector<FieldElem> pool = ctx->kind() == FieldCtx::Kind::Rationals
                                      ? rational_pool(ctx)
                                      : ctx->enumerate();
    SearchRng rng(seed);
    auto draw = [&]() { return pool[rng.next() % pool.size()]; };

    std::vector<FamilySpec> found;
    const long budget = std::max<long>(4000, 800L * count);
    for (long attempt = 0; attempt < budget && static_cast<int>(found.size()) < count;
         ++attempt) {
        FamilySpec spec;
        spec.family = family;
        spec.d = d;
        spec.ctx = ctx;
        bool skip = false;
        for (const auto& name : family_param_names(family)) {
            FieldElem v = draw();
            if (name == "q" && (v.is_zero() || v.is_one() || v == -ctx->one())) {
                skip = true;
                break;
            }
            spec.params.emplace(name, v);
        }
        if (skip) continue;
        // tied parameters are solved for the last-listed one
        try {
            if (family == Family::QRacah) {
                const auto& r1 = spec.param("r1");
                spec.params.at("r2") = spec.param("s") * spec.param("s_star") *
                                       spec.param("q").pow(d + 1) / r1;
            } else if (family == Family::Racah) {
                spec.params.at("r2") =
                    spec.param("s") + spec.param("s_star") + ctx->from_int(d + 1) - spec.param("r1");
            } else if (family == Family::BannaiIto) {
                spec.params.at("r2") =
                    ctx->from_int(d + 1) - spec.param("s") - spec.param("s_star") - spec.param("r1");
            }
            generate_parray(spec);
            closed_intersection(spec);
        } catch (const Error&) {
            continue;
        }
        found.push_back(std::move(spec));
    }
    if (found.empty())
        throw Error(Errc::ExhaustedSearch,
                    "no admissible parameters for " + family_name(family) + " at d = " +
                        std::to_string(d) + " over " + ctx->descriptor());
    return found;
}

} // namespace leonard
