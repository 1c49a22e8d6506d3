#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leonard/parray.hpp"
#include "leonard/recurrence.hpp"

using namespace leonard;

namespace {

ParameterArray krawtchouk_d2() {
    auto q = FieldCtx::rationals();
    ParameterArray pa;
    pa.ctx = q;
    pa.d = 2;
    pa.theta = {q->from_int(0), q->from_int(1), q->from_int(2)};
    pa.theta_star = {q->from_int(0), q->from_int(1), q->from_int(2)};
    pa.varphi = {q->from_int(-4), q->from_int(-4)};
    pa.phi = {q->from_int(-2), q->from_int(-2)};
    return pa;
}

// Krawtchouk-shaped array over any ctx: theta_i = s*i, theta*_i = s**i,
// varphi_i = r i(i-d-1), phi_i = (r - s s*) i(i-d-1).
ParameterArray krawtchouk(const FieldCtxPtr& ctx, int d, long s, long ss, long r) {
    ParameterArray pa;
    pa.ctx = ctx;
    pa.d = d;
    for (int i = 0; i <= d; ++i) {
        pa.theta.push_back(ctx->from_int(s * i));
        pa.theta_star.push_back(ctx->from_int(ss * i));
    }
    for (int i = 1; i <= d; ++i) {
        pa.varphi.push_back(ctx->from_int(r * i * (i - d - 1)));
        pa.phi.push_back(ctx->from_int((r - s * ss) * i * (i - d - 1)));
    }
    return pa;
}

} // namespace

TEST_CASE("validate accepts the pinned example") {
    auto pa = krawtchouk_d2();
    CHECK(validate(pa).valid());
}

TEST_CASE("validate pins each split entry") {
    auto pa = krawtchouk_d2();
    pa.varphi[1] = pa.ctx->from_int(-3);
    auto report = validate(pa);
    REQUIRE_FALSE(report.valid());
    bool found = false;
    for (const auto& v : report.violations) found |= (v.condition == "PA3" && v.index == 2);
    CHECK(found);
}

TEST_CASE("validate reports PA1 on repeated eigenvalues") {
    auto pa = krawtchouk(FieldCtx::rationals(), 3, 1, 1, 2);
    pa.theta[3] = pa.theta[1];
    auto report = validate(pa);
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations.front().condition == "PA1");
}

TEST_CASE("validate reports PA2 on zero split entries") {
    auto pa = krawtchouk_d2();
    pa.varphi[0] = pa.ctx->zero();
    auto report = validate(pa);
    bool found = false;
    for (const auto& v : report.violations) found |= (v.condition == "PA2" && v.index == 1);
    CHECK(found);
}

TEST_CASE("validate reports PA5 on broken ratio") {
    auto q = FieldCtx::rationals();
    ParameterArray pa = krawtchouk(q, 4, 1, 1, 2);
    REQUIRE(validate(pa).valid());
    // perturb one interior dual eigenvalue, then rebuild the split sequences
    // so PA3/PA4 stay consistent; only PA5/PA1 can complain
    pa.theta_star[2] = q->from_int(7);
    bool pa5 = false;
    try {
        auto rebuilt = complete_from_phi1(pa.varphi[0], pa.theta, pa.theta_star);
        (void)rebuilt;
    } catch (const Error& e) {
        pa5 = e.code() == Errc::PrereqFailure;
    }
    CHECK(pa5);
}

TEST_CASE("d = 0 arrays are vacuously valid") {
    auto q = FieldCtx::rationals();
    ParameterArray pa;
    pa.ctx = q;
    pa.d = 0;
    pa.theta = {q->from_int(5)};
    pa.theta_star = {q->from_int(7)};
    CHECK(validate(pa).valid());
}

TEST_CASE("structure errors throw") {
    auto q = FieldCtx::rationals();
    ParameterArray pa;
    pa.ctx = q;
    pa.d = 1;
    pa.theta = {q->zero()};
    pa.theta_star = {q->zero(), q->one()};
    pa.varphi = {q->one()};
    pa.phi = {q->one()};
    CHECK_THROWS_AS(validate(pa), Error);
}

TEST_CASE("d4 table") {
    auto pa = krawtchouk_d2();
    auto q = pa.ctx;

    auto down = transform_d4(pa, D4Element::parse("Down"));
    CHECK(down.theta == std::vector<FieldElem>{q->from_int(2), q->from_int(1), q->from_int(0)});
    CHECK(down.theta_star == pa.theta_star);
    CHECK(down.varphi == pa.phi);
    CHECK(down.phi == pa.varphi);

    auto same = transform_d4(pa, D4Element::parse(""));
    CHECK(same == pa);
    auto twice = transform_d4(pa, D4Element::parse("star.star"));
    CHECK(twice == pa);
}

TEST_CASE("d4 relations and orbit closure") {
    auto q = FieldCtx::rationals();
    // use an asymmetric valid array so the orbit is as large as possible
    auto pa = complete_from_phi1(q->from_int(-5),
                                 {q->from_int(0), q->from_int(1), q->from_int(2), q->from_int(3)},
                                 {q->from_int(0), q->from_int(2), q->from_int(4), q->from_int(6)});
    REQUIRE(validate(pa).valid());

    // down.star equals star.Down
    auto lhs = transform_d4(pa, D4Element::parse("down.star"));
    auto rhs = transform_d4(pa, D4Element::parse("star.Down"));
    CHECK(lhs == rhs);

    // enumerate the orbit by closing under the three generators
    std::vector<ParameterArray> orbit{pa};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t k = 0; k < orbit.size(); ++k) {
            for (auto g : {D4Generator::down, D4Generator::Down, D4Generator::star}) {
                D4Element e;
                e.append(g);
                auto img = transform_d4(orbit[k], e); // revalidates internally
                bool seen = false;
                for (const auto& o : orbit) seen |= (o == img);
                if (!seen) {
                    orbit.push_back(img);
                    grew = true;
                }
            }
        }
    }
    CHECK(8 % orbit.size() == 0);
    CHECK(orbit.size() <= 8);
}

TEST_CASE("complete_from_phi1 reproduces the example") {
    auto pa = krawtchouk_d2();
    auto rebuilt = complete_from_phi1(pa.varphi[0], pa.theta, pa.theta_star);
    CHECK(rebuilt == pa);
}

TEST_CASE("complete_from_phi1 uniqueness over the d4 orbit") {
    auto q = FieldCtx::rationals();
    auto pa = complete_from_phi1(q->from_int(-5),
                                 {q->from_int(0), q->from_int(1), q->from_int(2), q->from_int(3)},
                                 {q->from_int(0), q->from_int(2), q->from_int(4), q->from_int(6)});
    for (const char* word : {"down", "Down", "star", "down.Down", "star.down"}) {
        auto img = transform_d4(pa, D4Element::parse(word));
        auto rebuilt = complete_from_phi1(img.varphi[0], img.theta, img.theta_star);
        CHECK(rebuilt == img);
    }
}

TEST_CASE("complete_from_phi1 rejects forced zeros") {
    auto q = FieldCtx::rationals();
    std::vector<FieldElem> theta{q->from_int(0), q->from_int(1), q->from_int(2)};
    std::vector<FieldElem> ts{q->from_int(0), q->from_int(1), q->from_int(2)};
    // varphi_1 = (theta*_1 - theta*_0)(theta_0 - theta_d) forces phi_1 = 0
    FieldElem bad = (ts[1] - ts[0]) * (theta[0] - theta[2]);
    CHECK_THROWS_AS(complete_from_phi1(bad, theta, ts), Error);

    // PA5 violation in the inputs
    auto q5 = FieldCtx::rationals();
    std::vector<FieldElem> t5, ts5;
    for (long v : {0, 1, 2, 3, 4}) t5.push_back(q5->from_int(v));
    for (long v : {0, 1, 3, 4, 5}) ts5.push_back(q5->from_int(v)); // not recurrent together
    CHECK_THROWS_AS(complete_from_phi1(q5->from_int(1), t5, ts5), Error);
}

TEST_CASE("vartheta_of") {
    auto pa = krawtchouk_d2();
    auto q = pa.ctx;
    auto vt = vartheta_of(pa);
    REQUIRE(vt.size() == 4);
    CHECK(vt[0] == q->zero());
    CHECK(vt[1] == q->from_int(-2));
    CHECK(vt[2] == q->from_int(-2));
    CHECK(vt[3] == q->zero());

    // vartheta_1 = phi_1 = vartheta_d, and vartheta matches phi_1 times the
    // normalized partial sums
    CHECK(vt[1] == pa.phi[0]);
    CHECK(vt[2] == pa.phi[0]);
    auto sums = vartheta_sums(pa.theta);
    for (size_t i = 0; i < vt.size(); ++i) CHECK(vt[i] == pa.phi[0] * sums[i]);
}

TEST_CASE("vartheta palindrome on valid arrays") {
    auto q = FieldCtx::rationals();
    auto pa = complete_from_phi1(q->from_int(-5),
                                 {q->from_int(0), q->from_int(1), q->from_int(2), q->from_int(3)},
                                 {q->from_int(0), q->from_int(2), q->from_int(4), q->from_int(6)});
    auto vt = vartheta_of(pa);
    for (size_t i = 0; i < vt.size(); ++i) CHECK(vt[i] == vt[pa.d - i + 1]);
}

TEST_CASE("d = 1 vartheta boundary") {
    auto q = FieldCtx::rationals();
    auto pa = complete_from_phi1(q->from_int(3), {q->from_int(0), q->from_int(1)},
                                 {q->from_int(0), q->from_int(1)});
    auto vt = vartheta_of(pa);
    REQUIRE(vt.size() == 3);
    CHECK(vt[0].is_zero());
    CHECK(vt[1] == pa.phi[0]);
    CHECK(vt[2].is_zero());
}
