#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "leonard/field.hpp"

using namespace leonard;

namespace {

// Deterministic generator for property tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

FieldElem random_elem(Rng& rng, const FieldCtxPtr& ctx) {
    if (ctx->kind() == FieldCtx::Kind::Rationals) {
        long num = rng.range(-30, 30);
        long den = rng.range(1, 12);
        return ctx->from_fraction(num, den);
    }
    auto all = ctx->enumerate();
    return all[rng.next() % all.size()];
}

} // namespace

TEST_CASE("context construction") {
    auto q = FieldCtx::rationals();
    CHECK(q->characteristic() == 0);

    auto f7 = FieldCtx::prime(7);
    CHECK(f7->characteristic() == 7);

    // x^2 + x + 1 has no root in GF(2), hence irreducible.
    auto f4 = FieldCtx::ext(2, {1, 1, 1});
    CHECK(f4->characteristic() == 2);
    CHECK(f4->order() == 4);

    CHECK_THROWS_AS(FieldCtx::prime(6), Error);
    CHECK_THROWS_AS(FieldCtx::ext(2, {1, 0, 1}), Error);   // (x+1)^2
    CHECK_THROWS_AS(FieldCtx::ext(3, {1, 1, 2}), Error);   // non-monic
    CHECK_THROWS_AS(FieldCtx::ext(2, {0, 0, 0, 0, 1, 1}), Error); // x^5+x^4 reducible
    CHECK_NOTHROW(FieldCtx::ext(2, {1, 1, 0, 0, 1}));      // x^4+x+1 irreducible
}

TEST_CASE("descriptor round trip") {
    for (const char* d : {"Q", "GF:7", "GF:2:1,1,1", "GF:101"}) {
        auto ctx = FieldCtx::from_descriptor(d);
        CHECK(ctx->descriptor() == d);
    }
    CHECK_THROWS_AS(FieldCtx::from_descriptor("R"), Error);
}

TEST_CASE("basic arithmetic examples") {
    auto q = FieldCtx::rationals();
    CHECK(q->from_fraction(2, 3) + q->from_fraction(1, 6) == q->from_fraction(5, 6));

    auto f7 = FieldCtx::prime(7);
    CHECK(f7->from_int(3) * f7->from_int(5) == f7->one()); // 15 mod 7
    CHECK(f7->from_int(3).inverse() == f7->from_int(5));

    auto f4 = FieldCtx::ext(2, {1, 1, 1});
    auto x = f4->from_coeffs({0, 1});
    auto x1 = f4->from_coeffs({1, 1});
    CHECK(x + x1 == f4->one());      // coefficientwise mod 2
    CHECK(x * x1 == f4->one());      // x(x+1) = x^2+x = 1
    CHECK(x.inverse() == x1);
    CHECK(x.pow(3) == f4->one());
    CHECK(x.pow(-1) == x1);

    CHECK(q->one().inverse() == q->one());
    CHECK_THROWS_AS(f7->zero().inverse(), Error);
}

TEST_CASE("cross-context operations rejected") {
    auto q = FieldCtx::rationals();
    auto f7 = FieldCtx::prime(7);
    CHECK_THROWS_AS(q->one() + f7->one(), Error);
}

TEST_CASE("parse and format") {
    auto q = FieldCtx::rationals();
    auto e = q->parse("-4/6");
    CHECK(e == q->from_fraction(-2, 3));
    CHECK(e.str() == "-2/3");

    auto f7 = FieldCtx::prime(7);
    CHECK(f7->parse("12") == f7->from_int(5));
    CHECK(f7->parse("-1") == f7->from_int(6));

    auto f4 = FieldCtx::ext(2, {1, 1, 1});
    CHECK(f4->parse("[1,1]") == f4->from_coeffs({1, 1}));
    CHECK(f4->parse("[1,1]").str() == "[1,1]");

    CHECK_THROWS_AS(q->parse("a/b"), Error);
    CHECK_THROWS_AS(q->parse("1/0"), Error);
    CHECK_THROWS_AS(f4->parse("[1]"), Error);
}

TEST_CASE("field axioms on random triples") {
    auto ctxs = std::vector<FieldCtxPtr>{FieldCtx::rationals(), FieldCtx::prime(7),
                                         FieldCtx::prime(101), FieldCtx::ext(2, {1, 1, 1}),
                                         FieldCtx::ext(3, {2, 2, 1})};
    Rng rng(20260808);
    for (const auto& ctx : ctxs) {
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_elem(rng, ctx);
            auto b = random_elem(rng, ctx);
            auto c = random_elem(rng, ctx);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + ctx->zero() == a);
            CHECK(a * ctx->one() == a);
            CHECK(a + (-a) == ctx->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == ctx->one());
                CHECK(a.inverse().inverse() == a);
            }
        }
    }
}

TEST_CASE("characteristic acts as expected") {
    auto f7 = FieldCtx::prime(7);
    CHECK(f7->from_int(7) == f7->zero());
    auto f4 = FieldCtx::ext(2, {1, 1, 1});
    CHECK(f4->from_int(2) == f4->zero());
    auto q = FieldCtx::rationals();
    CHECK(q->from_int(7) != q->zero());
}

TEST_CASE("parse inverts format on random elements") {
    auto ctxs = std::vector<FieldCtxPtr>{FieldCtx::rationals(), FieldCtx::prime(13),
                                         FieldCtx::ext(2, {1, 1, 1})};
    Rng rng(7);
    for (const auto& ctx : ctxs) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_elem(rng, ctx);
            CHECK(ctx->parse(a.str()) == a);
        }
    }
}

TEST_CASE("embedding GF(p) into GF(p^k)") {
    auto f2 = FieldCtx::prime(2);
    auto f4 = FieldCtx::ext(2, {1, 1, 1});
    CHECK(f2->one().embed(f4) == f4->one());
    CHECK_THROWS_AS(f2->one().embed(FieldCtx::ext(3, {2, 2, 1})), Error);
}
