#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "leonard/matrix.hpp"
#include "leonard/poly.hpp"

using namespace leonard;

namespace {

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
};

Matrix mat(const FieldCtxPtr& ctx, std::vector<std::vector<long>> rows) {
    Matrix m(ctx, static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), ctx->from_int(rows[i][j]));
    return m;
}

} // namespace

TEST_CASE("arithmetic basics") {
    auto q = FieldCtx::rationals();
    auto id = Matrix::identity(q, 3);
    auto d = Matrix::diagonal({q->from_int(1), q->from_int(2), q->from_int(3)});
    CHECK(commutator(id, d).is_zero());
    CHECK(d.trace() == q->from_int(6));

    // product of the d=1 split matrices
    auto a = mat(q, {{0, 0}, {1, 1}});
    auto as = mat(q, {{0, 1}, {0, 1}});
    CHECK(a * as == mat(q, {{0, 0}, {0, 2}}));
    CHECK(commutator(a, as) == a * as - as * a);
    CHECK((a * as).transpose() == as.transpose() * a.transpose());
}

TEST_CASE("inverse") {
    auto q = FieldCtx::rationals();
    auto id = Matrix::identity(q, 2);
    CHECK(id.inverse() == id);

    auto d = Matrix::diagonal({q->from_int(2), q->from_int(3)});
    auto dinv = Matrix::diagonal({q->from_fraction(1, 2), q->from_fraction(1, 3)});
    CHECK(d.inverse() == dinv);

    CHECK(mat(q, {{1, 1}, {0, 1}}).inverse() == mat(q, {{1, -1}, {0, 1}}));
    CHECK_THROWS_AS(mat(q, {{1, 2}, {2, 4}}).inverse(), Error);
}

TEST_CASE("inverse round trip on random nonsingular samples") {
    Rng rng(99);
    auto f13 = FieldCtx::prime(13);
    auto q = FieldCtx::rationals();
    for (const auto& ctx : {f13, q}) {
        int built = 0;
        while (built < 12) {
            Matrix m(ctx, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    m.set(i, j, ctx->from_int(static_cast<long>(rng.next() % 19) - 9));
            try {
                Matrix inv = m.inverse();
                CHECK(m * inv == Matrix::identity(ctx, 4));
                CHECK(inv * m == Matrix::identity(ctx, 4));
                ++built;
            } catch (const Error&) {
                // singular draw; try again
            }
        }
    }
}

TEST_CASE("solve") {
    auto q = FieldCtx::rationals();
    auto m = mat(q, {{2, 1}, {1, 3}});
    std::vector<FieldElem> rhs{q->from_int(5), q->from_int(10)};
    auto x = m.solve(rhs);
    CHECK(m.apply(x) == rhs);
}

TEST_CASE("polynomial evaluation") {
    auto q = FieldCtx::rationals();
    auto theta0 = q->from_int(4);
    DensePoly lin(q, {-theta0, q->one()});
    CHECK(lin.eval(theta0).is_zero());

    DensePoly sq(q, {q->one(), q->zero(), q->one()}); // 1 + x^2
    auto m = mat(q, {{0, 1}, {1, 0}});
    CHECK(sq.eval(m) == mat(q, {{2, 0}, {0, 2}}));

    // tau_2 with theta = (0,1,2) evaluated at 2: (2-0)(2-1) = 2
    auto tau2 = DensePoly::from_roots(q, {q->from_int(0), q->from_int(1)});
    CHECK(tau2.eval(q->from_int(2)) == q->from_int(2));

    CHECK(DensePoly(q).degree() == -1);
    CHECK((tau2 - tau2).is_zero());
    CHECK(tau2 * DensePoly::constant(q->one()) == tau2);
}

TEST_CASE("primitive idempotents of a diagonal matrix") {
    auto q = FieldCtx::rationals();
    std::vector<FieldElem> eigs{q->from_int(0), q->from_int(1), q->from_int(2)};
    auto m = Matrix::diagonal(eigs);
    auto es = primitive_idempotents(m, eigs);
    for (int i = 0; i < 3; ++i) {
        Matrix unit(q, 3);
        unit.set(i, i, q->one());
        CHECK(es[i] == unit);
    }
}

TEST_CASE("primitive idempotents of the d=1 split matrix") {
    auto q = FieldCtx::rationals();
    auto m = mat(q, {{0, 0}, {1, 1}});
    auto es = primitive_idempotents(m, {q->from_int(0), q->from_int(1)});
    CHECK(es[0] == mat(q, {{1, 0}, {-1, 0}}));
    CHECK(es[1] == mat(q, {{0, 0}, {1, 1}}));
}

TEST_CASE("repeated eigenvalue is rejected") {
    auto q = FieldCtx::rationals();
    auto m = mat(q, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(primitive_idempotents(m, {q->one(), q->one()}), Error);
    // wrong eigenvalues fail validation
    CHECK_THROWS_AS(primitive_idempotents(mat(q, {{0, 0}, {1, 1}}), {q->from_int(2), q->from_int(3)}),
                    Error);
}

TEST_CASE("spectral identities for multiplicity-free matrices") {
    auto q = FieldCtx::rationals();
    auto m = mat(q, {{0, 0, 0}, {1, 1, 0}, {0, 1, 2}});
    std::vector<FieldElem> eigs{q->from_int(0), q->from_int(1), q->from_int(2)};
    auto es = primitive_idempotents(m, eigs);

    Matrix sum(q, 3), weighted(q, 3);
    for (int i = 0; i < 3; ++i) {
        sum = sum + es[i];
        weighted = weighted + es[i].scaled(eigs[i]);
    }
    CHECK(sum == Matrix::identity(q, 3));
    CHECK(weighted == m);

    // prod (M - theta_i I) = 0
    auto van = DensePoly::from_roots(q, eigs);
    CHECK(van.eval(m).is_zero());

    // every power reproduced as sum of theta^r E
    Matrix pow = Matrix::identity(q, 3);
    for (int r = 0; r <= 3; ++r) {
        Matrix recon(q, 3);
        for (int i = 0; i < 3; ++i) recon = recon + es[i].scaled(eigs[i].pow(r));
        CHECK(recon == pow);
        pow = pow * m;
    }
}

TEST_CASE("tridiagonal classification") {
    auto q = FieldCtx::rationals();
    CHECK(Matrix::diagonal({q->one(), q->from_int(2)}).tridiagonal_class() ==
          TridiagonalClass::Tridiagonal);
    // split-form A: zero superdiagonal, hence not irreducible
    CHECK(mat(q, {{0, 0}, {1, 1}}).tridiagonal_class() == TridiagonalClass::Tridiagonal);
    CHECK(mat(q, {{4, -4, 0}, {1, 1, -2}, {0, 2, -2}}).tridiagonal_class() ==
          TridiagonalClass::IrreducibleTridiagonal);
    CHECK(mat(q, {{0, 0, 1}, {1, 1, 0}, {0, 1, 2}}).tridiagonal_class() ==
          TridiagonalClass::NotTridiagonal);
}

TEST_CASE("rank") {
    auto q = FieldCtx::rationals();
    CHECK(mat(q, {{1, 2}, {2, 4}}).rank() == 1);
    CHECK(Matrix::identity(q, 3).rank() == 3);
    CHECK(Matrix(q, 2).rank() == 0);
}
