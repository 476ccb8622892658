#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcalc/qkernel.hpp"
#include "qcalc/render.hpp"

using namespace qc;

namespace {

Context make_ctx(int scale = 1) {
    return ContextBuilder(scale).param("a").param("x").small("z").build();
}

LaurentPoly random_poly_in(const Context& ctx, SymId x, std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> qe(0, 2);
    LaurentPoly p(ctx);
    for (int d = 0; d <= maxdeg; ++d) {
        Mono m;
        m.e[x] = d;
        m.e[ctx->base()] = qe(rng) * ctx->base_scale();
        p.add_term(m, Rat(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("finite q-Pochhammer") {
    Context ctx = make_ctx();
    auto a = LaurentPoly::var(ctx, "a");
    auto x = LaurentPoly::var(ctx, "x");
    auto q = LaurentPoly::qpow(ctx, 1);
    auto one = LaurentPoly::one(ctx);

    CHECK(qpochhammer(a, 0) == one);
    CHECK(qpochhammer(q, 2) == (one - q) * (one - q * q));
    CHECK(render(qpochhammer(q, 2)) == "1-q-q^2+q^3");
    CHECK(qpochhammer(x, 1) == one - x);

    SECTION("splitting rule (a;q)_{n+k} = (a;q)_n (a q^n; q)_k") {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 8; ++k)
                CHECK(qpochhammer(a, n + k) ==
                      qpochhammer(a, n) * qpochhammer(a * LaurentPoly::qpow(ctx, n), k));
    }
    SECTION("even/odd split (a;q)_{2n} = (a;q^2)_n (aq;q^2)_n") {
        auto q2 = LaurentPoly::qpow(ctx, 2);
        for (int n = 0; n <= 6; ++n)
            CHECK(qpochhammer(a, 2 * n) ==
                  qpochhammer(a, n, &q2) * qpochhammer(a * q, n, &q2));
    }
    SECTION("square split (a^2;q^2)_n = (a;q)_n (-a;q)_n") {
        auto q2 = LaurentPoly::qpow(ctx, 2);
        for (int n = 0; n <= 6; ++n)
            CHECK(qpochhammer(a * a, n, &q2) == qpochhammer(a, n) * qpochhammer(-a, n));
    }
    SECTION("|q|>1 convention (x;q^-1)_n = q^-binom(n,2) (-x)^n (x^-1;q)_n") {
        auto qinv = LaurentPoly::qpow(ctx, -1);
        auto xinv = x.pow(-1);
        for (int n = 0; n <= 6; ++n) {
            auto lhs = qpochhammer(x, n, &qinv);
            auto rhs = LaurentPoly::qpow(ctx, -binom2(n)) * (-x).pow(n) * qpochhammer(xinv, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Euler expansions of the infinite Pochhammer") {
    Context ctx = make_ctx();
    SymId z = ctx->id_of("z");
    auto zz = LaurentPoly::var(ctx, z);
    auto one = LaurentPoly::one(ctx);
    auto q = LaurentPoly::qpow(ctx, 1);
    auto sc = SeriesCtx{ctx, {z}, 6};

    SECTION("(0;q)_inf = 1") {
        CHECK(qpochhammer_inf_series(LaurentPoly::zero(ctx), sc).equal_to(sc.one()));
    }
    SECTION("1/(z;q)_inf starts 1 + z/(1-q)") {
        auto sc1 = SeriesCtx{ctx, {z}, 1};
        auto s = inv_qpochhammer_inf_series(zz, sc1);
        Mono mz;
        mz.e[z] = 1;
        CHECK(s.coeff(Mono{}).equals(RationalExpr::one(ctx)));
        CHECK(s.coeff(mz).equals(RationalExpr(one, one - q)));
    }
    SECTION("defining functional equation (z;q)_inf = (1-z)(qz;q)_inf") {
        auto lhs = qpochhammer_inf_series(zz, sc);
        auto rhs = qpochhammer_inf_series(q * zz, sc).mul_poly(one - zz).truncate_to(sc.order);
        CHECK(lhs.equal_to(rhs));
    }
    SECTION("product with the inverse is 1") {
        auto prod = qpochhammer_inf_series(zz, sc) * inv_qpochhammer_inf_series(zz, sc);
        CHECK(prod.equal_to(sc.one()));
    }
    SECTION("first factors dominate: difference from a 3-factor product has q-valuation >= 3") {
        auto sc2 = SeriesCtx{ctx, {z}, 2};
        auto full = qpochhammer_inf_series(zz, sc2);
        auto three = sc2.poly(qpochhammer(zz, 3));
        auto diff = full - three;
        for (const auto& [m, c] : diff.terms()) {
            long val = c.num().min_exponent_in(ctx->base());
            CHECK(val >= 3);
        }
    }
    SECTION("small-degree-zero argument is rejected") {
        auto a = LaurentPoly::var(ctx, "a");
        CHECK_THROWS_AS(qpochhammer_inf_series(a, sc), NotFormallySmall);
    }
}

TEST_CASE("q-power truncated infinite Pochhammer") {
    Context ctx = make_ctx();
    auto one = LaurentPoly::one(ctx);
    auto q = LaurentPoly::qpow(ctx, 1);

    CHECK(qpochhammer_qpower_truncated(1, 5, 5, ctx) == one - q);
    CHECK(qpochhammer_qpower_truncated(4, 5, 3, ctx) == one);
    SECTION("matches the brute-force factor product truncated to q-degree N") {
        long N = 3;
        auto brute = qpochhammer(q, 3);  // (1-q)(1-q^2)(1-q^3)
        LaurentPoly trimmed(ctx);
        for (const auto& [m, c] : brute.terms())
            if (m.e[ctx->base()] <= N) trimmed.add_term(m, c);
        CHECK(qpochhammer_qpower_truncated(1, 1, N, ctx) == trimmed);
    }
}

TEST_CASE("Gaussian binomials") {
    Context ctx = make_ctx();
    auto one = LaurentPoly::one(ctx);
    auto q = LaurentPoly::qpow(ctx, 1);

    CHECK(gauss_binomial(ctx, 5, 0) == one);
    CHECK(gauss_binomial(ctx, 2, 1) == one + q);
    CHECK(gauss_binomial(ctx, 3, -1).is_zero());
    CHECK(gauss_binomial(ctx, 3, 4).is_zero());

    SECTION("[4 2] matches the Pochhammer quotient by exact division") {
        auto quot = try_divide(qq_factorial(ctx, 4), qq_factorial(ctx, 2) * qq_factorial(ctx, 2));
        REQUIRE(quot.has_value());
        CHECK(gauss_binomial(ctx, 4, 2) == *quot);
    }
    SECTION("both Pascal rules") {
        for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k <= n + 1; ++k) {
                auto lhs = gauss_binomial(ctx, n + 1, k);
                auto r1 = gauss_binomial(ctx, n, k) +
                          LaurentPoly::qpow(ctx, n + 1 - k) * gauss_binomial(ctx, n, k - 1);
                auto r2 = LaurentPoly::qpow(ctx, k) * gauss_binomial(ctx, n, k) +
                          gauss_binomial(ctx, n, k - 1);
                CHECK(lhs == r1);
                CHECK(lhs == r2);
            }
        }
    }
    SECTION("q^-n representation") {
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                auto lhs = gauss_binomial(ctx, n, k) * qq_factorial(ctx, k);
                auto rhs = qpochhammer(LaurentPoly::qpow(ctx, -n), k) *
                           LaurentPoly::qpow(ctx, n * k - binom2(k)) *
                           LaurentPoly::constant(ctx, Rat(k % 2 == 0 ? 1 : -1));
                CHECK(lhs == rhs);
            }
        }
    }
    SECTION("binomial exponent identities") {
        for (long n = 0; n <= 20; ++n) {
            for (long k = 0; k <= 20; ++k) {
                CHECK(binom2(n + k) == binom2(n) + binom2(k) + n * k);
                CHECK(binom2(n - k) == binom2(n) + binom2(k) + k * (1 - n));
            }
        }
    }
}

TEST_CASE("q-differential operator") {
    Context ctx = make_ctx();
    SymId x = ctx->id_of("x");
    auto X = LaurentPoly::var(ctx, x);
    auto one = LaurentPoly::one(ctx);
    auto q = LaurentPoly::qpow(ctx, 1);

    CHECK(dq(X * X, x) == (one - q * q) * X);
    CHECK(dq(one, x).is_zero());
    CHECK(dq_pow(X * X, x, 2) == (one - q * q) * (one - q));
    CHECK(dq_pow(X * X, x, 0) == X * X);
    CHECK(dq_pow(X * X, x, 3).is_zero());

    SECTION("closed form on monomials: D^n x^k = (q;q)_k/(q;q)_{k-n} x^{k-n}") {
        auto lhs = dq_pow(X.pow(3), x, 2) * qq_factorial(ctx, 1);
        auto rhs = qq_factorial(ctx, 3) * X;
        CHECK(lhs == rhs);
    }
    SECTION("matches the defining quotient (f(x) - f(qx))/x") {
        std::mt19937_64 rng(5150);
        for (int trial = 0; trial < 10; ++trial) {
            auto f = random_poly_in(ctx, x, rng, 5);
            auto shifted = substitute(f, x, q * X);
            auto quot = try_divide(f - shifted, X);
            REQUIRE(quot.has_value());
            CHECK(dq(f, x) == *quot);
        }
    }
    SECTION("negative powers of the target are rejected") {
        CHECK_THROWS_AS(dq(X.pow(-1), x), NegativeExponent);
    }
    SECTION("Leibniz rule with q^{k(k-n)} weights") {
        std::mt19937_64 rng(31337);
        for (int n = 0; n <= 4; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                auto f = random_poly_in(ctx, x, rng, 4);
                auto g = random_poly_in(ctx, x, rng, 4);
                auto lhs = dq_pow(f * g, x, n);
                LaurentPoly rhs(ctx);
                for (int k = 0; k <= n; ++k) {
                    auto gk = substitute(g, x, LaurentPoly::qpow(ctx, k) * X);
                    rhs += LaurentPoly::qpow(ctx, static_cast<long>(k) * (k - n)) *
                           gauss_binomial(ctx, n, k) * dq_pow(f, x, k) *
                           dq_pow(gk, x, n - k);
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("dq on series") {
    Context ctx = make_ctx();
    SymId z = ctx->id_of("z");
    auto zz = LaurentPoly::var(ctx, z);
    auto q = LaurentPoly::qpow(ctx, 1);
    auto one = LaurentPoly::one(ctx);
    auto sc = SeriesCtx{ctx, {z}, 6};

    SECTION("linearity") {
        auto f = inv_qpochhammer_inf_series(zz, sc);
        auto g = qpochhammer_inf_series(q * zz, sc);
        CHECK(dq(f + g, z).equal_to(dq(f, z) + dq(g, z)));
    }
    SECTION("product rule: D(fg) = f Dg + (Df) g(qx)") {
        auto f = inv_qpochhammer_inf_series(zz, sc);
        auto g = qpochhammer_inf_series(zz, sc);
        auto lhs = dq(f * g, z);
        auto gq = g.substitute_scale(z, RationalExpr(q));
        auto rhs = f.truncate_to(sc.order - 1) * dq(g, z) + dq(f, z) * gq.truncate_to(sc.order - 1);
        CHECK(lhs.equal_to(rhs));
    }
    SECTION("order drops by one") {
        auto f = inv_qpochhammer_inf_series(zz, sc);
        CHECK(dq(f, z).order() == sc.order - 1);
    }
}
