#pragma once

#include <random>

#include "qcalc/registry/util.hpp"

namespace qc::reg {

inline void add_kernel_entries(std::vector<IdentitySpec>& R) {
    // (a;q)_n = (a;q)_inf / (a q^n;q)_inf, checked in the series-sound form
    // (a;q)_n * (a q^n;q)_inf = (a;q)_inf with a formally small.
    R.push_back({
        "pochhammer.iden1",
        "S1",
        "Some useful identities for q-shifted factorial",
        "",
        1,
        false,
        8,
        {{"n", 0, 8}},
        mk_ctx({}, {"a"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order);
            long n = get(inst, "n");
            auto a = e.v("a");
            auto lhs = e.einf(a * e.qp(n)).mul_poly(qpochhammer(a, n)).truncate_to(order);
            return compare_series(lhs, e.einf(a));
        },
    });
    R.push_back({
        "pochhammer.iden2",
        "S1",
        "(a;q)_{n+k}&=(a;q)_{n}(aq^{n};q)_{k}",
        "",
        1,
        false,
        8,
        {{"n", 0, 8}, {"k", 0, 8}},
        mk_ctx({"a"}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n"), k = get(inst, "k");
            auto a = e.v("a");
            return compare_polys(qpochhammer(a, n + k),
                                 qpochhammer(a, n) * qpochhammer(a * e.qp(n), k));
        },
    });
    R.push_back({
        "pochhammer.iden3",
        "S1",
        "(a;q)_{2n}&=(a;q^2)_{n}(aq;q^2)_{n}",
        "",
        1,
        false,
        8,
        {{"n", 0, 8}},
        mk_ctx({"a"}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n");
            auto a = e.v("a");
            auto q2 = e.qp(2);
            return compare_polys(qpochhammer(a, 2 * n),
                                 qpochhammer(a, n, &q2) * qpochhammer(a * e.q, n, &q2));
        },
    });
    R.push_back({
        "pochhammer.iden4",
        "S1",
        "(a^2;q^2)_{n}&=(a;q)_{n}(-a;q)_{n}",
        "",
        1,
        false,
        8,
        {{"n", 0, 8}},
        mk_ctx({"a"}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n");
            auto a = e.v("a");
            auto q2 = e.qp(2);
            return compare_polys(qpochhammer(a * a, n, &q2),
                                 qpochhammer(a, n) * qpochhammer(-a, n));
        },
    });
    R.push_back({
        "pochhammer.qinv_convention",
        "S1",
        "(x;q^{-1})_{n}=q^{-\\binom{n}{2}}(-x)^{n}(x^{-1};q)_{n}",
        "",
        1,
        false,
        8,
        {{"n", 0, 8}},
        mk_ctx({"x"}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n");
            auto x = e.v("x");
            auto qinv = e.qp(-1);
            auto lhs = qpochhammer(x, n, &qinv);
            auto rhs = e.qp(-binom2(n)) * (-x).pow(n) * qpochhammer(x.pow(-1), n);
            return compare_polys(lhs, rhs);
        },
    });
    R.push_back({
        "binom.exponent_identities",
        "S1",
        "identities for binomial coefficients",
        "",
        1,
        false,
        0,
        {{"n", 0, 20}, {"k", 0, 20}},
        mk_ctx({}, {}),
        [](const Context&, const Instance& inst, long) {
            long n = get(inst, "n"), k = get(inst, "k");
            long l1 = binom2(n + k), r1 = binom2(n) + binom2(k) + n * k;
            long l2 = binom2(n - k), r2 = binom2(n) + binom2(k) + k * (1 - n);
            if (l1 != r1)
                return CheckResult::fail("binom(n+k,2)", std::to_string(l1), std::to_string(r1));
            if (l2 != r2)
                return CheckResult::fail("binom(n-k,2)", std::to_string(l2), std::to_string(r2));
            return CheckResult::pass();
        },
    });
    R.push_back({
        "pascal.both",
        "S1",
        "The q-binomial verifies that",
        "",
        1,
        false,
        0,
        {{"n", 0, 12}},
        mk_ctx({}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n");
            for (long k = 0; k <= n + 1; ++k) {
                auto lhs = gauss_binomial(ctx, n + 1, k);
                auto r1 = gauss_binomial(ctx, n, k) +
                          e.qp(n + 1 - k) * gauss_binomial(ctx, n, k - 1);
                auto r2 = e.qp(k) * gauss_binomial(ctx, n, k) + gauss_binomial(ctx, n, k - 1);
                auto c1 = compare_polys(lhs, r1);
                if (!c1.ok) return c1;
                auto c2 = compare_polys(lhs, r2);
                if (!c2.ok) return c2;
            }
            return CheckResult::pass();
        },
    });
    R.push_back({
        "qbinomial.qneg_rep",
        "S1",
        "\\frac{(q^{-n};q)_{k}}{(q;q)_{k}}(-q^n)^{k}q^{-\\binom{k}{2}}",
        "",
        1,
        false,
        0,
        {{"n", 0, 8}},
        mk_ctx({}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            long n = get(inst, "n");
            for (long k = 0; k <= n; ++k) {
                auto lhs = gauss_binomial(ctx, n, k) * e.qq(k);
                auto rhs = qpochhammer(e.qp(-n), k) * e.qp(n * k - binom2(k)) *
                           e.num(k % 2 == 0 ? 1 : -1);
                auto c = compare_polys(lhs, rhs);
                if (!c.ok) return c;
            }
            return CheckResult::pass();
        },
    });
    // q-binomial theorem: 1phi0(a;q,z) = (az;q)_inf / (z;q)_inf, both sides
    // through Euler expansions.
    R.push_back({
        "qbinomial.theorem",
        "S1",
        "we will frequently use the $q$-binomial theorem",
        "",
        1,
        false,
        10,
        {},
        mk_ctx({"a"}, {"z"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto a = e.v("a");
            auto z = e.v("z");
            auto lhs = e.phi({{a}, {}, e.q, e.one, z});
            auto rhs = e.einf(a * z) * e.inv_einf(z);
            return compare_series(lhs, rhs);
        },
    });
    R.push_back({
        "sokal.functional_eq",
        "S1",
        "satisfies the functional equation",
        "",
        1,
        false,
        10,
        {},
        mk_ctx({"u"}, {"z"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto z = e.v("z");
            auto u = e.v("u");
            auto resid = e.eq(z, u) - e.eq(e.q * z, u) -
                         e.eq(u * z, u).mul_poly(z).truncate_to(order);
            return expect_zero_series(resid);
        },
    });
    R.push_back({
        "hn.generating",
        "S1",
        "has the following generating function",
        "",
        1,
        false,
        8,
        {},
        mk_ctx({"x"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x");
            auto t = e.v("t");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                auto term = e.poly(rogers_szego_h(n, x) * t.pow(n));
                term.scale(e.inv_qq(n));
                lhs += term;
            }
            return compare_series(lhs, e.inv_einf(t) * e.inv_einf(x * t));
        },
    });
    R.push_back({
        "hn.mehler",
        "S1",
        "The Mehler's formula for",
        "",
        1,
        false,
        8,
        {},
        mk_ctx({"x", "y"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), t = e.v("t");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                auto term = e.poly(rogers_szego_h(n, x) * rogers_szego_h(n, y) * t.pow(n));
                term.scale(e.inv_qq(n));
                lhs += term;
            }
            auto rhs = e.einf(x * y * t * t) * e.inv_einf(t) * e.inv_einf(x * t) *
                       e.inv_einf(y * t) * e.inv_einf(x * y * t);
            return compare_series(lhs, rhs);
        },
    });
    R.push_back({
        "hn.rogers",
        "S1",
        "The Rogers formula for",
        "",
        1,
        false,
        8,
        {},
        mk_ctx({"x"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(rogers_szego_h(n + m, x) * t.pow(n) * s.pow(m));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            auto rhs = e.einf(x * s * t) * e.inv_einf(t) * e.inv_einf(x * t) * e.inv_einf(s) *
                       e.inv_einf(x * s);
            return compare_series(lhs, rhs);
        },
    });

    // --- Section 2: q-differential operator ---------------------------------

    // Leibniz rule on seeded random polynomial pairs; each trial checks all
    // n <= 4 on fresh degree-<=4 polynomials.
    R.push_back({
        "dq.leibniz",
        "S2",
        "the Leibniz rule for",
        "",
        1,
        false,
        0,
        {{"trial", 1, 25}},
        mk_ctx({"x"}, {}),
        [](const Context& ctx, const Instance& inst, long) {
            Env e(ctx, 0);
            SymId x = ctx->id_of("x");
            auto X = e.v("x");
            std::mt19937_64 rng(0x5eedULL + 1000003ULL * get(inst, "trial"));
            std::uniform_int_distribution<long> coef(-5, 5);
            std::uniform_int_distribution<int> qe(0, 2);
            auto rand_poly = [&]() {
                LaurentPoly p(ctx);
                for (int d = 0; d <= 4; ++d) {
                    Mono m;
                    m.e[x] = d;
                    m.e[ctx->base()] = qe(rng) * ctx->base_scale();
                    p.add_term(m, Rat(coef(rng)));
                }
                return p;
            };
            auto f = rand_poly();
            auto g = rand_poly();
            for (long n = 0; n <= 4; ++n) {
                auto lhs = dq_pow(f * g, x, n);
                LaurentPoly rhs(ctx);
                for (long k = 0; k <= n; ++k) {
                    auto gk = substitute(g, x, e.qp(k) * X);
                    rhs += e.qp(k * (k - n)) * gauss_binomial(ctx, n, k) * dq_pow(f, x, k) *
                           dq_pow(gk, x, n - k);
                }
                auto c = compare_polys(lhs, rhs);
                if (!c.ok) return c;
            }
            return CheckResult::pass();
        },
    });
    // D_q^k e_q(ax,u) = a^k u^binom(k,2) e_q(a u^k x, u)
    R.push_back({
        "dq.kder_basic",
        "S2",
        "following basic identity from",
        "",
        1,
        false,
        8,
        {{"k", 0, 4}},
        mk_ctx({"a", "u"}, {"x"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order);
            long k = get(inst, "k");
            SymId x = ctx->id_of("x");
            auto a = e.v("a"), u = e.v("u"), X = e.v("x");
            auto lhs = dq_pow(e.eq(a * X, u), x, k);
            auto rhs = e.eq(a * u.pow(k) * X, u, e.at(order - k))
                           .mul_poly(a.pow(k) * u.pow(binom2(k)));
            return compare_series(lhs, rhs);
        },
    });
    // D_q^n {(ax,bx;q)_inf}; the printed display omits the (-1)^n carried by
    // (ax;q)_inf = e_q(-ax, q) (check n=1, b=0: D_q (ax;q)_inf = -a(aqx;q)_inf).
    R.push_back({
        "dq.product.iden6",
        "S2",
        "If $u=v=q$, then",
        "printed right side is missing the factor (-1)^n; verified with it restored",
        1,
        false,
        6,
        {{"n", 1, 3}},
        mk_ctx({"a", "b"}, {"x"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order + 3);
            long n = get(inst, "n");
            SymId x = ctx->id_of("x");
            auto a = e.v("a"), b = e.v("b"), X = e.v("x");
            auto lhs = dq_pow(e.einf(a * X) * e.einf(b * X), x, n);
            SeriesCtx inner = e.at(e.sc.order - n);
            auto tails = qpochhammer_inf_series(a * X, inner) *
                         qpochhammer_inf_series(b * e.qp(n) * X, inner);
            TruncatedSeries sum = TruncatedSeries::zero(ctx, inner.smalls, inner.order);
            for (long k = 0; k <= n; ++k) {
                auto term = tails * inv_qpochhammer_series(a * X, k, inner);
                term = term.mul_poly(gauss_binomial(ctx, n, k) * a.pow(k) * b.pow(n - k));
                term.scale(RationalExpr(e.qp(k * (k - n))));
                sum += term.truncate_to(inner.order);
            }
            sum.scale(RationalExpr(e.qp(binom2(n)) * e.num(n % 2 == 0 ? 1 : -1)));
            return compare_series(lhs, sum);
        },
    });
    R.push_back({
        "dq.product.iden7",
        "S2",
        "If $u=q$ and $v=1$ then",
        "",
        1,
        false,
        6,
        {{"n", 1, 3}},
        mk_ctx({"a", "b"}, {"x"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order + 3);
            long n = get(inst, "n");
            SymId x = ctx->id_of("x");
            auto a = e.v("a"), b = e.v("b"), X = e.v("x");
            auto ratio = e.einf(-(a * X)) * e.inv_einf(b * X);
            auto lhs = dq_pow(ratio, x, n);
            SeriesCtx inner = e.at(e.sc.order - n);
            auto base = qpochhammer_inf_series(-(a * X), inner) *
                        inv_qpochhammer_inf_series(b * X, inner);
            TruncatedSeries sum = TruncatedSeries::zero(ctx, inner.smalls, inner.order);
            for (long k = 0; k <= n; ++k) {
                auto term = base * inv_qpochhammer_series(-(a * X), k, inner);
                term = term.mul_poly(gauss_binomial(ctx, n, k) * e.qp(binom2(k)) * a.pow(k) *
                                     b.pow(n - k) * qpochhammer(b * X, k));
                sum += term.truncate_to(inner.order);
            }
            return compare_series(lhs, sum);
        },
    });
    R.push_back({
        "dq.product.iden8",
        "S2",
        "If $u=v=1$, then",
        "",
        1,
        false,
        6,
        {{"n", 1, 3}},
        mk_ctx({"a", "b"}, {"x"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order + 3);
            long n = get(inst, "n");
            SymId x = ctx->id_of("x");
            auto a = e.v("a"), b = e.v("b"), X = e.v("x");
            auto prod = e.inv_einf(a * X) * e.inv_einf(b * X);
            auto lhs = dq_pow(prod, x, n);
            SeriesCtx inner = e.at(e.sc.order - n);
            auto base = inv_qpochhammer_inf_series(a * X, inner) *
                        inv_qpochhammer_inf_series(b * X, inner);
            LaurentPoly weights(ctx);
            for (long k = 0; k <= n; ++k)
                weights += gauss_binomial(ctx, n, k) * a.pow(k) * b.pow(n - k) *
                           qpochhammer(b * X, k);
            auto rhs = base.mul_poly(weights).truncate_to(inner.order);
            return compare_series(lhs, rhs);
        },
    });
}

}  // namespace qc::reg
