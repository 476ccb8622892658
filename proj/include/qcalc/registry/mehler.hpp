#pragma once

#include "qcalc/registry/util.hpp"

namespace qc::reg {

inline void add_mehler_rogers_entries(std::vector<IdentitySpec>& R) {
    // Mehler-type bilinear generating function for R_n, fully symbolic.
    R.push_back({
        "mehler.generalized",
        "S8",
        "Mehler's formula",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y", "z", "w", "u", "v"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), z = e.v("z"), w = e.v("w");
            auto u = e.v("u"), v = e.v("v"), t = e.v("t");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                auto term = e.poly(r_upoly(n, x, y, u) * r_upoly(n, z, w, v) * t.pow(n));
                term.scale(e.inv_qq(n));
                lhs += term;
            }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto term = e.eq(t * w * x * v.pow(k), v, inner) *
                            e.eq(t * y * z * u.pow(k), u, inner);
                term = term.mul_poly((u * v).pow(binom2(k)) * (t * w * y).pow(k) *
                                     qpochhammer(t * z * x, k));
                term.scale(e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.inv_einf(t * z * x) * sum;
            return compare_series(lhs, rhs);
        },
    });
    // Srivastava-Agarwal type representation: Mehler with the second slot
    // specialized to (1, -a, q).
    R.push_back({
        "mehler.srivastava_agarwal",
        "S8",
        "The representation type Srivastava-Agarwal",
        "printed display carries a dangling deformation v and misplaced "
        "Pochhammers; the entry verifies the specialization the statement "
        "names: sum R_n(x,y;u)(a;q)_n t^n/(q;q)_n = ((atx;q)inf/(tx;q)inf) "
        "sum_k (qu)^binom(k,2) (-aty)^k (tx;q)_k/((atx;q)_k (q;q)_k) e_q(t y u^k, u)",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y", "u", "a"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), u = e.v("u"), a = e.v("a"), t = e.v("t");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                auto term = e.poly(r_upoly(n, x, y, u) * t.pow(n));
                term.scale(RationalExpr(qpochhammer(a, n), e.qq(n)));
                lhs += term;
            }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto term = e.eq(t * y * u.pow(k), u, inner) *
                            e.inv_poch(a * t * x, k, inner);
                term = term.mul_poly((e.q * u).pow(binom2(k)) * (-(a * t * y)).pow(k) *
                                     qpochhammer(t * x, k));
                term.scale(e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.einf(a * t * x) * e.inv_einf(t * x) * sum;
            return compare_series(lhs, rhs);
        },
    });
    // Srivastava-Agarwal generating function for h_n.
    R.push_back({
        "mehler.sa_hn",
        "S8",
        "following result of Srivastava and Agarwal",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), t = e.v("t");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                auto term = e.poly(rogers_szego_h(n, x) * t.pow(n));
                term.scale(RationalExpr(qpochhammer(y, n), e.qq(n)));
                lhs += term;
            }
            auto rhs = e.einf(t * y) * e.inv_einf(t) * e.inv_einf(t * x) *
                       e.phi({{t}, {t * y}, e.q, e.one, t * x * y});
            return compare_series(lhs, rhs);
        },
    });
    // Transformation formula for 1phi2; the printed argument -txy needs the
    // opposite sign to close against 2phi1(x,y;0;q,t).
    R.push_back({
        "mehler.phi12_transform",
        "S8",
        "Transformation formula for ${}_{1}\\phi_{2}$",
        "printed argument -txy; the Mehler specialization u=v=q, x=z=1, "
        "y->-x, w->-y produces +txy, which is the form verified",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y"}, {"t"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), t = e.v("t");
            auto lhs =
                e.phi({{t}, {t * x, t * y}, e.q, e.one, t * x * y});
            auto rhs = e.einf(t) * e.inv_einf(t * x) * e.inv_einf(t * y) *
                       e.phi({{x, y}, {LaurentPoly::zero(ctx)}, e.q, e.one, t});
            return compare_series(lhs, rhs);
        },
    });
    // Rogers-type double generating function, fully symbolic.
    R.push_back({
        "rogers.generalized",
        "S8",
        "Rogers formula",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y", "u", "v", "w"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), u = e.v("u"), v = e.v("v"), w = e.v("w");
            auto t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(r_upoly(n + m, x, y, u) * v.pow(binom2(n)) *
                                       w.pow(binom2(m)) * t.pow(n) * s.pow(m));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            TruncatedSeries rhs = e.zero();
            for (long k = 0; k <= order; ++k)
                for (long n = 0; k + n <= order; ++n) {
                    SeriesCtx inner = e.at(order - k - n);
                    auto term = e.eq(t * v.pow(k) * x, v, inner) *
                                e.eq(s * e.qp(k) * w.pow(n) * x, w, inner);
                    term = term.mul_poly((u * v).pow(binom2(k)) * (u * w).pow(binom2(n)) *
                                         (t * y).pow(k) * (u.pow(k) * s * y).pow(n));
                    term.scale(e.inv_qq2(k, n));
                    rhs += term.truncate_to(order);
                }
            return compare_series(lhs, rhs);
        },
    });
    // u=q, v=w=1 (with the first slot specialized to (1,-x) so R becomes a
    // Pochhammer).
    R.push_back({
        "rogers.coro.uq_v1w1",
        "S8",
        "If $u=q$ and $v=w=1$ in Theorem",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(qpochhammer(x, n + m) * t.pow(n) * s.pow(m));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            auto rhs = e.einf(s * x) * e.inv_einf(t) * e.inv_einf(s) *
                       e.phi({{s}, {s * x}, e.q, e.one, t * x});
            return compare_series(lhs, rhs);
        },
    });
    // v=1, w=q corollary with the deformed 1Phi1 tail.
    R.push_back({
        "rogers.coro.v1wq",
        "S8",
        "If $v=1,w=q$, then",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y", "u"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), u = e.v("u"), t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(r_upoly(n + m, x, y, u) * e.qp(binom2(m)) * t.pow(n) *
                                       s.pow(m));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto phi = e.phi({{LaurentPoly::zero(ctx)},
                                  {-(s * x * e.qp(k))},
                                  e.q,
                                  u,
                                  -(u.pow(k) * s * y)},
                                 inner);
                auto term = phi * e.inv_poch(-(s * x), k, inner);
                term = term.mul_poly(u.pow(binom2(k)) * (t * y).pow(k));
                term.scale(e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.einf(-(s * x)) * e.inv_einf(t * x) * sum;
            return compare_series(lhs, rhs);
        },
    });
    R.push_back({
        "rogers.coro.u1_sneg",
        "S8",
        "Set $u=1$ and $s\\mapsto-s$ in Corollary",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(homogeneous_r(n + m, x, y) * e.qp(binom2(m)) *
                                       t.pow(n) * s.pow(m) * e.num(m % 2 == 0 ? 1 : -1));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto phi = e.phi(
                    {{LaurentPoly::zero(ctx)}, {s * x * e.qp(k)}, e.q, e.one, s * y}, inner);
                auto term = phi * e.inv_poch(s * x, k, inner);
                term = term.mul_poly((t * y).pow(k));
                term.scale(e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.einf(s * x) * e.inv_einf(t * x) * sum;
            return compare_series(lhs, rhs);
        },
    });
    R.push_back({
        "rogers.coro.uq_sneg",
        "S8",
        "Set $u=q$ and $s\\mapsto-s$ in Corollary",
        "",
        1,
        false,
        6,
        {},
        mk_ctx({"x"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), t = e.v("t"), s = e.v("s");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(qpochhammer(x, n + m) * e.qp(binom2(m)) * t.pow(n) *
                                       s.pow(m) * e.num(m % 2 == 0 ? 1 : -1));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto phi = e.phi({{}, {s * e.qp(k)}, e.q, e.one, e.qp(k) * s * x}, inner);
                auto term = phi * e.inv_poch(s, k, inner);
                term = term.mul_poly(e.qp(binom2(k)) * (-(t * x)).pow(k));
                term.scale(e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.einf(s) * e.inv_einf(t) * sum;
            return compare_series(lhs, rhs);
        },
    });
    // u = q^-1: the printed 2phi1 argument q^k s y needs q^-k (the corollary
    // it specializes carries -u^k s y with u = q^-1).
    R.push_back({
        "rogers.coro.uqinv",
        "S8",
        "If $u=q^{-1}$ in Corollary",
        "printed 2phi1 argument q^k s y; substituting u=q^-1 into the parent "
        "corollary's -u^k s y gives q^-k s y, which is the form verified",
        1,
        false,
        6,
        {},
        mk_ctx({"x", "y"}, {"t", "s"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), t = e.v("t"), s = e.v("s");
            auto qinv = e.qp(-1);
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n)
                for (long m = 0; n + m <= order; ++m) {
                    auto term = e.poly(r_upoly(n + m, x, y, qinv) * e.qp(binom2(m)) *
                                       t.pow(n) * s.pow(m));
                    term.scale(e.inv_qq2(n, m));
                    lhs += term;
                }
            TruncatedSeries sum = e.zero();
            for (long k = 0; k <= order; ++k) {
                SeriesCtx inner = e.at(order - k);
                auto phi = e.phi({{LaurentPoly::zero(ctx), LaurentPoly::zero(ctx)},
                                  {-(s * x * e.qp(k))},
                                  e.q,
                                  e.one,
                                  e.qp(-k) * s * y},
                                 inner);
                auto term = phi * e.inv_poch(-(s * x), k, inner);
                term = term.mul_poly((t * y).pow(k));
                term.scale(RationalExpr(e.qp(-binom2(k))) * e.inv_qq(k));
                sum += term.truncate_to(order);
            }
            auto rhs = e.einf(-(s * x)) * e.inv_einf(t * x) * sum;
            return compare_series(lhs, rhs);
        },
    });
}

}  // namespace qc::reg
