#pragma once

#include "qcalc/registry/util.hpp"

namespace qc::reg {

inline void add_hyper_entries(std::vector<IdentitySpec>& R) {
    // (r+1)Phi_r(a_1..a_r, 0; b_1..b_r; q, q, z) = rphi_r(a_1..a_r; b_1..b_r; q, -z)
    R.push_back({
        "phi.deformed_reduction",
        "S3",
        "Therefore, a deformed basic hypergeometric series generalizes",
        "",
        1,
        false,
        6,
        {{"r", 1, 2}},
        mk_ctx({"a1", "a2", "b1", "b2"}, {"z"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order);
            long r = get(inst, "r");
            auto z = e.v("z");
            std::vector<LaurentPoly> up, lo;
            for (long i = 1; i <= r; ++i) {
                up.push_back(e.v("a" + std::to_string(i)));
                lo.push_back(e.v("b" + std::to_string(i)));
            }
            auto up_def = up;
            up_def.push_back(LaurentPoly::zero(ctx));
            auto lhs = e.phi({up_def, lo, e.q, e.q, z});
            auto rhs = e.phi({up, lo, e.q, e.one, -z});
            return compare_series(lhs, rhs);
        },
    });
    // D_q^n 2Phi1(a,b;c;q,u,z)
    //   = u^binom(n,2) (a,b;q)_n/(c;q)_n 2Phi1(aq^n,bq^n;cq^n;q,u,u^n z)
    R.push_back({
        "phi21.dq_pow",
        "S3",
        "which can be checked directly",
        "",
        1,
        false,
        6,
        {{"n", 0, 3}},
        mk_ctx({"a", "b", "c", "u"}, {"z"}),
        [](const Context& ctx, const Instance& inst, long order) {
            Env e(ctx, order + 3);
            long n = get(inst, "n");
            SymId z = ctx->id_of("z");
            auto a = e.v("a"), b = e.v("b"), c = e.v("c"), u = e.v("u"), Z = e.v("z");
            auto lhs = dq_pow(e.phi({{a, b}, {c}, e.q, u, Z}), z, n);
            auto rhs = e.phi({{a * e.qp(n), b * e.qp(n)}, {c * e.qp(n)}, e.q, u, u.pow(n) * Z},
                             e.at(e.sc.order - n));
            rhs.scale(RationalExpr(u.pow(binom2(n)) * qpochhammer(a, n) * qpochhammer(b, n),
                                   qpochhammer(c, n)));
            return compare_series(lhs, rhs);
        },
    });
    // Five-term q-difference equation satisfied by f = 2Phi1; all shifted
    // arguments substitute first, then differentiate.
    R.push_back({
        "phi21.qdiff",
        "S3",
        "satisfies the q-difference equation",
        "",
        1,
        false,
        10,
        {},
        mk_ctx({"a", "b", "c", "u"}, {"z"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order + 2);
            SymId z = ctx->id_of("z");
            auto a = e.v("a"), b = e.v("b"), c = e.v("c"), u = e.v("u"), Z = e.v("z");
            auto f = e.phi({{a, b}, {c}, e.q, u, Z});
            auto g = f.substitute_scale(z, RationalExpr(u));
            auto one = e.one;
            auto term1 = dq_pow(f, z, 2).mul_poly(c * Z);
            auto term2 = dq_pow(g, z, 2).mul_poly(a * b * e.qp(1) * Z * Z);
            auto term3 = dq(f, z).mul_poly(one - c);
            auto bracket = (one - a) * (one - b) - (one - a * b * e.qp(1));
            auto term4 = dq(g, z).mul_poly(bracket * Z);
            auto term5 = g.mul_poly((one - a) * (one - b));
            auto resid = term1.truncate_to(order) - term2.truncate_to(order) +
                         term3.truncate_to(order) + term4.truncate_to(order) -
                         term5.truncate_to(order);
            return expect_zero_series(resid);
        },
    });
    // Formal q->1 limit equation for the deformed Gauss series:
    //   z f''(z) - z^2 g''(z) + c f'(z) - (a+b+1) z g'(z) - a b g(z) = 0,
    // with g(z) = f(uz) substituted before differentiating.
    R.push_back({
        "gauss2F1.limit_eq",
        "S3",
        "tends to the functional-differential equation",
        "",
        1,
        false,
        8,
        {},
        mk_ctx({"a", "b", "c", "u"}, {"z"}),
        [](const Context& ctx, const Instance&, long order) {
            Env e(ctx, order + 2);
            SymId z = ctx->id_of("z");
            auto a = e.v("a"), b = e.v("b"), c = e.v("c"), u = e.v("u"), Z = e.v("z");
            auto f = gauss2F1_deformed(ctx->id_of("a"), ctx->id_of("b"), ctx->id_of("c"), u, Z,
                                       e.sc);
            auto g = f.substitute_scale(z, RationalExpr(u));
            auto one = e.one;
            auto resid = f.derivative(z).derivative(z).mul_poly(Z).truncate_to(order) -
                         g.derivative(z).derivative(z).mul_poly(Z * Z).truncate_to(order) +
                         f.derivative(z).mul_poly(c).truncate_to(order) -
                         g.derivative(z).mul_poly((a + b + one) * Z).truncate_to(order) -
                         g.mul_poly(a * b).truncate_to(order);
            return expect_zero_series(resid);
        },
    });
}

}  // namespace qc::reg
