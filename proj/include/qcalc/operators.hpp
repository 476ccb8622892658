#pragma once

#include "qcalc/special.hpp"

namespace qc {

/// The u-deformed q-exponential operator T(yD_q | u) acting on series in a
/// designated symbol:  sum_n u^binom(n,2) y^n D_q^n / (q;q)_n.
///
/// `coeff` is the full y-monomial (it may carry a sign or parameters, e.g.
/// -b for the Saad operator) and must contain at least one small symbol so
/// the output is jointly truncated in target and coefficient variables.
struct OperatorSpec {
    SymId target;       // the x of D_q
    LaurentPoly coeff;  // the y-monomial introduced by the operator
    LaurentPoly u;      // deformation monomial
};

inline OperatorSpec chen_operator(SymId x, const LaurentPoly& b) {
    return {x, b, LaurentPoly::one(b.ctx())};
}
inline OperatorSpec saad_operator(SymId x, const LaurentPoly& b) {
    return {x, -b, LaurentPoly::qpow(b.ctx(), 1)};
}
inline OperatorSpec exton_operator(SymId x, const LaurentPoly& y) {
    if (!y.ctx()->has_sqrt_base())
        throw ScaleUnavailable("Exton operator needs base_scale divisible by 2");
    return {x, y, LaurentPoly::qpow_half(y.ctx(), 1)};
}
inline OperatorSpec rogers_ramanujan_operator(SymId x, const LaurentPoly& y) {
    return {x, LaurentPoly::qpow(y.ctx(), 1) * y, LaurentPoly::qpow(y.ctx(), 2)};
}

/// Applies the operator. Output order equals the input order: the y^n x^j
/// term depends only on the x^(j+n) input coefficient, so the n-th summand
/// loses n orders to D_q^n and regains them from the y^n factor.
inline TruncatedSeries apply_operator(const OperatorSpec& op, const TruncatedSeries& f) {
    const Context& ctx = f.ctx();
    check_same_context(ctx, op.coeff.ctx());
    auto [ym, yc] = detail::single_term(op.coeff, "apply_operator");
    long dy = detail::small_total(ctx, ym);
    if (dy < 1) throw QcError("operator coefficient must contain a small symbol");
    for (int i = 0; i < ctx->nsym(); ++i) {
        if (ym.e[i] == 0 || !ctx->is_small(i)) continue;
        for (const auto& [m, c] : f.terms())
            if (m.e[i] != 0)
                throw TargetSymbolInCoefficient("operand already involves " +
                                                ctx->info(i).name);
    }

    std::vector<SymId> smalls = f.smalls();
    for (int i = 0; i < ctx->nsym(); ++i) {
        if (ym.e[i] != 0 && ctx->is_small(i) &&
            std::find(smalls.begin(), smalls.end(), i) == smalls.end())
            smalls.push_back(i);
    }
    std::sort(smalls.begin(), smalls.end());

    TruncatedSeries result = TruncatedSeries::zero(ctx, smalls, f.order());
    TruncatedSeries dqf = f.with_smalls(smalls);
    LaurentPoly ypow = LaurentPoly::one(ctx);
    for (long n = 0;; ++n) {
        if (n > 0) {
            if (dqf.order() == 0) break;
            dqf = dqf.dq_small(op.target);
            ypow *= op.coeff;
        }
        if (n * dy > f.order()) break;
        TruncatedSeries term = dqf.mul_poly(ypow * op.u.pow(binom2(n)));
        term.scale(RationalExpr(LaurentPoly::one(ctx), qq_factorial(ctx, n)));
        result += term.truncate_to(f.order());
        if (dqf.is_zero()) break;
    }
    return result;
}

struct SeriesPair {
    TruncatedSeries lhs, rhs;
};

/// Both sides of T(yD_q|u){ e_q(a x, v) } =
///   sum_k (uv)^binom(k,2) (a y)^k / (q;q)_k  e_q(a v^k x, v).
inline SeriesPair operator_on_exponential(const OperatorSpec& op, const LaurentPoly& a,
                                          const LaurentPoly& v, const SeriesCtx& sc) {
    const Context& ctx = sc.ctx;
    if (op.u.is_zero()) throw QcError("operator deformation must be nonzero here");
    LaurentPoly x = LaurentPoly::var(ctx, op.target);
    TruncatedSeries lhs = apply_operator(op, eq_deformed(a * x, v, sc));

    TruncatedSeries rhs = TruncatedSeries::zero(ctx, lhs.smalls(), sc.order);
    for (long k = 0; k <= sc.order; ++k) {
        LaurentPoly weight = (op.u * v).pow(binom2(k)) * (a * op.coeff).pow(k);
        if (weight.is_zero()) break;
        // Each summand carries (ay)^k, so order N - k inside is enough.
        SeriesCtx inner{ctx, lhs.smalls(), sc.order - k};
        TruncatedSeries e = eq_deformed(a * v.pow(k) * x, v, inner);
        TruncatedSeries term = e.mul_poly(weight);
        term.scale(RationalExpr(LaurentPoly::one(ctx), qq_factorial(ctx, k)));
        rhs += term.truncate_to(sc.order);
    }
    return {std::move(lhs), std::move(rhs)};
}

/// Both sides of Theorem-style
///   T(yD_q|u){ e_q(ax,v) e_q(bx,w) } =
///   sum_{k,n} (uv)^binom(k,2) (uw)^binom(n,2) (ay)^k (u^k b y)^n
///             / ((q;q)_k (q;q)_n)  e_q(a v^k x, v) e_q(b q^k w^n x, w).
inline SeriesPair operator_on_product(const OperatorSpec& op, const LaurentPoly& a,
                                      const LaurentPoly& v, const LaurentPoly& b,
                                      const LaurentPoly& w, const SeriesCtx& sc) {
    const Context& ctx = sc.ctx;
    LaurentPoly x = LaurentPoly::var(ctx, op.target);
    TruncatedSeries product = eq_deformed(a * x, v, sc) * eq_deformed(b * x, w, sc);
    TruncatedSeries lhs = apply_operator(op, product);

    LaurentPoly q1 = LaurentPoly::qpow(ctx, 1);
    TruncatedSeries rhs = TruncatedSeries::zero(ctx, lhs.smalls(), sc.order);
    for (long k = 0; k <= sc.order; ++k) {
        for (long n = 0; k + n <= sc.order; ++n) {
            LaurentPoly weight = (op.u * v).pow(binom2(k)) * (op.u * w).pow(binom2(n)) *
                                 (a * op.coeff).pow(k) * (op.u.pow(k) * b * op.coeff).pow(n);
            if (weight.is_zero()) continue;
            SeriesCtx inner{ctx, lhs.smalls(), sc.order - k - n};
            TruncatedSeries e1 = eq_deformed(a * v.pow(k) * x, v, inner);
            TruncatedSeries e2 = eq_deformed(b * q1.pow(k) * w.pow(n) * x, w, inner);
            TruncatedSeries term = (e1 * e2).mul_poly(weight);
            term.scale(RationalExpr(LaurentPoly::one(ctx),
                                    qq_factorial(ctx, k) * qq_factorial(ctx, n)));
            rhs += term.truncate_to(sc.order);
        }
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace qc
