#pragma once

#include "qcalc/qkernel.hpp"

namespace qc {

// ---------------------------------------------------------------------------
// Deformed q-exponential e_q(z, u) = sum_n u^binom(n,2) z^n / (q;q)_n,
// collapsing to 1 + z/(1-q) at u = 0. z must be a monomial of small
// degree >= 1; u a Laurent monomial (or zero / one).
// ---------------------------------------------------------------------------

inline TruncatedSeries eq_deformed(const LaurentPoly& z, const LaurentPoly& u,
                                   const SeriesCtx& sc) {
    auto [zm, zc] = detail::single_term(z, "eq_deformed");
    long d = detail::small_total(sc.ctx, zm);
    if (d < 1) throw NotFormallySmall("e_q(z,u) needs z of small degree >= 1");
    if (u.is_zero()) {
        TruncatedSeries r = sc.one();
        RationalExpr c(LaurentPoly::one(sc.ctx),
                       LaurentPoly::one(sc.ctx) - LaurentPoly::qpow(sc.ctx, 1));
        TruncatedSeries zterm = sc.poly(z);
        zterm.scale(c);
        return r + zterm;
    }
    if (!u.is_monomial()) throw QcError("e_q(z,u): u must be a monomial or zero");
    TruncatedSeries r = sc.zero();
    LaurentPoly zpow = LaurentPoly::one(sc.ctx);
    for (long n = 0; n * d <= sc.order; ++n) {
        TruncatedSeries term = sc.poly(zpow * u.pow(binom2(n)));
        term.scale(RationalExpr(LaurentPoly::one(sc.ctx), qq_factorial(sc.ctx, n)));
        r += term;
        zpow *= z;
    }
    return r;
}

enum class NamedExp { E_q, Exton, RogersRamanujan };

/// E_q(z) = e_q(z, q); Exton = e_q(z, sqrt(q)); Rogers-Ramanujan = e_q(qz, q^2).
inline TruncatedSeries named_exponential(NamedExp kind, const LaurentPoly& z,
                                         const SeriesCtx& sc) {
    switch (kind) {
        case NamedExp::E_q:
            return eq_deformed(z, LaurentPoly::qpow(sc.ctx, 1), sc);
        case NamedExp::Exton:
            if (!sc.ctx->has_sqrt_base())
                throw ScaleUnavailable("Exton exponential needs base_scale divisible by 2");
            return eq_deformed(z, LaurentPoly::qpow_half(sc.ctx, 1), sc);
        case NamedExp::RogersRamanujan:
            return eq_deformed(LaurentPoly::qpow(sc.ctx, 1) * z, LaurentPoly::qpow(sc.ctx, 2),
                               sc);
    }
    throw QcError("unreachable");
}

// ---------------------------------------------------------------------------
// Deformed basic hypergeometric series  rPhi_s.
//
// term_n = u^binom(n,2) (a_1..a_r; b)_n / ((b;b)_n (b_1..b_s; b)_n)
//          [(-1)^n b^binom(n,2)]^(1+s-r) z^n
//
// The base b may be q or sqrt(q) (any positive base power). Parameters may
// carry small symbols; numerator ones multiply in as polynomials, lower
// ones expand through geometric series. A lower parameter whose Pochhammer
// vanishes at some n within range raises ZeroDenominatorParameter.
// ---------------------------------------------------------------------------

struct HyperSpec {
    std::vector<LaurentPoly> upper;
    std::vector<LaurentPoly> lower;
    LaurentPoly base;  // base power monomial, e.g. q or q^(1/2)
    LaurentPoly u;     // deformation; one() for the classical series
    LaurentPoly z;     // argument, small degree >= 1
};

inline TruncatedSeries phi_deformed(const HyperSpec& spec, const SeriesCtx& sc) {
    const Context& ctx = sc.ctx;
    auto [zm, zc] = detail::single_term(spec.z, "phi_deformed");
    long d = detail::small_total(ctx, zm);
    if (d < 1) throw NotFormallySmall("phi argument needs small degree >= 1");
    const long r = static_cast<long>(spec.upper.size());
    const long s = static_cast<long>(spec.lower.size());
    const long norm_pow = 1 + s - r;

    std::vector<const LaurentPoly*> small_upper, param_upper, small_lower, param_lower;
    for (const auto& a : spec.upper)
        (a.small_degree_min() > 0 ? small_upper : param_upper).push_back(&a);
    for (const auto& b : spec.lower)
        (b.small_degree_min() > 0 ? small_lower : param_lower).push_back(&b);

    TruncatedSeries result = sc.zero();
    LaurentPoly zpow = LaurentPoly::one(ctx);
    for (long n = 0; n * d <= sc.order; ++n) {
        // Scalar coefficient: deformation, normalization, parameter Pochhammers.
        LaurentPoly num = spec.u.pow(binom2(n));
        if (norm_pow != 0) {
            LaurentPoly f = spec.base.pow(binom2(n) * norm_pow);
            if ((n * norm_pow) % 2 != 0) f = -f;
            num *= f;
        }
        for (const auto* a : param_upper) num *= qpochhammer(*a, n, &spec.base);
        LaurentPoly den = qpochhammer(spec.base, n, &spec.base);  // (b;b)_n
        for (const auto* b : param_lower) den *= qpochhammer(*b, n, &spec.base);
        if (den.is_zero())
            throw ZeroDenominatorParameter("lower parameter Pochhammer vanishes at n = " +
                                           std::to_string(n));
        if (num.is_zero()) {  // terminating upper parameter
            zpow *= spec.z;
            continue;
        }
        TruncatedSeries term = sc.poly(zpow);
        term.scale(RationalExpr(std::move(num), std::move(den)));
        for (const auto* a : small_upper) term = term.mul_poly(qpochhammer(*a, n, &spec.base));
        for (const auto* b : small_lower) {
            // 1/(b_j; base)_n, expanded factor by factor.
            LaurentPoly bp = *b;
            for (long k = 0; k < n; ++k) {
                term *= geometric_series(bp, sc);
                bp *= spec.base;
            }
        }
        result += term;
        zpow *= spec.z;
    }
    return result;
}

/// Terminating series summed to k = kmax with an arbitrary Laurent monomial
/// argument (no small symbols needed). Used by the polynomial
/// representations, where the argument may contain x^(-1).
inline RationalExpr terminating_phi(const std::vector<LaurentPoly>& upper,
                                    const std::vector<LaurentPoly>& lower,
                                    const LaurentPoly& base, const LaurentPoly& u,
                                    const LaurentPoly& z, long kmax) {
    const Context& ctx = base.ctx();
    const long r = static_cast<long>(upper.size());
    const long s = static_cast<long>(lower.size());
    const long norm_pow = 1 + s - r;
    RationalExpr acc = RationalExpr::zero(ctx);
    for (long n = 0; n <= kmax; ++n) {
        LaurentPoly num = u.pow(binom2(n)) * z.pow(n);
        if (norm_pow != 0) {
            LaurentPoly f = base.pow(binom2(n) * norm_pow);
            if ((n * norm_pow) % 2 != 0) f = -f;
            num *= f;
        }
        for (const auto& a : upper) num *= qpochhammer(a, n, &base);
        LaurentPoly den = qpochhammer(base, n, &base);
        for (const auto& b : lower) den *= qpochhammer(b, n, &base);
        if (den.is_zero())
            throw ZeroDenominatorParameter("lower parameter Pochhammer vanishes at n = " +
                                           std::to_string(n));
        if (num.is_zero()) continue;
        acc += RationalExpr(std::move(num), std::move(den));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Deformed Gauss series 2F1(a,b;c;u,z) with ordinary rising factorials.
// ---------------------------------------------------------------------------

inline TruncatedSeries gauss2F1_deformed(SymId a, SymId b, SymId c, const LaurentPoly& u,
                                         const LaurentPoly& z, const SeriesCtx& sc) {
    const Context& ctx = sc.ctx;
    auto rising = [&](SymId sym, long n) {
        LaurentPoly p = LaurentPoly::one(ctx);
        for (long j = 0; j < n; ++j)
            p *= LaurentPoly::var(ctx, sym) + LaurentPoly::constant(ctx, Rat(j));
        return p;
    };
    auto [zm, zc] = detail::single_term(z, "gauss2F1_deformed");
    long d = detail::small_total(ctx, zm);
    if (d < 1) throw NotFormallySmall("2F1 argument needs small degree >= 1");
    TruncatedSeries r = sc.zero();
    Rat fact = 1;
    LaurentPoly zpow = LaurentPoly::one(ctx);
    for (long n = 0; n * d <= sc.order; ++n) {
        if (n > 0) fact *= n;
        LaurentPoly num = u.pow(binom2(n)) * rising(a, n) * rising(b, n);
        LaurentPoly den = rising(c, n) * fact;
        TruncatedSeries term = sc.poly(zpow);
        term.scale(RationalExpr(std::move(num), std::move(den)));
        r += term;
        zpow *= z;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Deformed homogeneous polynomials
//   R_n(x,y;u,v|q) = sum_k [n k]_q u^binom(n-k,2) v^binom(k,2) x^(n-k) y^k
// x, y may be full monomials; u, v Laurent monomials (or 1).
// ---------------------------------------------------------------------------

struct RnSpec {
    long n;
    LaurentPoly x, y;
    LaurentPoly u, v;
};

inline LaurentPoly r_poly(const RnSpec& spec) {
    if (spec.n < 0) throw QcError("R_n needs n >= 0");
    const Context& ctx = spec.x.ctx();
    LaurentPoly acc(ctx);
    for (long k = 0; k <= spec.n; ++k) {
        LaurentPoly term = gauss_binomial(ctx, static_cast<int>(spec.n), static_cast<int>(k)) *
                           spec.u.pow(binom2(spec.n - k)) * spec.v.pow(binom2(k)) *
                           spec.x.pow(spec.n - k) * spec.y.pow(k);
        acc += term;
    }
    return acc;
}

/// u-deformed form R_n(x,y;u|q) = R_n(x,y;1,u|q) used throughout sections 4-10.
inline LaurentPoly r_upoly(long n, const LaurentPoly& x, const LaurentPoly& y,
                           const LaurentPoly& u) {
    return r_poly({n, x, y, LaurentPoly::one(x.ctx()), u});
}

// Named specializations.
inline LaurentPoly rogers_szego_h(long n, const LaurentPoly& x) {
    const Context& ctx = x.ctx();
    return r_poly({n, LaurentPoly::one(ctx), x, LaurentPoly::one(ctx), LaurentPoly::one(ctx)});
}
inline LaurentPoly rogers_szego_h_qinv(long n, const LaurentPoly& x) {
    const Context& ctx = x.ctx();
    return r_poly({n, LaurentPoly::one(ctx), x, LaurentPoly::qpow(ctx, 1),
                   LaurentPoly::qpow(ctx, 1)});
}
inline LaurentPoly homogeneous_r(long n, const LaurentPoly& x, const LaurentPoly& y) {
    const Context& ctx = x.ctx();
    return r_poly({n, x, y, LaurentPoly::one(ctx), LaurentPoly::one(ctx)});
}
inline LaurentPoly pochhammer_as_poly(long n, const LaurentPoly& x) {
    const Context& ctx = x.ctx();
    return r_poly({n, LaurentPoly::one(ctx), -x, LaurentPoly::one(ctx),
                   LaurentPoly::qpow(ctx, 1)});
}
inline LaurentPoly stieltjes_wigert_s(long n, const LaurentPoly& x) {
    const Context& ctx = x.ctx();
    return r_poly({n, LaurentPoly::one(ctx), LaurentPoly::qpow(ctx, 1) * x,
                   LaurentPoly::one(ctx), LaurentPoly::qpow(ctx, 2)});
}
inline LaurentPoly cauchy_p(long n, const LaurentPoly& x, const LaurentPoly& y) {
    const Context& ctx = x.ctx();
    return r_poly({n, x, -y, LaurentPoly::one(ctx), LaurentPoly::qpow(ctx, 1)});
}
inline LaurentPoly exton_e(long n, const LaurentPoly& x, const LaurentPoly& y) {
    const Context& ctx = x.ctx();
    if (!ctx->has_sqrt_base())
        throw ScaleUnavailable("Exton polynomials need base_scale divisible by 2");
    return r_poly({n, x, y, LaurentPoly::one(ctx), LaurentPoly::qpow_half(ctx, 1)});
}

/// Both sides of the two recursion relations for R_n(x,y;u|q).
struct PolyPair {
    LaurentPoly lhs, rhs;
};

inline PolyPair rn_recurrence_step(long n, int which, const LaurentPoly& x,
                                   const LaurentPoly& y, const LaurentPoly& u) {
    const Context& ctx = x.ctx();
    LaurentPoly q1 = LaurentPoly::qpow(ctx, 1);
    LaurentPoly lhs = r_upoly(n + 1, x, y, u);
    LaurentPoly rhs(ctx);
    if (which == 1) {
        rhs = x * r_upoly(n, x, q1 * y, u) + y * r_upoly(n, x, u * y, u);
    } else {
        rhs = x * r_upoly(n, x, y, u) + y * r_upoly(n, q1 * x, u * y, u);
    }
    return {std::move(lhs), std::move(rhs)};
}

/// Both sides of R_{n+m}(x,y;u|q)
///   = sum_k [m k]_q u^binom(k,2) x^(m-k) y^k R_n(x, q^(m-k) u^k y; u|q).
inline PolyPair rn_shift_expansion(long n, long m, const LaurentPoly& x, const LaurentPoly& y,
                                   const LaurentPoly& u) {
    const Context& ctx = x.ctx();
    LaurentPoly lhs = r_upoly(n + m, x, y, u);
    LaurentPoly rhs(ctx);
    for (long k = 0; k <= m; ++k) {
        LaurentPoly scaled_y = LaurentPoly::qpow(ctx, m - k) * u.pow(k) * y;
        rhs += gauss_binomial(ctx, static_cast<int>(m), static_cast<int>(k)) *
               u.pow(binom2(k)) * x.pow(m - k) * y.pow(k) * r_upoly(n, x, scaled_y, u);
    }
    return {std::move(lhs), std::move(rhs)};
}

/// Residuals of the q-difference equation satisfied by y(x) = R_n(1,x;u|q):
///   (D_q y)(u^-1 x) + q^(n-1) x (D_q y)(q^-1 x) - (1-q^n) y(x)   and the
/// equivalent form
///   f(u^-1 x) - f(q u^-1 x) + q^n u^-1 x f(q^-1 x) - u^-1 x f(x).
/// Both must be identically zero.
inline PolyPair rn_qdifference_residual(long n, SymId xsym, const LaurentPoly& u) {
    const Context& ctx = u.ctx();
    LaurentPoly x = LaurentPoly::var(ctx, xsym);
    LaurentPoly q1 = LaurentPoly::qpow(ctx, 1);
    LaurentPoly uinv = u.pow(-1);
    LaurentPoly qinv = LaurentPoly::qpow(ctx, -1);
    LaurentPoly f = r_upoly(n, LaurentPoly::one(ctx), x, u);
    LaurentPoly df = dq(f, xsym);
    LaurentPoly one_minus_qn = LaurentPoly::one(ctx) - LaurentPoly::qpow(ctx, n);

    LaurentPoly first = substitute(df, xsym, uinv * x) +
                        LaurentPoly::qpow(ctx, n - 1) * x * substitute(df, xsym, qinv * x) -
                        one_minus_qn * f;
    LaurentPoly second = substitute(f, xsym, uinv * x) - substitute(f, xsym, q1 * uinv * x) +
                         LaurentPoly::qpow(ctx, n) * uinv * x * substitute(f, xsym, qinv * x) -
                         uinv * x * f;
    return {std::move(first), std::move(second)};
}

/// R_n(1,x;u|q) against its 2Phi0(q^-n, 0; -; q, u, q^n x) representation.
struct RationalPair {
    RationalExpr lhs, rhs;
};

inline RationalPair rn_hypergeometric_rep(long n, const LaurentPoly& x, const LaurentPoly& u) {
    const Context& ctx = x.ctx();
    LaurentPoly lhs = r_upoly(n, LaurentPoly::one(ctx), x, u);
    RationalExpr rhs = terminating_phi(
        {LaurentPoly::qpow(ctx, -n), LaurentPoly::zero(ctx)}, {}, LaurentPoly::qpow(ctx, 1),
        u, LaurentPoly::qpow(ctx, n) * x, n);
    return {RationalExpr(std::move(lhs)), std::move(rhs)};
}

}  // namespace qc
