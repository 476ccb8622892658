#pragma once

#include <initializer_list>

#include "qcalc/operators.hpp"
#include "qcalc/verify.hpp"

namespace qc::reg {

/// Per-builder working set: context plus the series bundle at the requested
/// order, with shorthands for the values every entry needs.
struct Env {
    Context ctx;
    SeriesCtx sc;
    LaurentPoly one, q;

    Env(const Context& c, long order)
        : ctx(c), sc{c, c->small_ids(), order}, one(LaurentPoly::one(c)),
          q(LaurentPoly::qpow(c, 1)) {}

    LaurentPoly v(const std::string& name) const { return LaurentPoly::var(ctx, name); }
    LaurentPoly qp(long k) const { return LaurentPoly::qpow(ctx, k); }
    LaurentPoly qph(long k) const { return LaurentPoly::qpow_half(ctx, k); }
    LaurentPoly num(long k) const { return LaurentPoly::constant(ctx, Rat(k)); }
    const LaurentPoly& qq(long n) const { return qq_factorial(ctx, n); }
    RationalExpr inv_qq(long n) const { return RationalExpr(one, qq(n)); }
    RationalExpr inv_qq2(long n, long m) const { return RationalExpr(one, qq(n) * qq(m)); }

    SeriesCtx at(long n) const { return SeriesCtx{ctx, sc.smalls, n}; }
    TruncatedSeries zero() const { return sc.zero(); }
    TruncatedSeries one_series() const { return sc.one(); }
    TruncatedSeries poly(const LaurentPoly& p) const { return sc.poly(p); }
    TruncatedSeries einf(const LaurentPoly& m) const { return qpochhammer_inf_series(m, sc); }
    TruncatedSeries inv_einf(const LaurentPoly& m) const {
        return inv_qpochhammer_inf_series(m, sc);
    }
    TruncatedSeries inv_poch(const LaurentPoly& m, long n) const {
        return inv_qpochhammer_series(m, n, sc);
    }
    TruncatedSeries inv_poch(const LaurentPoly& m, long n, const SeriesCtx& inner) const {
        return inv_qpochhammer_series(m, n, inner);
    }
    TruncatedSeries eq(const LaurentPoly& z, const LaurentPoly& u) const {
        return eq_deformed(z, u, sc);
    }
    TruncatedSeries eq(const LaurentPoly& z, const LaurentPoly& u,
                       const SeriesCtx& inner) const {
        return eq_deformed(z, u, inner);
    }
    /// Rogers-Ramanujan function R_q(w) = e_q(qw, q^2).
    TruncatedSeries rr(const LaurentPoly& w, const SeriesCtx& inner) const {
        return eq_deformed(qp(1) * w, qp(2), inner);
    }
    /// Exton function E_q(w) = e_q(w, sqrt(q)).
    TruncatedSeries exton(const LaurentPoly& w, const SeriesCtx& inner) const {
        return eq_deformed(w, qph(1), inner);
    }
    TruncatedSeries phi(const HyperSpec& spec) const { return phi_deformed(spec, sc); }
    TruncatedSeries phi(const HyperSpec& spec, const SeriesCtx& inner) const {
        return phi_deformed(spec, inner);
    }
};

inline std::function<Context(int)> mk_ctx(std::vector<std::string> params,
                                          std::vector<std::string> smalls) {
    return [params = std::move(params), smalls = std::move(smalls)](int scale) {
        ContextBuilder b(scale);
        for (const auto& p : params) b.param(p);
        for (const auto& s : smalls) b.small(s);
        return b.build();
    };
}

/// Context whose base variable is itself the series variable (pure q-series).
inline std::function<Context(int)> mk_qseries_ctx() {
    return [](int scale) { return ContextBuilder(scale).small_base().build(); };
}

inline long get(const Instance& inst, const std::string& name) { return inst.at(name); }

}  // namespace qc::reg
