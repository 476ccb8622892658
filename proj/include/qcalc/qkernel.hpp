#pragma once

#include "qcalc/series.hpp"

namespace qc {

// ---------------------------------------------------------------------------
// Context caches ((q;q)_n and Gaussian binomials live on the context so
// repeated identity instances share work; guarded by the context mutex).
// ---------------------------------------------------------------------------

inline const LaurentPoly& ContextImpl::qq_factorial_cached(int n) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    Context self = shared_from_this();
    if (qq_cache_.empty())
        qq_cache_.push_back(std::make_shared<const LaurentPoly>(LaurentPoly::one(self)));
    while (static_cast<int>(qq_cache_.size()) <= n) {
        int k = static_cast<int>(qq_cache_.size());
        LaurentPoly factor = LaurentPoly::one(self) - LaurentPoly::qpow(self, k);
        qq_cache_.push_back(
            std::make_shared<const LaurentPoly>(*qq_cache_.back() * factor));
    }
    return *qq_cache_[n];
}

inline const LaurentPoly& ContextImpl::gauss_binomial_cached(int n, int k) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    Context self = shared_from_this();
    std::function<const LaurentPoly&(int, int)> get = [&](int nn,
                                                          int kk) -> const LaurentPoly& {
        auto it = gauss_cache_.find({nn, kk});
        if (it != gauss_cache_.end()) return *it->second;
        std::shared_ptr<const LaurentPoly> val;
        if (kk < 0 || kk > nn) {
            val = std::make_shared<const LaurentPoly>(LaurentPoly::zero(self));
        } else if (kk == 0 || kk == nn) {
            val = std::make_shared<const LaurentPoly>(LaurentPoly::one(self));
        } else {
            // Pascal rule: [n k] = [n-1 k] + q^(n-k) [n-1 k-1]; stays in
            // polynomials, no division.
            LaurentPoly v = get(nn - 1, kk) +
                            LaurentPoly::qpow(self, nn - kk) * get(nn - 1, kk - 1);
            val = std::make_shared<const LaurentPoly>(std::move(v));
        }
        auto [pos, ignored] = gauss_cache_.emplace(std::make_pair(nn, kk), std::move(val));
        return *pos->second;
    };
    return get(n, k);
}

// ---------------------------------------------------------------------------
// q-combinatorial primitives
// ---------------------------------------------------------------------------

/// (a; base)_n = prod_{k=0}^{n-1} (1 - a * base^k), expanded. base defaults
/// to q; pass q^2 etc. for stepped factorials.
inline LaurentPoly qpochhammer(const LaurentPoly& a, long n, const LaurentPoly* base = nullptr) {
    const Context& ctx = a.ctx();
    if (n < 0) throw QcError("qpochhammer length must be >= 0");
    LaurentPoly result = LaurentPoly::one(ctx);
    LaurentPoly bpow = LaurentPoly::one(ctx);
    LaurentPoly b = base ? *base : LaurentPoly::qpow(ctx, 1);
    for (long k = 0; k < n; ++k) {
        result *= LaurentPoly::one(ctx) - a * bpow;
        bpow *= b;
    }
    return result;
}

/// [n k]_q by the Pascal recurrence (memoized on the context).
inline const LaurentPoly& gauss_binomial(const Context& ctx, int n, int k) {
    return ctx->gauss_binomial_cached(n, k);
}

/// [n k] in an arbitrary base power (e.g. sqrt(q)); uncached row DP.
inline LaurentPoly gauss_binomial_base(const Context& ctx, int n, int k,
                                       const LaurentPoly& base) {
    if (k < 0 || k > n) return LaurentPoly::zero(ctx);
    std::vector<LaurentPoly> row(1, LaurentPoly::one(ctx));
    for (int m = 1; m <= n; ++m) {
        std::vector<LaurentPoly> next;
        next.reserve(m + 1);
        for (int j = 0; j <= m; ++j) {
            LaurentPoly v(ctx);
            if (j <= m - 1) v += row[j];
            if (j - 1 >= 0) v += base.pow(m - j) * row[j - 1];
            next.push_back(std::move(v));
        }
        row = std::move(next);
    }
    return row[k];
}
inline const LaurentPoly& qq_factorial(const Context& ctx, int n) {
    return ctx->qq_factorial_cached(n);
}

/// Shared bundle for series builders: the context, the declared small set
/// and the truncation order.
struct SeriesCtx {
    Context ctx;
    std::vector<SymId> smalls;
    long order;

    TruncatedSeries zero() const { return TruncatedSeries::zero(ctx, smalls, order); }
    TruncatedSeries one() const { return TruncatedSeries::one(ctx, smalls, order); }
    TruncatedSeries poly(const LaurentPoly& p) const {
        return TruncatedSeries::from_poly(p, smalls, order);
    }
    SeriesCtx at(long n) const { return SeriesCtx{ctx, smalls, n}; }
};

inline SeriesCtx series_ctx(const Context& ctx, long order) {
    return SeriesCtx{ctx, ctx->small_ids(), order};
}

namespace detail {
inline std::pair<Mono, Rat> single_term(const LaurentPoly& a, const char* what) {
    if (!a.is_monomial()) throw QcError(std::string(what) + ": argument must be a monomial");
    const auto& [m, c] = *a.terms().begin();
    return {m, c};
}
inline long small_total(const Context& ctx, const Mono& m) {
    long t = 0;
    for (int i = 0; i < ctx->nsym(); ++i)
        if (ctx->is_small(i)) t += m.e[i];
    return t;
}
}  // namespace detail

/// Geometric series 1/(1 - a) = sum a^i for a monomial of small degree >= 1.
inline TruncatedSeries geometric_series(const LaurentPoly& a, const SeriesCtx& sc) {
    auto [m, c] = detail::single_term(a, "geometric_series");
    long d = detail::small_total(sc.ctx, m);
    if (d < 1) throw NotFormallySmall("geometric series argument has small degree 0");
    TruncatedSeries r = sc.zero();
    LaurentPoly apow = LaurentPoly::one(sc.ctx);
    for (long i = 0; i * d <= sc.order; ++i) {
        r += sc.poly(apow);
        apow *= a;
    }
    return r;
}

/// (a;q)_inf as an exact truncated series via the Euler expansion
///   (a;q)_inf = sum_n (-1)^n q^binom(n,2) a^n / (q;q)_n.
/// Requires a to be a monomial of small degree >= 1 (or zero). Factor
/// truncation is deliberately not used here: it is unsound once a carries a
/// parameter, because dropped factors touch every q-order.
inline TruncatedSeries qpochhammer_inf_series(const LaurentPoly& a, const SeriesCtx& sc) {
    if (a.is_zero()) return sc.one();
    auto [m, c] = detail::single_term(a, "qpochhammer_inf_series");
    long d = detail::small_total(sc.ctx, m);
    if (d < 1) throw NotFormallySmall("(a;q)_inf needs an argument of small degree >= 1");
    TruncatedSeries r = sc.zero();
    LaurentPoly apow = LaurentPoly::one(sc.ctx);
    for (long n = 0; n * d <= sc.order; ++n) {
        Rat sign = (n % 2 == 0) ? 1 : -1;
        LaurentPoly num = apow * LaurentPoly::qpow(sc.ctx, binom2(n)) * sign;
        TruncatedSeries term = sc.poly(num);
        term.scale(RationalExpr(LaurentPoly::one(sc.ctx), qq_factorial(sc.ctx, n)));
        r += term;
        apow *= a;
    }
    return r;
}

/// 1/(a;q)_inf = sum_n a^n / (q;q)_n, same preconditions as above.
inline TruncatedSeries inv_qpochhammer_inf_series(const LaurentPoly& a, const SeriesCtx& sc) {
    if (a.is_zero()) return sc.one();
    auto [m, c] = detail::single_term(a, "inv_qpochhammer_inf_series");
    long d = detail::small_total(sc.ctx, m);
    if (d < 1) throw NotFormallySmall("1/(a;q)_inf needs an argument of small degree >= 1");
    TruncatedSeries r = sc.zero();
    LaurentPoly apow = LaurentPoly::one(sc.ctx);
    for (long n = 0; n * d <= sc.order; ++n) {
        TruncatedSeries term = sc.poly(apow);
        term.scale(RationalExpr(LaurentPoly::one(sc.ctx), qq_factorial(sc.ctx, n)));
        r += term;
        apow *= a;
    }
    return r;
}

/// 1/(a;q)_n for a monomial with small content: a finite product of
/// geometric series, exact at every kept order.
inline TruncatedSeries inv_qpochhammer_series(const LaurentPoly& a, long n,
                                              const SeriesCtx& sc) {
    TruncatedSeries r = sc.one();
    for (long k = 0; k < n; ++k)
        r *= geometric_series(a * LaurentPoly::qpow(sc.ctx, k), sc);
    return r;
}

/// (q^m; q^r)_inf correct through q-degree N. Sound only because the
/// argument is a pure q-power: the omitted factors (1 - q^(m+kr)) with
/// m + kr > N touch degrees > N only.
inline LaurentPoly qpochhammer_qpower_truncated(long m, long r, long N, const Context& ctx) {
    if (m < 1 || r < 1) throw QcError("qpochhammer_qpower_truncated needs m, r >= 1");
    LaurentPoly result = LaurentPoly::one(ctx);
    long cap = N * ctx->base_scale();
    for (long e = m; e <= N; e += r) {
        result *= LaurentPoly::one(ctx) - LaurentPoly::qpow(ctx, e);
        // Drop everything beyond q-degree N to keep the product small.
        LaurentPoly trimmed(ctx);
        for (const auto& [mm, cc] : result.terms())
            if (mm.e[ctx->base()] <= cap) trimmed.add_term(mm, cc);
        result = std::move(trimmed);
    }
    return result;
}

/// q-difference operator on polynomials: x^k -> (1 - q^k) x^(k-1).
inline LaurentPoly dq(const LaurentPoly& f, SymId x) {
    const Context& ctx = f.ctx();
    LaurentPoly r(ctx);
    for (const auto& [m, c] : f.terms()) {
        Expo k = m.e[x];
        if (k < 0) throw NegativeExponent("dq target occurs with negative exponent");
        if (k == 0) continue;
        Mono down = m;
        down.e[x] = k - 1;
        r += LaurentPoly::monomial(ctx, down, c) *
             (LaurentPoly::one(ctx) - LaurentPoly::qpow(ctx, k));
    }
    return r;
}

inline LaurentPoly dq_pow(const LaurentPoly& f, SymId x, long n) {
    LaurentPoly r = f;
    for (long i = 0; i < n; ++i) r = dq(r, x);
    return r;
}

inline TruncatedSeries dq(const TruncatedSeries& f, SymId x) { return f.dq_small(x); }

inline TruncatedSeries dq_pow(const TruncatedSeries& f, SymId x, long n) {
    TruncatedSeries r = f;
    for (long i = 0; i < n; ++i) r = r.dq_small(x);
    return r;
}

}  // namespace qc
