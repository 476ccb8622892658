#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qcalc/rational_expr.hpp"

namespace qc {

/// Formal power series jointly truncated in a declared set of small symbols
/// at a total-degree bound.
///
/// Correctness contract: every stored coefficient equals the exact
/// coefficient of the represented infinite object for all total degrees
/// <= order(). Operations keep that contract: products and sums of orders
/// N1, N2 carry order min(N1, N2); multiplying by a polynomial whose terms
/// all have small degree >= d raises the order by d; the q-derivative
/// lowers it by one.
class TruncatedSeries {
  public:
    using TermMap = std::unordered_map<Mono, RationalExpr, MonoHash>;

    TruncatedSeries(Context ctx, std::vector<SymId> smalls, long order)
        : ctx_(std::move(ctx)), smalls_(std::move(smalls)), order_(order) {
        if (order_ < 0) throw QcError("series order must be >= 0");
        for (SymId s : smalls_)
            if (!ctx_->is_small(s))
                throw SmallSymbolMismatch("symbol " + ctx_->info(s).name +
                                          " is not declared small");
    }

    static TruncatedSeries zero(const Context& ctx, std::vector<SymId> smalls, long order) {
        return TruncatedSeries(ctx, std::move(smalls), order);
    }
    static TruncatedSeries one(const Context& ctx, std::vector<SymId> smalls, long order) {
        TruncatedSeries s(ctx, std::move(smalls), order);
        s.add_term(Mono{}, RationalExpr::one(ctx));
        return s;
    }

    /// A polynomial is a complete object: it can be injected at any order.
    static TruncatedSeries from_poly(const LaurentPoly& p, std::vector<SymId> smalls,
                                     long order) {
        TruncatedSeries s(p.ctx(), std::move(smalls), order);
        for (const auto& [m, c] : p.terms()) {
            auto [key, rest] = s.split(m);
            s.add_poly_term(key, LaurentPoly::monomial(p.ctx(), rest, c));
        }
        return s;
    }

    const Context& ctx() const { return ctx_; }
    const std::vector<SymId>& smalls() const { return smalls_; }
    long order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalExpr coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RationalExpr::zero(ctx_) : it->second;
    }

    void add_term(const Mono& m, const RationalExpr& c) {
        if (c.is_zero()) return;
        if (!key_ok(m)) {
            if (over_order(m)) return;  // beyond the contract, drop
            throw SmallSymbolMismatch("series key uses a symbol outside the declared set");
        }
        check_coeff(c);
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficients must be free of small symbols; the keys carry those.
    void check_coeff(const RationalExpr& c) const {
        for (const LaurentPoly* p : {&c.num(), &c.den()})
            for (const auto& [m, v] : p->terms())
                for (int i = 0; i < ctx_->nsym(); ++i)
                    if (m.e[i] != 0 && ctx_->is_small(i))
                        throw SmallSymbolMismatch("series coefficient mentions small symbol " +
                                                  ctx_->info(i).name);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries r(a.ctx_, a.smalls_, std::min(a.order_, b.order_));
        for (const auto& [m, c] : a.terms_)
            if (!r.over_order(m)) r.add_term(m, c);
        for (const auto& [m, c] : b.terms_)
            if (!r.over_order(m)) r.add_term(m, c);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries r(a.ctx_, a.smalls_, std::min(a.order_, b.order_));
        for (const auto& [ma, ca] : a.terms_) {
            long da = ma.total();
            if (da > r.order_) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (da + mb.total() > r.order_) continue;
                r.add_term(ma + mb, ca * cb);
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Coefficient-wise scaling by a small-free rational expression.
    TruncatedSeries& scale(const RationalExpr& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        check_coeff(c);
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    /// Multiply by a polynomial. The order rises by the polynomial's minimum
    /// small degree (multiplying by z^d shifts everything up by d).
    TruncatedSeries mul_poly(const LaurentPoly& p) const {
        check_same_context(ctx_, p.ctx());
        long lift = p.is_zero() ? 0 : p.small_degree_min();
        TruncatedSeries r(ctx_, smalls_, order_ + std::max<long>(0, lift));
        for (const auto& [pm, pc] : p.terms()) {
            auto [key, rest] = split(pm);
            RationalExpr factor(LaurentPoly::monomial(ctx_, rest, pc));
            long dk = key.total();
            for (const auto& [m, c] : terms_) {
                if (m.total() + dk > r.order_) continue;
                r.add_term(m + key, c * factor);
            }
        }
        return r;
    }

    /// Substitute s -> factor * s for a small-free factor (e.g. z -> q z).
    TruncatedSeries substitute_scale(SymId s, const RationalExpr& factor) const {
        TruncatedSeries r(ctx_, smalls_, order_);
        std::vector<RationalExpr> powers{RationalExpr::one(ctx_)};
        for (const auto& [m, c] : terms_) {
            Expo k = m.e[s];
            while (static_cast<Expo>(powers.size()) <= k) powers.push_back(powers.back() * factor);
            r.add_term(m, c * powers[k]);
        }
        return r;
    }

    /// q-difference in a small symbol: x^k -> (1 - q^k) x^(k-1).
    /// Exactness drops one order.
    TruncatedSeries dq_small(SymId s) const {
        if (order_ == 0) throw QcError("dq on an order-0 series has no exact coefficients");
        TruncatedSeries r(ctx_, smalls_, order_ - 1);
        for (const auto& [m, c] : terms_) {
            Expo k = m.e[s];
            if (k == 0) continue;
            Mono down = m;
            down.e[s] = k - 1;
            if (down.total() > r.order_) continue;
            LaurentPoly f = LaurentPoly::one(ctx_) - LaurentPoly::qpow(ctx_, k);
            r.add_term(down, c * RationalExpr(std::move(f)));
        }
        return r;
    }

    /// Formal derivative d/ds in a small symbol; exactness drops one order.
    TruncatedSeries derivative(SymId s) const {
        if (order_ == 0) throw QcError("derivative on an order-0 series");
        TruncatedSeries r(ctx_, smalls_, order_ - 1);
        for (const auto& [m, c] : terms_) {
            Expo k = m.e[s];
            if (k == 0) continue;
            Mono down = m;
            down.e[s] = k - 1;
            if (down.total() > r.order_) continue;
            r.add_term(down, c * RationalExpr::constant(ctx_, Rat(k)));
        }
        return r;
    }

    TruncatedSeries truncate_to(long order) const {
        if (order >= order_) {
            TruncatedSeries r = *this;
            r.order_ = order_;
            return r;
        }
        TruncatedSeries r(ctx_, smalls_, order);
        for (const auto& [m, c] : terms_)
            if (!r.over_order(m)) r.add_term(m, c);
        return r;
    }

    /// Re-declare the small set (a superset; keys are global, so no rekeying).
    TruncatedSeries with_smalls(std::vector<SymId> smalls) const {
        TruncatedSeries r(ctx_, std::move(smalls), order_);
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    /// Multiplicative inverse; the constant coefficient must be invertible.
    TruncatedSeries inverse() const {
        RationalExpr c0 = coeff(Mono{});
        if (c0.is_zero()) throw QcError("series inverse needs a nonzero constant term");
        RationalExpr c0inv = c0.inverse();
        TruncatedSeries r(ctx_, smalls_, order_);
        // b_m = -c0^{-1} * sum_{0 < k <= m} a_k b_{m-k}, built degree by degree.
        std::vector<std::pair<Mono, RationalExpr>> done;
        r.add_term(Mono{}, c0inv);
        done.push_back({Mono{}, c0inv});
        for (long d = 1; d <= order_; ++d) {
            std::unordered_map<Mono, RationalExpr, MonoHash> level;
            for (const auto& [am, ac] : terms_) {
                long da = am.total();
                if (da == 0 || da > d) continue;
                for (const auto& [bm, bc] : done) {
                    if (bm.total() != d - da) continue;
                    Mono key = am + bm;
                    RationalExpr v = ac * bc;
                    auto [it, fresh] = level.try_emplace(key, v);
                    if (!fresh) it->second += v;
                }
            }
            for (auto& [m, v] : level) {
                RationalExpr b = -(c0inv * v);
                if (!b.is_zero()) {
                    r.add_term(m, b);
                    done.push_back({m, b});
                }
            }
        }
        return r;
    }

    struct Mismatch {
        Mono monomial;
        RationalExpr lhs;
        RationalExpr rhs;
    };

    /// First differing coefficient in graded-lex order, up to min(orders).
    std::optional<Mismatch> first_mismatch(const TruncatedSeries& o) const {
        check_compatible(o);
        long n = std::min(order_, o.order_);
        std::vector<Mono> keys;
        keys.reserve(terms_.size() + o.terms_.size());
        for (const auto& [m, c] : terms_)
            if (m.total() <= n) keys.push_back(m);
        for (const auto& [m, c] : o.terms_)
            if (m.total() <= n && !terms_.count(m)) keys.push_back(m);
        std::sort(keys.begin(), keys.end(), graded_lex_less);
        for (const Mono& m : keys) {
            RationalExpr l = coeff(m);
            RationalExpr r = o.coeff(m);
            if (!l.equals(r)) return Mismatch{m, std::move(l), std::move(r)};
        }
        return std::nullopt;
    }
    bool equal_to(const TruncatedSeries& o) const { return !first_mismatch(o).has_value(); }

    std::vector<std::pair<Mono, RationalExpr>> sorted_terms() const {
        std::vector<std::pair<Mono, RationalExpr>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
        return v;
    }

  private:
    std::pair<Mono, Mono> split(const Mono& m) const {
        Mono key, rest = m;
        for (SymId s : smalls_) {
            key.e[s] = m.e[s];
            rest.e[s] = 0;
        }
        return {key, rest};
    }
    bool over_order(const Mono& m) const { return m.total() > order_; }
    bool key_ok(const Mono& m) const {
        if (m.total() > order_) return false;
        Mono copy = m;
        for (SymId s : smalls_) {
            if (copy.e[s] < 0) return false;
            copy.e[s] = 0;
        }
        return copy.is_unit();
    }
    void add_poly_term(const Mono& key, LaurentPoly c) {
        if (c.is_zero() || over_order(key)) return;
        add_term(key, RationalExpr(std::move(c)));
    }
    void check_compatible(const TruncatedSeries& o) const {
        check_same_context(ctx_, o.ctx_);
        if (smalls_ != o.smalls_)
            throw SmallSymbolMismatch("series have different small-symbol sets");
    }

    Context ctx_;
    std::vector<SymId> smalls_;
    long order_;
    TermMap terms_;
};

}  // namespace qc
