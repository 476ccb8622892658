#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "qcalc/base.hpp"
#include "qcalc/symbols.hpp"

namespace qc {

/// Sparse multivariate Laurent polynomial over Rat.
///
/// Exponents may be negative on parameter symbols; symbols declared small
/// must appear with exponent >= 0 (checked on insertion). No zero
/// coefficients are ever stored.
class LaurentPoly {
  public:
    using TermMap = std::unordered_map<Mono, Rat, MonoHash>;

    explicit LaurentPoly(Context ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly zero(const Context& ctx) { return LaurentPoly(ctx); }
    static LaurentPoly constant(const Context& ctx, const Rat& c) {
        LaurentPoly p(ctx);
        p.add_term(Mono{}, c);
        return p;
    }
    static LaurentPoly one(const Context& ctx) { return constant(ctx, 1); }
    static LaurentPoly monomial(const Context& ctx, const Mono& m, const Rat& c = 1) {
        LaurentPoly p(ctx);
        p.add_term(m, c);
        return p;
    }
    static LaurentPoly var(const Context& ctx, SymId s, Expo k = 1) {
        Mono m;
        m.e[s] = k;
        return monomial(ctx, m);
    }
    static LaurentPoly var(const Context& ctx, const std::string& name, Expo k = 1) {
        return var(ctx, ctx->id_of(name), k);
    }
    /// q^k as a stored p-power (q = p^scale).
    static LaurentPoly qpow(const Context& ctx, long k) {
        Mono m;
        m.e[ctx->base()] = static_cast<Expo>(k * ctx->base_scale());
        return monomial(ctx, m);
    }
    /// q^(k/2); requires an even base scale.
    static LaurentPoly qpow_half(const Context& ctx, long k) {
        if (!ctx->has_sqrt_base())
            throw ScaleUnavailable("q^(1/2) needs a context with even base_scale");
        Mono m;
        m.e[ctx->base()] = static_cast<Expo>(k * (ctx->base_scale() / 2));
        return monomial(ctx, m);
    }

    const Context& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
               qc::is_one(terms_.begin()->second);
    }
    size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    /// Single-term polynomials act as invertible monomials under substitution.
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Mono& m, const Rat& c) {
        if (qc::is_zero(c)) return;
        check_small_exponents(m);
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (qc::is_zero(it->second)) terms_.erase(it);
        }
    }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(ctx_);
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_context(a.ctx_, b.ctx_);
        LaurentPoly r(a.ctx_);
        if (a.is_zero() || b.is_zero()) return r;
        const LaurentPoly& big = a.size() >= b.size() ? a : b;
        const LaurentPoly& small = a.size() >= b.size() ? b : a;
        r.terms_.reserve(big.size() + small.size());
        Rat prod;
        for (const auto& [ms, cs] : small.terms_) {
            for (const auto& [mb, cb] : big.terms_) {
                prod = cs * cb;
                Mono m = ms + mb;
                auto [it, fresh] = r.terms_.try_emplace(m, prod);
                if (!fresh) {
                    it->second += prod;
                    if (qc::is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rat& c) {
        if (qc::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a.scale(c); }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a.scale(c); }

    LaurentPoly& shift(const Mono& m) {
        TermMap out;
        out.reserve(terms_.size());
        for (auto& [k, v] : terms_) out.emplace(k + m, std::move(v));
        terms_ = std::move(out);
        for (const auto& kv : terms_) check_small_exponents(kv.first);
        return *this;
    }

    LaurentPoly pow(long n) const {
        if (n < 0) {
            if (!is_monomial()) throw QcError("negative power of a non-monomial");
            const auto& [m, c] = *terms_.begin();
            Mono inv;
            for (int i = 0; i < kMaxSymbols; ++i) inv.e[i] = -m.e[i] * static_cast<Expo>(-n);
            Rat cc = 1;
            Rat base = Rat(1) / c;
            for (long i = 0; i < -n; ++i) cc *= base;
            return monomial(ctx_, inv, cc);
        }
        LaurentPoly result = one(ctx_);
        LaurentPoly base = *this;
        long m = n;
        while (m > 0) {
            if (m & 1) result *= base;
            m >>= 1;
            if (m) base *= base;
        }
        return result;
    }

    bool operator==(const LaurentPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [m, c] : terms_) {
            auto it = o.terms_.find(m);
            if (it == o.terms_.end() || it->second != c) return false;
        }
        return true;
    }

    /// Max exponent of one symbol (0 for the zero polynomial).
    Expo degree_in(SymId s) const {
        Expo d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first || m.e[s] > d) d = m.e[s];
            first = false;
        }
        return d;
    }
    Expo min_exponent_in(SymId s) const {
        Expo d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first || m.e[s] < d) d = m.e[s];
            first = false;
        }
        return d;
    }
    bool mentions(SymId s) const {
        for (const auto& [m, c] : terms_)
            if (m.e[s] != 0) return true;
        return false;
    }
    bool mentions_nonbase() const {
        for (const auto& [m, c] : terms_)
            for (int i = 1; i < ctx_->nsym(); ++i)
                if (m.e[i] != 0) return true;
        return false;
    }

    /// Coefficient of s^k, as a polynomial in the remaining symbols.
    LaurentPoly coefficient_of(SymId s, Expo k) const {
        LaurentPoly r(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m.e[s] == k) {
                Mono rest = m;
                rest.e[s] = 0;
                r.add_term(rest, c);
            }
        }
        return r;
    }

    /// Total degree in the context's small symbols; 0 for constants.
    long small_degree_min() const {
        long best = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            long t = 0;
            for (int i = 0; i < ctx_->nsym(); ++i)
                if (ctx_->is_small(i)) t += m.e[i];
            if (first || t < best) best = t;
            first = false;
        }
        return best;
    }

    std::vector<std::pair<Mono, Rat>> sorted_terms() const {
        std::vector<std::pair<Mono, Rat>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
        return v;
    }

  private:
    void check_small_exponents(const Mono& m) const {
        for (int i = 0; i < ctx_->nsym(); ++i)
            if (m.e[i] < 0 && ctx_->is_small(i))
                throw NegativeExponent("negative exponent on small symbol " +
                                       ctx_->info(i).name);
    }

    Context ctx_;
    TermMap terms_;
};

/// Simultaneous substitution of symbols by polynomials. A symbol occurring
/// with a negative exponent must be bound to an invertible monomial
/// (single term); anything else raises SubstitutionNotInvertible.
inline LaurentPoly substitute(const LaurentPoly& f,
                              const std::vector<std::pair<SymId, LaurentPoly>>& bindings) {
    const Context& ctx = f.ctx();
    std::array<const LaurentPoly*, kMaxSymbols> bound{};
    for (const auto& [s, g] : bindings) {
        check_same_context(ctx, g.ctx());
        bound[s] = &g;
    }
    LaurentPoly out(ctx);
    for (const auto& [m, c] : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(ctx, c);
        Mono rest;
        for (int i = 0; i < ctx->nsym(); ++i) {
            if (m.e[i] == 0) continue;
            if (!bound[i]) {
                rest.e[i] = m.e[i];
                continue;
            }
            const LaurentPoly& g = *bound[i];
            if (m.e[i] < 0 && !g.is_monomial())
                throw SubstitutionNotInvertible(
                    "non-monomial replaces negatively-powered symbol " + ctx.get()->info(i).name);
            if (g.is_zero() && m.e[i] < 0)
                throw SubstitutionNotInvertible("zero replaces negatively-powered symbol");
            term *= g.pow(m.e[i]);
            if (term.is_zero()) break;
        }
        if (!term.is_zero()) term.shift(rest);
        out += term;
    }
    return out;
}

inline LaurentPoly substitute(const LaurentPoly& f, SymId s, const LaurentPoly& g) {
    return substitute(f, std::vector<std::pair<SymId, LaurentPoly>>{{s, g}});
}

/// Exact division: returns f/g when g divides f exactly, nullopt otherwise.
/// Standard leading-term elimination under the graded-lex order.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_context(f.ctx(), g.ctx());
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return LaurentPoly::zero(f.ctx());
    if (g.is_one()) return f;
    if (g.is_monomial()) {
        const auto& [gm, gc] = *g.terms().begin();
        LaurentPoly q(f.ctx());
        for (const auto& [m, c] : f.terms()) q.add_term(m - gm, c / gc);
        return q;
    }
    if (f.size() < g.size()) return std::nullopt;

    // Leading term of g under graded-lex (largest).
    const Mono* glead = nullptr;
    for (const auto& [m, c] : g.terms())
        if (!glead || graded_lex_less(*glead, m)) glead = &m;
    const Rat& gc = g.terms().at(*glead);

    LaurentPoly r = f;
    LaurentPoly q(f.ctx());
    size_t guard = f.size() * (g.size() + 2) * 4 + 64;
    while (!r.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const Mono* rlead = nullptr;
        for (const auto& [m, c] : r.terms())
            if (!rlead || graded_lex_less(*rlead, m)) rlead = &m;
        Mono qm = *rlead - *glead;
        Rat qcoef = r.terms().at(*rlead) / gc;
        LaurentPoly qt = LaurentPoly::monomial(f.ctx(), qm, qcoef);
        q += qt;
        r -= qt * g;
    }
    return q;
}

}  // namespace qc
