#pragma once

#include "qcalc/laurent.hpp"

namespace qc {

/// Quotient of two Laurent polynomials with structural normalization:
///  - den is never zero; num == 0 forces den == 1
///  - den carries no common monomial factor (content is folded into num)
///  - den is scaled so its graded-lex-least term has coefficient 1
///
/// Full GCD cancellation is deliberately not performed; equality is decided
/// by cross-multiplication, with cheap structural fast paths first.
class RationalExpr {
  public:
    explicit RationalExpr(LaurentPoly num)
        : num_(std::move(num)), den_(LaurentPoly::one(num_.ctx())) {}
    RationalExpr(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        check_same_context(num_.ctx(), den_.ctx());
        normalize();
    }
    static RationalExpr zero(const Context& ctx) {
        return RationalExpr(LaurentPoly::zero(ctx));
    }
    static RationalExpr one(const Context& ctx) {
        return RationalExpr(LaurentPoly::one(ctx));
    }
    static RationalExpr constant(const Context& ctx, const Rat& c) {
        return RationalExpr(LaurentPoly::constant(ctx, c));
    }

    const Context& ctx() const { return num_.ctx(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalExpr operator-() const {
        RationalExpr r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
        check_same_context(a.ctx(), b.ctx());
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalExpr::raw(a.num_ + b.num_, a.den_);
        // If one denominator divides the other, stay on the bigger one.
        if (auto k = try_divide(b.den_, a.den_))
            return RationalExpr::raw(a.num_ * *k + b.num_, b.den_);
        if (auto k = try_divide(a.den_, b.den_))
            return RationalExpr::raw(a.num_ + b.num_ * *k, a.den_);
        return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
        return a + (-b);
    }
    RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
    RationalExpr& operator-=(const RationalExpr& o) { return *this = *this + (-o); }

    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
        check_same_context(a.ctx(), b.ctx());
        if (a.is_zero() || b.is_zero()) return zero(a.ctx());
        // Cross-cancellation when a numerator is an exact multiple of the
        // opposite denominator; keeps long products from snowballing.
        const LaurentPoly* an = &a.num_;
        const LaurentPoly* bn = &b.num_;
        LaurentPoly qa(a.ctx()), qb(a.ctx());
        bool da_gone = false, db_gone = false;
        if (!b.den_.is_one()) {
            if (auto k = try_divide(a.num_, b.den_)) {
                qa = std::move(*k);
                an = &qa;
                db_gone = true;
            }
        } else {
            db_gone = true;
        }
        if (!a.den_.is_one()) {
            if (auto k = try_divide(b.num_, a.den_)) {
                qb = std::move(*k);
                bn = &qb;
                da_gone = true;
            }
        } else {
            da_gone = true;
        }
        LaurentPoly den = LaurentPoly::one(a.ctx());
        if (!da_gone && !db_gone)
            den = a.den_ * b.den_;
        else if (!da_gone)
            den = a.den_;
        else if (!db_gone)
            den = b.den_;
        return RationalExpr(*an * *bn, std::move(den));
    }
    RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }

    RationalExpr inverse() const {
        if (is_zero()) throw QcError("inverse of zero");
        return RationalExpr(den_, num_);
    }
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
        return a * b.inverse();
    }

    /// a/b == c/d  <=>  a*d - c*b == 0, with structural fast paths.
    bool equals(const RationalExpr& o) const {
        check_same_context(ctx(), o.ctx());
        if (is_zero()) return o.is_zero();
        if (o.is_zero()) return false;
        if (den_ == o.den_) return num_ == o.num_;
        if (auto k = try_divide(o.den_, den_)) return num_ * *k == o.num_;
        if (auto k = try_divide(den_, o.den_)) return num_ == o.num_ * *k;
        return num_ * o.den_ == o.num_ * den_;
    }

  private:
    // Trusted path: den already canonical, num freshly combined over it.
    static RationalExpr raw(LaurentPoly num, LaurentPoly den) {
        RationalExpr r(std::move(num));
        if (r.num_.is_zero()) return r;
        r.den_ = std::move(den);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw QcError("zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly::one(ctx());
            return;
        }
        if (den_.is_one()) return;
        // Fold the monomial content of den into num.
        Mono content;
        bool first = true;
        for (const auto& [m, c] : den_.terms()) {
            if (first) {
                content = m;
                first = false;
            } else {
                for (int i = 0; i < kMaxSymbols; ++i) content.e[i] = std::min(content.e[i], m.e[i]);
            }
        }
        if (!content.is_unit()) {
            Mono neg;
            for (int i = 0; i < kMaxSymbols; ++i) neg.e[i] = -content.e[i];
            den_.shift(neg);
            num_.shift(neg);  // num may go Laurent; that is fine on parameters
        }
        // Scale so den's graded-lex-least coefficient is exactly 1.
        const Mono* least = nullptr;
        for (const auto& [m, c] : den_.terms())
            if (!least || graded_lex_less(m, *least)) least = &m;
        Rat lc = den_.terms().at(*least);
        if (!qc::is_one(lc)) {
            Rat inv = Rat(1) / lc;
            den_.scale(inv);
            num_.scale(inv);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline RationalExpr substitute(const RationalExpr& f,
                               const std::vector<std::pair<SymId, LaurentPoly>>& bindings) {
    return RationalExpr(substitute(f.num(), bindings), substitute(f.den(), bindings));
}
inline RationalExpr substitute(const RationalExpr& f, SymId s, const LaurentPoly& g) {
    return RationalExpr(substitute(f.num(), s, g), substitute(f.den(), s, g));
}

}  // namespace qc
