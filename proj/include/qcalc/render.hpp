#pragma once

#include <sstream>

#include "qcalc/series.hpp"

namespace qc {

// Canonical text rendering. Deterministic byte-for-byte for equal values:
//  - polynomial terms are grouped by their non-base monomial, groups sorted
//    lexicographically descending in symbol declaration order;
//  - each group's base-variable polynomial prints ascending by exponent,
//    parenthesized when it has more than one term;
//  - at base_scale s, even p-exponents print as integer q-powers and odd
//    ones as powers of p (p stands for q^(1/2) when s = 2).

namespace render_detail {

inline std::string base_power(const Context& ctx, Expo e) {
    int s = ctx->base_scale();
    const std::string q = ctx->info(ctx->base()).name;
    if (e % s == 0) {
        Expo k = e / s;
        if (k == 1) return q;
        return q + "^" + std::to_string(k);
    }
    if (e == 1) return "p";
    return "p^" + std::to_string(e);
}

inline std::string symbol_power(const Context& ctx, SymId i, Expo e) {
    if (i == ctx->base()) return base_power(ctx, e);
    const std::string& n = ctx->info(i).name;
    if (e == 1) return n;
    return n + "^" + std::to_string(e);
}

// Base-variable polynomial (one group's coefficient), ascending exponents.
inline std::string base_poly(const Context& ctx, const std::vector<std::pair<Expo, Rat>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (e == 0) {
            os << render_rat(a);
        } else {
            if (!qc::is_one(a)) os << render_rat(a) << "*";
            os << base_power(ctx, e);
        }
    }
    if (first) os << "0";
    return os.str();
}

struct Group {
    Mono rest;                               // non-base part
    std::vector<std::pair<Expo, Rat>> base;  // base exponent -> coefficient
};

inline bool rest_lex_greater(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxSymbols; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

// Factors inside one monomial print alphabetically by symbol name.
inline std::vector<SymId> print_order(const Context& ctx) {
    std::vector<SymId> ids;
    for (int i = 0; i < ctx->nsym(); ++i) ids.push_back(i);
    std::sort(ids.begin(), ids.end(), [&](SymId a, SymId b) {
        return ctx->info(a).name < ctx->info(b).name;
    });
    return ids;
}

}  // namespace render_detail

inline std::string render(const LaurentPoly& p) {
    using namespace render_detail;
    const Context& ctx = p.ctx();
    if (p.is_zero()) return "0";
    if (!p.mentions_nonbase()) {
        // Pure base-variable polynomial: print ascending, no outer parens.
        std::vector<std::pair<Expo, Rat>> v;
        for (const auto& [m, c] : p.terms()) v.push_back({m.e[ctx->base()], c});
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return base_poly(ctx, v);
    }

    std::vector<Group> groups;
    {
        std::unordered_map<Mono, std::vector<std::pair<Expo, Rat>>, MonoHash> by_rest;
        for (const auto& [m, c] : p.terms()) {
            Mono rest = m;
            Expo be = m.e[ctx->base()];
            rest.e[ctx->base()] = 0;
            by_rest[rest].push_back({be, c});
        }
        for (auto& [rest, v] : by_rest) {
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            groups.push_back({rest, std::move(v)});
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return rest_lex_greater(a.rest, b.rest); });

    std::ostringstream os;
    bool first = true;
    const std::vector<SymId> order = print_order(ctx);
    for (const Group& g : groups) {
        std::string mono;
        for (SymId i : order) {
            if (i == ctx->base() || g.rest.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += symbol_power(ctx, i, g.rest.e[i]);
        }
        // Coefficient handling: single base term inlines, multiterm goes in parens.
        bool negated = false;
        std::string coeff;
        if (g.base.size() == 1) {
            auto [e, c] = g.base[0];
            Rat a = c;
            if (sgn(a) < 0) {
                negated = true;
                a = -a;
            }
            std::string piece;
            if (e != 0) {
                if (!qc::is_one(a)) piece = render_rat(a) + "*";
                piece += base_power(ctx, e);
            } else {
                piece = render_rat(a);
            }
            coeff = piece;
            if (!mono.empty()) {
                if (coeff == "1")
                    coeff.clear();
                else
                    coeff += "*";
            }
        } else {
            coeff = "(" + base_poly(ctx, g.base) + ")";
            if (!mono.empty()) coeff += "*";
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        os << coeff << mono;
    }
    return os.str();
}

inline std::string render(const RationalExpr& r) {
    if (r.is_polynomial()) return render(r.num());
    std::string num = render(r.num());
    std::string den = render(r.den());
    return "(" + num + ")/(" + den + ")";
}

inline std::string render_mono(const Context& ctx, const Mono& m) {
    using namespace render_detail;
    std::string out;
    for (SymId i : print_order(ctx)) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += symbol_power(ctx, i, m.e[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string render(const TruncatedSeries& s) {
    const Context& ctx = s.ctx();
    auto terms = s.sorted_terms();
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string key = render_mono(ctx, m);
        std::string coeff = render(c);
        if (key == "1") {
            os << coeff;
        } else if (coeff == "1") {
            os << key;
        } else {
            os << coeff << "*" << key;
        }
    }
    os << " + O(" << s.order() + 1 << ")";
    return os.str();
}

}  // namespace qc
