#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qcalc/base.hpp"

namespace qc {

enum class SymbolKind { parameter, small };

using SymId = int;

struct SymbolInfo {
    std::string name;
    SymbolKind kind;
};

// Exponent vectors are fixed-width so monomials stay cheap to hash and copy.
constexpr int kMaxSymbols = 12;
using Expo = int32_t;

struct Mono {
    std::array<Expo, kMaxSymbols> e{};

    bool operator==(const Mono& o) const { return e == o.e; }

    long total() const {
        long t = 0;
        for (Expo x : e) t += x;
        return t;
    }

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxSymbols; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxSymbols; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    bool is_unit() const {
        for (Expo x : e)
            if (x != 0) return false;
        return true;
    }
};

struct MonoHash {
    size_t operator()(const Mono& m) const {
        // FNV-1a over the exponent bytes.
        uint64_t h = 1469598103934665603ull;
        const unsigned char* p = reinterpret_cast<const unsigned char*>(m.e.data());
        for (size_t i = 0; i < sizeof(m.e); ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

/// Total order used for canonical iteration of series keys and mismatch
/// reporting: graded (by total degree), ties broken lexicographically in
/// symbol declaration order.
inline bool graded_lex_less(const Mono& a, const Mono& b) {
    long ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (int i = 0; i < kMaxSymbols; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

class ContextImpl;
using Context = std::shared_ptr<const ContextImpl>;

class LaurentPoly;

/// Immutable symbol universe shared by every value built from it.
///
/// Slot 0 is always the base variable. With base_scale s the stored variable
/// p satisfies q = p^s, so half-integer q-powers are integer p-powers when
/// s is even. Memo tables for Gaussian binomials and (q;q)_n live here,
/// guarded by a mutex so concurrent use of one context is safe.
class ContextImpl : public std::enable_shared_from_this<ContextImpl> {
  public:
    ContextImpl(std::vector<SymbolInfo> symbols, int base_scale)
        : symbols_(std::move(symbols)), base_scale_(base_scale) {
        if (symbols_.empty() || symbols_[0].name.empty())
            throw QcError("context requires a base symbol in slot 0");
        if (static_cast<int>(symbols_.size()) > kMaxSymbols)
            throw QcError("too many symbols for one context");
        if (base_scale_ < 1) throw QcError("base_scale must be >= 1");
        for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
            if (!by_name_.emplace(symbols_[i].name, i).second)
                throw QcError("duplicate symbol name: " + symbols_[i].name);
        }
    }

    int nsym() const { return static_cast<int>(symbols_.size()); }
    int base_scale() const { return base_scale_; }
    SymId base() const { return 0; }

    const SymbolInfo& info(SymId id) const { return symbols_.at(id); }
    bool is_small(SymId id) const { return symbols_.at(id).kind == SymbolKind::small; }

    SymId id_of(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw QcError("unknown symbol: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return by_name_.count(name) != 0; }

    std::vector<SymId> small_ids() const {
        std::vector<SymId> out;
        for (int i = 0; i < nsym(); ++i)
            if (is_small(i)) out.push_back(i);
        return out;
    }

    /// True when q^(j/2) is representable, i.e. base_scale is even.
    bool has_sqrt_base() const { return base_scale_ % 2 == 0; }

    // Memoization shared by qkernel; definitions live in qkernel.hpp.
    const LaurentPoly& gauss_binomial_cached(int n, int k) const;
    const LaurentPoly& qq_factorial_cached(int n) const;  // (q;q)_n

  private:
    std::vector<SymbolInfo> symbols_;
    int base_scale_;
    std::map<std::string, SymId> by_name_;

    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const LaurentPoly>> gauss_cache_;
    mutable std::vector<std::shared_ptr<const LaurentPoly>> qq_cache_;
};

class ContextBuilder {
  public:
    explicit ContextBuilder(int base_scale = 1, std::string base_name = "q")
        : scale_(base_scale) {
        syms_.push_back({std::move(base_name), SymbolKind::parameter});
    }
    ContextBuilder& param(const std::string& name) {
        syms_.push_back({name, SymbolKind::parameter});
        return *this;
    }
    ContextBuilder& small(const std::string& name) {
        syms_.push_back({name, SymbolKind::small});
        return *this;
    }
    /// Declares the base variable itself as a series variable (pure q-series).
    ContextBuilder& small_base() {
        syms_[0].kind = SymbolKind::small;
        return *this;
    }
    Context build() const { return std::make_shared<ContextImpl>(syms_, scale_); }

  private:
    int scale_;
    std::vector<SymbolInfo> syms_;
};

inline void check_same_context(const Context& a, const Context& b) {
    if (a.get() != b.get()) throw QcError("values belong to different contexts");
}

}  // namespace qc
