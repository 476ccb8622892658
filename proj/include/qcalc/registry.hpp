#pragma once

#include "qcalc/registry/genfunc.hpp"
#include "qcalc/registry/hyper.hpp"
#include "qcalc/registry/kernel.hpp"
#include "qcalc/registry/mehler.hpp"
#include "qcalc/registry/ops.hpp"
#include "qcalc/registry/rn.hpp"
#include "qcalc/registry/rr_exton.hpp"

namespace qc {

/// The full registry, in source order. Every entry carries a verbatim
/// anchor into its source text; entries marked expect_mismatch document
/// printed forms whose failure is itself the registered fact.
inline const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> R = [] {
        std::vector<IdentitySpec> r;
        reg::add_kernel_entries(r);
        reg::add_hyper_entries(r);
        reg::add_rn_entries(r);
        reg::add_operator_entries(r);
        reg::add_genfunc_entries(r);
        reg::add_mehler_rogers_entries(r);
        reg::add_rr_operator_entries(r);
        reg::add_exton_operator_entries(r);
        return r;
    }();
    return R;
}

inline const IdentitySpec* find_identity(const std::string& id) {
    for (const auto& spec : registry())
        if (spec.id == id) return &spec;
    return nullptr;
}

inline const IdentitySpec& get_identity(const std::string& id) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw UnknownIdentity("unknown identity: " + id);
    return *spec;
}

/// Negative-control fixture: the generalized q-binomial theorem with the
/// deformation weight u^binom(k,2) deliberately replaced by u^k on the left
/// side. Verification must report a mismatch with a concrete first monomial
/// (the engine has to be able to fail).
inline IdentitySpec make_perturbed_fixture() {
    return {
        "fixture.perturbed_qbinomial",
        "S6",
        "Generalized $q$-binomial theorem",
        "test fixture: left side built with u^k in place of u^binom(k,2)",
        1,
        false,
        6,
        {},
        reg::mk_ctx({"x", "y", "u"}, {"z"}),
        [](const Context& ctx, const Instance&, long order) {
            reg::Env e(ctx, order);
            auto x = e.v("x"), y = e.v("y"), u = e.v("u"), z = e.v("z");
            TruncatedSeries lhs = e.zero();
            for (long n = 0; n <= order; ++n) {
                LaurentPoly rn(ctx);
                for (long k = 0; k <= n; ++k)
                    rn += gauss_binomial(ctx, n, k) * u.pow(k) * x.pow(n - k) * y.pow(k);
                auto term = e.poly(rn * z.pow(n));
                term.scale(e.inv_qq(n));
                lhs += term;
            }
            auto rhs = e.eq(y * z, u) * e.inv_einf(x * z);
            return compare_series(lhs, rhs);
        },
    };
}

}  // namespace qc
