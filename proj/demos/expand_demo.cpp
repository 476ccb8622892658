// Builds a few of the polynomial families and series by hand and prints
// them in canonical form.

#include <iostream>

#include "qcalc/render.hpp"
#include "qcalc/special.hpp"

using namespace qc;

int main() {
    // Polynomials live in a context that names every symbol up front.
    Context ctx = ContextBuilder(2)  // scale 2: q = p^2, so sqrt(q) = p exists
                      .param("x")
                      .param("y")
                      .param("u")
                      .param("v")
                      .small("z")
                      .build();
    auto x = LaurentPoly::var(ctx, "x");
    auto y = LaurentPoly::var(ctx, "y");
    auto u = LaurentPoly::var(ctx, "u");
    auto v = LaurentPoly::var(ctx, "v");
    auto z = LaurentPoly::var(ctx, "z");

    std::cout << "R_3(x,y;u,v|q)   = " << render(r_poly({3, x, y, u, v})) << "\n";
    std::cout << "h_3(x|q)         = " << render(rogers_szego_h(3, x)) << "\n";
    std::cout << "S_2(x;q)         = " << render(stieltjes_wigert_s(2, x)) << "\n";
    std::cout << "P_3(x,y)         = " << render(cauchy_p(3, x, y)) << "\n";
    std::cout << "E_2(x,y)         = " << render(exton_e(2, x, y)) << "\n\n";

    SeriesCtx sc{ctx, {ctx->id_of("z")}, 4};
    std::cout << "e_q(z,u) to order 4:\n  " << render(eq_deformed(z, u, sc)) << "\n\n";
    std::cout << "(z;q)_inf to order 4:\n  " << render(qpochhammer_inf_series(z, sc))
              << "\n\n";

    // The two-variable binomial theorem, checked on the spot.
    auto lhs = eq_deformed(y * z, u, sc) * inv_qpochhammer_inf_series(x * z, sc);
    TruncatedSeries rhs = sc.zero();
    for (long n = 0; n <= sc.order; ++n) {
        auto term = sc.poly(r_upoly(n, x, y, u) * z.pow(n));
        term.scale(RationalExpr(LaurentPoly::one(ctx), qq_factorial(ctx, n)));
        rhs += term;
    }
    std::cout << "generalized q-binomial theorem holds to order 4: "
              << (lhs.equal_to(rhs) ? "yes" : "no") << "\n";
    return 0;
}
