#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qc {

/// Exact rational scalar. GMP keeps it canonical: gcd(|num|, den) = 1, den >= 1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

/// Renders "3", "-3", "3/4".
inline std::string render_rat(const Rat& r) { return r.get_str(); }

// Error taxonomy. Each maps to one precondition named in the public contracts.
struct QcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SubstitutionNotInvertible : QcError {
    using QcError::QcError;
};
struct SmallSymbolMismatch : QcError {
    using QcError::QcError;
};
struct NotFormallySmall : QcError {
    using QcError::QcError;
};
struct ScaleUnavailable : QcError {
    using QcError::QcError;
};
struct NegativeExponent : QcError {
    using QcError::QcError;
};
struct ZeroDenominatorParameter : QcError {
    using QcError::QcError;
};
struct TargetSymbolInCoefficient : QcError {
    using QcError::QcError;
};
struct UnknownIdentity : QcError {
    using QcError::QcError;
};

/// binom(m, 2) for any integer m (generalized: m*(m-1)/2, valid for m < 0 too).
inline long binom2(long m) { return m * (m - 1) / 2; }

}  // namespace qc
