#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qweyl {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator) as long as we construct them through
// mpq_class operations.
using Rat = mpq_class;

struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exact one-sided division leaves a remainder. In the Weyl
// machinery this signals that an action was applied outside the domain
// where its images stay polynomial.
struct not_divisible : engine_error {
    using engine_error::engine_error;
};

struct table_mismatch : engine_error {
    using engine_error::engine_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw engine_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Rat r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw engine_error("zero denominator");
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw engine_error("zero raised to negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    Rat acc(1);
    for (long k = e < 0 ? -e : e; k > 0; --k) acc *= b;
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qweyl
