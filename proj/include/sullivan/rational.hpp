#pragma once

#include <gmpxx.h>

#include <string>

namespace sullivan {

// Exact arbitrary-precision rational; no floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat frac(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace sullivan
