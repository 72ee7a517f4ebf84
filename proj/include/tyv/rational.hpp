#pragma once

#include <gmpxx.h>
#include <string>

namespace tyv {

// All coefficient arithmetic is exact; no floating point anywhere.
using Rat = mpq_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Generalized binomial coefficient C(n, k) for integer n (possibly negative)
// and k >= 0, as used by the binomial series (x + c)^n.
inline Rat binomial(long n, long k) {
    Rat r = 1;
    for (long j = 0; j < k; ++j) {
        r *= Rat(n - j);
        r /= Rat(j + 1);
    }
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    Rat r = 1;
    for (long j = 0; j < e; ++j) r *= base;
    return r;
}

} // namespace tyv
