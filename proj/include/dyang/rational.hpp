#pragma once

// Exact rational scalars backed by GMP, plus small combinatorial helpers
// used throughout the series expansions.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyang {

using Rat = mpq_class;

inline Rat ratq(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a/b" or "a" in base 10.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Generalized binomial coefficient C(e, j) for integer e (possibly negative)
// and j >= 0; this is what the re-expansion of (u + gamma*h)^e needs.
inline Rat binom_gen(long e, long j) {
    if (j < 0) return Rat(0);
    Rat acc(1);
    for (long t = 0; t < j; ++t) {
        acc *= Rat(e - t);
        acc /= Rat(t + 1);
    }
    return acc;
}

inline Rat factorial(long k) {
    Rat acc(1);
    for (long t = 2; t <= k; ++t) acc *= Rat(t);
    return acc;
}

}  // namespace dyang
