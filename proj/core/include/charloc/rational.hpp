#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "charloc/common.hpp"

namespace charloc {

// Exact rationals are GMP's canonical mpq: denominator > 0, gcd(num, den) = 1.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// floor(r) as mpz
inline mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// r mod 1, in [0, 1)
inline Rat rat_frac(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    f.canonicalize();
    return f;
}

inline RatVec rat_vec(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (long long x : v) r.push_back(rat(x));
    return r;
}

inline Rat rat_dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat rat_dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * rat(a[i]);
    return s;
}

} // namespace charloc
