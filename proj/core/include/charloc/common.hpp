#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace charloc {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>; // row-major

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad mathematical input: non-dominant weight, invalid Cartan data,
// malformed torsion element, division by zero.
struct InvalidInputError : Error {
    using Error::Error;
};

// A configured resource cap was hit; carries the cap's name.
struct CapExceededError : Error {
    std::string cap;
    CapExceededError(std::string cap_name, const std::string& msg)
        : Error(msg), cap(std::move(cap_name)) {}
};

// An internal consistency check failed (always a bug, never user error).
struct InternalCheckError : Error {
    using Error::Error;
};

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec mat_apply(const IntMat& m, const IntVec& v) {
    IntVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const long long aik = a[i][k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

inline IntMat mat_identity(std::size_t n) {
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

// Runs fn(i) for i in [0, count) on up to n_threads workers. Items must be
// independent; results are normally written to caller-preallocated slots, so
// the outcome does not depend on scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                         unsigned n_threads = 0) {
    if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
    if (n_threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += n_threads) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace charloc
