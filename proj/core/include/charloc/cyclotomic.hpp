#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charloc/rational.hpp"

namespace charloc {

// Phi_r as a monic integer polynomial, coefficients ascending; degree phi(r).
std::vector<mpz_class> cyclotomic_polynomial(long long r);

long long euler_phi(long long r);

// An element of Q(zeta_r) in the power basis 1, zeta, ..., zeta^{phi(r)-1}
// of Q[x]/Phi_r(x). Coordinates are canonical, so zero testing is exact.
class CycNum {
  public:
    CycNum() : order_(1), coeffs_(1, Rat(0)) {}
    explicit CycNum(const Rat& r) : order_(1), coeffs_(1, r) {}

    static CycNum zero(long long order = 1);
    static CycNum one(long long order = 1);
    static CycNum from_rat(const Rat& r, long long order);
    // zeta_order^k, any integer k
    static CycNum root_of_unity(long long order, long long k);

    long long order() const { return order_; }
    const RatVec& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // defined when is_rational()
    Rat rational_value() const;

    // image under the embedding Q(zeta_r) -> Q(zeta_new_order), r | new_order
    CycNum embedded(long long new_order) const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum inverse() const; // throws InvalidInputError on zero
    CycNum pow(long long e) const;
    // Galois image zeta -> zeta^{-1} (complex conjugation on roots of unity)
    CycNum conjugate() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    CycNum(long long order, RatVec coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
    // reduce a polynomial in zeta_order of any degree into the power basis
    static CycNum reduce(long long order, const RatVec& poly);

    long long order_;
    RatVec coeffs_; // length phi(order_)
};

inline CycNum operator*(const Rat& a, const CycNum& b) { return CycNum::from_rat(a, b.order()) * b; }

} // namespace charloc
