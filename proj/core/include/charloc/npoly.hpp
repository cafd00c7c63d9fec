#pragma once

#include "charloc/cyclotomic.hpp"

namespace charloc {

// Polynomial in the asymptotic variable n with Q(zeta_r) coefficients.
// Trailing zero coefficients are stripped; the zero polynomial has degree -1.
class NPoly {
  public:
    NPoly() = default;
    explicit NPoly(CycNum constant) { coeffs_.push_back(std::move(constant)); normalize(); }
    explicit NPoly(std::vector<CycNum> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static NPoly zero() { return NPoly(); }
    static NPoly constant(const Rat& r, long long order = 1) {
        return NPoly(CycNum::from_rat(r, order));
    }
    // c * n^k
    static NPoly monomial(const CycNum& c, std::size_t k);

    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // coefficient of n^k (zero beyond the stored degree)
    CycNum coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : CycNum::zero();
    }
    const std::vector<CycNum>& coeffs() const { return coeffs_; }

    NPoly operator-() const;
    NPoly operator+(const NPoly& o) const;
    NPoly operator-(const NPoly& o) const;
    NPoly operator*(const NPoly& o) const;
    NPoly operator*(const CycNum& c) const;
    NPoly& operator+=(const NPoly& o) { return *this = *this + o; }

    CycNum eval(long long n) const;

    bool operator==(const NPoly& o) const;
    bool operator!=(const NPoly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<CycNum> coeffs_;
};

} // namespace charloc
