#pragma once

#include "charloc/npoly.hpp"

namespace charloc {

// Truncated Laurent series in the localization parameter eps, with NPoly
// coefficients. Coefficients are stored for eps^valuation .. eps^trunc_order;
// anything beyond trunc_order is undefined and must never be read.
//
// Multiplication propagates truncation by the worst-case rule, so a chain of
// products ends with exactly the coefficients that are actually reliable.
class EpsSeries {
  public:
    EpsSeries() : valuation_(0), trunc_(-1) {} // empty/zero series, nothing defined

    EpsSeries(long long valuation, std::vector<NPoly> coeffs)
        : valuation_(valuation), coeffs_(std::move(coeffs)),
          trunc_(valuation + static_cast<long long>(coeffs_.size()) - 1) {}

    static EpsSeries constant(const CycNum& c, long long trunc_order);
    // exp((a*n + b) * eps), coefficients up to eps^trunc_order
    static EpsSeries exp_linear(const CycNum& a, const CycNum& b, long long trunc_order);
    // 1 - theta * exp(c * eps), coefficients up to eps^trunc_order
    static EpsSeries one_minus_scaled_exp(const CycNum& theta, const CycNum& c,
                                          long long trunc_order);

    long long valuation() const { return valuation_; }
    long long trunc_order() const { return trunc_; }

    // coefficient of eps^k; zero below the valuation, error above trunc_order
    const NPoly& coefficient_at(long long k) const;

    EpsSeries operator+(const EpsSeries& o) const;
    EpsSeries operator*(const EpsSeries& o) const;

    // requires the coefficient at the valuation to be a nonzero constant
    // (degree-0 in n); result has valuation -valuation_.
    EpsSeries inverse() const;

  private:
    long long valuation_;
    std::vector<NPoly> coeffs_;
    long long trunc_;
};

} // namespace charloc
