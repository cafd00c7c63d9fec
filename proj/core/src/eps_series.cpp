#include "charloc/eps_series.hpp"

namespace charloc {

namespace {
const NPoly kZeroPoly{};
}

EpsSeries EpsSeries::constant(const CycNum& c, long long trunc_order) {
    std::vector<NPoly> v(trunc_order + 1);
    v[0] = NPoly(c);
    return EpsSeries(0, std::move(v));
}

EpsSeries EpsSeries::exp_linear(const CycNum& a, const CycNum& b, long long trunc_order) {
    std::vector<NPoly> v(trunc_order + 1);
    v[0] = NPoly(CycNum::one(a.order()));
    NPoly lin = NPoly::monomial(a, 1) + NPoly(b); // a*n + b
    for (long long k = 1; k <= trunc_order; ++k)
        v[k] = v[k - 1] * lin * CycNum::from_rat(rat(1, k), 1);
    return EpsSeries(0, std::move(v));
}

EpsSeries EpsSeries::one_minus_scaled_exp(const CycNum& theta, const CycNum& c,
                                          long long trunc_order) {
    std::vector<NPoly> v(trunc_order + 1);
    v[0] = NPoly(CycNum::one(theta.order()) - theta);
    CycNum ck = theta; // theta * c^k / k!
    for (long long k = 1; k <= trunc_order; ++k) {
        ck = ck * c * CycNum::from_rat(rat(1, k), 1);
        v[k] = NPoly(-ck);
    }
    return EpsSeries(0, std::move(v));
}

const NPoly& EpsSeries::coefficient_at(long long k) const {
    if (k > trunc_)
        throw InvalidInputError("eps series coefficient read beyond truncation order");
    if (k < valuation_) return kZeroPoly;
    return coeffs_[k - valuation_];
}

EpsSeries EpsSeries::operator+(const EpsSeries& o) const {
    const long long val = std::min(valuation_, o.valuation_);
    const long long tr = std::min(trunc_, o.trunc_);
    if (tr < val) throw InternalCheckError("eps series sum has empty window");
    std::vector<NPoly> v(tr - val + 1);
    for (long long k = val; k <= tr; ++k) v[k - val] = coefficient_at(k) + o.coefficient_at(k);
    return EpsSeries(val, std::move(v));
}

EpsSeries EpsSeries::operator*(const EpsSeries& o) const {
    const long long val = valuation_ + o.valuation_;
    const long long tr = std::min(trunc_ + o.valuation_, o.trunc_ + valuation_);
    if (tr < val) throw InternalCheckError("eps series product has empty window");
    std::vector<NPoly> v(tr - val + 1);
    for (long long i = valuation_; i <= trunc_; ++i) {
        const NPoly& a = coeffs_[i - valuation_];
        if (a.is_zero()) continue;
        for (long long j = o.valuation_; j <= o.trunc_; ++j) {
            if (i + j > tr) break;
            const NPoly& b = o.coeffs_[j - o.valuation_];
            if (b.is_zero()) continue;
            v[i + j - val] += a * b;
        }
    }
    return EpsSeries(val, std::move(v));
}

EpsSeries EpsSeries::inverse() const {
    if (coeffs_.empty() || coeffs_[0].is_zero() || !coeffs_[0].is_constant())
        throw InvalidInputError(
            "inverting a series whose leading coefficient is zero or non-constant in n");
    const CycNum c = coeffs_[0].coeff(0);
    const CycNum cinv = c.inverse();
    const long long terms = trunc_ - valuation_; // inverse is reliable this far above val
    std::vector<NPoly> w(terms + 1);
    w[0] = NPoly(cinv);
    for (long long k = 1; k <= terms; ++k) {
        NPoly s;
        for (long long j = 1; j <= k; ++j) {
            const NPoly& uj = coeffs_[j];
            if (uj.is_zero()) continue;
            s += uj * w[k - j];
        }
        w[k] = (-s) * cinv;
    }
    return EpsSeries(-valuation_, std::move(w));
}

} // namespace charloc
