#include "charloc/npoly.hpp"

namespace charloc {

NPoly NPoly::monomial(const CycNum& c, std::size_t k) {
    std::vector<CycNum> v(k + 1, CycNum::zero(c.order()));
    v[k] = c;
    return NPoly(std::move(v));
}

NPoly NPoly::operator-() const {
    std::vector<CycNum> v = coeffs_;
    for (auto& c : v) c = -c;
    return NPoly(std::move(v));
}

NPoly NPoly::operator+(const NPoly& o) const {
    std::vector<CycNum> v(std::max(coeffs_.size(), o.coeffs_.size()), CycNum::zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return NPoly(std::move(v));
}

NPoly NPoly::operator-(const NPoly& o) const { return *this + (-o); }

NPoly NPoly::operator*(const NPoly& o) const {
    if (is_zero() || o.is_zero()) return NPoly();
    std::vector<CycNum> v(coeffs_.size() + o.coeffs_.size() - 1, CycNum::zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return NPoly(std::move(v));
}

NPoly NPoly::operator*(const CycNum& c) const {
    std::vector<CycNum> v = coeffs_;
    for (auto& x : v) x = x * c;
    return NPoly(std::move(v));
}

CycNum NPoly::eval(long long n) const {
    CycNum acc = CycNum::zero();
    const CycNum nn = CycNum::from_rat(rat(n), 1);
    for (long long i = degree(); i >= 0; --i) acc = acc * nn + coeffs_[i];
    return acc;
}

bool NPoly::operator==(const NPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string NPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[i].to_string() + ")";
        if (i == 1) s += "*n";
        if (i > 1) s += "*n^" + std::to_string(i);
    }
    return s;
}

} // namespace charloc
