#include "charloc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace charloc {

namespace {

// Exact division of integer polynomials; the quotient must be integral.
std::vector<mpz_class> poly_divide_exact(const std::vector<mpz_class>& num,
                                         const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const std::size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw InternalCheckError("polynomial division underflow");
    std::vector<mpz_class> quot(rem.size() - dd, 0);
    for (long long i = static_cast<long long>(rem.size()) - 1;
         i >= static_cast<long long>(dd); --i) {
        mpz_class c = rem[i];
        if (c == 0) continue;
        if (den[dd] != 1) {
            if (c % den[dd] != 0) throw InternalCheckError("non-exact polynomial division");
            c /= den[dd];
        }
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw InternalCheckError("non-exact polynomial division (remainder)");
    return quot;
}

struct CycTable {
    long long phi = 0;
    std::vector<mpz_class> minpoly; // Phi_r, ascending, monic
    RatVec xphi;                    // x^phi mod Phi_r
};

// Immutable memo of cyclotomic data, built once per order.
const CycTable& table_for(long long r) {
    static std::map<long long, CycTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    CycTable t;
    t.minpoly = cyclotomic_polynomial(r);
    t.phi = static_cast<long long>(t.minpoly.size()) - 1;
    t.xphi.assign(t.phi, Rat(0));
    for (long long j = 0; j < t.phi; ++j) t.xphi[j] = Rat(-t.minpoly[j]);
    auto [pos, ok] = cache.emplace(r, std::move(t));
    (void)ok;
    return pos->second;
}

long long poly_degree(const RatVec& p) {
    for (long long i = static_cast<long long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

} // namespace

long long euler_phi(long long r) {
    long long result = r, n = r;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(long long r) {
    if (r < 1) throw InvalidInputError("cyclotomic order must be >= 1");
    // x^r - 1 divided by the product of Phi_d over proper divisors d of r
    std::vector<mpz_class> num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    for (long long d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        num = poly_divide_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycNum CycNum::zero(long long order) { return from_rat(Rat(0), order); }

CycNum CycNum::one(long long order) { return from_rat(Rat(1), order); }

CycNum CycNum::from_rat(const Rat& r, long long order) {
    const auto& t = table_for(order);
    RatVec c(t.phi, Rat(0));
    c[0] = r;
    return CycNum(order, std::move(c));
}

CycNum CycNum::reduce(long long order, const RatVec& poly) {
    const auto& t = table_for(order);
    // Horner evaluation of poly at x, reducing mod Phi_r at each step.
    RatVec acc(t.phi, Rat(0));
    for (long long k = static_cast<long long>(poly.size()) - 1; k >= 0; --k) {
        // acc <- acc * x
        Rat top = acc[t.phi - 1];
        for (long long j = t.phi - 1; j >= 1; --j) acc[j] = acc[j - 1];
        acc[0] = 0;
        if (top != 0)
            for (long long j = 0; j < t.phi; ++j) acc[j] += top * t.xphi[j];
        acc[0] += poly[k];
    }
    return CycNum(order, std::move(acc));
}

CycNum CycNum::root_of_unity(long long order, long long k) {
    if (order < 1) throw InvalidInputError("root of unity of order < 1");
    k %= order;
    if (k < 0) k += order;
    RatVec poly(k + 1, Rat(0));
    poly[k] = 1;
    return reduce(order, poly);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw InvalidInputError("cyclotomic number is not rational");
    return coeffs_[0];
}

CycNum CycNum::embedded(long long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw InvalidInputError("cyclotomic embedding requires divisible orders");
    const long long e = new_order / order_;
    // zeta_r^i -> zeta_new^(e*i)
    RatVec poly(e * (coeffs_.size() - 1) + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[e * i] = coeffs_[i];
    return reduce(new_order, poly);
}

CycNum CycNum::operator-() const {
    RatVec c = coeffs_;
    for (auto& x : c) x = -x;
    return CycNum(order_, std::move(c));
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (order_ != o.order_) {
        const long long l = std::lcm(order_, o.order_);
        return embedded(l) + o.embedded(l);
    }
    RatVec c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CycNum(order_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    if (order_ != o.order_) {
        const long long l = std::lcm(order_, o.order_);
        return embedded(l) * o.embedded(l);
    }
    RatVec prod(2 * coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return reduce(order_, prod);
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw InvalidInputError("division by zero in Q(zeta)");
    // Extended Euclid for (this, Phi_r) over Q[x]; Phi_r is irreducible so
    // the gcd is a nonzero constant.
    const auto& t = table_for(order_);
    RatVec r0(t.minpoly.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(t.minpoly[i]);
    RatVec r1 = coeffs_;
    // u*this ≡ r0, v*this ≡ r1 (mod Phi_r)
    RatVec u(1, Rat(0)), v(1, Rat(1));
    while (poly_degree(r1) > 0) {
        RatVec rem = r0;
        const long long d1 = poly_degree(r1);
        RatVec q(std::max<long long>(poly_degree(r0) - d1 + 1, 1), Rat(0));
        const Rat lead = r1[d1];
        for (long long i = poly_degree(rem); i >= d1; --i) {
            if (rem[i] == 0) continue;
            const Rat c = rem[i] / lead;
            q[i - d1] = c;
            for (long long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
        }
        RatVec qv(q.size() + v.size() - 1, Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) qv[i + j] += q[i] * v[j];
        }
        RatVec nu(std::max(u.size(), qv.size()), Rat(0));
        for (std::size_t i = 0; i < u.size(); ++i) nu[i] += u[i];
        for (std::size_t i = 0; i < qv.size(); ++i) nu[i] -= qv[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u = std::move(v);
        v = std::move(nu);
    }
    if (poly_degree(r1) != 0)
        throw InternalCheckError("unexpected gcd in cyclotomic inverse");
    const Rat scale = Rat(1) / r1[0];
    RatVec res(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) res[i] = v[i] * scale;
    return reduce(order_, res);
}

CycNum CycNum::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this;
    CycNum acc = CycNum::one(order_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::conjugate() const {
    // zeta -> zeta^{r-1}
    RatVec poly(order_, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long long k = (static_cast<long long>(i) * (order_ - 1)) % order_;
        poly[k] += coeffs_[i];
    }
    return reduce(order_, poly);
}

bool CycNum::operator==(const CycNum& o) const {
    if (order_ == o.order_) return coeffs_ == o.coeffs_;
    const long long l = std::lcm(order_, o.order_);
    return embedded(l).coeffs_ == o.embedded(l).coeffs_;
}

std::string CycNum::to_string() const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) s += " + ";
        s += rat_to_string(coeffs_[i]);
        if (i >= 1) {
            s += "*z" + std::to_string(order_);
            if (i > 1) s += "^" + std::to_string(i);
        }
        first = false;
    }
    if (first) s = "0";
    return s;
}

} // namespace charloc
