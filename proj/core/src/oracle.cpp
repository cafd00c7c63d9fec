#include "charloc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace charloc {

namespace {

// Gram matrix of the invariant form B(mu, nu) = sum_{a in R} <mu,a^vee><nu,a^vee>.
// W-invariant, positive semidefinite, kernel = central characters; valid for
// the Freudenthal recursion since the factor-wise Casimir argument applies.
IntMat invariant_form(const RootDatum& d) {
    IntMat k(d.lattice_rank, IntVec(d.lattice_rank, 0));
    for (const auto& r : d.roots)
        for (int i = 0; i < d.lattice_rank; ++i)
            for (int j = 0; j < d.lattice_rank; ++j) k[i][j] += r.coroot[i] * r.coroot[j];
    return k;
}

mpz_class form_value(const IntMat& k, const IntVec& a, const IntVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (std::size_t j = 0; j < b.size(); ++j) row += k[i][j] * b[j];
        s += mpz_class(static_cast<long>(a[i])) * static_cast<long>(row);
    }
    return s;
}

// inverse Cartan matrix, exact; entries are nonnegative for finite type
std::vector<RatVec> inverse_cartan(const RootDatum& d) {
    const int n = d.rank;
    std::vector<RatVec> a(n, RatVec(n)), inv(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        inv[i][i] = 1;
        for (int j = 0; j < n; ++j) a[i][j] = rat(d.cartan(i, j));
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InternalCheckError("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rat dd = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= dd;
            inv[col][c] /= dd;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace

WeightTable dominant_character(const RootDatum& d, const IntVec& lambda, long long max_weights) {
    if (static_cast<int>(lambda.size()) != d.lattice_rank)
        throw InvalidInputError("weight has wrong dimension");
    if (!d.is_dominant(lambda)) throw InvalidInputError("lambda is not dominant");

    WeightTable t;
    t.lambda = lambda;

    // Dominant support: mu = lambda - sum c_i alpha_i with c_i bounded by
    // <lambda, omega_i^vee> (a nonnegative inverse-Cartan combination of the
    // Cartan pairings), mu dominant.
    const auto icart = inverse_cartan(d);
    std::vector<long long> bounds(d.rank, 0);
    for (int i = 0; i < d.rank; ++i) {
        Rat b = 0;
        for (int j = 0; j < d.rank; ++j) b += icart[i][j] * rat(dot(lambda, d.simple_coroots[j]));
        bounds[i] = rat_floor(b).get_si();
    }
    std::vector<std::pair<long long, IntVec>> found; // (level, weight)
    IntVec c(d.rank, 0);
    long long candidates = 1;
    for (int i = 0; i < d.rank; ++i) {
        candidates *= bounds[i] + 1;
        if (candidates > max_weights)
            throw CapExceededError("max-weights", "dominant support box exceeds cap");
    }
    while (true) {
        IntVec mu = lambda;
        long long level = 0;
        for (int i = 0; i < d.rank; ++i) {
            level += c[i];
            for (int k = 0; k < d.lattice_rank; ++k) mu[k] -= c[i] * d.simple_roots[i][k];
        }
        if (d.is_dominant(mu)) found.emplace_back(level, mu);
        int pos = 0;
        while (pos < d.rank && ++c[pos] > bounds[pos]) c[pos++] = 0;
        if (pos == d.rank) break;
    }
    std::sort(found.begin(), found.end());
    if (found.empty() || found[0].second != lambda)
        throw InternalCheckError("dominant support does not start at lambda");

    std::unordered_map<IntVec, int, IntVecHash> dom_index;
    for (const auto& [lvl, mu] : found) {
        dom_index.emplace(mu, static_cast<int>(t.dominant.size()));
        t.dominant.push_back(mu);
    }
    t.mult.assign(t.dominant.size(), 0);
    t.mult[0] = 1;

    const IntMat form = invariant_form(d);
    IntVec two_rho(d.lattice_rank, 0);
    for (std::size_t i = 0; i < d.num_positive; ++i)
        for (int k = 0; k < d.lattice_rank; ++k) two_rho[k] += d.roots[i].vec[k];

    auto mult_of = [&](const IntVec& nu) -> const mpz_class* {
        auto it = dom_index.find(d.dominant_representative(nu));
        if (it == dom_index.end()) return nullptr;
        return &t.mult[it->second];
    };

    // Freudenthal recursion, level-ascending:
    //   m_mu * ( B(L+M+2rho, L-M) ) = 2 * sum_{a>0} sum_k m_{mu+ka} B(mu+ka, a)
    for (std::size_t idx = 1; idx < t.dominant.size(); ++idx) {
        const IntVec& mu = t.dominant[idx];
        mpz_class rhs = 0;
        for (std::size_t r = 0; r < d.num_positive; ++r) {
            const IntVec& alpha = d.roots[r].vec;
            const mpz_class b_mu_a = form_value(form, mu, alpha);
            const mpz_class b_a_a = form_value(form, alpha, alpha);
            IntVec nu = mu;
            for (long long k = 1;; ++k) {
                nu = vec_add(nu, alpha);
                const mpz_class* m = mult_of(nu);
                if (m == nullptr) break;
                rhs += *m * (b_mu_a + k * b_a_a);
            }
        }
        const IntVec sum = vec_add(vec_add(lambda, mu), two_rho);
        const mpz_class denom = form_value(form, vec_sub(lambda, mu), sum);
        if (denom <= 0) throw InternalCheckError("nonpositive Freudenthal denominator");
        const mpz_class num = 2 * rhs;
        if (num % denom != 0) throw InternalCheckError("non-integral Freudenthal multiplicity");
        t.mult[idx] = num / denom;
        if (t.mult[idx] <= 0) throw InternalCheckError("nonpositive weight multiplicity");
    }

    // Weyl-orbit expansion of the dominant table
    long long count = 0;
    for (std::size_t idx = 0; idx < t.dominant.size(); ++idx) {
        std::unordered_set<IntVec, IntVecHash> orbit;
        std::deque<IntVec> queue = {t.dominant[idx]};
        orbit.insert(t.dominant[idx]);
        while (!queue.empty()) {
            IntVec cur = queue.front();
            queue.pop_front();
            t.weights.push_back(cur);
            t.weight_dom.push_back(static_cast<int>(idx));
            if (++count > max_weights)
                throw CapExceededError("max-weights", "weight list exceeds cap");
            for (int i = 0; i < d.rank; ++i) {
                IntVec img = d.reflect_weight(i, cur);
                if (orbit.insert(img).second) queue.push_back(std::move(img));
            }
        }
        t.dimension += t.mult[idx] * static_cast<long>(orbit.size());
    }

    if (t.dimension != weyl_dimension(d, lambda))
        throw InternalCheckError("Freudenthal dimension disagrees with the Weyl formula");
    return t;
}

CycNum char_at(const WeightTable& table, const TorsionElement& t) {
    const long long r = t.order;
    // accumulate multiplicities per power of zeta_r, then reduce once
    std::vector<mpz_class> counts(r, 0);
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
        const Rat scaled = rat_dot(table.weights[i], t.x) * rat(r);
        if (!is_integer(scaled))
            throw InvalidInputError("weight pairing with torsion element is not 1/order-integral");
        long long k = scaled.get_num().get_si() % r;
        if (k < 0) k += r;
        counts[k] += table.mult[table.weight_dom[i]];
    }
    CycNum acc = CycNum::zero(r);
    for (long long k = 0; k < r; ++k) {
        if (counts[k] == 0) continue;
        acc += Rat(counts[k]) * CycNum::root_of_unity(r, k);
    }
    return acc;
}

CycNum char_at(const RootDatum& d, const TorsionElement& t, const IntVec& lambda,
               long long max_weights) {
    return char_at(dominant_character(d, lambda, max_weights), t);
}

mpz_class weyl_dimension(const RootDatum& d, const IntVec& lambda) {
    if (!d.is_dominant(lambda)) throw InvalidInputError("lambda is not dominant");
    IntVec two_rho(d.lattice_rank, 0);
    for (std::size_t i = 0; i < d.num_positive; ++i)
        for (int k = 0; k < d.lattice_rank; ++k) two_rho[k] += d.roots[i].vec[k];
    Rat prod = 1;
    for (std::size_t i = 0; i < d.num_positive; ++i) {
        // <2(lambda + rho), a^vee> / <2 rho, a^vee>
        const long long num =
            dot(vec_add(two_rho, lambda), d.roots[i].coroot) + dot(lambda, d.roots[i].coroot);
        const long long den = dot(two_rho, d.roots[i].coroot);
        prod *= rat(num, den);
    }
    if (!is_integer(prod)) throw InternalCheckError("Weyl dimension is not an integer");
    return prod.get_num();
}

CycNum char_at_regular(const RootDatum& d, const WeylGroup& w, const TorsionElement& t,
                       const IntVec& lambda) {
    if (!d.is_dominant(lambda)) throw InvalidInputError("lambda is not dominant");
    IntVec two_rho(d.lattice_rank, 0);
    for (std::size_t i = 0; i < d.num_positive; ++i)
        for (int k = 0; k < d.lattice_rank; ++k) two_rho[k] += d.roots[i].vec[k];
    // both alternating sums are shifted into the lattice:
    // w(lambda+rho)-rho and w(rho)-rho lie in X(T)
    const IntVec top = vec_add(vec_add(lambda, lambda), two_rho); // 2(lambda+rho)
    CycNum num = CycNum::zero(t.order), den = CycNum::zero(t.order);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int s = w.sign(static_cast<int>(i));
        const IntVec a = vec_sub(w.apply(static_cast<int>(i), top), two_rho);
        const IntVec b = vec_sub(w.apply(static_cast<int>(i), two_rho), two_rho);
        IntVec half_a(a.size()), half_b(b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] % 2 != 0 || b[k] % 2 != 0)
                throw InternalCheckError("shifted weight is not integral");
            half_a[k] = a[k] / 2;
            half_b[k] = b[k] / 2;
        }
        const CycNum sgn = CycNum::from_rat(rat(s), 1);
        num += sgn * eval_weight(t, half_a);
        den += sgn * eval_weight(t, half_b);
    }
    if (den.is_zero())
        throw InvalidInputError("Weyl denominator vanishes: t is not regular");
    return num * den.inverse();
}

} // namespace charloc
