#include "charloc/torus.hpp"

#include <numeric>

namespace charloc {

namespace {

// lcm of denominators after reduction to [0,1)
long long true_order(const RatVec& x) {
    long long l = 1;
    for (const auto& e : x) {
        const long long den = e.get_den().get_si();
        l = std::lcm(l, den);
    }
    return l;
}

} // namespace

TorsionElement make_torsion(const RootDatum& d, long long declared_order,
                            const IntVec& numerators) {
    if (declared_order < 1) throw InvalidInputError("torsion element order must be >= 1");
    if (static_cast<int>(numerators.size()) != d.lattice_rank)
        throw InvalidInputError("torsion numerator count must equal the cocharacter rank");
    TorsionElement t;
    t.datum = &d;
    t.x.resize(d.lattice_rank);
    for (int i = 0; i < d.lattice_rank; ++i)
        t.x[i] = rat_frac(rat(numerators[i], declared_order));
    t.order = true_order(t.x);
    return t;
}

TorsionElement identity_torsion(const RootDatum& d) {
    return make_torsion(d, 1, IntVec(d.lattice_rank, 0));
}

CycNum eval_weight(const TorsionElement& t, const IntVec& mu) {
    const Rat pairing = rat_dot(mu, t.x);
    const Rat scaled = pairing * rat(t.order);
    if (!is_integer(scaled))
        throw InvalidInputError("weight pairing with torsion element is not 1/order-integral");
    const long long k = scaled.get_num().get_si() % t.order;
    return CycNum::root_of_unity(t.order, k);
}

TorsionElement invert(const TorsionElement& t) {
    TorsionElement r = t;
    for (auto& e : r.x) e = rat_frac(-e);
    r.order = t.order; // x and -x have the same denominators
    return r;
}

CentralizerData centralizer(const RootDatum& d, const WeylGroup& w, const TorsionElement& t) {
    CentralizerData c;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (eval_weight(t, d.roots[i].vec).is_one()) {
            c.roots.push_back(static_cast<int>(i));
            if (d.roots[i].positive) c.pos_roots.push_back(static_cast<int>(i));
        }
    }
    c.rho_prime.assign(d.lattice_rank, Rat(0));
    for (int i : c.pos_roots)
        for (int k = 0; k < d.lattice_rank; ++k) c.rho_prime[k] += rat(d.roots[i].vec[k], 2);
    std::vector<int> gens;
    for (int i : c.pos_roots) gens.push_back(w.reflection_index(d.roots[i]));
    c.weyl = w.subgroup_closure(gens);
    return c;
}

bool is_regular(const TorsionElement& t) {
    const RootDatum& d = *t.datum;
    for (std::size_t i = 0; i < d.num_positive; ++i)
        if (eval_weight(t, d.roots[i].vec).is_one()) return false;
    return true;
}

} // namespace charloc
