#pragma once

#include "charloc/cyclotomic.hpp"
#include "charloc/rootdata.hpp"

namespace charloc {

// A finite-order torus element t = exp(2*pi*i*x) for a rational cocharacter x,
// normalized modulo the cocharacter lattice. The stored order is the true
// order of t, i.e. the lcm of the denominators of x.
struct TorsionElement {
    long long order = 1;
    RatVec x; // entries in [0, 1), denominators dividing order
    const RootDatum* datum = nullptr;
};

// numerators[i] / declared_order over the cocharacter basis
TorsionElement make_torsion(const RootDatum& d, long long declared_order,
                            const IntVec& numerators);
TorsionElement identity_torsion(const RootDatum& d);

// e^mu(t) = zeta_order ^ (order * <mu, x>)
CycNum eval_weight(const TorsionElement& t, const IntVec& mu);

TorsionElement invert(const TorsionElement& t);

// Root subsystem R' = { a in R : e^a(t) = 1 } of the connected centralizer,
// with its positive system, rho', and Weyl group inside the ambient W.
struct CentralizerData {
    std::vector<int> roots;     // indices into datum.roots
    std::vector<int> pos_roots; // R' cap R^+
    RatVec rho_prime;           // half sum of pos_roots
    std::vector<int> weyl;      // W' as sorted ambient W indices
};

CentralizerData centralizer(const RootDatum& d, const WeylGroup& w, const TorsionElement& t);

bool is_regular(const TorsionElement& t);

} // namespace charloc
