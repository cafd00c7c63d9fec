#pragma once

#include "charloc/torus.hpp"

namespace charloc {

// Weight multiplicities of the irreducible representation V(lambda), computed
// by the Freudenthal recursion. Dominant weights are stored with their
// multiplicities; the full (Weyl-expanded) weight list is kept alongside so
// that repeated character evaluations are a single pass.
struct WeightTable {
    IntVec lambda;
    std::vector<IntVec> dominant;  // level-ascending from lambda
    std::vector<mpz_class> mult;   // parallel to dominant
    std::vector<IntVec> weights;   // every weight of V(lambda)
    std::vector<int> weight_dom;   // index into dominant, parallel to weights
    mpz_class dimension;
};

inline constexpr long long kDefaultWeightCap = 2000000;

WeightTable dominant_character(const RootDatum& d, const IntVec& lambda,
                               long long max_weights = kDefaultWeightCap);

// trace of t on V(lambda), an element of Z[zeta_order]
CycNum char_at(const WeightTable& table, const TorsionElement& t);
CycNum char_at(const RootDatum& d, const TorsionElement& t, const IntVec& lambda,
               long long max_weights = kDefaultWeightCap);

// Weyl dimension formula, an exact positive integer
mpz_class weyl_dimension(const RootDatum& d, const IntVec& lambda);

// Weyl character formula quotient; requires a regular t (the denominator
// vanishes otherwise, which is reported as an error).
CycNum char_at_regular(const RootDatum& d, const WeylGroup& w, const TorsionElement& t,
                       const IntVec& lambda);

} // namespace charloc
