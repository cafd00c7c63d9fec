#pragma once

#include "charloc/torus.hpp"

namespace charloc {

// One connected component of the fixed locus of t on G/P, keyed by its
// minimal coset representative v. Tangent/normal data is recorded at the
// base point vP/P:
//   tangent_roots = (v R_P^-) cap R'      (roots of the component)
//   normal_roots  = (v R_P^+) \ R'        (labels of the normal line bundles)
//   levi_roots    = R' cap v R_L          (roots of the Levi of Q_v)
struct FixedComponent {
    int v = 0; // W index
    long long dim = 0;
    std::vector<int> tangent_roots;
    std::vector<int> normal_roots;
    std::vector<int> levi_roots;
    std::vector<int> stabilizer_weyl;      // W'_{Q_v} as ambient W indices
    long long stabilizer_weyl_order() const {
        return static_cast<long long>(stabilizer_weyl.size());
    }
};

// { v in W^P : (R^+ cap v R^-) cap R' is empty }, in canonical W order.
// Always contains the identity.
std::vector<int> fixed_component_reps(const RootDatum& d, const WeylGroup& w,
                                      const ParabolicData& p, const CentralizerData& cent);

FixedComponent component_data(const RootDatum& d, const WeylGroup& w, const ParabolicData& p,
                              const CentralizerData& cent, int v);

std::vector<FixedComponent> all_components(const RootDatum& d, const WeylGroup& w,
                                           const ParabolicData& p, const CentralizerData& cent);

// Coset-counting identities relating the components to W^P:
//   sum_v |W'| / |W'_{Q_v}| = |W^P|
//   |Y| >= |W^P| / |W'|, with equality |Y| = |W| / |W'| for P = B
struct CountingReport {
    long long sum_of_coset_counts = 0; // lhs of the first identity
    long long num_min_reps = 0;        // |W^P|
    long long num_components = 0;
    long long weyl_prime_order = 0;
    bool eq_sum = false;        // sum == |W^P|
    bool eq_lower_bound = false;
    bool borel_case = false;
    bool eq_borel = false; // |Y| * |W'| == |W| (only checked when P = B)
    bool pass = false;
};

CountingReport verify_counting(const RootDatum& d, const WeylGroup& w, const ParabolicData& p,
                               const CentralizerData& cent);

// Independent cross-check of the component parametrization: partition W^P by
// w ~ w' iff W' w W_P = W' w' W_P. The blocks must biject with the
// components, each block holding exactly one representative v and having
// |W'| / |W'_{Q_v}| elements.
struct OrbitPartitionReport {
    std::vector<std::vector<int>> blocks; // W indices, grouped
    bool block_count_matches = false;
    bool block_sizes_match = false;
    bool one_rep_per_block = false;
    bool pass = false;
};

OrbitPartitionReport orbit_partition_crosscheck(const RootDatum& d, const WeylGroup& w,
                                                const ParabolicData& p,
                                                const CentralizerData& cent);

} // namespace charloc
