#include "charloc/fixedlocus.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace charloc {

std::vector<int> fixed_component_reps(const RootDatum& d, const WeylGroup& w,
                                      const ParabolicData& p, const CentralizerData& cent) {
    std::unordered_set<int> prime(cent.roots.begin(), cent.roots.end());
    std::vector<int> reps;
    for (int v : p.min_coset_reps) {
        bool clean = true;
        for (int r : inversion_set(d, w, v))
            if (prime.count(r)) {
                clean = false;
                break;
            }
        if (clean) reps.push_back(v);
    }
    if (reps.empty() || reps[0] != w.identity())
        throw InternalCheckError("fixed locus does not contain the base point");
    return reps;
}

FixedComponent component_data(const RootDatum& d, const WeylGroup& w, const ParabolicData& p,
                              const CentralizerData& cent, int v) {
    std::unordered_set<int> prime(cent.roots.begin(), cent.roots.end());
    {
        // precondition: v indexes a component
        for (int r : inversion_set(d, w, v))
            if (prime.count(r))
                throw InvalidInputError("v is not a fixed-locus component representative");
    }
    FixedComponent c;
    c.v = v;
    for (int r : p.nilradical_pos) {
        const int plus = d.root_index(w.apply(v, d.roots[r].vec));
        if (plus < 0) throw InternalCheckError("v image of a root is not a root");
        const int minus = d.negative_of(plus);
        if (prime.count(minus))
            c.tangent_roots.push_back(minus); // (v R_P^-) cap R'
        if (!prime.count(plus))
            c.normal_roots.push_back(plus); // (v R_P^+) \ R'
    }
    for (int r : p.levi_roots) {
        const int img = d.root_index(w.apply(v, d.roots[r].vec));
        if (img < 0) throw InternalCheckError("v image of a root is not a root");
        if (prime.count(img)) c.levi_roots.push_back(img);
    }
    c.dim = static_cast<long long>(c.tangent_roots.size());
    std::vector<int> gens;
    for (int r : c.levi_roots)
        if (d.roots[r].positive) gens.push_back(w.reflection_index(d.roots[r]));
    c.stabilizer_weyl = w.subgroup_closure(gens);

    if (c.tangent_roots.size() + c.normal_roots.size() != p.nilradical_pos.size())
        throw InternalCheckError("tangent + normal does not fill dim G/P");
    return c;
}

std::vector<FixedComponent> all_components(const RootDatum& d, const WeylGroup& w,
                                           const ParabolicData& p,
                                           const CentralizerData& cent) {
    std::vector<FixedComponent> out;
    for (int v : fixed_component_reps(d, w, p, cent))
        out.push_back(component_data(d, w, p, cent, v));
    return out;
}

CountingReport verify_counting(const RootDatum& d, const WeylGroup& w, const ParabolicData& p,
                               const CentralizerData& cent) {
    CountingReport r;
    const auto comps = all_components(d, w, p, cent);
    r.num_components = static_cast<long long>(comps.size());
    r.num_min_reps = static_cast<long long>(p.min_coset_reps.size());
    r.weyl_prime_order = static_cast<long long>(cent.weyl.size());
    for (const auto& c : comps) {
        if (r.weyl_prime_order % c.stabilizer_weyl_order() != 0)
            throw InternalCheckError("stabilizer order does not divide |W'|");
        r.sum_of_coset_counts += r.weyl_prime_order / c.stabilizer_weyl_order();
    }
    r.eq_sum = r.sum_of_coset_counts == r.num_min_reps;
    r.eq_lower_bound = r.num_components * r.weyl_prime_order >= r.num_min_reps;
    r.borel_case = p.spec.is_borel();
    if (r.borel_case)
        r.eq_borel =
            r.num_components * r.weyl_prime_order == static_cast<long long>(w.size());
    r.pass = r.eq_sum && r.eq_lower_bound && (!r.borel_case || r.eq_borel);
    return r;
}

OrbitPartitionReport orbit_partition_crosscheck(const RootDatum& d, const WeylGroup& w,
                                                const ParabolicData& p,
                                                const CentralizerData& cent) {
    OrbitPartitionReport rep;
    // mcr[w] = the minimal coset representative of w W_P
    std::vector<int> mcr(w.size(), -1);
    for (int v : p.min_coset_reps)
        for (int q : p.weyl_p) mcr[w.mul(v, q)] = v;
    for (int m : mcr)
        if (m < 0) throw InternalCheckError("coset table does not cover W");

    const auto reps = fixed_component_reps(d, w, p, cent);
    std::set<int> rep_set(reps.begin(), reps.end());
    std::unordered_map<int, long long> expected_size;
    for (const auto& c : all_components(d, w, p, cent))
        expected_size[c.v] =
            static_cast<long long>(cent.weyl.size()) / c.stabilizer_weyl_order();

    std::set<int> unassigned(p.min_coset_reps.begin(), p.min_coset_reps.end());
    bool sizes_ok = true, reps_ok = true;
    while (!unassigned.empty()) {
        const int seed = *unassigned.begin();
        std::set<int> block;
        for (int u : cent.weyl) block.insert(mcr[w.mul(u, seed)]);
        int reps_in_block = 0;
        int the_rep = -1;
        for (int b : block) {
            unassigned.erase(b);
            if (rep_set.count(b)) {
                ++reps_in_block;
                the_rep = b;
            }
        }
        if (reps_in_block != 1) reps_ok = false;
        if (the_rep >= 0 &&
            static_cast<long long>(block.size()) != expected_size.at(the_rep))
            sizes_ok = false;
        rep.blocks.emplace_back(block.begin(), block.end());
    }
    rep.block_count_matches = rep.blocks.size() == reps.size();
    rep.block_sizes_match = sizes_ok;
    rep.one_rep_per_block = reps_ok;
    rep.pass = rep.block_count_matches && rep.block_sizes_match && rep.one_rep_per_block;
    return rep;
}

} // namespace charloc
