#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "charloc/fixedlocus.hpp"

using namespace charloc;

namespace {

struct Setup {
    RootDatum d;
    WeylGroup w;
    ParabolicData p;
    CentralizerData cent;
    TorsionElement t;
};

Setup make(GroupSpec spec, const ParabolicSpec& par, long long order, const IntVec& nums) {
    Setup s{build_root_datum(spec), {}, {}, {}, {}};
    s.w = enumerate_weyl(s.d);
    s.p = analyze_parabolic(s.d, s.w, par);
    s.t = make_torsion(s.d, order, nums);
    s.cent = centralizer(s.d, s.w, s.t);
    return s;
}

std::vector<TorsionElement> torsion_sweep(const RootDatum& d, long long max_order) {
    std::vector<TorsionElement> out;
    std::set<std::vector<std::string>> seen;
    for (long long r = 1; r <= max_order; ++r) {
        IntVec num(d.lattice_rank, 0);
        while (true) {
            TorsionElement t = make_torsion(d, r, num);
            std::vector<std::string> key;
            for (const auto& e : t.x) key.push_back(rat_to_string(e));
            if (seen.insert(key).second) out.push_back(t);
            int pos = 0;
            while (pos < d.lattice_rank && ++num[pos] == r) num[pos++] = 0;
            if (pos == d.lattice_rank) break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("identity element fixes only the big component") {
    Setup s = make(GroupSpec::gl(3), ParabolicSpec{}, 1, {0, 0, 0});
    auto reps = fixed_component_reps(s.d, s.w, s.p, s.cent);
    CHECK(reps == std::vector<int>{s.w.identity()});
    FixedComponent c = component_data(s.d, s.w, s.p, s.cent, reps[0]);
    CHECK(c.dim == static_cast<long long>(s.p.dim_flag()));
    CHECK(c.normal_roots.empty());
    CHECK(c.tangent_roots.size() == s.p.nilradical_pos.size());
}

TEST_CASE("regular element fixes |W^P| points") {
    RootDatum d = build_root_datum(GroupSpec::named('A', 1));
    WeylGroup w = enumerate_weyl(d);
    ParabolicData p = analyze_parabolic(d, w, ParabolicSpec{});
    TorsionElement t = make_torsion(d, 4, {1});
    REQUIRE(is_regular(t));
    CentralizerData cent = centralizer(d, w, t);
    auto comps = all_components(d, w, p, cent);
    CHECK(comps.size() == p.min_coset_reps.size());
    for (const auto& c : comps) CHECK(c.dim == 0);
}

TEST_CASE("adjoint A1 with sign flip has two point components") {
    Setup s = make(GroupSpec::named('A', 1, GroupSpec::Isogeny::Adjoint), ParabolicSpec{}, 2, {1});
    CHECK(eval_weight(s.t, s.d.simple_roots[0]) == CycNum::from_rat(rat(-1), 2));
    auto reps = fixed_component_reps(s.d, s.w, s.p, s.cent);
    CHECK(reps.size() == 2);
}

TEST_CASE("projective plane under diag(1,-1,-1) splits into a point and a line") {
    // X_P = P^2 for GL_3 with Levi {2nd simple}; t = diag(1,-1,-1)
    Setup s = make(GroupSpec::gl(3), ParabolicSpec{{1}}, 2, {0, 1, 1});
    auto comps = all_components(s.d, s.w, s.p, s.cent);
    REQUIRE(comps.size() == 2);
    std::multiset<long long> dims;
    for (const auto& c : comps) dims.insert(c.dim);
    CHECK(dims == std::multiset<long long>{0, 1});
}

TEST_CASE("full flag variety of GL_3 under diag(1,1,-1): three lines") {
    Setup s = make(GroupSpec::gl(3), ParabolicSpec{}, 2, {0, 0, 1});
    auto comps = all_components(s.d, s.w, s.p, s.cent);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) CHECK(c.dim == 1);
}

TEST_CASE("counting identities") {
    // P^2 case: orbit sizes 1 + 2 = 3 = |W^P|
    Setup s = make(GroupSpec::gl(3), ParabolicSpec{{1}}, 2, {0, 1, 1});
    CountingReport r = verify_counting(s.d, s.w, s.p, s.cent);
    CHECK(r.sum_of_coset_counts == 3);
    CHECK(r.num_min_reps == 3);
    CHECK(r.pass);

    // identity element: single component of full size
    Setup si = make(GroupSpec::named('C', 2), ParabolicSpec{{0}}, 1, {0, 0});
    CountingReport ri = verify_counting(si.d, si.w, si.p, si.cent);
    CHECK(ri.num_components == 1);
    CHECK(ri.pass);

    // adjoint A1, order 2: |Y| = |W| / |W'| = 2
    Setup sa = make(GroupSpec::named('A', 1, GroupSpec::Isogeny::Adjoint), ParabolicSpec{}, 2, {1});
    CountingReport ra = verify_counting(sa.d, sa.w, sa.p, sa.cent);
    CHECK(ra.num_components == 2);
    CHECK(ra.eq_borel);
    CHECK(ra.pass);
}

TEST_CASE("orbit partition cross-check") {
    // regular: singleton blocks
    {
        RootDatum d = build_root_datum(GroupSpec::named('A', 1));
        WeylGroup w = enumerate_weyl(d);
        ParabolicData p = analyze_parabolic(d, w, ParabolicSpec{});
        CentralizerData cent = centralizer(d, w, make_torsion(d, 4, {1}));
        OrbitPartitionReport r = orbit_partition_crosscheck(d, w, p, cent);
        CHECK(r.pass);
        CHECK(r.blocks.size() == 2);
        for (const auto& b : r.blocks) CHECK(b.size() == 1);
    }
    // identity: one block of size |W^P|
    {
        Setup s = make(GroupSpec::gl(3), ParabolicSpec{{1}}, 1, {0, 0, 0});
        OrbitPartitionReport r = orbit_partition_crosscheck(s.d, s.w, s.p, s.cent);
        CHECK(r.pass);
        REQUIRE(r.blocks.size() == 1);
        CHECK(r.blocks[0].size() == 3);
    }
    // P^2 case: blocks of sizes {1, 2}
    {
        Setup s = make(GroupSpec::gl(3), ParabolicSpec{{1}}, 2, {0, 1, 1});
        OrbitPartitionReport r = orbit_partition_crosscheck(s.d, s.w, s.p, s.cent);
        CHECK(r.pass);
        std::multiset<std::size_t> sizes;
        for (const auto& b : r.blocks) sizes.insert(b.size());
        CHECK(sizes == std::multiset<std::size_t>{1, 2});
    }
}

TEST_CASE("projective space fixed loci across signatures") {
    // GL_n acting on P^{n-1}; t = diag(+1^m, -1^{n-m}) gives components of
    // dimensions m-1 and n-m-1
    for (int n = 2; n <= 5; ++n) {
        RootDatum d = build_root_datum(GroupSpec::gl(n));
        WeylGroup w = enumerate_weyl(d);
        std::vector<int> levi;
        for (int i = 1; i + 1 < n; ++i) levi.push_back(i);
        ParabolicData p = analyze_parabolic(d, w, ParabolicSpec{levi});
        REQUIRE(p.min_coset_reps.size() == static_cast<std::size_t>(n));
        for (int m = 1; m < n; ++m) {
            IntVec nums(n, 1);
            for (int i = 0; i < m; ++i) nums[i] = 0;
            CentralizerData cent = centralizer(d, w, make_torsion(d, 2, nums));
            auto comps = all_components(d, w, p, cent);
            REQUIRE(comps.size() == 2);
            std::multiset<long long> dims;
            for (const auto& c : comps) dims.insert(c.dim);
            CHECK(dims == std::multiset<long long>{m - 1, n - m - 1});
            CHECK(verify_counting(d, w, p, cent).pass);
        }
    }
}

TEST_CASE("structural invariants across a torsion sweep") {
    for (auto spec : {GroupSpec::gl(3), GroupSpec::named('C', 2), GroupSpec::named('G', 2),
                      GroupSpec::named('A', 3)}) {
        RootDatum d = build_root_datum(spec);
        WeylGroup w = enumerate_weyl(d);
        ParabolicData borel = analyze_parabolic(d, w, ParabolicSpec{});
        const long long max_order = d.rank >= 3 ? 3 : 4;
        for (const auto& t : torsion_sweep(d, max_order)) {
            CentralizerData cent = centralizer(d, w, t);
            // P = B: every component has dimension |R'^+| and trivial stabilizer
            auto comps = all_components(d, w, borel, cent);
            for (const auto& c : comps) {
                CHECK(c.dim == static_cast<long long>(cent.pos_roots.size()));
                CHECK(c.stabilizer_weyl_order() == 1);
            }
            CHECK(verify_counting(d, w, borel, cent).pass);
            CHECK(orbit_partition_crosscheck(d, w, borel, cent).pass);
            // all proper parabolics: positivity inclusion and dimension split
            for (int i = 0; i < d.rank; ++i) {
                ParabolicData p = analyze_parabolic(d, w, ParabolicSpec{{i}});
                for (const auto& c : all_components(d, w, p, cent)) {
                    CHECK(c.dim + static_cast<long long>(c.normal_roots.size()) ==
                          static_cast<long long>(p.dim_flag()));
                    // R'^+ lies in v R^+
                    for (int rp : cent.pos_roots) {
                        const int pre = d.root_index(w.apply_inverse(c.v, d.roots[rp].vec));
                        CHECK(d.root(pre).positive);
                    }
                    // normal weights are moved by t
                    for (int nr : c.normal_roots)
                        CHECK_FALSE(eval_weight(t, d.roots[nr].vec).is_one());
                }
                CHECK(verify_counting(d, w, p, cent).pass);
                CHECK(orbit_partition_crosscheck(d, w, p, cent).pass);
            }
        }
    }
}
