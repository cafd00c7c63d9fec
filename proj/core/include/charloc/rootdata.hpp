#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charloc/rational.hpp"

namespace charloc {

struct Root {
    IntVec vec;       // in X(T) coordinates
    IntVec coroot;    // in X_*(T) coordinates
    bool positive;
    long long height; // sum of simple-root coefficients, negative for R^-
};

// Group descriptor: a named finite type with isogeny, GL_n, or explicit data.
struct GroupSpec {
    enum class Kind { Named, GL, Explicit };
    enum class Isogeny { SimplyConnected, Adjoint };

    Kind kind = Kind::Named;
    char family = 'A'; // A..G
    int rank = 1;      // semisimple rank; for GL, the n of GL_n
    Isogeny isogeny = Isogeny::SimplyConnected;

    // explicit data
    IntMat simple_roots;
    IntMat simple_coroots;
    int lattice_rank = 0;
    std::string label;

    static GroupSpec named(char family, int rank,
                           Isogeny isogeny = Isogeny::SimplyConnected);
    static GroupSpec gl(int n);
    static GroupSpec explicit_data(IntMat roots, IntMat coroots, int lattice_rank,
                                   std::string label = "explicit");
};

// Character/cocharacter lattices with roots, coroots and derived data.
// The pairing X(T) x X_*(T) -> Z is the standard dot product in coordinates.
class RootDatum {
  public:
    int rank = 0;
    int lattice_rank = 0;
    IntMat simple_roots;   // [i] = alpha_i
    IntMat simple_coroots; // [i] = alpha_i^vee
    std::vector<Root> roots; // positives first (by height, then lex), then negatives
    std::size_t num_positive = 0;
    RatVec rho; // half sum of positive roots
    std::string label;

    long long cartan(int i, int j) const { return dot(simple_roots[j], simple_coroots[i]); }

    // index into roots, or -1
    int root_index(const IntVec& v) const;
    const Root& root(int i) const { return roots[i]; }
    int negative_of(int i) const;

    // s_i acting on a weight
    IntVec reflect_weight(int i, const IntVec& mu) const;
    // s_i acting on a cocharacter
    IntVec reflect_coweight(int i, const IntVec& x) const;
    // reflection through an arbitrary root
    IntVec reflect_by_root(const Root& alpha, const IntVec& mu) const;

    bool is_dominant(const IntVec& mu) const;
    // W-orbit representative in the dominant chamber
    IntVec dominant_representative(IntVec mu) const;

    // coefficients of v in the simple-root basis, if v lies in their Q-span
    std::optional<RatVec> expand_in_simples(const IntVec& v) const;

    void finalize(); // builds roots, rho, lookup tables; validates

  private:
    std::unordered_map<IntVec, int, IntVecHash> root_lookup_;
    std::vector<RatVec> expansion_rows_; // rank x lattice_rank left inverse
};

RootDatum build_root_datum(const GroupSpec& spec);

struct WeylElement {
    IntMat mat;            // action on X(T)
    IntMat inv_mat;        // action of the inverse element
    std::vector<int> word; // reduced expression, 0-based simple indices
    int length = 0;
};

class WeylGroup {
  public:
    const RootDatum* datum = nullptr;
    std::vector<WeylElement> elements; // sorted by (length, word)

    std::size_t size() const { return elements.size(); }
    int identity() const { return 0; }
    int simple(int i) const { return simple_indices_[i]; }

    int index_of(const IntMat& m) const;
    int mul(int a, int b) const;
    int inverse(int a) const;
    IntVec apply(int a, const IntVec& v) const { return mat_apply(elements[a].mat, v); }
    IntVec apply_inverse(int a, const IntVec& v) const {
        return mat_apply(elements[a].inv_mat, v);
    }
    int sign(int a) const { return elements[a].length % 2 == 0 ? 1 : -1; }

    int reflection_index(const Root& alpha) const;
    // subgroup generated by the given elements, as sorted element indices
    std::vector<int> subgroup_closure(const std::vector<int>& generators) const;

    void build_index(); // called by enumerate_weyl
    static IntVec flatten(const IntMat& m);

  private:
    std::unordered_map<IntVec, int, IntVecHash> index_; // flattened matrix -> element
    std::vector<int> simple_indices_;
};

WeylGroup enumerate_weyl(const RootDatum& d, long long cap = 1000000);

struct ParabolicSpec {
    std::vector<int> levi_simples; // 0-based simple-root indices
    bool is_borel() const { return levi_simples.empty(); }
};

// All derived data of a standard parabolic that downstream modules consume.
struct ParabolicData {
    ParabolicSpec spec;
    std::vector<int> levi_roots;     // R_L, root indices (both signs)
    std::vector<int> nilradical_pos; // R_P^+ = R^+ \ R_L
    std::vector<int> weyl_p;         // W_P as W-indices
    std::vector<int> min_coset_reps; // W^P as W-indices
    std::size_t dim_flag() const { return nilradical_pos.size(); }
};

ParabolicData analyze_parabolic(const RootDatum& d, const WeylGroup& w,
                                const ParabolicSpec& p);

// W^P = { v : v(alpha_i) > 0 for every Levi simple i }
std::vector<int> minimal_coset_reps(const RootDatum& d, const WeylGroup& w,
                                    const ParabolicSpec& p);

// R^+ cap v R^-, as root indices
std::vector<int> inversion_set(const RootDatum& d, const WeylGroup& w, int v);

// Levi simples = { i : <lambda, alpha_i^vee> = 0 }; lambda must be dominant
ParabolicSpec parabolic_for_lambda(const RootDatum& d, const IntVec& lambda);

} // namespace charloc
