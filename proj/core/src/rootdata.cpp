#include "charloc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace charloc {

namespace {

// Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
IntMat cartan_matrix(char family, int n) {
    auto chain = [&](IntMat& c) {
        for (int i = 0; i + 1 < n; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    IntMat c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (family) {
        case 'A':
            if (n < 1) throw InvalidInputError("type A needs rank >= 1");
            chain(c);
            break;
        case 'B':
            if (n < 2) throw InvalidInputError("type B needs rank >= 2");
            chain(c);
            c[n - 1][n - 2] = -2; // <alpha_{n-1}, alpha_n^vee> = -2
            break;
        case 'C':
            if (n < 2) throw InvalidInputError("type C needs rank >= 2");
            chain(c);
            c[n - 2][n - 1] = -2; // <alpha_n, alpha_{n-1}^vee> = -2
            break;
        case 'D':
            if (n < 3) throw InvalidInputError("type D needs rank >= 3");
            for (int i = 0; i + 1 < n - 1; ++i) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            break;
        case 'E': {
            if (n < 6 || n > 8) throw InvalidInputError("type E needs rank 6, 7 or 8");
            // Bourbaki: chain 1-3-4-5-6-7-8 with 2 attached to 4
            std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6},
                                                      {6, 7}, {7, 8}, {2, 4}};
            for (auto [a, b] : edges) {
                if (a > n || b > n) continue;
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            break;
        }
        case 'F':
            if (n != 4) throw InvalidInputError("type F needs rank 4");
            chain(c);
            c[1][2] = -2; // <alpha_3, alpha_2^vee> = -2
            break;
        case 'G':
            if (n != 2) throw InvalidInputError("type G needs rank 2");
            c[0][1] = -3; // <alpha_2, alpha_1^vee> = -3 (alpha_1 short)
            c[1][0] = -1;
            break;
        default:
            throw InvalidInputError(std::string("unknown family ") + family);
    }
    return c;
}

void validate_cartan(const IntMat& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        if (c[i][i] != 2) throw InvalidInputError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c[i][j] > 0) throw InvalidInputError("Cartan matrix off-diagonal must be <= 0");
            if ((c[i][j] == 0) != (c[j][i] == 0))
                throw InvalidInputError("Cartan matrix zero pattern must be symmetric");
        }
    }
    // leading principal minors positive (finite type criterion); exact over Rat
    for (int k = 1; k <= n; ++k) {
        std::vector<RatVec> m(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = rat(c[i][j]);
        // fraction-free-ish Gaussian elimination, exact
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < k; ++r) {
                if (m[r][col] == 0) continue;
                const Rat f = m[r][col] / m[col][col];
                for (int cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        if (det <= 0)
            throw InvalidInputError("Cartan matrix is not of finite type (minor <= 0)");
    }
}

constexpr long long kMaxRoots = 100000;

} // namespace

GroupSpec GroupSpec::named(char family, int rank, Isogeny isogeny) {
    GroupSpec s;
    s.kind = Kind::Named;
    s.family = family;
    s.rank = rank;
    s.isogeny = isogeny;
    return s;
}

GroupSpec GroupSpec::gl(int n) {
    GroupSpec s;
    s.kind = Kind::GL;
    s.rank = n;
    return s;
}

GroupSpec GroupSpec::explicit_data(IntMat roots, IntMat coroots, int lattice_rank,
                                   std::string label) {
    GroupSpec s;
    s.kind = Kind::Explicit;
    s.simple_roots = std::move(roots);
    s.simple_coroots = std::move(coroots);
    s.lattice_rank = lattice_rank;
    s.rank = static_cast<int>(s.simple_roots.size());
    s.label = std::move(label);
    return s;
}

int RootDatum::root_index(const IntVec& v) const {
    auto it = root_lookup_.find(v);
    return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::negative_of(int i) const {
    const int j = root_index(vec_neg(roots[i].vec));
    if (j < 0) throw InternalCheckError("root set not closed under negation");
    return j;
}

IntVec RootDatum::reflect_weight(int i, const IntVec& mu) const {
    const long long pair = dot(mu, simple_coroots[i]);
    IntVec r = mu;
    for (int k = 0; k < lattice_rank; ++k) r[k] -= pair * simple_roots[i][k];
    return r;
}

IntVec RootDatum::reflect_coweight(int i, const IntVec& x) const {
    const long long pair = dot(simple_roots[i], x);
    IntVec r = x;
    for (int k = 0; k < lattice_rank; ++k) r[k] -= pair * simple_coroots[i][k];
    return r;
}

IntVec RootDatum::reflect_by_root(const Root& alpha, const IntVec& mu) const {
    const long long pair = dot(mu, alpha.coroot);
    IntVec r = mu;
    for (int k = 0; k < lattice_rank; ++k) r[k] -= pair * alpha.vec[k];
    return r;
}

bool RootDatum::is_dominant(const IntVec& mu) const {
    for (int i = 0; i < rank; ++i)
        if (dot(mu, simple_coroots[i]) < 0) return false;
    return true;
}

IntVec RootDatum::dominant_representative(IntVec mu) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i) {
            if (dot(mu, simple_coroots[i]) < 0) {
                mu = reflect_weight(i, mu);
                moved = true;
            }
        }
    }
    return mu;
}

std::optional<RatVec> RootDatum::expand_in_simples(const IntVec& v) const {
    RatVec c(rank, Rat(0));
    for (int i = 0; i < rank; ++i) c[i] = rat_dot(v, expansion_rows_[i]);
    // verify: sum c_i alpha_i == v (v must lie in the span)
    for (int k = 0; k < lattice_rank; ++k) {
        Rat s = 0;
        for (int i = 0; i < rank; ++i) s += c[i] * rat(simple_roots[i][k]);
        if (s != rat(v[k])) return std::nullopt;
    }
    return c;
}

void RootDatum::finalize() {
    if (static_cast<int>(simple_roots.size()) != rank ||
        static_cast<int>(simple_coroots.size()) != rank)
        throw InvalidInputError("simple root/coroot count does not match rank");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(simple_roots[i].size()) != lattice_rank ||
            static_cast<int>(simple_coroots[i].size()) != lattice_rank)
            throw InvalidInputError("simple root/coroot has wrong dimension");
        if (dot(simple_roots[i], simple_coroots[i]) != 2)
            throw InvalidInputError("coroots inconsistent with roots: <a_i, a_i^vee> != 2");
    }
    IntMat cart(rank, IntVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cart[i][j] = cartan(i, j);
    validate_cartan(cart);

    // left inverse of the simple-root matrix: (M^T M)^{-1} M^T, exact
    {
        std::vector<RatVec> gram(rank, RatVec(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) gram[i][j] = rat(dot(simple_roots[i], simple_roots[j]));
        // invert gram by Gauss-Jordan
        std::vector<RatVec> inv(rank, RatVec(rank, Rat(0)));
        for (int i = 0; i < rank; ++i) inv[i][i] = 1;
        for (int col = 0; col < rank; ++col) {
            int piv = -1;
            for (int r = col; r < rank; ++r)
                if (gram[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw InvalidInputError("simple roots are linearly dependent");
            std::swap(gram[piv], gram[col]);
            std::swap(inv[piv], inv[col]);
            const Rat d = gram[col][col];
            for (int cc = 0; cc < rank; ++cc) {
                gram[col][cc] /= d;
                inv[col][cc] /= d;
            }
            for (int r = 0; r < rank; ++r) {
                if (r == col || gram[r][col] == 0) continue;
                const Rat f = gram[r][col];
                for (int cc = 0; cc < rank; ++cc) {
                    gram[r][cc] -= f * gram[col][cc];
                    inv[r][cc] -= f * inv[col][cc];
                }
            }
        }
        expansion_rows_.assign(rank, RatVec(lattice_rank, Rat(0)));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < lattice_rank; ++k) {
                Rat s = 0;
                for (int j = 0; j < rank; ++j) s += inv[i][j] * rat(simple_roots[j][k]);
                expansion_rows_[i][k] = s;
            }
    }

    // reflection closure of the simple roots
    std::unordered_map<IntVec, IntVec, IntVecHash> closure; // root -> coroot
    std::deque<IntVec> queue;
    for (int i = 0; i < rank; ++i) {
        closure.emplace(simple_roots[i], simple_coroots[i]);
        queue.push_back(simple_roots[i]);
    }
    while (!queue.empty()) {
        IntVec a = queue.front();
        queue.pop_front();
        const IntVec av = closure.at(a);
        for (int i = 0; i < rank; ++i) {
            IntVec b = reflect_weight(i, a);
            if (closure.count(b)) continue;
            IntVec bv = reflect_coweight(i, av);
            closure.emplace(b, std::move(bv));
            queue.push_back(b);
            if (static_cast<long long>(closure.size()) > kMaxRoots)
                throw InvalidInputError("root generation diverged; data not of finite type");
        }
    }

    roots.clear();
    std::vector<Root> positives;
    for (auto& [v, cv] : closure) {
        auto coeffs = expand_in_simples(v);
        if (!coeffs) throw InternalCheckError("generated root outside simple-root span");
        bool nonneg = true, nonpos = true;
        Rat h = 0;
        for (const Rat& c : *coeffs) {
            if (!is_integer(c)) throw InternalCheckError("root with non-integer coefficients");
            if (c > 0) nonpos = false;
            if (c < 0) nonneg = false;
            h += c;
        }
        if (nonneg == nonpos) throw InternalCheckError("root with mixed-sign coefficients");
        if (!nonneg) continue; // record positives; negatives mirrored below
        Root r;
        r.vec = v;
        r.coroot = cv;
        r.positive = true;
        r.height = static_cast<long long>(h.get_num().get_si());
        positives.push_back(std::move(r));
    }
    std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.vec < b.vec;
    });
    num_positive = positives.size();
    roots = positives;
    for (const Root& r : positives) {
        Root n;
        n.vec = vec_neg(r.vec);
        n.coroot = vec_neg(r.coroot);
        n.positive = false;
        n.height = -r.height;
        roots.push_back(std::move(n));
    }
    root_lookup_.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) root_lookup_.emplace(roots[i].vec, i);

    rho.assign(lattice_rank, Rat(0));
    for (std::size_t i = 0; i < num_positive; ++i)
        for (int k = 0; k < lattice_rank; ++k) rho[k] += rat(roots[i].vec[k], 2);
}

RootDatum build_root_datum(const GroupSpec& spec) {
    RootDatum d;
    switch (spec.kind) {
        case GroupSpec::Kind::GL: {
            const int n = spec.rank;
            if (n < 1) throw InvalidInputError("GL_n needs n >= 1");
            d.rank = n - 1;
            d.lattice_rank = n;
            for (int i = 0; i + 1 < n; ++i) {
                IntVec a(n, 0);
                a[i] = 1;
                a[i + 1] = -1;
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(a);
            }
            d.label = "GL_" + std::to_string(n);
            break;
        }
        case GroupSpec::Kind::Named: {
            const IntMat c = cartan_matrix(spec.family, spec.rank);
            validate_cartan(c);
            const int n = spec.rank;
            d.rank = n;
            d.lattice_rank = n;
            if (spec.isogeny == GroupSpec::Isogeny::SimplyConnected) {
                // X(T) = weight lattice in the fundamental-weight basis
                for (int j = 0; j < n; ++j) {
                    IntVec a(n), av(n, 0);
                    for (int i = 0; i < n; ++i) a[i] = c[i][j];
                    av[j] = 1;
                    d.simple_roots.push_back(a);
                    d.simple_coroots.push_back(av);
                }
                d.label = std::string(1, spec.family) + std::to_string(n) + " (simply-connected)";
            } else {
                // X(T) = root lattice in the simple-root basis
                for (int i = 0; i < n; ++i) {
                    IntVec a(n, 0);
                    a[i] = 1;
                    d.simple_roots.push_back(a);
                    d.simple_coroots.push_back(c[i]);
                }
                d.label = std::string(1, spec.family) + std::to_string(n) + " (adjoint)";
            }
            break;
        }
        case GroupSpec::Kind::Explicit: {
            d.rank = spec.rank;
            d.lattice_rank = spec.lattice_rank;
            d.simple_roots = spec.simple_roots;
            d.simple_coroots = spec.simple_coroots;
            d.label = spec.label;
            break;
        }
    }
    d.finalize();
    return d;
}

IntVec WeylGroup::flatten(const IntMat& m) {
    IntVec f;
    f.reserve(m.size() * m.size());
    for (const auto& row : m)
        for (long long x : row) f.push_back(x);
    return f;
}

void WeylGroup::build_index() {
    index_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i)
        index_.emplace(flatten(elements[i].mat), static_cast<int>(i));
    simple_indices_.assign(datum->rank, -1);
    for (int i = 0; i < datum->rank; ++i) {
        IntMat s = mat_identity(datum->lattice_rank);
        for (int r = 0; r < datum->lattice_rank; ++r)
            for (int k = 0; k < datum->lattice_rank; ++k)
                s[r][k] -= datum->simple_roots[i][r] * datum->simple_coroots[i][k];
        simple_indices_[i] = index_of(s);
        if (simple_indices_[i] < 0) throw InternalCheckError("simple reflection not enumerated");
    }
}

int WeylGroup::index_of(const IntMat& m) const {
    auto it = index_.find(flatten(m));
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
    const int r = index_of(mat_mul(elements[a].mat, elements[b].mat));
    if (r < 0) throw InternalCheckError("Weyl group not closed under multiplication");
    return r;
}

int WeylGroup::inverse(int a) const {
    const int r = index_of(elements[a].inv_mat);
    if (r < 0) throw InternalCheckError("Weyl group not closed under inversion");
    return r;
}

int WeylGroup::reflection_index(const Root& alpha) const {
    IntMat s = mat_identity(datum->lattice_rank);
    for (int r = 0; r < datum->lattice_rank; ++r)
        for (int k = 0; k < datum->lattice_rank; ++k) s[r][k] -= alpha.vec[r] * alpha.coroot[k];
    const int idx = index_of(s);
    if (idx < 0) throw InternalCheckError("root reflection not in enumerated Weyl group");
    return idx;
}

std::vector<int> WeylGroup::subgroup_closure(const std::vector<int>& generators) const {
    std::set<int> seen = {identity()};
    std::deque<int> queue = {identity()};
    while (!queue.empty()) {
        const int w = queue.front();
        queue.pop_front();
        for (int g : generators) {
            const int n = mul(w, g);
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    return std::vector<int>(seen.begin(), seen.end());
}

WeylGroup enumerate_weyl(const RootDatum& d, long long cap) {
    WeylGroup w;
    w.datum = &d;

    std::vector<IntMat> gens;
    for (int i = 0; i < d.rank; ++i) {
        IntMat s = mat_identity(d.lattice_rank);
        for (int r = 0; r < d.lattice_rank; ++r)
            for (int k = 0; k < d.lattice_rank; ++k)
                s[r][k] -= d.simple_roots[i][r] * d.simple_coroots[i][k];
        gens.push_back(std::move(s));
    }

    std::unordered_map<IntVec, int, IntVecHash> seen;
    std::deque<int> queue;
    WeylElement e;
    e.mat = mat_identity(d.lattice_rank);
    e.inv_mat = e.mat;
    e.length = 0;
    w.elements.push_back(e);
    seen.emplace(WeylGroup::flatten(e.mat), 0);
    queue.push_back(0);
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < d.rank; ++i) {
            IntMat m = mat_mul(w.elements[cur].mat, gens[i]);
            IntVec key = WeylGroup::flatten(m);
            if (seen.count(key)) continue;
            if (static_cast<long long>(w.elements.size()) >= cap)
                throw CapExceededError("max-weyl",
                                       "Weyl group larger than cap " + std::to_string(cap));
            WeylElement n;
            n.inv_mat = mat_mul(gens[i], w.elements[cur].inv_mat);
            n.mat = std::move(m);
            n.word = w.elements[cur].word;
            n.word.push_back(i);
            n.length = w.elements[cur].length + 1;
            seen.emplace(std::move(key), static_cast<int>(w.elements.size()));
            w.elements.push_back(std::move(n));
            queue.push_back(static_cast<int>(w.elements.size()) - 1);
        }
    }
    std::sort(w.elements.begin(), w.elements.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    w.build_index();
    return w;
}

ParabolicData analyze_parabolic(const RootDatum& d, const WeylGroup& w,
                                const ParabolicSpec& p) {
    for (int i : p.levi_simples)
        if (i < 0 || i >= d.rank) throw InvalidInputError("Levi simple index out of range");
    ParabolicData pd;
    pd.spec = p;
    std::set<int> levi(p.levi_simples.begin(), p.levi_simples.end());
    for (std::size_t r = 0; r < d.roots.size(); ++r) {
        auto coeffs = d.expand_in_simples(d.roots[r].vec);
        bool in_levi = true;
        for (int i = 0; i < d.rank; ++i)
            if ((*coeffs)[i] != 0 && !levi.count(i)) {
                in_levi = false;
                break;
            }
        if (in_levi)
            pd.levi_roots.push_back(static_cast<int>(r));
        else if (d.roots[r].positive)
            pd.nilradical_pos.push_back(static_cast<int>(r));
    }
    std::vector<int> gens;
    for (int i : levi) gens.push_back(w.simple(i));
    pd.weyl_p = w.subgroup_closure(gens);
    pd.min_coset_reps = minimal_coset_reps(d, w, p);
    if (pd.weyl_p.size() * pd.min_coset_reps.size() != w.size())
        throw InternalCheckError("|W_P| * |W^P| != |W|");
    return pd;
}

std::vector<int> minimal_coset_reps(const RootDatum& d, const WeylGroup& w,
                                    const ParabolicSpec& p) {
    std::vector<int> reps;
    for (std::size_t v = 0; v < w.size(); ++v) {
        bool ok = true;
        for (int i : p.levi_simples) {
            const int idx = d.root_index(w.apply(static_cast<int>(v), d.simple_roots[i]));
            if (idx < 0) throw InternalCheckError("Weyl image of a root is not a root");
            if (!d.root(idx).positive) {
                ok = false;
                break;
            }
        }
        if (ok) reps.push_back(static_cast<int>(v));
    }
    return reps;
}

std::vector<int> inversion_set(const RootDatum& d, const WeylGroup& w, int v) {
    std::vector<int> inv;
    for (std::size_t r = 0; r < d.num_positive; ++r) {
        const int pre = d.root_index(w.apply_inverse(v, d.roots[r].vec));
        if (pre < 0) throw InternalCheckError("Weyl preimage of a root is not a root");
        if (!d.root(pre).positive) inv.push_back(static_cast<int>(r));
    }
    return inv;
}

ParabolicSpec parabolic_for_lambda(const RootDatum& d, const IntVec& lambda) {
    if (!d.is_dominant(lambda)) throw InvalidInputError("lambda is not dominant");
    ParabolicSpec p;
    for (int i = 0; i < d.rank; ++i)
        if (dot(lambda, d.simple_coroots[i]) == 0) p.levi_simples.push_back(i);
    return p;
}

} // namespace charloc
