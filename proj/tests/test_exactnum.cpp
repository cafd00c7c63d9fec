#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charloc/cyclotomic.hpp"
#include "charloc/eps_series.hpp"
#include "charloc/npoly.hpp"

using namespace charloc;

namespace {

std::vector<long long> poly_ll(const std::vector<mpz_class>& p) {
    std::vector<long long> r;
    for (const auto& c : p) r.push_back(c.get_si());
    return r;
}

// deterministic small pseudo-random rationals
struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    long long next(long long lo, long long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

CycNum random_cyc(Lcg& g, long long order) {
    RatVec c;
    const long long phi = euler_phi(order);
    CycNum acc = CycNum::zero(order);
    for (long long i = 0; i < phi; ++i) {
        const Rat coeff = rat(g.next(-4, 4), g.next(1, 3));
        acc += coeff * CycNum::root_of_unity(order, i);
    }
    (void)c;
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(poly_ll(cyclotomic_polynomial(1)) == std::vector<long long>{-1, 1});
    CHECK(poly_ll(cyclotomic_polynomial(2)) == std::vector<long long>{1, 1});
    CHECK(poly_ll(cyclotomic_polynomial(3)) == std::vector<long long>{1, 1, 1});
    CHECK(poly_ll(cyclotomic_polynomial(4)) == std::vector<long long>{1, 0, 1});
    CHECK(poly_ll(cyclotomic_polynomial(12)) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("basic field arithmetic in Q(zeta)") {
    const CycNum i4 = CycNum::root_of_unity(4, 1);
    const CycNum one = CycNum::one(4);
    CHECK((one + i4) * (one - i4) == CycNum::from_rat(rat(2), 4));

    // 1 - zeta_2 = 2
    const CycNum z2 = CycNum::root_of_unity(2, 1);
    CHECK((CycNum::one(2) - z2).inverse() == CycNum::from_rat(rat(1, 2), 2));

    // vanishing geometric sum
    const CycNum z3 = CycNum::root_of_unity(3, 1);
    CHECK((CycNum::one(3) + z3 + z3 * z3).is_zero());

    CHECK(z2.rational_value() == rat(-1));
    CHECK(CycNum::root_of_unity(4, 2).rational_value() == rat(-1));
    CHECK(CycNum::root_of_unity(4, 1).pow(4).is_one());
    CHECK(CycNum::root_of_unity(4, 1).pow(-1) == CycNum::root_of_unity(4, 3));
    CHECK(i4.conjugate() == CycNum::root_of_unity(4, 3));
    CHECK_THROWS_AS(CycNum::zero(3).inverse(), InvalidInputError);
}

TEST_CASE("random inverses are exact") {
    Lcg g(7);
    for (long long order : {1, 2, 3, 4, 5, 6, 8, 12}) {
        for (int trial = 0; trial < 8; ++trial) {
            CycNum a = random_cyc(g, order);
            if (a.is_zero()) continue;
            CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("field embeddings commute with arithmetic") {
    Lcg g(11);
    for (long long r = 1; r <= 6; ++r) {
        for (long long k = 1; k <= 6; ++k) {
            CycNum a = random_cyc(g, r);
            CycNum b = random_cyc(g, r);
            CHECK((a + b).embedded(r * k) == a.embedded(r * k) + b.embedded(r * k));
            CHECK((a * b).embedded(r * k) == a.embedded(r * k) * b.embedded(r * k));
        }
    }
    // numbers of different declared order still compare correctly
    CHECK(CycNum::root_of_unity(2, 1) == CycNum::root_of_unity(4, 2));
    CHECK(CycNum::root_of_unity(6, 2) == CycNum::root_of_unity(3, 1));
}

TEST_CASE("npoly arithmetic and evaluation") {
    const NPoly p = NPoly::monomial(CycNum::one(), 1) + NPoly::constant(rat(1)); // n + 1
    CHECK(p.degree() == 1);
    CHECK(p.eval(4) == CycNum::from_rat(rat(5), 1));
    const NPoly q = p * p; // n^2 + 2n + 1
    CHECK(q.degree() == 2);
    CHECK(q.eval(3) == CycNum::from_rat(rat(16), 1));
    CHECK((q - q).is_zero());
    CHECK((p - p).degree() == -1);
}

TEST_CASE("series inversion of 1 - eps") {
    // 1 - eps, truncated at eps^3
    EpsSeries s = EpsSeries::one_minus_scaled_exp(CycNum::one(), CycNum::zero(), 3) +
                  EpsSeries(1, {NPoly::constant(rat(-1)), NPoly(), NPoly()});
    // simpler: build directly
    std::vector<NPoly> c = {NPoly::constant(rat(1)), NPoly::constant(rat(-1)), NPoly(), NPoly()};
    EpsSeries t(0, c);
    EpsSeries inv = t.inverse();
    for (long long k = 0; k <= 3; ++k)
        CHECK(inv.coefficient_at(k) == NPoly::constant(rat(1)));
    (void)s;
}

TEST_CASE("exp_linear in the symbolic variable") {
    EpsSeries e = EpsSeries::exp_linear(CycNum::one(), CycNum::zero(), 2);
    CHECK(e.coefficient_at(0) == NPoly::constant(rat(1)));
    CHECK(e.coefficient_at(1) == NPoly::monomial(CycNum::one(), 1));
    NPoly half_nsq = NPoly::monomial(CycNum::from_rat(rat(1, 2), 1), 2);
    CHECK(e.coefficient_at(2) == half_nsq);
}

TEST_CASE("series with non-unit leading coefficient cannot be inverted") {
    // (1 + zeta_2) - eps has vanishing leading coefficient
    std::vector<NPoly> c = {NPoly(CycNum::one(2) + CycNum::root_of_unity(2, 1)),
                            NPoly::constant(rat(-1)), NPoly()};
    EpsSeries s(0, c);
    CHECK_THROWS_AS(s.inverse(), InvalidInputError);
    // and so does a leading coefficient that is non-constant in n
    std::vector<NPoly> c2 = {NPoly::monomial(CycNum::one(), 1), NPoly::constant(rat(1))};
    EpsSeries s2(0, c2);
    CHECK_THROWS_AS(s2.inverse(), InvalidInputError);
}

TEST_CASE("series product respects valuations and truncation") {
    // (eps^-1 + 1) * (eps + eps^2): valuations -1 and 1
    EpsSeries a(-1, {NPoly::constant(rat(1)), NPoly::constant(rat(1))});
    EpsSeries b(1, {NPoly::constant(rat(1)), NPoly::constant(rat(1))});
    EpsSeries p = a * b;
    CHECK(p.valuation() == 0);
    CHECK(p.coefficient_at(0) == NPoly::constant(rat(1)));
    CHECK(p.trunc_order() == 1);
    CHECK(p.coefficient_at(1) == NPoly::constant(rat(2)));
    CHECK_THROWS_AS(p.coefficient_at(2), InvalidInputError);
}

TEST_CASE("series inverse satisfies s * inv(s) = 1 up to truncation") {
    Lcg g(3);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<NPoly> c;
        c.push_back(NPoly::constant(rat(g.next(1, 5))));
        for (int k = 1; k <= 4; ++k)
            c.push_back(NPoly::monomial(CycNum::from_rat(rat(g.next(-3, 3)), 1), k % 3));
        EpsSeries s(-1, c);
        EpsSeries prod = s * s.inverse();
        CHECK(prod.coefficient_at(0) == NPoly::constant(rat(1)));
        for (long long k = 1; k <= prod.trunc_order(); ++k)
            CHECK(prod.coefficient_at(k).is_zero());
    }
}
