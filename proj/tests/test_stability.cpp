#include "support.hpp"

#include "hstab/curves.hpp"
#include "hstab/stability.hpp"
#include "hstab/state_polytope.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hstab;

namespace {

const HilbertPolynomial kSextic = hilbert_polynomial_of_curve(6, 2);
const HilbertPolynomial kDoubleLine = HilbertPolynomial::linear(2, 1);

std::set<std::vector<std::int64_t>> as_set(const std::vector<std::vector<std::int64_t>>& v) { return {v.begin(), v.end()}; }

std::vector<Monomial> all_but(std::size_t n, std::uint32_t m, const std::vector<Monomial>& drop) {
    std::vector<Monomial> out;
    for (const auto& x : monomials_of_degree(n, m))
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
    return out;
}

Monomial mono5(std::initializer_list<Monomial::Exponent> e) { return Monomial(e); }

}  // namespace

// ---------------------------------------------------------------------------------------------
// Hilbert-Mumford index

TEST(HmIndex, StabilizerGivesZero) {
    auto I = bicuspidal_ideal();
    OneParamSubgroup rho{6, 4, 3, 2, 0};
    auto r = hilbert_mumford_index(I, 2, rho, kSextic);
    EXPECT_EQ(r.index, 0);
    EXPECT_EQ(r.verdict, Verdict::StrictlySemistable);
    EXPECT_EQ(r.standard_weight_sum, 66);
    EXPECT_EQ(r.average_term, 66);
    EXPECT_FALSE(r.below_regularity);
    EXPECT_EQ(hilbert_mumford_index(I, 2, rho.inverse(), kSextic).index, 0);
    // slice oracle for both signs
    auto gens = support::generators(I);
    EXPECT_EQ(oracle::hm_index(gens, 5, 2, {6, 4, 3, 2, 0}, 11), 0);
    EXPECT_EQ(oracle::hm_index(gens, 5, 2, {-6, -4, -3, -2, 0}, 11), 0);
}

TEST(HmIndex, DoubleLine) {
    auto I = thickened_hyperplane_ideal(2, 2);
    auto r = hilbert_mumford_index(I, 4, OneParamSubgroup{0, 1, 1}, kDoubleLine);
    EXPECT_EQ(r.index, -8);
    EXPECT_EQ(r.standard_weight_sum, 32);
    EXPECT_EQ(r.average_term, 24);
    EXPECT_EQ(r.verdict, Verdict::Unstable);
    // hand count: x0^a * (degree 4 - a in x1, x2), a <= 1
    long ws = 0;
    for (int a = 0; a <= 1; ++a) ws += static_cast<long>(5 - a) * (4 - a);
    EXPECT_EQ(r.standard_weight_sum, ws);
}

TEST(HmIndex, ScalarWeightsGiveZero) {
    std::vector<Ideal> ideals{bicuspidal_ideal(), thickened_hyperplane_ideal(2, 2), lattice_ideal(tail_curve_spec(2).spec)};
    for (const auto& I : ideals) {
        std::vector<std::int64_t> w(I.nvars(), 7);
        auto gb = buchberger(I, MonomialOrder::graded_revlex());
        for (std::uint32_t m = 1; m <= 3; ++m) {
            HilbertPolynomial hf({Rational(hilbert_function(gb, m))});
            EXPECT_EQ(hilbert_mumford_index(I, m, OneParamSubgroup(w), hf).index, 0);
        }
    }
}

TEST(HmIndex, RejectsRationalDegreeAndBadLength) {
    auto I = bicuspidal_ideal();
    EXPECT_THROW(hilbert_mumford_index(I, Rational(9, 2), OneParamSubgroup{6, 4, 3, 2, 0}, kSextic), std::domain_error);
    EXPECT_THROW(hilbert_mumford_index(I, 2, OneParamSubgroup{1, 2}, kSextic), std::invalid_argument);
    EXPECT_THROW(hilbert_mumford_index(I, 0, OneParamSubgroup{6, 4, 3, 2, 0}, kSextic), std::invalid_argument);
}

TEST(HmIndex, FlagsBelowRegularity) {
    auto I = thickened_hyperplane_ideal(2, 2);
    auto r = hilbert_mumford_index(I, 1, OneParamSubgroup{0, 1, 1}, HilbertPolynomial::linear(2, 2));
    EXPECT_TRUE(r.below_regularity);
}

TEST(Property, IndexMatchesSliceOracle) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> w(-6, 6);
    auto I = bicuspidal_ideal();
    auto gens = support::generators(I);
    for (int k = 0; k < 40; ++k) {
        std::vector<std::int64_t> r(5);
        std::vector<long> rl(5);
        for (int i = 0; i < 5; ++i) rl[i] = r[i] = w(rng);
        const std::uint32_t m = 1 + k % 3;
        auto got = hilbert_mumford_index(I, m, OneParamSubgroup(r), kSextic).index;
        EXPECT_EQ(got, oracle::hm_index(gens, 5, static_cast<int>(m), rl, 6 * m - 1));
    }
}

TEST(Property, IndexInvariances) {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> w(-5, 5), c(-9, 9), s(1, 4);
    std::vector<std::pair<Ideal, HilbertPolynomial>> cases{{bicuspidal_ideal(), kSextic},
                                                           {thickened_hyperplane_ideal(2, 2), kDoubleLine},
                                                           {lattice_ideal(tail_curve_spec(2).spec), tail_hilbert_polynomial(2)}};
    for (const auto& [I, P] : cases) {
        for (int k = 0; k < 12; ++k) {
            std::vector<std::int64_t> r(I.nvars());
            for (auto& x : r) x = w(rng);
            OneParamSubgroup rho(r);
            const std::uint32_t m = 1 + k % 3;
            auto base = hilbert_mumford_index(I, m, rho, P).index;
            EXPECT_EQ(hilbert_mumford_index(I, m, rho.translated(c(rng)), P).index, base);
            const int k2 = s(rng);
            EXPECT_EQ(hilbert_mumford_index(I, m, rho.scaled(k2), P).index, base * k2);
            EXPECT_EQ(hilbert_mumford_index(I, m, rho, P, MonomialOrder::graded_revlex()).index, base);
            EXPECT_EQ(ideal_side_index(I, m, rho, P), base);
        }
    }
}

// ---------------------------------------------------------------------------------------------
// State polytope

TEST(StatePolytope, BicuspidalDegreeTwo) {
    auto p = state_polytope(bicuspidal_ideal(), 2);
    EXPECT_EQ(as_set(p.vertices), support::bicuspidal_vertices());
    EXPECT_EQ(p.vertices.size(), 10u);
    EXPECT_TRUE(p.certified);
    for (const auto& v : p.vertices) {
        std::int64_t s = 0;
        for (auto x : v) s += x;
        EXPECT_EQ(s, 8);  // m (T(m) - P(m)) = 2 (15 - 11)
    }
}

TEST(StatePolytope, VertexSetSymmetric) {
    // x_i <-> x_{4-i} fixes the ideal
    auto p = state_polytope(bicuspidal_ideal(), 3);
    auto s = as_set(p.vertices);
    for (auto v : p.vertices) {
        std::reverse(v.begin(), v.end());
        EXPECT_TRUE(s.count(v));
    }
}

TEST(StatePolytope, GenericWeightsHitVertices) {
    auto I = bicuspidal_ideal();
    auto gens = support::generators(I);
    for (std::uint32_t m = 2; m <= 3; ++m) {
        auto p = state_polytope(I, m);
        auto verts = as_set(p.vertices);
        std::mt19937_64 rng(33 + m);
        std::uniform_int_distribution<long> w(-1000, 1000);
        std::set<std::vector<std::int64_t>> seen;
        for (int k = 0; k < 150; ++k) {
            std::vector<long> r(5);
            for (auto& x : r) x = w(rng);
            auto in = oracle::initial_set(gens, 5, static_cast<int>(m), {r, false});
            auto sum = oracle::exponent_sum(in, 5);
            std::vector<std::int64_t> v(sum.begin(), sum.end());
            EXPECT_TRUE(verts.count(v)) << "m=" << m;
            seen.insert(v);
        }
        // m=3 has thin cones (e.g. around (-7,7,-7,-3,-1)); coverage there comes from the representatives test
        if (m == 2) EXPECT_EQ(seen, verts) << "random weights reach every vertex";
    }
}

TEST(StatePolytope, ConeRepresentativesReproduceVertices) {
    auto I = bicuspidal_ideal();
    auto gens = support::generators(I);
    for (int m = 2; m <= 3; ++m) {
        auto p = state_polytope(I, m);
        for (const auto& c : p.cones) {
            std::vector<long> r(c.representative.weights().begin(), c.representative.weights().end());
            auto in = oracle::initial_set(gens, 5, m, {r, false});
            auto sum = oracle::exponent_sum(in, 5);
            EXPECT_EQ(std::vector<std::int64_t>(sum.begin(), sum.end()), c.vertex) << "m=" << m;
            EXPECT_EQ(support::exps(c.initial_monomials), in);
        }
    }
}

TEST(StatePolytope, TrivialCases) {
    Ring r1 = Ring::standard(2);
    Ideal point{r1, {parse_polynomial("x0", r1)}};
    auto p = state_polytope(point, 1);
    ASSERT_EQ(p.vertices.size(), 1u);
    EXPECT_EQ(p.vertices[0], (std::vector<std::int64_t>{1, 0}));
    Ring r3 = Ring::standard(3);
    Ideal mono{r3, {parse_polynomial("x0*x1", r3), parse_polynomial("x2^3", r3)}};
    for (std::uint32_t m = 1; m <= 4; ++m) EXPECT_EQ(state_polytope(mono, m).vertices.size(), 1u);
    EXPECT_THROW(state_polytope(point, 0), std::invalid_argument);
}

TEST(Property, PolytopeIndependentOfSeedAndThreads) {
    auto I = lattice_ideal(tail_curve_spec(2).spec);
    auto base = state_polytope(I, 2);
    for (std::size_t threads : {1u, 2u, 4u})
        for (std::uint64_t seed : {1ull, 99ull}) {
            StatePolytopeOptions o;
            o.seed = seed;
            o.threads = threads;
            auto p = state_polytope(I, 2, o);
            EXPECT_EQ(p.vertices, base.vertices);
            ASSERT_EQ(p.cones.size(), base.cones.size());
            for (std::size_t k = 0; k < p.cones.size(); ++k)
                EXPECT_EQ(p.cones[k].representative.weights(), base.cones[k].representative.weights());
        }
    StatePolytopeOptions none;
    none.random_restarts = 0;
    EXPECT_EQ(state_polytope(I, 2, none).vertices, base.vertices);
}

// ---------------------------------------------------------------------------------------------
// Torus semistability

TEST(Semistable, Bicuspidal) {
    SemistabilityOptions o;
    o.kempf = KempfHypothesis{{6, 4, 3, 2, 0}};
    auto t = is_torus_semistable(bicuspidal_ideal(), 2, o);
    EXPECT_EQ(t.verdict, TorusVerdict::Semistable);
    ASSERT_EQ(t.barycenter.size(), 5u);
    for (const auto& x : t.barycenter) EXPECT_EQ(x, Rational(8, 5));
    EXPECT_TRUE(t.full_semistability);
    EXPECT_TRUE(t.stabilizer_fixes_ideal);
    // check the certificate by hand
    std::vector<Rational> s(5, Rational(0));
    Rational total = 0;
    for (const auto& cw : t.combination) {
        EXPECT_GT(cw.weight, 0);
        total += cw.weight;
        for (int i = 0; i < 5; ++i) s[i] += cw.weight * Rational(static_cast<long>(t.polytope.vertices[cw.vertex][i]));
    }
    EXPECT_EQ(total, 1);
    EXPECT_EQ(s, t.barycenter);
}

TEST(Semistable, ExhaustiveConeCheck) {
    // semistable iff the index is >= 0 on every cone representative found by the traversal
    auto I = bicuspidal_ideal();
    auto t = is_torus_semistable(I, 2);
    ASSERT_EQ(t.verdict, TorusVerdict::Semistable);
    for (const auto& c : t.polytope.cones) {
        EXPECT_GE(hilbert_mumford_index(I, 2, c.representative, kSextic).index, 0);
        EXPECT_GE(hilbert_mumford_index(I, 2, c.representative.inverse(), kSextic).index, 0);
    }
}

TEST(Semistable, DoubleLineUnstable) {
    auto t = is_torus_semistable(thickened_hyperplane_ideal(2, 2), 4);
    EXPECT_EQ(t.verdict, TorusVerdict::Unstable);
    ASSERT_TRUE(t.destabilizing.has_value());
    EXPECT_EQ(t.destabilizing->rho.weights(), (std::vector<std::int64_t>{0, 1, 1}));
    EXPECT_EQ(t.destabilizing->index, -8);
    EXPECT_EQ(t.polytope.vertices.size(), 1u);
}

TEST(Semistable, UnstableCertificatesAreRechecked) {
    // every unstable verdict carries a rho whose own report is unstable
    for (std::uint32_t m = 4; m <= 6; ++m) {
        auto t = is_torus_semistable(thickened_hyperplane_ideal(2, 2), m);
        ASSERT_EQ(t.verdict, TorusVerdict::Unstable);
        auto again = hilbert_mumford_index(thickened_hyperplane_ideal(2, 2), m, t.destabilizing->rho, kDoubleLine);
        EXPECT_EQ(again.verdict, Verdict::Unstable);
    }
}

TEST(Semistable, ZeroIdeal) {
    Ideal zero{Ring::standard(3), {}};
    auto t = is_torus_semistable(zero, 2);
    EXPECT_EQ(t.verdict, TorusVerdict::Semistable);
}

TEST(Kempf, Applicability) {
    EXPECT_TRUE(check_kempf_reduction({{6, 4, 3, 2, 0}}).applicable);
    auto bad = check_kempf_reduction({{1, 1, 0}});
    EXPECT_FALSE(bad.applicable);
    EXPECT_EQ(bad.reason, "repeated weight 1");
    EXPECT_TRUE(check_kempf_reduction({{0}}).applicable);
    EXPECT_TRUE((KempfHypothesis{{6, 4, 3, 2, 0}}.multiplicity_free()));
    EXPECT_FALSE((KempfHypothesis{{1, 1, 0}}.multiplicity_free()));
}

TEST(Kempf, StabilizerFixesIdeal) {
    EXPECT_TRUE(one_param_subgroup_fixes(bicuspidal_ideal(), {6, 4, 3, 2, 0}));
    EXPECT_FALSE(one_param_subgroup_fixes(bicuspidal_ideal(), {0, 1, 2, 3, 4}));
}

// ---------------------------------------------------------------------------------------------
// Thickening

TEST(Thickening, DoubleLine) {
    auto t = thickening_instability(thickened_hyperplane_ideal(2, 2), 0, 10);
    EXPECT_EQ(t.r, 2u);
    EXPECT_EQ(t.bound, 3);
    EXPECT_EQ(t.rho.weights(), (std::vector<std::int64_t>{0, 1, 1}));
}

TEST(Thickening, BicuspidalHasNone) {
    auto I = bicuspidal_ideal();
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(thickening_instability(I, c, 6).r, 0u);
}

TEST(Thickening, ReducedPoint) {
    Ring r = Ring::standard(2);
    Ideal point{r, {parse_polynomial("x0", r)}};
    auto t = thickening_instability(point, 0, 5);
    EXPECT_EQ(t.r, 1u);
    EXPECT_EQ(t.bound, 0);
    EXPECT_THROW(thickening_instability(point, 2, 5), std::invalid_argument);
}

TEST(Thickening, InstabilityBoundHolds) {
    // unstable for m > (N+1)(r-1)
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t r = 2; r <= 3; ++r) {
            auto ex = named_example("thickened-line:" + std::to_string(n) + ":" + std::to_string(r));
            auto t = thickening_instability(ex.ideal, 0, 6);
            ASSERT_EQ(t.r, r);
            for (std::int64_t m = t.bound + 1; m <= t.bound + 3; ++m)
                EXPECT_LT(hilbert_mumford_index(ex.ideal, m, t.rho, ex.hilbert_polynomial).index, 0) << n << r << m;
        }
}

// ---------------------------------------------------------------------------------------------
// Monomial bases

TEST(BasisBound, ThreeBasesCertificate) {
    auto I = bicuspidal_ideal();
    auto x = [](int i, int j) {
        std::vector<Monomial::Exponent> e(5, 0);
        ++e[i];
        ++e[j];
        return Monomial(e);
    };
    auto B1 = all_but(5, 2, {x(1, 1), x(2, 2), x(3, 3), x(0, 4)});
    auto B2 = all_but(5, 2, {x(1, 4), x(0, 4), x(0, 3), x(1, 3)});
    auto B3 = all_but(5, 2, {x(1, 4), x(0, 4), x(0, 3), x(2, 2)});
    auto bb = monomial_basis_index_bound(I, 2, {B1, B2, B3});
    EXPECT_TRUE(bb.holds);
    ASSERT_EQ(bb.multipliers.size(), 3u);
    Rational tot = 0;
    for (const auto& y : bb.multipliers) {
        EXPECT_GE(y, 0);
        tot += y;
    }
    EXPECT_EQ(tot, 1);
}

TEST(BasisBound, StabilizerBasisHasZeroWeight) {
    auto I = bicuspidal_ideal();
    OneParamSubgroup traceless{3, 1, 0, -1, -3};
    auto gb = buchberger(I, MonomialOrder::weighted(traceless));
    auto B = standard_monomials(gb, 2);
    EXPECT_EQ(basis_weight_sum(B, traceless), 0);
    EXPECT_NO_THROW(monomial_basis_index_bound(I, 2, {B}));
}

TEST(BasisBound, ZeroIdealVariables) {
    Ideal zero{Ring::standard(3), {}};
    std::vector<Monomial> vars{Monomial::variable(3, 0), Monomial::variable(3, 1), Monomial::variable(3, 2)};
    auto bb = monomial_basis_index_bound(zero, 1, {vars});
    EXPECT_TRUE(bb.holds);
    EXPECT_EQ(basis_weight_sum(vars, OneParamSubgroup{2, -1, -1}), 0);
}

TEST(BasisBound, SingleUnbalancedBasisHasWitness) {
    // only B1: some traceless weight makes it positive
    auto I = bicuspidal_ideal();
    auto B1 = all_but(5, 2, {mono5({0, 2, 0, 0, 0}), mono5({0, 0, 2, 0, 0}), mono5({0, 0, 0, 2, 0}), mono5({1, 0, 0, 0, 1})});
    auto bb = monomial_basis_index_bound(I, 2, {B1});
    ASSERT_FALSE(bb.holds);
    ASSERT_TRUE(bb.witness.has_value());
    EXPECT_EQ(bb.witness->weight_total(), 0);
    EXPECT_GT(basis_weight_sum(B1, *bb.witness), 0);
}

TEST(BasisBound, RejectsNonBasis) {
    auto I = bicuspidal_ideal();
    // keeps x1^2 and x0*x3, which are dependent modulo I
    auto bad = all_but(5, 2, {mono5({0, 0, 2, 0, 0}), mono5({0, 0, 0, 2, 0}), mono5({0, 1, 0, 1, 0}), mono5({1, 0, 0, 0, 1})});
    try {
        monomial_basis_index_bound(I, 2, {bad});
        FAIL() << "no throw";
    } catch (const NotABasisError& e) {
        EXPECT_EQ(e.index(), 0u);
        EXPECT_EQ(e.defect(), 1u);
    }
    auto short_set = all_but(5, 2, {mono5({0, 2, 0, 0, 0}), mono5({0, 0, 2, 0, 0}), mono5({0, 0, 0, 2, 0}),
                                    mono5({1, 0, 0, 0, 1}), mono5({2, 0, 0, 0, 0})});
    EXPECT_THROW(monomial_basis_index_bound(I, 2, {short_set}), NotABasisError);
}
