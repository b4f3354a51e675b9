#include <gtest/gtest.h>

#include <cmath>

#include "crtube/approx.hpp"
#include "crtube/endo.hpp"
#include "endo_samples.hpp"
#include "oracles.hpp"

using namespace crtube;

namespace {

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }

QMatrix rows(std::initializer_list<std::initializer_list<Rational>> rs)
{
    std::vector<QVec> v;
    for (auto r : rs)
        v.emplace_back(r);
    return QMatrix::from_rows(v);
}

QMatrix rotation() { return rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}); }
QMatrix ey(const Rational& w) { return rows({{0, -1, 0}, {1, 0, 0}, {0, 0, w}}); }
QMatrix ez() { return rows({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}); }
QMatrix ex(const Rational& t) { return QMatrix::diagonal(qv({0, 1, t})); }
QMatrix j3() { return rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }

// sigma_j of explicit roots after shifting them to trace zero.
std::vector<Gaussian> shifted_sigmas(std::vector<Gaussian> roots)
{
    Gaussian mean;
    for (const auto& r : roots)
        mean += r;
    mean /= Gaussian(static_cast<int>(roots.size()));
    for (auto& r : roots)
        r -= mean;
    return oracle::elementary_symmetric(roots);
}

Rational modulus_from_roots(const std::vector<Gaussian>& roots)
{
    auto s = shifted_sigmas(roots);
    EXPECT_TRUE(is_real(s[2]) && is_real(s[3]));
    return -s[2].re * s[2].re * s[2].re / (s[3].re * s[3].re);
}

} // namespace

TEST(Cyclic, Examples)
{
    EXPECT_TRUE(is_cyclic_pair(j3(), qv({1, 0, 0})));
    EXPECT_FALSE(is_cyclic_pair(QMatrix::identity(3), qv({1, 2, 3})));
    EXPECT_TRUE(is_cyclic_pair(QMatrix::diagonal(qv({1, 2, 3})), qv({1, 1, 1})));
    EXPECT_THROW(is_cyclic_pair(j3(), qv({1, 0})), dimension_error);
    EXPECT_TRUE(is_cyclic(j3()));
    EXPECT_FALSE(is_cyclic(QMatrix::identity(2)));
    EXPECT_FALSE(is_cyclic(QMatrix::diagonal(qv({1, 1, 2}))));
    EXPECT_FALSE(find_cyclic_vector(QMatrix::identity(3)).has_value());
    auto v = find_cyclic_vector(QMatrix::diagonal(qv({1, 2, 3})));
    ASSERT_TRUE(v.has_value());
    EXPECT_TRUE(is_cyclic_pair(QMatrix::diagonal(qv({1, 2, 3})), *v));
}

TEST(Cyclic, SearchIsDeterministicAndAgreesWithMinimalPolynomial)
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 40; ++k) {
        QMatrix m = samples::ap_sample(rng, 3 + k % 4, k);
        auto v = find_cyclic_vector(m, 99);
        EXPECT_EQ(v.has_value(), is_cyclic(m));
        EXPECT_EQ(v, find_cyclic_vector(m, 99));
        if (v) {
            EXPECT_TRUE(is_cyclic_pair(m, *v));
        }
    }
}

TEST(TraceFree, Examples)
{
    EXPECT_EQ(trace_free(QMatrix::diagonal(qv({1, 2, 3}))), QMatrix::diagonal(qv({-1, 0, 1})));
    EXPECT_EQ(trace_free(rotation()), rotation());
    EXPECT_EQ(trace_free(j3()), j3());
    EXPECT_EQ(trace_free(trace_free(ez())), trace_free(ez()));
}

TEST(Sigma, Examples)
{
    auto s = sigma_invariants(rotation());
    EXPECT_EQ(s.at(2), 1);
    EXPECT_EQ(s.at(3), 0);
    auto oracle_ei = oracle::elementary_symmetric({Gaussian::i(), -Gaussian::i(), Gaussian(0)});
    EXPECT_EQ(oracle_ei[2], Gaussian(1));
    auto z = sigma_invariants(trace_free(ez()));
    EXPECT_EQ(z.at(2), Rational(-1, 3));
    EXPECT_EQ(z.at(3), Rational(2, 27));
    auto oz = oracle::elementary_symmetric({Gaussian(Rational(-1, 3)), Gaussian(Rational(-1, 3)), Gaussian(Rational(2, 3))});
    EXPECT_EQ(oz[2], Gaussian(Rational(-1, 3)));
    EXPECT_EQ(oz[3], Gaussian(Rational(2, 27)));
    auto zero = sigma_invariants(QMatrix(4, 4));
    for (std::size_t j = 2; j <= 4; ++j)
        EXPECT_EQ(zero.at(j), 0);
    EXPECT_THROW(sigma_invariants(ez()), precondition_error);
}

TEST(Progression, Examples)
{
    EXPECT_TRUE(is_arithmetic_progression(QMatrix::diagonal(qv({-1, 0, 1}))));
    EXPECT_TRUE(is_arithmetic_progression(rotation()));
    EXPECT_FALSE(is_arithmetic_progression(ez()));
    EXPECT_TRUE(is_arithmetic_progression(QMatrix::diagonal(qv({2, 5, 8, 11}))));
    EXPECT_FALSE(is_arithmetic_progression(QMatrix::diagonal(qv({-2, -1, 1, 2}))));
}

TEST(Progression, AgreesWithNumericRootOracle)
{
    std::mt19937_64 rng(2024);
    int positives = 0;
    for (int k = 0; k < 240; ++k) {
        std::size_t n = 3 + k % 4;
        QMatrix m = samples::ap_sample(rng, n, k / 4);
        bool exact = is_arithmetic_progression(m);
        bool numeric = approx::is_progression(approx::roots_with_multiplicity(charpoly(m)), approx::default_tol);
        EXPECT_EQ(exact, numeric) << "sample " << k;
        positives += exact;
    }
    EXPECT_GT(positives, 60);
}

TEST(Progression, AffineInvariance)
{
    std::mt19937_64 rng(77);
    for (int k = 0; k < 40; ++k) {
        QMatrix m = samples::ap_sample(rng, 3 + k % 3, k);
        Rational r = oracle::random_rational(rng);
        if (r == 0)
            r = 3;
        Rational c = oracle::random_rational(rng);
        QMatrix t = m * r + QMatrix::identity(m.rows()) * c;
        EXPECT_EQ(is_arithmetic_progression(t), is_arithmetic_progression(m));
    }
}

TEST(GeneralPosition, Examples)
{
    EXPECT_TRUE(general_position(trace_free(QMatrix::diagonal(qv({0, 1, 3}))), 2));
    EXPECT_FALSE(general_position(QMatrix::diagonal(qv({-1, 0, 1})), 2));
    EXPECT_TRUE(general_position(trace_free(QMatrix::diagonal(qv({1, 2, 3, 4, 10}))), 3));
    EXPECT_THROW(general_position(QMatrix::identity(3), 2), precondition_error);
    EXPECT_THROW(general_position(ez(), 3), precondition_error);
}

TEST(Modulus, Table)
{
    EXPECT_TRUE(modulus(rotation()).infinite);
    EXPECT_EQ(modulus(ez()), Modulus::finite(Rational(27, 4)));
    // Independent root expansions.
    Rational mu_ey = modulus_from_roots({Gaussian::i(), -Gaussian::i(), Gaussian(3)});
    Rational mu_ex = modulus_from_roots({Gaussian(0), Gaussian(1), Gaussian(3)});
    EXPECT_EQ(mu_ey, Rational(1, 2));
    EXPECT_EQ(mu_ex, Rational(9261, 400));
    auto s = shifted_sigmas({Gaussian::i(), -Gaussian::i(), Gaussian(3)});
    EXPECT_EQ(s[2], Gaussian(-2));
    EXPECT_EQ(s[3], Gaussian(4));
    EXPECT_EQ(modulus(ey(3)), Modulus::finite(mu_ey));
    EXPECT_EQ(modulus(ex(3)), Modulus::finite(mu_ex));
    EXPECT_EQ(to_string(modulus(rotation())), "inf");
    EXPECT_THROW(modulus(QMatrix::identity(3)), precondition_error);
    EXPECT_THROW(modulus(QMatrix::diagonal(qv({1, 2, 3, 4}))), precondition_error);
}

TEST(Modulus, SimilarityAndScalingInvariance)
{
    std::mt19937_64 rng(101);
    for (int k = 0; k < 40; ++k) {
        QMatrix m = samples::cyclic3(rng);
        QMatrix g = oracle::random_invertible(rng, 3);
        Rational r = oracle::random_rational(rng);
        if (r == 0)
            r = -2;
        EXPECT_EQ(modulus(g * m * inverse(g)), modulus(m));
        EXPECT_EQ(modulus(m * r), modulus(m));
    }
}

TEST(Classify3, Examples)
{
    EXPECT_EQ(classify3(rotation()).cls, Class3::light_cone);
    EXPECT_EQ(classify3(ez()).cls, Class3::ez);
    EXPECT_EQ(classify3(ey(3)).cls, Class3::ey);
    EXPECT_EQ(classify3(ex(3)).cls, Class3::ex);
    EXPECT_EQ(classify3(j3()).cls, Class3::light_cone);
    EXPECT_EQ(classify3(QMatrix::diagonal(qv({-1, 0, 1}))).cls, Class3::light_cone);
}

TEST(Classify3, DiscriminantIdentityOnRandomInputs)
{
    std::mt19937_64 rng(303);
    for (int k = 0; k < 100; ++k) {
        QMatrix m = samples::cyclic3(rng);
        auto s = sigma_invariants(trace_free(m));
        Rational disc = -4 * s.at(2) * s.at(2) * s.at(2) - 27 * s.at(3) * s.at(3);
        auto c = classify3(m);
        if (c.mu.infinite)
            continue;
        EXPECT_EQ(sign(c.mu.value - Rational(27, 4)), sign(disc));
    }
}

TEST(Classify3, SweepsStayInTheirRegime)
{
    for (auto w : {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(5)}) {
        auto c = classify3(ey(w));
        EXPECT_EQ(c.cls, Class3::ey);
        EXPECT_LT(c.mu.value, Rational(27, 4));
    }
    for (auto t : {Rational(5, 2), Rational(3), Rational(4), Rational(7)}) {
        auto c = classify3(ex(t));
        EXPECT_EQ(c.cls, Class3::ex);
        EXPECT_GT(c.mu.value, Rational(27, 4));
    }
}

TEST(Equivalence, Examples)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        QMatrix m = samples::cyclic3(rng);
        Rational r = oracle::random_rational(rng);
        if (r == 0)
            r = 5;
        EXPECT_TRUE(locally_equivalent(m, m * r));
        EXPECT_TRUE(globally_equivalent(m, m * r));
    }
    EXPECT_FALSE(locally_equivalent(ey(3), ex(3)));
    EXPECT_TRUE(locally_equivalent(j3(), QMatrix::diagonal(qv({-1, 0, 1}))));
    EXPECT_TRUE(globally_equivalent(ey(3), ey(3) * Rational(2)));
    EXPECT_FALSE(globally_equivalent(j3(), QMatrix::diagonal(qv({-1, 0, 1}))));
    QMatrix g = oracle::random_invertible(rng, 3);
    EXPECT_TRUE(globally_equivalent(ey(3), g * ey(3) * inverse(g)));
    EXPECT_THROW(locally_equivalent(QMatrix::identity(3), ey(3)), precondition_error);
}

TEST(Equivalence, MatchesClassificationAndScaleRecords)
{
    std::mt19937_64 rng(808);
    int local_hits = 0, global_hits = 0;
    for (int k = 0; k < 100; ++k) {
        QMatrix a = samples::cyclic3(rng);
        QMatrix b;
        switch (k % 4) {
        case 0:
            b = samples::cyclic3(rng);
            break;
        case 1: {
            QMatrix g = oracle::random_invertible(rng, 3);
            Rational r = oracle::random_rational(rng);
            b = g * a * inverse(g) * (r == 0 ? Rational(-1) : r) + QMatrix::identity(3) * oracle::random_rational(rng);
            break;
        }
        case 2:
            b = samples::ap_sample(rng, 3, 1 + (k / 4) % 2);
            a = samples::ap_sample(rng, 3, 1 + (k / 4 + 1) % 2);
            break;
        default:
            b = a * Rational(-1);
            break;
        }
        auto ca = classify3(a), cb = classify3(b);
        bool same = ca.cls == cb.cls && ca.mu == cb.mu;
        EXPECT_EQ(locally_equivalent(a, b), same) << "pair " << k;
        bool g = globally_equivalent(a, b);
        EXPECT_EQ(scale_invariants(a) == scale_invariants(b), g) << "pair " << k;
        local_hits += same;
        global_hits += g;
        if (g) {
            EXPECT_TRUE(locally_equivalent(a, b));
        }
    }
    EXPECT_GT(local_hits, 40);
    EXPECT_GT(global_hits, 40);
}

TEST(Equivalence, GlobalIsAnEquivalenceRelation)
{
    std::mt19937_64 rng(909);
    for (int k = 0; k < 30; ++k) {
        QMatrix a = samples::cyclic3(rng);
        QMatrix g = oracle::random_invertible(rng, 3);
        QMatrix b = g * a * inverse(g) * Rational(-2);
        QMatrix c = b * Rational(1, 3);
        EXPECT_TRUE(globally_equivalent(a, a));
        EXPECT_EQ(globally_equivalent(a, b), globally_equivalent(b, a));
        if (globally_equivalent(a, b) && globally_equivalent(b, c)) {
            EXPECT_TRUE(globally_equivalent(a, c));
        }
    }
}

TEST(Equivalence, EvenLeadingIndexNeedsSignCheck)
{
    // Roots +-1, +-2 and their mirror images: sigma_3 flips sign under phi -> -phi.
    QMatrix a = trace_free(QMatrix::diagonal(qv({-3, -1, 0, 4})));
    EXPECT_TRUE(globally_equivalent(a, a * Rational(-1)));
    QMatrix b = trace_free(QMatrix::diagonal(qv({-4, 0, 1, 3})));
    EXPECT_EQ(globally_equivalent(a, b), scale_invariants(a) == scale_invariants(b));
    // sigma_2 of opposite sign can never be matched by a real scaling.
    EXPECT_FALSE(globally_equivalent(rotation(), QMatrix::diagonal(qv({-1, 0, 1}))));
}

TEST(ScaleInvariants, Examples)
{
    auto d = scale_invariants(QMatrix::diagonal(qv({-1, 0, 1})));
    EXPECT_FALSE(d.nilpotent);
    EXPECT_EQ(d.j0, 2);
    ASSERT_EQ(d.ratios.size(), 1u);
    EXPECT_EQ(d.ratios[0], 0);
    EXPECT_EQ(scale_invariants(QMatrix::diagonal(qv({-3, 0, 3}))), d);
    auto z = scale_invariants(ez());
    EXPECT_EQ(z.j0, 2);
    EXPECT_EQ(z.ratios.at(0), Rational(-4, 27));
    EXPECT_TRUE(scale_invariants(j3()).nilpotent);
}

TEST(MakeTube, Examples)
{
    // Nilpotent raising operator on binary forms of degree 3 with base point e_0.
    QMatrix raise(4, 4);
    for (int j = 1; j < 4; ++j)
        raise(j, j - 1) = j;
    auto td = make_tube(raise, 2, unit_vec<Rational>(4, 0));
    EXPECT_EQ(degeneracy_degree(td), 2);
    std::vector<MPoly> qs;
    for (int j = 1; j < 3; ++j)
        qs.push_back(MPoly::var(4, 0) * MPoly::var(4, j + 1) - MPoly::var(4, 1) * MPoly::var(4, j));
    for (const auto& q : qs)
        EXPECT_EQ(q(td.a), 0);
    for (const auto& f : td.fields)
        EXPECT_TRUE(ideal_invariance(qs, f));

    auto t2 = make_tube(ey(3), 2, qv({1, 0, 1}));
    EXPECT_EQ(degeneracy_degree(t2), 2);
    EXPECT_EQ(is_minimal_sufficient(t2).verdict, Minimality::holds);

    auto t3 = make_tube(trace_free(QMatrix::diagonal(qv({1, 2, 3, 4, 5}))), 3, qv({1, 1, 1, 1, 1}));
    EXPECT_EQ(tangent_space(t3).dim(), 3u);
    EXPECT_EQ(degeneracy_degree(t3), 2);
    EXPECT_THROW(make_tube(QMatrix::identity(3), 2, qv({1, 0, 0})), precondition_error);
    EXPECT_THROW(make_tube(ey(3), 3, qv({1, 0, 1})), precondition_error);
}

TEST(MakeTube, RandomCyclicProperty)
{
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 30; ++k) {
        std::size_t n = 4 + k % 3;
        int d = 2 + k % 2;
        QMatrix m = oracle::random_matrix(rng, n, 4, 2);
        auto a = find_cyclic_vector(m, 1);
        if (!a)
            continue;
        auto td = make_tube(m, d, *a);
        auto c = kernel_chain(td);
        EXPECT_EQ(c.degree, 2);
        EXPECT_EQ(c.spaces[1], QSubspace::span(n, {*a}));
        EXPECT_EQ(is_minimal_sufficient(td).verdict, Minimality::holds);
    }
}

TEST(Stability, Examples)
{
    EXPECT_EQ(stability_order(QMatrix::diagonal(qv({-2, -1, 1, 2})), 2), 2);
    EXPECT_EQ(stability_order(trace_free(ex(3)), 2), 1);
    EXPECT_EQ(stability_order(trace_free(QMatrix::diagonal(qv({1, 2, 4, 8, -15}))), 2), 1);
    EXPECT_THROW(stability_order(QMatrix::diagonal(qv({-1, 0, 1})), 2), precondition_error);
    EXPECT_THROW(stability_order(trace_free(QMatrix::diagonal(qv({1, 2, 4, 8, -15}))), 4), precondition_error);
    QMatrix sym = QMatrix::diagonal(qv({-2, -1, 1, 2}));
    EXPECT_TRUE(globally_equivalent(sym, sym * Rational(-1)));
}

TEST(AutDim, Examples)
{
    EXPECT_EQ(expected_aut_dim(rotation()), 7);
    EXPECT_EQ(expected_aut_dim(j3()), 6);
    EXPECT_EQ(expected_aut_dim(QMatrix::diagonal(qv({-1, 0, 1}))), 5);
    EXPECT_EQ(expected_aut_dim(trace_free(ez())), 5);
}

TEST(EastwoodEzhov, Conversion)
{
    EXPECT_EQ(eastwood_ezhov(0), Modulus::finite(0));
    EXPECT_EQ(eastwood_ezhov(Rational(5, 28)), Modulus::finite(Rational(5, 4)));
    auto inv = eastwood_ezhov_inverse(Rational(27, 4));
    EXPECT_FALSE(inv.exact.has_value());
    EXPECT_NEAR(inv.value, std::cbrt(675.0) / 28.0, 1e-12);
    EXPECT_NEAR(inv.value, 0.31329, 1e-5);
    auto back = eastwood_ezhov_inverse(Rational(5, 4));
    ASSERT_TRUE(back.exact.has_value());
    EXPECT_EQ(*back.exact, Rational(5, 28));
}

TEST(InvertModulus, Examples)
{
    auto w = invert_modulus(Class3::ey, Rational(1, 2));
    EXPECT_NEAR(w.parameter, 3.0, 1e-9);
    auto t = invert_modulus(Class3::ex, Rational(9261, 400));
    EXPECT_NEAR(t.parameter, 3.0, 1e-9);
    EXPECT_THROW(invert_modulus(Class3::ey, Rational(27, 4)), precondition_error);
    EXPECT_THROW(invert_modulus(Class3::ex, Rational(1)), precondition_error);
    for (auto x : {Rational(1, 2), Rational(2), Rational(5)}) {
        auto r = invert_modulus(Class3::ey, modulus(ey(x)).value);
        EXPECT_NEAR(to_double(modulus(ey(x)).value), to_double(modulus(ey(Rational(r.parameter))).value), 1e-9);
    }
}
