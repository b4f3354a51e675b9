#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "crtube/tube.hpp"
#include "oracles.hpp"

using namespace crtube;

namespace {

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }

AffineField linear_field(const QMatrix& m) { return {m, QVec(m.rows())}; }

AffineField euler(std::size_t n) { return linear_field(QMatrix::identity(n)); }

TubeDatum light_cone()
{
    QMatrix rot(3, 3);  // x2 d1 - x1 d2
    rot(0, 1) = 1;
    rot(1, 0) = -1;
    return TubeDatum{3, qv({1, 0, 1}), {euler(3), linear_field(rot)}, {}};
}

// Fields zeta_1 and xi^{1,-1} on R^3 with base point e_1.
TubeDatum twisted_cubic()
{
    QMatrix z = QMatrix::diagonal(qv({1, 2, 3}));
    QMatrix x(3, 3);
    x(1, 0) = 2;
    x(2, 1) = 3;
    return TubeDatum{3, qv({1, 0, 0}), {linear_field(z), AffineField{x, qv({1, 0, 0})}}, {}};
}

// The four gl(2) fields on binary forms of degree m.
std::vector<AffineField> binary_form_fields(int m)
{
    std::size_t n = static_cast<std::size_t>(m) + 1;
    QMatrix z1(n, n), z2(n, n), lower(n, n), raise(n, n);
    for (int j = 0; j <= m; ++j) {
        z1(j, j) = j;
        z2(j, j) = m - j;
        if (j < m)
            lower(j, j + 1) = m - j;
        if (j > 0)
            raise(j, j - 1) = j;
    }
    return {linear_field(z1), linear_field(z2), linear_field(lower), linear_field(raise)};
}

MPoly pi_polynomial()
{
    MPoly p(4);
    p.add_term({2, 0, 0, 2}, 1);
    p.add_term({1, 0, 3, 0}, 4);
    p.add_term({1, 1, 1, 1}, -6);
    p.add_term({0, 2, 2, 0}, -3);
    p.add_term({0, 3, 0, 1}, 4);
    return p;
}

std::vector<std::size_t> dims(const KernelChain& c)
{
    std::vector<std::size_t> d;
    for (const auto& s : c.spaces)
        d.push_back(s.dim());
    return d;
}

TubeDatum random_transport(const TubeDatum& td, std::mt19937_64& rng, QMatrix& g)
{
    g = oracle::random_invertible(rng, td.n);
    return transport(td, g, oracle::random_vector(rng, td.n));
}

} // namespace

TEST(Tangent, Examples)
{
    EXPECT_EQ(tangent_space(light_cone()), QSubspace::span(3, {qv({1, 0, 1}), qv({0, -1, 0})}));
    EXPECT_EQ(tangent_space(twisted_cubic()), QSubspace::span(3, {qv({1, 0, 0}), qv({1, 2, 0})}));
    TubeDatum e{4, qv({1, 2, 3, 4}), {euler(4)}, {}};
    EXPECT_EQ(tangent_space(e), QSubspace::span(4, {qv({1, 2, 3, 4})}));
}

TEST(Tangent, DependentValuesRejected)
{
    TubeDatum td = light_cone();
    td.fields.push_back(euler(3));
    EXPECT_THROW(tangent_space(td), invalid_input);
    TubeDatum bad = light_cone();
    bad.a = qv({1, 0});
    EXPECT_THROW(validate(bad), invalid_input);
}

TEST(KernelChain, LightCone)
{
    auto c = kernel_chain(light_cone());
    EXPECT_EQ(dims(c), (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_EQ(c.verdict, KernelChain::Verdict::degree);
    EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(c.spaces[1], QSubspace::span(3, {qv({1, 0, 1})}));
    EXPECT_EQ(degeneracy_degree(light_cone()), 2);
}

TEST(KernelChain, TwistedCubic)
{
    auto c = kernel_chain(twisted_cubic());
    EXPECT_EQ(c.spaces[1], QSubspace::span(3, {qv({1, 0, 0})}));
    EXPECT_TRUE(c.spaces[2].is_zero());
    EXPECT_EQ(degeneracy_degree(twisted_cubic()), 2);
}

TEST(KernelChain, BinaryFormsDegreeThree)
{
    auto f = binary_form_fields(3);
    // zeta_1, zeta_2 and xi^{1,-1} are independent at a = u2^3 + u1 u2^2.
    TubeDatum td{4, qv({1, 1, 0, 0}), {f[0], f[1], f[3]}, {pi_polynomial()}};
    auto c = kernel_chain(td);
    EXPECT_EQ(dims(c), (std::vector<std::size_t>{3, 2, 1, 0}));
    EXPECT_EQ(c.degree, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        std::vector<QVec> expect;
        for (std::size_t j = 0; j + r < 3; ++j)
            expect.push_back(unit_vec<Rational>(4, j));
        EXPECT_EQ(c.spaces[r], QSubspace::span(4, expect));
    }
}

TEST(KernelChain, BinaryFormsDegreeFour)
{
    TubeDatum td{5, qv({1, 1, 1, 0, 0}), binary_form_fields(4), {}};
    auto c = kernel_chain(td);
    EXPECT_EQ(dims(c), (std::vector<std::size_t>{4, 3, 2, 1, 0}));
    EXPECT_EQ(degeneracy_degree(td), 4);
}

TEST(KernelChain, FlatFactorStabilizes)
{
    AffineField d1{QMatrix(3, 3), qv({1, 0, 0})}, d2{QMatrix(3, 3), qv({0, 1, 0})};
    TubeDatum td{3, qv({0, 0, 0}), {d1, d2}, {}};
    auto c = kernel_chain(td);
    EXPECT_EQ(c.verdict, KernelChain::Verdict::stabilized_nonzero);
    EXPECT_EQ(c.spaces.back(), c.spaces[c.spaces.size() - 2]);
    EXPECT_FALSE(degeneracy_degree(td).has_value());
}

TEST(Minimality, Examples)
{
    auto m = is_minimal_sufficient(light_cone());
    EXPECT_EQ(m.verdict, Minimality::holds);
    EXPECT_EQ(m.closure.dim(), 3u);
    AffineField d1{QMatrix(3, 3), qv({1, 0, 0})}, d2{QMatrix(3, 3), qv({0, 1, 0})};
    TubeDatum plane{3, qv({5, 7, 0}), {d1, d2}, {}};
    EXPECT_EQ(is_minimal_sufficient(plane).verdict, Minimality::inconclusive);
    EXPECT_EQ(is_minimal_sufficient(twisted_cubic()).verdict, Minimality::holds);
}

TEST(LeviForm, LightCone)
{
    auto td = light_cone();
    QVec w = qv({0, -1, 0});
    auto l = levi_form(td, w, w);
    EXPECT_FALSE(l.is_zero());
    // rotation applied to w is -e1; reduced modulo the tangent plane it becomes e3.
    EXPECT_EQ(l.representative, qv({0, 0, 1}));
    EXPECT_EQ(l.complement, (std::vector<std::size_t>{2}));
    EXPECT_EQ(l.quotient, qv({1}));
    EXPECT_TRUE(levi_form(td, td.a, w).is_zero());
    EXPECT_THROW(levi_form(td, qv({0, 0, 1}), w), precondition_error);
}

TEST(LeviForm, SymmetricAndIndependentOfFieldOrder)
{
    std::mt19937_64 rng(5);
    auto f = binary_form_fields(3);
    std::vector<TubeDatum> data{light_cone(), twisted_cubic(), TubeDatum{4, qv({1, 1, 0, 0}), {f[0], f[1], f[3]}, {}}};
    for (const auto& td : data) {
        auto t = tangent_space(td);
        TubeDatum perm = td;
        std::reverse(perm.fields.begin(), perm.fields.end());
        for (int k = 0; k < 10; ++k) {
            QVec v(td.n), w(td.n);
            for (const auto& b : t.basis()) {
                v = v + scale(oracle::random_rational(rng), b);
                w = w + scale(oracle::random_rational(rng), b);
            }
            auto lvw = levi_form(td, v, w), lwv = levi_form(td, w, v);
            EXPECT_TRUE(t.contains(lvw.representative - lwv.representative));
            EXPECT_EQ(lvw.quotient, lwv.quotient);
            auto lp = levi_form(perm, v, w);
            EXPECT_TRUE(t.contains(lvw.representative - lp.representative));
        }
    }
}

TEST(LieDerivative, PolynomialInvariance)
{
    MPoly p = pi_polynomial();
    EXPECT_EQ(p(qv({1, 1, 0, 0})), 0);
    for (const auto& xi : binary_form_fields(3))
        EXPECT_TRUE(invariance_witness(p, xi));
    // p = x1^3 + x2^3 - x3^3 under Euler: L p = 3 p.
    MPoly q(3);
    q.add_term({3, 0, 0}, 1);
    q.add_term({0, 3, 0}, 1);
    q.add_term({0, 0, 3}, -1);
    EXPECT_EQ(lie_derivative(q, euler(3)), q * Rational(3));
    EXPECT_TRUE(invariance_witness(q, euler(3)));
    MPoly x1 = MPoly::var(3, 0);
    AffineField d2{QMatrix(3, 3), qv({0, 1, 0})};
    EXPECT_TRUE(lie_derivative(x1, d2).is_zero());
    EXPECT_TRUE(invariance_witness(x1, d2));
    AffineField d1{QMatrix(3, 3), qv({1, 0, 0})};
    EXPECT_FALSE(invariance_witness(x1 * x1 - MPoly::var(3, 1), d1));
    EXPECT_THROW(lie_derivative(MPoly(2), d1), dimension_error);
}

TEST(LieDerivative, ScalingInvariant)
{
    std::mt19937_64 rng(9);
    MPoly p = pi_polynomial();
    auto fields = binary_form_fields(3);
    AffineField shift{QMatrix(4, 4), qv({1, 0, 0, 0})};
    fields.push_back(shift);
    for (int k = 0; k < 10; ++k) {
        Rational r = oracle::random_rational(rng);
        if (r == 0)
            continue;
        for (const auto& xi : fields)
            EXPECT_EQ(invariance_witness(p * r, xi), invariance_witness(p, xi));
    }
}

TEST(LieDerivative, QuadricSystemInvariance)
{
    // x0 x_{j+1} - x1 x_j, 0 < j < m, under the raising field and Euler.
    const int m = 4;
    std::vector<MPoly> qs;
    for (int j = 1; j < m; ++j)
        qs.push_back(MPoly::var(m + 1, 0) * MPoly::var(m + 1, j + 1) - MPoly::var(m + 1, 1) * MPoly::var(m + 1, j));
    auto f = binary_form_fields(m);
    EXPECT_TRUE(ideal_invariance(qs, f[3]));
    EXPECT_TRUE(ideal_invariance(qs, euler(m + 1)));
    EXPECT_FALSE(invariance_witness(qs[1], f[3]));
    AffineField shift{QMatrix(m + 1, m + 1), unit_vec<Rational>(m + 1, 2)};
    EXPECT_FALSE(ideal_invariance(qs, shift));
}

TEST(Conical, Examples)
{
    EXPECT_TRUE(conical_check(light_cone()));
    EXPECT_TRUE(conical_check(twisted_cubic()));
    AffineField d1{QMatrix(3, 3), qv({1, 0, 0})};
    EXPECT_FALSE(conical_check(TubeDatum{3, qv({0, 1, 0}), {d1}, {}}));
}

TEST(HypersurfaceKernel, Examples)
{
    MPoly cone(3);
    cone.add_term({2, 0, 0}, 1);
    cone.add_term({0, 2, 0}, 1);
    cone.add_term({0, 0, 2}, -1);
    EXPECT_EQ(hypersurface_levi_kernel(cone, qv({1, 0, 1})), QSubspace::span(3, {qv({1, 0, 1})}));
    MPoly cubic(3);
    cubic.add_term({3, 0, 0}, 1);
    cubic.add_term({0, 3, 0}, 1);
    cubic.add_term({0, 0, 3}, -2);
    EXPECT_EQ(hypersurface_levi_kernel(cubic, qv({1, 1, 1})).dim(), 1u);
    MPoly sphere(3);
    sphere.add_term({2, 0, 0}, 1);
    sphere.add_term({0, 2, 0}, 1);
    sphere.add_term({0, 0, 2}, 1);
    sphere.add_term({0, 0, 0}, -3);
    EXPECT_TRUE(hypersurface_levi_kernel(sphere, qv({1, 1, 1})).is_zero());
    EXPECT_THROW(hypersurface_levi_kernel(cone, qv({0, 0, 0})), precondition_error);
    EXPECT_THROW(hypersurface_levi_kernel(cone, qv({1, 1, 1})), precondition_error);
}

TEST(Properties, ChainMonotoneAndBounded)
{
    auto f = binary_form_fields(4);
    std::vector<TubeDatum> data{light_cone(), twisted_cubic(), TubeDatum{5, qv({1, 1, 1, 0, 0}), f, {}}};
    for (const auto& td : data) {
        auto c = kernel_chain(td);
        for (std::size_t r = 0; r + 1 < c.spaces.size(); ++r)
            EXPECT_TRUE(c.spaces[r].contains(c.spaces[r + 1]));
        EXPECT_LE(c.spaces.size(), c.spaces[0].dim() + 2);
    }
}

TEST(Properties, ConeLawAndDegreeTwoCriterion)
{
    for (const auto& td : {light_cone(), twisted_cubic()}) {
        auto c = kernel_chain(td);
        if (conical_check(td)) {
            EXPECT_TRUE(c.spaces[1].contains(td.a));
        }
        if (c.spaces[0].dim() >= 2 && c.spaces[1] == QSubspace::span(td.n, {td.a})) {
            EXPECT_EQ(c.degree, 2);
        }
    }
}

TEST(Properties, AffineInvariance)
{
    std::mt19937_64 rng(3);
    auto f3 = binary_form_fields(3);
    std::vector<TubeDatum> data{light_cone(), twisted_cubic(), TubeDatum{4, qv({1, 1, 0, 0}), {f3[0], f3[1], f3[3]}, {}}};
    for (const auto& td : data)
        for (int k = 0; k < 5; ++k) {
            QMatrix g;
            TubeDatum tt = random_transport(td, rng, g);
            auto c = kernel_chain(td), ct = kernel_chain(tt);
            ASSERT_EQ(c.spaces.size(), ct.spaces.size());
            for (std::size_t r = 0; r < c.spaces.size(); ++r)
                EXPECT_EQ(push_forward(g, c.spaces[r]), ct.spaces[r]);
            EXPECT_EQ(is_minimal_sufficient(td).verdict, is_minimal_sufficient(tt).verdict);
        }
}

TEST(AffineBracket, VectorFieldConvention)
{
    // [x d1, d1] = -d1 for X = x1 d1, Y = d1.
    QMatrix a(2, 2);
    a(0, 0) = 1;
    AffineField x{a, QVec(2)}, y{QMatrix(2, 2), qv({1, 0})};
    auto b = bracket(x, y);
    EXPECT_TRUE(b.linear.is_zero());
    EXPECT_EQ(b.translation, qv({-1, 0}));
}
