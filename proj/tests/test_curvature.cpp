#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "vircurv/closed_forms.hpp"
#include "vircurv/curvature.hpp"
#include "vircurv/errors.hpp"

using namespace vircurv;

namespace {

const CentralParams kCubic = CentralParams::cubic();
const Complex kI = Complex::i();

std::vector<CentralParams> param_sets() {
    return {kCubic, {Rational(6), Rational(1, 4)}, {Rational(1), Rational(1)}, {Rational(6), Rational(1, 100)}};
}

oracle::Geometry::Pair realify(const ComplexField& z) { return from_complex(z); }

ComplexField complexify(const oracle::Geometry::Pair& p) {
    // L_0 = f_0 carries the constant terms, which to_complex rejects.
    ComplexField out = to_complex(project_m(p.first), project_m(p.second));
    const Complex h(p.first.cos_coeff(0), p.second.cos_coeff(0));
    if (!h.is_zero()) out.add_term(0, h);
    return out;
}

} // namespace

TEST(ComplexField, ConversionExamples) {
    const TrigField f3 = TrigField::basis(f(3)), g2 = TrigField::basis(g(2));
    EXPECT_EQ(to_complex(f3, TrigField()), Complex(Rational(1, 2)) * L(3) + Complex(Rational(1, 2)) * L(-3));
    // g_2 = (L_2 - L_{-2})/(2i); the second argument is the imaginary part.
    EXPECT_EQ(to_complex(g2, TrigField()), Complex(Rational(0), Rational(-1, 2)) * L(2) + Complex(Rational(0), Rational(1, 2)) * L(-2));
    EXPECT_EQ(to_complex(TrigField(), g2), Complex(Rational(1, 2)) * L(2) + Complex(Rational(-1, 2)) * L(-2));
    EXPECT_THROW(to_complex(TrigField::constant(Rational(1)), TrigField()), DomainError);
    gen::Rng rng(501);
    for (int i = 0; i < 200; ++i) {
        const TrigField re = gen::field(rng, 20), im = gen::field(rng, 20);
        const auto [r, s] = from_complex(to_complex(re, im));
        EXPECT_EQ(r, re);
        EXPECT_EQ(s, im);
    }
}

TEST(ComplexBracket, Examples) {
    EXPECT_EQ(complex_bracket(L(1), L(2)), kI * L(3));
    EXPECT_EQ(complex_bracket(L(-1), L(2)), Complex(Rational(0), Rational(3)) * L(1));
    EXPECT_TRUE(complex_bracket(L(2), L(2)).is_zero());
}

TEST(ComplexBracket, CommutesWithRealification) {
    const oracle::Geometry o{kCubic.c(), kCubic.h()};
    for (int a = -25; a <= 25; ++a)
        for (int b = -25; b <= 25; ++b) {
            if (a == 0 || b == 0) continue;
            const ComplexField expected = complexify(o.bracket(realify(L(a)), realify(L(b))));
            EXPECT_EQ(complex_bracket(L(a), L(b)), expected) << a << "," << b;
            EXPECT_EQ(tables::l_bracket(a, b), expected) << a << "," << b;
        }
}

TEST(NablaTildeComplex, Examples) {
    const Complex l12 = Rational(-2) * lambda_coeff(kCubic, 1, 2);
    EXPECT_EQ(nabla_tilde_complex(kCubic, L(1), L(2)), l12 * kI * L(3));
    EXPECT_EQ(nabla_tilde_complex(kCubic, L(1), L(2)), Complex(Rational(0), Rational(-5, 27)) * L(3));
    EXPECT_TRUE(nabla_tilde_complex(kCubic, L(-2), L(2)).is_zero());
    for (const CentralParams& p : param_sets())
        EXPECT_EQ(nabla_tilde_complex(p, L(-1), L(3)), Complex(Rational(0), Rational(4)) * L(2));
    EXPECT_THROW(nabla_tilde_complex(kCubic, L(0), L(2)), DomainError);
}

TEST(NablaTildeComplex, RoutesAgreeWithOracle) {
    const oracle::Geometry o{kCubic.c(), kCubic.h()};
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            if (a == 0 || b == 0) continue;
            const ComplexField expected = complexify(o.nabla_tilde(realify(L(a)), realify(L(b))));
            EXPECT_EQ(nabla_tilde_complex(kCubic, L(a), L(b), TildeRoute::lemma), expected) << a << "," << b;
            EXPECT_EQ(nabla_tilde_complex(kCubic, L(a), L(b), TildeRoute::realified), expected) << a << "," << b;
        }
    for (int a = -25; a <= 25; ++a)
        for (int b = -25; b <= 25; ++b) {
            if (a == 0 || b == 0) continue;
            EXPECT_EQ(nabla_tilde_complex(kCubic, L(a), L(b), TildeRoute::lemma),
                      nabla_tilde_complex(kCubic, L(a), L(b), TildeRoute::realified));
        }
}

TEST(Curvature, Examples) {
    EXPECT_TRUE(curvature(kCubic, L(1), L(2), L(-2)).is_zero());
    EXPECT_EQ(curvature(kCubic, L(-1), L(2), L(-2)), Complex(Rational(-268, 27)) * L(-1));
    for (int n = 1; n <= 6; ++n) {
        const Rational c = Rational(-6 * n) * lambda_coeff(kCubic, n, n) - Rational(2 * n * n);
        EXPECT_EQ(curvature(kCubic, L(-n), L(n), L(-n)), Complex(c) * L(-n)) << n;
    }
}

TEST(Curvature, MatchesOracleOnSmallTriples) {
    const oracle::Geometry o{kCubic.c(), kCubic.h()};
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                const ComplexField expected = complexify(o.curvature(realify(L(a)), realify(L(b)), realify(L(c))));
                EXPECT_EQ(curvature(kCubic, L(a), L(b), L(c)), expected) << a << "," << b << "," << c;
            }
}

TEST(Curvature, GradingAndAntisymmetry) {
    for (int x = -12; x <= 12; ++x)
        for (int y = -12; y <= 12; ++y)
            for (int z = -12; z <= 12; ++z) {
                if (x == 0 || y == 0 || z == 0) continue;
                const ComplexField r = curvature(kCubic, L(x), L(y), L(z));
                for (const auto& [k, v] : r.terms()) ASSERT_EQ(k, x + y + z) << x << "," << y << "," << z;
                if (std::abs(x) <= 4 && std::abs(y) <= 4 && std::abs(z) <= 4) {
                    EXPECT_EQ(r, -curvature(kCubic, L(y), L(x), L(z)));
                }
            }
}

TEST(Ricci, CoefficientExamples) {
    EXPECT_EQ(ricci_coefficient(kCubic, 1, 2), Rational(-268, 27));
    EXPECT_EQ(ricci_coefficient(kCubic, 1, 1), Rational(-25, 8));
}

TEST(Ricci, CoefficientMatchesCurvatureExtraction) {
    for (long m = 1; m <= 30; ++m)
        for (long n = 1; n <= 30; ++n) {
            ASSERT_EQ(ricci_coefficient_from_curvature(kCubic, m, n), Complex(ricci_coefficient(kCubic, m, n)))
                << m << "," << n;
            if (m != n) {
                ASSERT_TRUE(ricci_plus_coefficient_from_curvature(kCubic, m, n).is_zero()) << m << "," << n;
            }
        }
}

TEST(Ricci, RegularizedExamples) {
    EXPECT_EQ(ricci_regularized(kCubic, 1), Rational(-2));
    EXPECT_EQ(ricci_regularized(kCubic, 2), Rational(-17, 8));
    EXPECT_EQ(ricci_regularized(kCubic, 3), Rational(-58, 27));
    EXPECT_EQ(ricci_closed_form(kCubic, 1), Rational(-2));
    EXPECT_THROW(ricci_closed_form(kCubic, 0), DomainError);
}

TEST(Ricci, RegularizedEqualsClosedFormAcrossParameters) {
    for (const CentralParams& p : param_sets())
        for (long n = 1; n <= 50; ++n) {
            const Rational closed = Rational(-(13 * n * n * n - n)) / (Rational(6) * oracle::theta(p.c(), p.h(), n));
            EXPECT_EQ(ricci_regularized(p, n), closed) << n;
            EXPECT_EQ(ricci_closed_form(p, n), closed) << n;
        }
}

TEST(Ricci, PolynomialIdentity) {
    for (long n = 1; n <= 200; ++n) EXPECT_EQ(oracle::ricci_polynomial(n), Rational(13 * n * n * n - n, 6));
}

TEST(Ricci, PartialExample) {
    const RicciPartial r = ricci_partial(kCubic, 1, 1);
    EXPECT_EQ(r.partial, Rational(-25, 8));
    EXPECT_EQ(r.boundary, Rational(9, 8));
    EXPECT_EQ(r.partial + r.boundary, Rational(-2));
}

TEST(Ricci, Telescoping) {
    for (const CentralParams& p : param_sets())
        for (long n = 1; n <= 10; ++n) {
            const Rational tn = oracle::theta(p.c(), p.h(), n);
            for (long M = n; M <= 60; ++M) {
                const RicciPartial r = ricci_partial(p, n, M);
                Rational direct;
                for (long m = 1; m <= M; ++m) direct += ricci_coefficient(p, m, n);
                Rational boundary;
                for (long m = M - n + 1; m <= M; ++m)
                    boundary += Rational(2 * (m + 2 * n)) * oracle::lambda(p.c(), p.h(), m, n);
                ASSERT_EQ(r.partial, direct / tn);
                ASSERT_EQ(r.boundary, boundary / tn);
                ASSERT_GT(r.boundary, Rational(0));
                ASSERT_EQ(r.partial + r.boundary, ricci_regularized(p, n)) << n << "," << M;
            }
        }
}

TEST(Ricci, ReportRejectsShortCutoffs) {
    const RicciReport r = ricci_report(kCubic, 2, {2, 5, 10});
    EXPECT_TRUE(r.agrees());
    EXPECT_EQ(r.partial.size(), 3u);
    EXPECT_THROW(ricci_report(kCubic, 3, {2}), DomainError);
}
