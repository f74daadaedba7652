#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "vircurv/closed_forms.hpp"
#include "vircurv/connection.hpp"
#include "vircurv/errors.hpp"
#include "vircurv/field_parser.hpp"

using namespace vircurv;

namespace {

TrigField F(int k) { return TrigField::basis(f(k)); }
TrigField G(int k) { return TrigField::basis(g(k)); }

const CentralParams kCubic = CentralParams::cubic();
const CentralParams kSecond(Rational(1), Rational(1));

std::vector<Basis> basis_up_to(int max_mode) {
    std::vector<Basis> out;
    for (int k = 1; k <= max_mode; ++k) {
        out.push_back(f(k));
        out.push_back(g(k));
    }
    return out;
}

} // namespace

TEST(Lambda, Examples) {
    EXPECT_EQ(lambda_coeff(kCubic, 1, 2), Rational(5, 54));
    EXPECT_EQ(lambda_coeff(kCubic, 2, 1), Rational(16, 27));
    EXPECT_EQ(lambda_coeff(kCubic, 1, 1), Rational(3, 16));
    EXPECT_THROW(lambda_coeff(kCubic, 3, -3), DomainError);
}

TEST(Lambda, SwapIdentityOverSignedRange) {
    for (const CentralParams& p : {kCubic, kSecond})
        for (long m = -50; m <= 50; ++m)
            for (long n = -50; n <= 50; ++n) {
                if (m + n == 0) continue;
                const Rational l = lambda_coeff(p, m, n);
                ASSERT_EQ(l, oracle::lambda(p.c(), p.h(), m, n));
                ASSERT_EQ(l - lambda_coeff(p, n, m), Rational(m - n, 2)) << m << "," << n;
            }
    for (long n = 1; n <= 30; ++n)
        EXPECT_EQ(lambda_coeff(kCubic, n, n), Rational(3 * n) * kCubic.theta(n) / (Rational(2) * kCubic.theta(2 * n)));
}

TEST(UTensor, Examples) {
    EXPECT_EQ(u_tensor_oracle(kCubic, F(1), F(1)), Rational(3, 16) * G(2));
    EXPECT_EQ(u_tensor_oracle(kCubic, F(1), F(2), SignConvention::nomizu), -u_tensor_oracle(kCubic, F(1), F(2)));
    EXPECT_EQ(u_tensor(kCubic, F(1), F(2)), Rational(37, 108) * G(3) + Rational(3, 4) * G(1));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(u_tensor(kCubic, F(n), G(n)), -lambda_coeff(kCubic, n, n) * F(2 * n));
        EXPECT_EQ(u_tensor(kCubic, G(n), G(n)), -lambda_coeff(kCubic, n, n) * G(2 * n));
    }
}

TEST(UTensor, ThreeRoutesAgreeWithIndependentOracle) {
    for (const CentralParams& p : {kCubic, kSecond})
        for (const Basis a : basis_up_to(7))
            for (const Basis b : basis_up_to(7)) {
                const TrigField x = TrigField::basis(a), y = TrigField::basis(b);
                const TrigField expected = oracle::u_tensor(p.c(), p.h(), x, y);
                EXPECT_EQ(u_tensor_basis(p, a, b), expected) << a.str() << "," << b.str();
                EXPECT_EQ(u_tensor_closed(p, a, b), expected) << a.str() << "," << b.str();
                EXPECT_EQ(u_tensor_oracle(p, x, y), expected) << a.str() << "," << b.str();
            }
}

TEST(UTensor, RandomFieldsMatchOracleAndAreSymmetric) {
    gen::Rng rng(301);
    for (int i = 0; i < 60; ++i) {
        const TrigField x = gen::field(rng, 9), y = gen::field(rng, 9);
        const TrigField u = u_tensor(kCubic, x, y);
        EXPECT_EQ(u, oracle::u_tensor(kCubic.c(), kCubic.h(), x, y));
        EXPECT_EQ(u, u_tensor(kCubic, y, x));
        EXPECT_EQ(u_tensor(kCubic, x, y, SignConvention::nomizu), -u);
    }
}

TEST(UTensor, ParameterErrors) {
    EXPECT_THROW(u_tensor(CentralParams::fundamental(), F(1), F(2)), ParameterError);
    EXPECT_THROW(u_tensor(kCubic, F(0), F(2)), DomainError);
}

TEST(Nabla, Examples) {
    EXPECT_EQ(nabla(kCubic, F(1), F(2)), Rational(5, 54) * G(3));
    EXPECT_EQ(nabla(kCubic, F(2), F(1)), Rational(16, 27) * G(3) + Rational(3, 2) * G(1));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(nabla(kCubic, F(n), F(n)), lambda_coeff(kCubic, n, n) * G(2 * n));
}

TEST(Nabla, MatchesTableAndDefinition) {
    for (const Basis a : basis_up_to(10))
        for (const Basis b : basis_up_to(10)) {
            const TrigField x = TrigField::basis(a), y = TrigField::basis(b);
            const TrigField direct =
                Rational(1, 2) * project_m(oracle::bracket(x, y)) + oracle::u_tensor(kCubic.c(), kCubic.h(), x, y);
            EXPECT_EQ(nabla(kCubic, x, y), direct) << a.str() << "," << b.str();
            EXPECT_EQ(tables::nabla(kCubic, a, b), direct) << a.str() << "," << b.str();
        }
}

TEST(Torsion, VanishesForBothConventions) {
    EXPECT_TRUE(torsion_nabla(kCubic, F(3), G(7)).is_zero());
    EXPECT_TRUE(torsion_nabla(kCubic, F(1), F(2), SignConvention::nomizu).is_zero());
    gen::Rng rng(302);
    for (int i = 0; i < 100; ++i) {
        const TrigField x = gen::field(rng, 10), y = gen::field(rng, 10);
        EXPECT_TRUE(torsion_nabla(kCubic, x, x).is_zero());
        EXPECT_TRUE(torsion_nabla(kSecond, x, y).is_zero());
        EXPECT_TRUE(torsion_nabla(kSecond, x, y, SignConvention::nomizu).is_zero());
    }
}

TEST(MetricDefect, WitnessAndNomizu) {
    EXPECT_EQ(metric_defect(kCubic, F(1), F(2), G(3)), Rational(5, 4));
    EXPECT_EQ(metric_defect(kCubic, F(1), F(2), G(3), SignConvention::nomizu), Rational(0));
    // Assembled from the independent oracles.
    const auto oracle_nabla = [](const TrigField& x, const TrigField& y) {
        return Rational(1, 2) * project_m(oracle::bracket(x, y)) - oracle::u_tensor(kCubic.c(), kCubic.h(), x, y);
    };
    const auto oracle_defect = [&](const TrigField& x, const TrigField& y, const TrigField& z) {
        return oracle::inner(kCubic.c(), kCubic.h(), oracle_nabla(x, y), z) +
               oracle::inner(kCubic.c(), kCubic.h(), y, oracle_nabla(x, z));
    };
    EXPECT_EQ(oracle_defect(F(1), F(2), G(3)), Rational(0));
    for (int m = 1; m <= 6; ++m)
        EXPECT_EQ(metric_defect(kCubic, F(1), F(m), F(m)),
                  Rational(2) * inner_B(kCubic, nabla(kCubic, F(1), F(m)), F(m)));
    gen::Rng rng(303);
    for (int i = 0; i < 40; ++i) {
        const TrigField x = gen::field(rng, 6, 2), y = gen::field(rng, 6, 2), z = gen::field(rng, 6, 2);
        EXPECT_EQ(metric_defect(kCubic, x, y, z, SignConvention::nomizu), Rational(0));
        EXPECT_EQ(oracle_defect(x, y, z), Rational(0));
    }
}
