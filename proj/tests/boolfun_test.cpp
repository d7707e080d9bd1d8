#include "walshcode/boolfun.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace walshcode;
using testing_helpers::random_function;
using testing_helpers::subfield_norm_trace;
using testing_helpers::table_of;

namespace {

std::vector<std::int32_t> as_vector(const WalshSpectrum& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST(BooleanFunction, Construction) {
    const Field f(3);
    EXPECT_THROW(BooleanFunction(f, BitVec(7)), std::invalid_argument);
    EXPECT_EQ(BooleanFunction::zero(f).weight(), 0u);
    EXPECT_EQ(BooleanFunction::constant_one(f).weight(), 8u);
    const std::vector<std::uint32_t> d{1, 5, 6};
    const auto g = BooleanFunction::from_support(f, d);
    EXPECT_EQ(g.support(), d);
    EXPECT_TRUE(g(5));
    EXPECT_FALSE(g(0));
    const std::vector<std::uint32_t> dup{1, 1};
    EXPECT_THROW(BooleanFunction::from_support(f, dup), std::invalid_argument);
    const std::vector<std::uint32_t> out{8};
    EXPECT_THROW(BooleanFunction::from_support(f, out), std::invalid_argument);
}

TEST(Walsh, FastAndNaiveMatchDefinition) {
    oracle::Rng rng(21);
    for (int m = 1; m <= 8; ++m) {
        const Field field(m);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = random_function(field, rng);
            const auto expected = oracle::walsh(table_of(f), m, field.modulus());
            EXPECT_EQ(as_vector(walsh_transform(f)), expected) << "m = " << m;
            EXPECT_EQ(as_vector(walsh_transform_naive(f)), expected) << "m = " << m;
        }
    }
}

TEST(Walsh, FastMatchesNaiveWithOtherModuli) {
    oracle::Rng rng(4);
    for (auto [m, p] : {std::pair{3, 0b1101u}, {4, 0b11001u}, {5, 0b111101u}, {8, 0x11du}}) {
        const Field field(m, p);
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = random_function(field, rng);
            EXPECT_EQ(walsh_transform(f), walsh_transform_naive(f));
        }
    }
}

TEST(Walsh, NaiveGuard) { EXPECT_THROW(walsh_transform_naive(BooleanFunction::zero(Field(13))), std::invalid_argument); }

TEST(Walsh, ConstantFunctions) {
    for (int m = 1; m <= 10; ++m) {
        const Field field(m);
        const auto z = walsh_transform(BooleanFunction::zero(field));
        const auto o = walsh_transform(BooleanFunction::constant_one(field));
        EXPECT_EQ(z[0], static_cast<std::int32_t>(field.size()));
        EXPECT_EQ(o[0], -static_cast<std::int32_t>(field.size()));
        for (std::uint32_t w = 1; w < field.size(); ++w) {
            ASSERT_EQ(z[w], 0);
            ASSERT_EQ(o[w], 0);
        }
    }
}

TEST(Walsh, ParsevalZeroValueAndInversion) {
    oracle::Rng rng(99);
    for (int m = 1; m <= 14; ++m) {
        const Field field(m);
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = random_function(field, rng);
            const auto s = walsh_transform(f);
            std::int64_t energy = 0;
            for (auto v : s.values()) energy += std::int64_t{v} * v;
            EXPECT_EQ(energy, std::int64_t{1} << (2 * m));
            EXPECT_EQ(s[0], static_cast<std::int32_t>(field.size()) - 2 * static_cast<std::int32_t>(f.weight()));

            // (-1)^f(x) = 2^-m sum_w f^(w) (-1)^Tr(wx), on a handful of points.
            for (int k = 0; k < 4; ++k) {
                const auto x = static_cast<std::uint32_t>(rng.below(field.size()));
                std::int64_t acc = 0;
                for (std::uint32_t w = 0; w < field.size(); ++w) acc += field.trace(field.mul(w, x)) ? -s[w] : s[w];
                EXPECT_EQ(acc, f(x) ? -std::int64_t{field.size()} : std::int64_t{field.size()});
            }
        }
    }
}

TEST(Walsh, HistogramAndMaxAbs) {
    const WalshSpectrum s(2, {4, 0, 0, 0});
    EXPECT_EQ(s.max_abs(), 4);
    EXPECT_EQ(s.histogram(), (std::map<std::int32_t, std::uint64_t>{{0, 3}, {4, 1}}));
    EXPECT_THROW(WalshSpectrum(2, {1, 2, 3}), std::invalid_argument);
}

TEST(Anf, Examples) {
    const Field field(3);
    EXPECT_EQ(anf(BooleanFunction::zero(field)).degree(), -1);
    EXPECT_EQ(anf(BooleanFunction::constant_one(field)).degree(), 0);
    EXPECT_EQ(anf(BooleanFunction::constant_one(field)).monomials(), std::vector<std::uint32_t>{0});
    // x0 x1 + x2
    const auto f = BooleanFunction::from_rule(field, [](std::uint32_t x) {
        return (((x & 1u) && (x & 2u)) != 0) != ((x & 4u) != 0);
    });
    const auto a = anf(f);
    EXPECT_EQ(a.degree(), 2);
    EXPECT_EQ(a.monomials(), (std::vector<std::uint32_t>{3, 4}));
    // The trace is linear: its monomials are the coordinates x_i with Tr(alpha^i) = 1.
    const auto tr = anf(BooleanFunction::from_rule(field, [&](std::uint32_t x) { return field.trace(x) == 1; }));
    EXPECT_EQ(tr.degree(), 1);
    EXPECT_EQ(tr.monomials(), std::vector<std::uint32_t>{1});  // Tr(1) = 1, Tr(alpha) = Tr(alpha^2) = 0
}

TEST(Anf, RoundTripAndBruteForceCoefficients) {
    oracle::Rng rng(8);
    for (int m = 1; m <= 10; ++m) {
        const Field field(m);
        const auto f = random_function(field, rng);
        const auto a = anf(f);
        EXPECT_EQ(a.truth_table(), f.table());
        for (std::uint32_t x = 0; x < field.size(); ++x) ASSERT_EQ(a.evaluate(x), f(x));
        if (m <= 6) {
            // Coefficient of x^u is the XOR of f over the subcube below u.
            for (std::uint32_t u = 0; u < field.size(); ++u) {
                bool c = false;
                for (std::uint32_t x = 0; x < field.size(); ++x) {
                    if ((x & ~u) == 0) c ^= f(x);
                }
                ASSERT_EQ(a.coefficients().get(u), c);
            }
        }
    }
}

TEST(Nonlinearity, MatchesDistanceToAffineFunctions) {
    oracle::Rng rng(12);
    for (int m = 1; m <= 7; ++m) {
        const Field field(m);
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = random_function(field, rng);
            std::uint32_t best = field.size();
            for (std::uint32_t a = 0; a < field.size(); ++a) {
                std::uint32_t dist = 0;
                for (std::uint32_t x = 0; x < field.size(); ++x) {
                    dist += f(x) != (oracle::trace(oracle::mul(a, x, field.modulus()), m, field.modulus()) == 1);
                }
                best = std::min({best, dist, field.size() - dist});
            }
            EXPECT_EQ(nonlinearity(f), best);
        }
    }
}

TEST(Bent, LiteralAbsoluteTraceOfNormIsIdenticallyZero) {
    // Tr(x^(2^h+1)) over GF(2^(2h)) vanishes: x^(2^h+1) lies in GF(2^h), whose
    // elements have even absolute trace in a degree-2 extension.
    for (int m : {2, 4, 6, 8, 10}) {
        const Field field(m);
        const std::uint64_t e = (std::uint64_t{1} << (m / 2)) + 1;
        const auto f = BooleanFunction::from_rule(field, [&](std::uint32_t x) { return field.trace(field.pow(x, e)) == 1; });
        EXPECT_EQ(f.weight(), 0u) << "m = " << m;
    }
}

TEST(Bent, SubfieldTraceOfNormExamples) {
    const Field f4(4);
    const auto g4 = subfield_norm_trace(f4);
    const std::vector<std::int32_t> expected4{-4, -4, 4, 4, 4, 4, 4, 4, -4, 4, -4, 4, -4, 4, 4, -4};
    EXPECT_EQ(as_vector(walsh_transform(g4)), expected4);
    EXPECT_EQ(oracle::walsh(table_of(g4), 4, f4.modulus()), expected4);
    EXPECT_EQ(g4.weight(), 10u);
    EXPECT_EQ(anf(g4).degree(), 2);
    EXPECT_EQ(nonlinearity(g4), 6u);

    const Field f6(6);
    const auto g6 = subfield_norm_trace(f6);
    const auto s6 = walsh_transform(g6);
    for (auto v : s6.values()) EXPECT_EQ(std::abs(v), 8);
    EXPECT_EQ(g6.weight(), 36u);
    EXPECT_EQ(anf(g6).degree(), 2);
    EXPECT_EQ(nonlinearity(g6), 28u);
}

TEST(Bent, SubfieldTraceOfNormIsBentUpTo16) {
    for (int m = 2; m <= 16; m += 2) {
        const Field field(m);
        const auto g = subfield_norm_trace(field);
        const auto c = classify(g);
        EXPECT_TRUE(c.bent) << "m = " << m;
        EXPECT_EQ(c.label, SpectralClass::bent);
        EXPECT_EQ(c.amplitude, 1 << (m / 2));
        EXPECT_EQ(nonlinearity(g), (1u << (m - 1)) - (1u << (m / 2 - 1)));
        EXPECT_EQ(anf(g).degree(), 2);
    }
}

TEST(Classify, Labels) {
    const Field f4(4);
    const auto lin = BooleanFunction::from_rule(f4, [&](std::uint32_t x) { return f4.trace(f4.mul(6, x)) == 1; });
    auto c = classify(lin);
    EXPECT_EQ(c.label, SpectralClass::affine);
    EXPECT_TRUE(c.affine && c.plateaued && c.balanced);
    EXPECT_FALSE(c.bent);
    EXPECT_EQ(c.amplitude, 16);

    c = classify(BooleanFunction::constant_one(f4));
    EXPECT_EQ(c.label, SpectralClass::affine);
    EXPECT_FALSE(c.balanced);

    c = classify(subfield_norm_trace(f4));
    EXPECT_EQ(c.label, SpectralClass::bent);
    EXPECT_TRUE(c.plateaued);
    EXPECT_EQ(c.histogram, (std::map<std::int32_t, std::uint64_t>{{-4, 6}, {4, 10}}));

    // x0 x1 + x2 on GF(2)^3: semi-bent, balanced.
    const Field f3(3);
    c = classify(BooleanFunction::from_rule(f3, [](std::uint32_t x) {
        return (((x & 1u) && (x & 2u)) != 0) != ((x & 4u) != 0);
    }));
    EXPECT_EQ(c.label, SpectralClass::plateaued);
    EXPECT_EQ(c.amplitude, 4);
    EXPECT_TRUE(c.balanced);

    // Balanced but not plateaued.
    const std::vector<std::uint32_t> d{1, 2, 3, 4, 8, 12, 7, 15};
    c = classify(BooleanFunction::from_support(f4, d));
    EXPECT_TRUE(c.balanced);
    EXPECT_FALSE(c.plateaued);
    EXPECT_EQ(c.label, SpectralClass::balanced);

    const std::vector<std::uint32_t> g{1};
    c = classify(BooleanFunction::from_support(f4, g));
    EXPECT_EQ(c.label, SpectralClass::general);
    EXPECT_EQ(c.amplitude, 0);

    EXPECT_EQ(to_string(SpectralClass::plateaued), "plateaued");
}

TEST(Classify, BentCountForFourVariables) {
    // 896 of the 2^16 functions of four variables are bent.
    const Field f4(4);
    std::size_t bent = 0;
    for (std::uint32_t t = 0; t < (1u << 16); ++t) {
        if (std::popcount(t) != 6 && std::popcount(t) != 10) continue;
        const auto f = BooleanFunction::from_rule(f4, [&](std::uint32_t x) { return (t >> x) & 1u; });
        bent += classify(f).bent;
    }
    EXPECT_EQ(bent, 896u);
}
