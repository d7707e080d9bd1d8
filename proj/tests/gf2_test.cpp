#include "walshcode/gf2.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"

using walshcode::Basis;
using walshcode::Element;
using walshcode::Field;
using walshcode::SubfieldEmbedding;

TEST(Field, DefaultModuliAreLeastMinimalWeightIrreducibles) {
    for (int m = 1; m <= Field::kMaxDegree; ++m) {
        EXPECT_EQ(Field::default_modulus(m), oracle::least_minimal_weight_irreducible(m)) << "m = " << m;
    }
}

TEST(Field, Construction) {
    EXPECT_EQ(Field(3).modulus(), 0b1011u);
    EXPECT_EQ(Field(1).modulus(), 0b10u);
    EXPECT_NO_THROW(Field(1, 0b11));
    EXPECT_NO_THROW(Field(3, 0b1101));
    EXPECT_THROW(Field(3, 0b1111), std::invalid_argument);   // (x + 1)(x^2 + 1)
    EXPECT_THROW(Field(4, 0b10101), std::invalid_argument);  // (x^2 + x + 1)^2
    EXPECT_THROW(Field(3, 0b10011), std::invalid_argument);  // degree 4
    EXPECT_THROW(Field(0), std::invalid_argument);
    EXPECT_THROW(Field(21), std::invalid_argument);
}

TEST(Field, IrreducibilityAgreesWithTrialDivision) {
    for (std::uint32_t p = 0b1000; p < (1u << 10); ++p) {
        const int m = static_cast<int>(std::bit_width(p)) - 1;
        bool accepted = true;
        try {
            Field f(m, p);
        } catch (const std::invalid_argument&) {
            accepted = false;
        }
        EXPECT_EQ(accepted, oracle::irreducible(p)) << std::hex << p;
    }
}

TEST(Field, MultiplicationExamples) {
    const Field gf8(3);
    EXPECT_EQ(gf8.mul(2, 4), 3u);  // alpha * alpha^2 = alpha + 1
    for (std::uint32_t x = 0; x < 8; ++x) {
        EXPECT_EQ(gf8.mul(1, x), x);
        EXPECT_EQ(gf8.mul(0, x), 0u);
    }
}

TEST(Field, MultiplicationMatchesOracle) {
    for (int m = 1; m <= 7; ++m) {
        const Field f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            for (std::uint32_t b = 0; b < f.size(); ++b) ASSERT_EQ(f.mul(a, b), oracle::mul(a, b, f.modulus()));
        }
    }
    oracle::Rng rng(7);
    for (int m = 8; m <= 20; ++m) {
        const Field f(m);
        for (int i = 0; i < 2000; ++i) {
            const auto a = static_cast<std::uint32_t>(rng.below(f.size()));
            const auto b = static_cast<std::uint32_t>(rng.below(f.size()));
            ASSERT_EQ(f.mul(a, b), oracle::mul(a, b, f.modulus()));
        }
    }
}

TEST(Field, InverseAndPower) {
    const Field gf8(3);
    EXPECT_EQ(gf8.inv(2), 5u);  // exhaustive search gives alpha^6 = alpha^2 + 1
    EXPECT_EQ(gf8.pow(2, 6), 5u);
    EXPECT_THROW(gf8.inv(0), std::domain_error);
    for (int m : {1, 2, 5, 10, 13}) {
        const Field f(m);
        for (std::uint32_t a = 1; a < f.size(); ++a) {
            ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
            ASSERT_EQ(f.pow(a, 0), 1u);
            ASSERT_EQ(f.pow(a, f.size() - 1), 1u);
        }
    }
}

TEST(Field, Order) {
    const Field gf16(4);
    EXPECT_EQ(gf16.order(1), 1u);
    EXPECT_EQ(gf16.order(2), 15u);
    for (std::uint32_t a = 1; a < 16; ++a) {
        std::uint64_t brute = 1;
        while (oracle::power(a, brute, gf16.modulus()) != 1) ++brute;
        EXPECT_EQ(gf16.order(a), brute);
    }
}

TEST(Trace, Examples) {
    for (int m = 1; m <= Field::kMaxDegree; ++m) {
        const Field f(m);
        EXPECT_EQ(f.trace(0), 0);
        EXPECT_EQ(f.trace(1), m % 2);
    }
    EXPECT_EQ(Field(3).trace(2), 0);
}

TEST(Trace, MatchesOracleAndIsLinear) {
    for (int m = 1; m <= 10; ++m) {
        const Field f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            ASSERT_EQ(f.trace(a), oracle::trace(a, m, f.modulus()));
        }
    }
    oracle::Rng rng(3);
    for (int m = 11; m <= 20; ++m) {
        const Field f(m);
        for (int i = 0; i < 500; ++i) {
            const auto a = static_cast<std::uint32_t>(rng.below(f.size()));
            const auto b = static_cast<std::uint32_t>(rng.below(f.size()));
            ASSERT_EQ(f.trace(a), oracle::trace(a, m, f.modulus()));
            ASSERT_EQ(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
        }
    }
}

TEST(Trace, FormIsNondegenerate) {
    for (int m = 1; m <= 12; ++m) {
        const Field f(m);
        for (std::uint32_t a = 1; a < f.size(); ++a) {
            bool found = false;
            for (std::uint32_t b = 1; b < f.size() && !found; ++b) found = f.trace(f.mul(a, b)) == 1;
            ASSERT_TRUE(found) << "m = " << m << ", a = " << a;
        }
    }
}

TEST(Trace, EveryLinearFunctionalIsATraceForm) {
    for (int m = 1; m <= 8; ++m) {
        const Field f(m);
        std::set<std::vector<bool>> tables;
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            std::vector<bool> t(f.size());
            for (std::uint32_t x = 0; x < f.size(); ++x) t[x] = f.trace(f.mul(a, x));
            for (std::uint32_t x = 0; x < f.size(); x += 3) {
                for (std::uint32_t y = 0; y < f.size(); y += 5) ASSERT_EQ(t[x ^ y], t[x] != t[y]);
            }
            tables.insert(t);
        }
        // 2^m distinct linear functionals: all of them.
        EXPECT_EQ(tables.size(), f.size());
    }
}

TEST(Element, CheckedArithmetic) {
    const Field gf8(3);
    const Element a = gf8.element(2);
    EXPECT_EQ((a * a).value(), 4u);
    EXPECT_EQ((a + gf8.one()).value(), 3u);
    EXPECT_EQ(a.inv().value(), 5u);
    EXPECT_EQ(a.pow(7), gf8.one());
    EXPECT_THROW(gf8.element(8), std::invalid_argument);
    EXPECT_THROW(a * Field(3, 0b1101).element(2), std::invalid_argument);
    EXPECT_THROW(a + Field(4).element(2), std::invalid_argument);
    EXPECT_THROW(gf8.zero().inv(), std::domain_error);
    EXPECT_LT(gf8.element(3), gf8.element(5));
}

TEST(Subfield, EmbeddingIsAFieldHomomorphism) {
    for (auto [m, h] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 4}, {2, 1}, {12, 4}, {12, 6}}) {
        const SubfieldEmbedding emb(Field(m), h);
        const Field& s = emb.small();
        const Field& b = emb.big();
        EXPECT_EQ(emb.embed(1), 1u);
        for (std::uint32_t x = 0; x < s.size(); ++x) {
            EXPECT_TRUE(emb.in_subfield(emb.embed(x)));
            EXPECT_EQ(emb.project(emb.embed(x)), x);
            for (std::uint32_t y = 0; y < s.size(); y += 3) {
                ASSERT_EQ(emb.embed(s.mul(x, y)), b.mul(emb.embed(x), emb.embed(y)));
            }
        }
    }
}

TEST(Subfield, ProjectRejectsOutsideElements) {
    const SubfieldEmbedding emb(Field(4), 2);
    EXPECT_FALSE(emb.in_subfield(2));
    EXPECT_THROW(emb.project(2), std::domain_error);
    EXPECT_THROW(SubfieldEmbedding(Field(6), 4), std::invalid_argument);
}

TEST(RelativeTrace, Examples) {
    const Field gf16(4);
    EXPECT_EQ(walshcode::relative_trace(gf16.zero(), 2).value(), 0u);
    EXPECT_EQ(walshcode::relative_trace(gf16.zero(), 2).field(), Field(2));
    for (std::uint32_t a = 0; a < 16; ++a) EXPECT_EQ(walshcode::relative_trace(gf16.element(a), 4), gf16.element(a));
    EXPECT_THROW(walshcode::relative_trace(gf16.one(), 3), std::invalid_argument);
}

TEST(RelativeTrace, TowerIdentity) {
    for (int m = 2; m <= 12; ++m) {
        const Field big(m);
        for (int h = 1; h < m; ++h) {
            if (m % h != 0) continue;
            const Field small(h);
            for (std::uint32_t a = 0; a < big.size(); ++a) {
                const Element r = walshcode::relative_trace(big.element(a), h);
                ASSERT_EQ(r.field(), small);
                ASSERT_EQ(big.trace(a), small.trace(r.value())) << "m=" << m << " h=" << h << " a=" << a;
            }
        }
    }
}

TEST(Basis, RejectsDependentElements) {
    const Field gf8(3);
    EXPECT_THROW(Basis(gf8, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(Basis(gf8, {1, 2}), std::invalid_argument);
    EXPECT_THROW(Basis(gf8, {1, 2, 8}), std::invalid_argument);
}

TEST(Basis, DualBasisExamples) {
    const Basis one = Basis::polynomial(Field(1));
    EXPECT_EQ(std::vector<std::uint32_t>(one.dual_elements().begin(), one.dual_elements().end()),
              std::vector<std::uint32_t>{1});

    const Field gf8(3);
    const Basis b = Basis::polynomial(gf8);
    const Basis d = walshcode::dual_basis(b);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(oracle::trace(oracle::mul(b[i], d[j], gf8.modulus()), 3, gf8.modulus()), i == j ? 1 : 0);
        }
    }
}

TEST(Basis, DualIsAnInvolutionOnRandomBases) {
    oracle::Rng rng(11);
    for (int m = 1; m <= 16; ++m) {
        const Field f(m);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint32_t> elems;
            while (true) {
                elems.clear();
                for (int i = 0; i < m; ++i) elems.push_back(static_cast<std::uint32_t>(rng.below(f.size())));
                try {
                    Basis probe(f, elems);
                    break;
                } catch (const std::invalid_argument&) {
                }
            }
            const Basis b(f, elems);
            const Basis d = b.dual();
            for (std::size_t i = 0; i < b.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) ASSERT_EQ(f.trace(f.mul(b[i], d[j])), i == j ? 1 : 0);
            }
            EXPECT_EQ(d.dual(), b);
        }
    }
}

TEST(Basis, Coordinates) {
    const Field f(10);
    const Basis b = Basis::polynomial(f);
    EXPECT_EQ(b.coordinates(0), 0u);
    for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(b.coordinates(b[j]), 1u << j);
    oracle::Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto x = static_cast<std::uint32_t>(rng.below(f.size()));
        EXPECT_EQ(b.recombine(b.coordinates(x)), x);
    }
    const auto bits = walshcode::coordinates(f.element(0b101), b);
    EXPECT_EQ(bits, (std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Basis, CoordinatesAreABijection) {
    for (int m = 1; m <= 8; ++m) {
        const Field f(m);
        const Basis b(f, [&] {
            std::vector<std::uint32_t> e;
            // powers of alpha + 1, which generates the field as well as alpha does
            const std::uint32_t beta = m == 1 ? 1 : 3;
            for (int i = 0; i < m; ++i) e.push_back(f.pow(beta, static_cast<std::uint64_t>(i)));
            return e;
        }());
        std::set<std::uint32_t> seen;
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const auto c = b.coordinates(x);
            EXPECT_EQ(b.recombine(c), x);
            seen.insert(c);
        }
        EXPECT_EQ(seen.size(), f.size());
    }
}
