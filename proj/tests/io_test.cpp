#include "walshcode/io.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace walshcode;
using namespace walshcode::io;

TEST(Hex, Words) {
    EXPECT_EQ(to_hex(0), "0");
    EXPECT_EQ(to_hex(0x11b), "11b");
    EXPECT_EQ(parse_hex("0x1F"), 31u);
    EXPECT_EQ(parse_hex("b"), 11u);
    EXPECT_THROW(parse_hex(""), std::invalid_argument);
    EXPECT_THROW(parse_hex("0x"), std::invalid_argument);
    EXPECT_THROW(parse_hex("12g"), std::invalid_argument);
}

TEST(Hex, TruthTables) {
    BitVec t(8);
    t.set(0);
    t.set(5);
    EXPECT_EQ(truth_table_hex(t), "12");
    EXPECT_EQ(truth_table_from_hex("12", 8), t);
    BitVec two(2);
    two.set(1);
    EXPECT_EQ(truth_table_hex(two), "2");
    EXPECT_THROW(truth_table_from_hex("4", 2), std::invalid_argument);
    EXPECT_THROW(truth_table_from_hex("123", 8), std::invalid_argument);

    oracle::Rng rng(1);
    for (int m = 1; m <= 10; ++m) {
        const auto f = testing_helpers::random_function(Field(m), rng);
        EXPECT_EQ(truth_table_from_hex(truth_table_hex(f.table()), f.table().size()), f.table());
    }
}

TEST(Json, DefiningSetRoundTrip) {
    const DefiningSet d(Field(4, 0b11001), {1, 8, 12});
    const auto j = to_json(d);
    EXPECT_EQ(j.dump(), R"({"m":4,"modulus":"19","elements":["1","8","c"]})");
    EXPECT_EQ(defining_set_from_json(j), d);
    EXPECT_EQ(defining_set_from_json(Json::parse(R"({"m":3,"elements":["0x7"]})")), DefiningSet(Field(3), {7}));
    EXPECT_THROW(defining_set_from_json(Json::parse(R"({"m":3})")), std::invalid_argument);
    EXPECT_THROW(defining_set_from_json(Json::parse(R"({"m":3,"elements":[]})")), std::invalid_argument);
    EXPECT_THROW(defining_set_from_json(Json::parse(R"({"m":3,"elements":["8"]})")), std::invalid_argument);
    EXPECT_THROW(defining_set_from_json(Json::parse(R"({"m":3,"modulus":"f","elements":["1"]})")), std::invalid_argument);
}

TEST(Json, Distributions) {
    WeightDistribution d(7);
    d.add(0);
    d.add(4, 7);
    EXPECT_EQ(to_json(d).dump(), R"({"0":1,"4":7})");
    const std::map<std::int32_t, std::uint64_t> h{{-4, 6}, {4, 10}};
    EXPECT_EQ(to_json(h).dump(), R"({"-4":6,"4":10})");
    EXPECT_EQ(spectrum_to_json(WalshSpectrum(1, {2, 0})).dump(), "[2,0]");
}

TEST(Text, GeneratorRoundTrip) {
    const auto c = BinaryCode::from_strings(std::vector<std::string>{"1010101", "0110011", "0001111"});
    const auto text = generator_to_text(c);
    EXPECT_EQ(text, "1010101\n0110011\n0001111\n");
    const auto back = generator_from_text("# simplex\n\n" + text + "  \n");
    EXPECT_EQ(testing_helpers::row_strings(back), testing_helpers::row_strings(c));
    EXPECT_EQ(generator_from_text("  101\r\n011 \n").dimension(), 2u);
    EXPECT_THROW(generator_from_text("# nothing\n"), std::invalid_argument);
    EXPECT_THROW(generator_from_text("101\n01\n"), std::invalid_argument);
    EXPECT_THROW(generator_from_text("1x1\n"), std::invalid_argument);
}
