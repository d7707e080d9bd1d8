#ifndef WALSHCODE_TESTS_HELPERS_HPP
#define WALSHCODE_TESTS_HELPERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "walshcode/boolfun.hpp"
#include "walshcode/gf2.hpp"
#include "walshcode/linear_code.hpp"

namespace testing_helpers {

inline std::map<std::size_t, std::uint64_t> as_map(const walshcode::WeightDistribution& d) {
    std::map<std::size_t, std::uint64_t> out;
    for (std::size_t w = 0; w <= d.length(); ++w) {
        if (d[w] != 0) out[w] = d[w];
    }
    return out;
}

inline std::vector<std::string> row_strings(const walshcode::BinaryCode& c) {
    std::vector<std::string> out;
    for (const auto& r : c.rows()) out.push_back(r.to_string());
    return out;
}

inline std::vector<int> table_of(const walshcode::BooleanFunction& f) {
    std::vector<int> t(f.field().size());
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = f(x) ? 1 : 0;
    return t;
}

inline walshcode::BooleanFunction random_function(const walshcode::Field& field, oracle::Rng& rng) {
    walshcode::BitVec t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x) t.set(x, rng.coin());
    return walshcode::BooleanFunction(field, std::move(t));
}

/// Tr_{2^h/2}(x^(2^h + 1)) on GF(2^(2h)); the power lies in the subfield, so
/// the subfield trace is taken by squaring h times inside the big field.
inline walshcode::BooleanFunction subfield_norm_trace(const walshcode::Field& field) {
    const int h = field.degree() / 2;
    return walshcode::BooleanFunction::from_rule(field, [&](std::uint32_t x) {
        std::uint32_t y = field.pow(x, (std::uint64_t{1} << h) + 1);
        std::uint32_t acc = 0;
        for (int i = 0; i < h; ++i) {
            acc ^= y;
            y = field.square(y);
        }
        return acc == 1;
    });
}

inline walshcode::BinaryCode random_code(oracle::Rng& rng, std::size_t rows, std::size_t n) {
    std::vector<walshcode::BitVec> out;
    for (std::size_t i = 0; i < rows; ++i) {
        walshcode::BitVec r(n);
        for (std::size_t j = 0; j < n; ++j) r.set(j, rng.coin());
        out.push_back(std::move(r));
    }
    return walshcode::BinaryCode(std::move(out));
}

}  // namespace testing_helpers

#endif  // WALSHCODE_TESTS_HELPERS_HPP
