#ifndef WALSHCODE_IO_HPP
#define WALSHCODE_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "walshcode/bitvec.hpp"
#include "walshcode/boolfun.hpp"
#include "walshcode/defining_set.hpp"
#include "walshcode/gf2.hpp"
#include "walshcode/linear_code.hpp"

namespace walshcode::io {

using Json = nlohmann::ordered_json;

/// Lowercase hex without prefix ("b" for 11, "0" for zero).
std::string to_hex(std::uint32_t value);
/// Accepts an optional "0x" prefix; throws std::invalid_argument.
std::uint32_t parse_hex(std::string_view text);

/// Little-endian nibbles: hex digit p holds bits 4p..4p+3 of the table,
/// bit 4p+b being (digit >> b) & 1.
std::string truth_table_hex(const BitVec& table);
BitVec truth_table_from_hex(std::string_view hex, std::size_t bits);

Json to_json(const Field& field);
/// {"m": .., "modulus": hex, "elements": [hex, ...]}
Json to_json(const DefiningSet& set);
/// Throws std::invalid_argument on malformed input or an empty element list.
DefiningSet defining_set_from_json(const Json& json);

/// Nonzero entries only, ascending weight: {"0": 1, "4": 7}.
Json to_json(const WeightDistribution& dist);
Json to_json(const SpectralWeightReport& report);
Json to_json(const std::map<std::int32_t, std::uint64_t>& histogram);
Json spectrum_to_json(const WalshSpectrum& spectrum);

/// One row per line, '0'/'1' characters.
std::string generator_to_text(const BinaryCode& code);
/// Ignores blank lines and lines starting with '#'. Throws
/// std::invalid_argument for an empty or ragged matrix.
BinaryCode generator_from_text(std::string_view text);

}  // namespace walshcode::io

#endif  // WALSHCODE_IO_HPP
