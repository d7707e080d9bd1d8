#include "walshcode/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace walshcode::io {

std::string to_hex(std::uint32_t value) {
    char buf[16];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, 16);
    return std::string(buf, ptr);
}

std::uint32_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a hex word: '" + std::string(text) + "'");
    }
    return value;
}

std::string truth_table_hex(const BitVec& table) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out((table.size() + 3) / 4, '0');
    for (std::size_t p = 0; p < out.size(); ++p) {
        unsigned nibble = 0;
        for (unsigned b = 0; b < 4 && 4 * p + b < table.size(); ++b) nibble |= static_cast<unsigned>(table.get(4 * p + b)) << b;
        out[p] = kDigits[nibble];
    }
    return out;
}

BitVec truth_table_from_hex(std::string_view hex, std::size_t bits) {
    if (hex.size() != (bits + 3) / 4) throw std::invalid_argument("truth-table hex has the wrong length");
    BitVec table(bits);
    for (std::size_t p = 0; p < hex.size(); ++p) {
        const unsigned nibble = parse_hex(hex.substr(p, 1));
        for (unsigned b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1u)) continue;
            if (4 * p + b >= bits) throw std::invalid_argument("truth-table hex sets bits past the end");
            table.set(4 * p + b);
        }
    }
    return table;
}

Json to_json(const Field& field) { return Json{{"m", field.degree()}, {"modulus", to_hex(field.modulus())}}; }

Json to_json(const DefiningSet& set) {
    Json elements = Json::array();
    for (auto d : set.elements()) elements.push_back(to_hex(d));
    return Json{{"m", set.field().degree()}, {"modulus", to_hex(set.field().modulus())}, {"elements", elements}};
}

DefiningSet defining_set_from_json(const Json& json) {
    try {
        const int m = json.at("m").get<int>();
        const Field field = json.contains("modulus") ? Field(m, parse_hex(json.at("modulus").get<std::string>())) : Field(m);
        std::vector<std::uint32_t> elements;
        for (const auto& e : json.at("elements")) elements.push_back(parse_hex(e.get<std::string>()));
        return DefiningSet(field, std::move(elements));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed defining set: ") + e.what());
    }
}

Json to_json(const WeightDistribution& dist) {
    Json out = Json::object();
    for (std::size_t w = 0; w <= dist.length(); ++w) {
        if (dist[w] != 0) out[std::to_string(w)] = dist[w];
    }
    return out;
}

Json to_json(const SpectralWeightReport& report) {
    return Json{{"n_f", report.support_size},
                {"e", report.zero_multiplicity},
                {"dimension", report.dimension},
                {"weights", to_json(report.weights)}};
}

Json to_json(const std::map<std::int32_t, std::uint64_t>& histogram) {
    Json out = Json::object();
    for (const auto& [value, count] : histogram) out[std::to_string(value)] = count;
    return out;
}

Json spectrum_to_json(const WalshSpectrum& spectrum) {
    Json out = Json::array();
    for (auto v : spectrum.values()) out.push_back(v);
    return out;
}

std::string generator_to_text(const BinaryCode& code) {
    std::string out;
    for (const auto& r : code.rows()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

BinaryCode generator_from_text(std::string_view text) {
    std::vector<BitVec> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        rows.push_back(BitVec::from_string(std::string_view(line).substr(start)));
    }
    return BinaryCode(std::move(rows));
}

}  // namespace walshcode::io
