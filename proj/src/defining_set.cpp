#include "walshcode/defining_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace walshcode {

DefiningSet::DefiningSet(const Field& field, std::vector<std::uint32_t> elements)
    : field_(field), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("a defining set needs at least one element");
    for (auto d : elements_) {
        if (!field_.contains(d)) throw std::invalid_argument("defining-set element outside GF(2^" + std::to_string(field_.degree()) + ")");
    }
    std::vector<std::uint32_t> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    has_duplicates_ = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

DefiningSet DefiningSet::from_support(const BooleanFunction& f) { return DefiningSet(f.field(), f.support()); }

bool DefiningSet::contains_zero() const noexcept {
    return std::find(elements_.begin(), elements_.end(), 0u) != elements_.end();
}

BinaryCode code_from_defining_set(const DefiningSet& set) {
    const Field& field = set.field();
    const auto m = static_cast<std::size_t>(field.degree());
    std::vector<BitVec> rows(m, BitVec(set.size()));
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint32_t alpha_i = std::uint32_t{1} << i;
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (field.trace(field.mul(alpha_i, set[j]))) rows[i].set(j);
        }
    }
    return BinaryCode(std::move(rows));
}

std::size_t codeword_weight(const DefiningSet& set, std::uint32_t x) {
    const Field& field = set.field();
    if (!field.contains(x)) throw std::invalid_argument("codeword index outside the field");
    long character_sum = 0;
    for (auto d : set.elements()) character_sum += field.trace(field.mul(x, d)) ? -1 : 1;
    return static_cast<std::size_t>((static_cast<long>(set.size()) - character_sum) / 2);
}

DefiningSet extract_defining_set(const BinaryCode& code, const std::optional<Basis>& basis) {
    const std::size_t k = code.dimension();
    if (k == 0) throw std::invalid_argument("the zero code has no defining set");
    if (k > static_cast<std::size_t>(Field::kMaxDegree)) {
        throw std::invalid_argument("code dimension " + std::to_string(k) + " exceeds the field cap of 20");
    }
    const Field field(static_cast<int>(k));
    if (basis && !(basis->field() == field)) throw std::invalid_argument("basis belongs to a different field");
    const Basis chosen = basis ? *basis : Basis::polynomial(field);
    const auto beta = chosen.dual_elements();

    const auto& g = code.echelon().rows;
    std::vector<std::uint32_t> elements(code.length(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < code.length(); ++j) {
            if (g[i].get(j)) elements[j] ^= beta[i];
        }
    }
    return DefiningSet(field, std::move(elements));
}

BooleanFunction boolean_from_code(const BinaryCode& code, const std::optional<Basis>& basis) {
    auto check = check_projectivity(code);
    if (!check.projective) throw NotProjectiveError(std::move(check));
    const DefiningSet set = extract_defining_set(code, basis);
    return BooleanFunction::from_support(set.field(), set.elements());
}

SpectralWeightReport spectral_weight_distribution(const BooleanFunction& f) {
    return spectral_weight_distribution(f, walsh_transform(f));
}

SpectralWeightReport spectral_weight_distribution(const BooleanFunction& f, const WalshSpectrum& spectrum) {
    const std::size_t n_f = f.weight();
    if (n_f == 0) throw std::invalid_argument("the support of f is empty");
    const int m = f.num_variables();

    WeightDistribution multiset(n_f);
    multiset.add(0);
    for (std::uint32_t w = 1; w < spectrum.size(); ++w) {
        const long value = 2 * static_cast<long>(n_f) + spectrum[w];
        if (value < 0 || value % 4 != 0 || static_cast<std::size_t>(value / 4) > n_f) {
            throw std::logic_error("(2 n_f + f^(w)) / 4 is not a weight at w = " + std::to_string(w));
        }
        multiset.add(static_cast<std::size_t>(value / 4));
    }

    const std::uint64_t e = multiset[0];
    if (!std::has_single_bit(e)) throw std::logic_error("zero multiplicity " + std::to_string(e) + " is not a power of two");

    SpectralWeightReport report;
    report.support_size = n_f;
    report.zero_multiplicity = e;
    report.dimension = m - std::countr_zero(e);
    report.weights = WeightDistribution(n_f);
    for (std::size_t w = 0; w <= n_f; ++w) {
        if (multiset[w] % e != 0) {
            throw std::logic_error("multiplicity of weight " + std::to_string(w) + " is not divisible by e = " +
                                   std::to_string(e));
        }
        report.weights.add(w, multiset[w] / e);
    }
    return report;
}

bool verify_spectral_weights(const BooleanFunction& f, std::size_t max_k) {
    const auto report = spectral_weight_distribution(f);
    const BinaryCode code = code_from_defining_set(DefiningSet::from_support(f));
    return report.weights == weight_distribution_bruteforce(code, max_k) &&
           static_cast<std::size_t>(report.dimension) == code.dimension();
}

BivariateView bivariate_view(const DefiningSet& set, int h) {
    const Field& field = set.field();
    if (h < 1 || field.degree() != 2 * h) {
        throw std::invalid_argument("bivariate view needs m = 2h, got m = " + std::to_string(field.degree()) +
                                    ", h = " + std::to_string(h));
    }
    const SubfieldEmbedding sub(field, h);
    const auto rel = [&](std::uint32_t a) { return relative_trace_word(field, a, h); };

    const std::uint32_t u1 = 1;
    std::uint32_t u2 = 2;
    while (sub.in_subfield(u2)) ++u2;

    // Gram matrix over the subfield and its inverse (characteristic 2).
    const std::uint32_t g11 = rel(field.mul(u1, u1));
    const std::uint32_t g12 = rel(field.mul(u1, u2));
    const std::uint32_t g22 = rel(field.mul(u2, u2));
    const std::uint32_t det = field.mul(g11, g22) ^ field.mul(g12, g12);
    const std::uint32_t det_inv = field.inv(det);
    const std::uint32_t i11 = field.mul(det_inv, g22);
    const std::uint32_t i12 = field.mul(det_inv, g12);
    const std::uint32_t i22 = field.mul(det_inv, g11);
    const std::uint32_t v1 = field.mul(i11, u1) ^ field.mul(i12, u2);
    const std::uint32_t v2 = field.mul(i12, u1) ^ field.mul(i22, u2);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(set.size());
    for (auto d : set.elements()) {
        pairs.emplace_back(sub.project(rel(field.mul(d, u1))), sub.project(rel(field.mul(d, u2))));
    }

    const Field& small = sub.small();
    const auto hh = static_cast<std::size_t>(h);
    std::vector<BitVec> rows(2 * hh, BitVec(pairs.size()));
    for (std::size_t i = 0; i < hh; ++i) {
        const std::uint32_t alpha_i = std::uint32_t{1} << i;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (small.trace(small.mul(alpha_i, pairs[j].first))) rows[i].set(j);
            if (small.trace(small.mul(alpha_i, pairs[j].second))) rows[hh + i].set(j);
        }
    }

    return BivariateView{small, u1, u2, v1, v2, std::move(pairs), BinaryCode(std::move(rows))};
}

}  // namespace walshcode
