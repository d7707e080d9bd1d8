#include "walshcode/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace walshcode {

WeightDistribution::WeightDistribution(std::size_t length) : counts_(length + 1, 0) {}

std::uint64_t WeightDistribution::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 1; w < counts_.size(); ++w) {
        if (counts_[w] != 0) out.push_back(w);
    }
    return out;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts_.size(); ++w) {
        if (counts_[w] != 0) return w;
    }
    return std::nullopt;
}

BinaryCode::BinaryCode(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("generator matrix has no rows");
    const std::size_t n = rows_.front().size();
    if (n == 0) throw std::invalid_argument("generator matrix has zero length");
    for (const auto& r : rows_) {
        if (r.size() != n) throw std::invalid_argument("generator matrix rows have different lengths");
    }
    echelon_ = reduced_row_echelon(rows_);
}

BinaryCode BinaryCode::from_strings(std::span<const std::string> rows) {
    std::vector<BitVec> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) bits.push_back(BitVec::from_string(r));
    return BinaryCode(std::move(bits));
}

bool BinaryCode::contains(const BitVec& word) const {
    if (word.size() != length()) return false;
    return reduce_against(echelon_, word).none();
}

BinaryCode BinaryCode::permute_columns(std::span<const std::size_t> order) const {
    if (order.size() != length()) throw std::invalid_argument("permutation length mismatch");
    std::vector<BitVec> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        BitVec p(order.size());
        for (std::size_t j = 0; j < order.size(); ++j) {
            if (order[j] >= r.size()) throw std::invalid_argument("permutation index out of range");
            p.set(j, r.get(order[j]));
        }
        out.push_back(std::move(p));
    }
    return BinaryCode(std::move(out));
}

WeightDistribution weight_distribution_bruteforce(const BinaryCode& code, std::size_t max_k) {
    const std::size_t k = code.dimension();
    const std::size_t guard = std::min(max_k, kMaxEnumerationDimension);
    if (k > guard) {
        throw std::invalid_argument("dimension " + std::to_string(k) + " exceeds the enumeration guard " +
                                    std::to_string(guard));
    }
    const std::size_t n = code.length();
    WeightDistribution dist(n);
    const auto& basis = code.echelon().rows;
    const std::uint64_t count = std::uint64_t{1} << k;

    if (n <= 64) {
        std::vector<std::uint64_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = basis[i].words()[0];
        std::vector<std::uint64_t> hist(n + 1, 0);
        std::uint64_t word = 0;
        hist[0] = 1;
        for (std::uint64_t i = 1; i < count; ++i) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            ++hist[static_cast<std::size_t>(std::popcount(word))];
        }
        for (std::size_t w = 0; w <= n; ++w) dist.add(w, hist[w]);
        return dist;
    }

    BitVec word(n);
    dist.add(0);
    for (std::uint64_t i = 1; i < count; ++i) {
        word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        dist.add(word.popcount());
    }
    return dist;
}

std::size_t minimum_distance(const BinaryCode& code, std::size_t max_k) {
    if (code.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
    return *weight_distribution_bruteforce(code, max_k).min_nonzero_weight();
}

BinaryCode dual(const BinaryCode& code) {
    const std::size_t n = code.length();
    const auto& ech = code.echelon();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<BitVec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f);
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            if (ech.rows[r].get(f)) v.set(ech.pivots[r]);
        }
        rows.push_back(std::move(v));
    }
    if (rows.empty()) rows.emplace_back(n);
    return BinaryCode(std::move(rows));
}

namespace {

// Columns of the row-echelon generator as k-bit vectors.
std::vector<BitVec> echelon_columns(const BinaryCode& code) {
    const auto& rows = code.echelon().rows;
    std::vector<BitVec> cols(code.length(), BitVec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < code.length(); ++j) {
            if (rows[i].get(j)) cols[j].set(i);
        }
    }
    return cols;
}

// Column indices sorted by column value, ties by index.
std::vector<std::size_t> sorted_column_order(const std::vector<BitVec>& cols) {
    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cols[a] < cols[b]; });
    return order;
}

}  // namespace

std::string ProjectivityCheck::diagnostic() const {
    if (projective) return "projective: columns are nonzero and pairwise distinct";
    std::string s = "not projective:";
    if (zero_column) s += " column " + std::to_string(*zero_column) + " is zero;";
    if (repeated_columns) {
        s += " columns " + std::to_string(repeated_columns->first) + " and " +
             std::to_string(repeated_columns->second) + " are equal;";
    }
    s.pop_back();
    return s;
}

ProjectivityCheck check_projectivity(const BinaryCode& code) {
    if (code.dimension() == 0) throw std::invalid_argument("projectivity is undefined for the zero code");
    const auto cols = echelon_columns(code);
    ProjectivityCheck check;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].none()) {
            check.zero_column = j;
            break;
        }
    }
    const auto order = sorted_column_order(cols);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (cols[order[i]] == cols[order[i - 1]]) {
            check.repeated_columns = std::pair{order[i - 1], order[i]};
            break;
        }
    }
    check.projective = !check.zero_column && !check.repeated_columns;
    return check;
}

bool is_projective(const BinaryCode& code) { return check_projectivity(code).projective; }

std::optional<std::size_t> dual_distance_up_to(const BinaryCode& code, std::size_t max_weight) {
    if (max_weight > 4) throw std::invalid_argument("dual distance search supports weights up to 4");
    const auto cols = echelon_columns(code);
    const std::size_t n = cols.size();

    if (max_weight >= 1 && std::any_of(cols.begin(), cols.end(), [](const BitVec& c) { return c.none(); })) return 1;

    std::vector<BitVec> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    if (max_weight >= 2 && std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 2;

    if (max_weight >= 3) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (std::binary_search(sorted.begin(), sorted.end(), cols[i] ^ cols[j])) return 3;
            }
        }
    }

    if (max_weight >= 4) {
        // With no relation of weight <= 3, two pairs with the same sum are disjoint.
        std::vector<BitVec> sums;
        sums.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) sums.push_back(cols[i] ^ cols[j]);
        }
        std::sort(sums.begin(), sums.end());
        if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) return 4;
    }
    return std::nullopt;
}

bool codes_equal(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("codes have different lengths");
    if (a.dimension() != b.dimension()) return false;
    for (const auto& r : b.echelon().rows) {
        if (!a.contains(r)) return false;
    }
    return true;
}

namespace {

__extension__ typedef __int128 Int128;

std::vector<std::vector<Int128>> binomials(std::size_t n) {
    std::vector<std::vector<Int128>> c(n + 1, std::vector<Int128>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

}  // namespace

WeightDistribution macwilliams_transform(const WeightDistribution& primal, std::size_t dimension) {
    const std::size_t n = primal.length();
    if (n > 96) throw std::invalid_argument("MacWilliams transform is limited to n <= 96");
    const auto c = binomials(n);
    WeightDistribution out(n);
    for (std::size_t j = 0; j <= n; ++j) {
        Int128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (primal[i] == 0) continue;
            // Krawtchouk K_j(i) = sum_s (-1)^s C(i, s) C(n - i, j - s).
            Int128 kraw = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) continue;
                const Int128 term = c[i][s] * c[n - i][j - s];
                kraw += (s % 2 == 0) ? term : -term;
            }
            acc += static_cast<Int128>(primal[i]) * kraw;
        }
        const Int128 denom = static_cast<Int128>(1) << dimension;
        if (acc < 0 || acc % denom != 0) throw std::domain_error("MacWilliams transform produced a non-integer count");
        out.add(j, static_cast<std::uint64_t>(acc / denom));
    }
    return out;
}

}  // namespace walshcode
