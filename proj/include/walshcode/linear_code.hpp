#ifndef WALSHCODE_LINEAR_CODE_HPP
#define WALSHCODE_LINEAR_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walshcode/bitvec.hpp"

namespace walshcode {

/// Enumeration guard: at most 2^24 codewords are ever listed.
inline constexpr std::size_t kMaxEnumerationDimension = 24;

/// A_0..A_n for a code of length n.
class WeightDistribution {
public:
    explicit WeightDistribution(std::size_t length);

    std::size_t length() const noexcept { return counts_.size() - 1; }
    std::uint64_t operator[](std::size_t w) const noexcept { return counts_[w]; }
    void add(std::size_t w, std::uint64_t count = 1) { counts_.at(w) += count; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    std::uint64_t total() const noexcept;
    /// Weights w > 0 with A_w != 0, ascending.
    std::vector<std::size_t> nonzero_weights() const;
    std::optional<std::size_t> min_nonzero_weight() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

/// A binary linear code given by a spanning set of generator rows. Rows are
/// kept verbatim (they may be dependent); the rank and a reduced
/// row-echelon basis are derived.
class BinaryCode {
public:
    /// Throws std::invalid_argument for an empty, zero-length or ragged matrix.
    explicit BinaryCode(std::vector<BitVec> rows);
    static BinaryCode from_strings(std::span<const std::string> rows);

    std::size_t length() const noexcept { return rows_.front().size(); }
    std::size_t dimension() const noexcept { return echelon_.rank(); }
    std::span<const BitVec> rows() const noexcept { return rows_; }
    /// Reduced row-echelon basis; `dimension()` rows.
    const Echelon& echelon() const noexcept { return echelon_; }

    bool contains(const BitVec& word) const;
    /// Generator matrix with the coordinates reordered: column j of the
    /// result is column order[j] of this code.
    BinaryCode permute_columns(std::span<const std::size_t> order) const;

private:
    std::vector<BitVec> rows_;
    Echelon echelon_;
};

inline BinaryCode code_from_generator(std::vector<BitVec> rows) { return BinaryCode(std::move(rows)); }

/// Gray-code walk over the 2^k codewords of the row-echelon basis. Throws
/// std::invalid_argument when k exceeds `max_k` (itself capped at 24).
WeightDistribution weight_distribution_bruteforce(const BinaryCode& code,
                                                  std::size_t max_k = kMaxEnumerationDimension);

/// Least nonzero weight; throws std::domain_error for the zero code.
std::size_t minimum_distance(const BinaryCode& code, std::size_t max_k = kMaxEnumerationDimension);

/// The orthogonal complement; the dual of the full space is returned as the
/// zero code (a single all-zero row, dimension 0).
BinaryCode dual(const BinaryCode& code);

/// Outcome of the column test for projectivity.
struct ProjectivityCheck {
    bool projective = false;
    std::optional<std::size_t> zero_column;
    std::optional<std::pair<std::size_t, std::size_t>> repeated_columns;

    std::string diagnostic() const;
};

/// Columns of the reduced row-echelon generator must be nonzero and
/// pairwise distinct. Throws std::invalid_argument for the zero code.
ProjectivityCheck check_projectivity(const BinaryCode& code);
bool is_projective(const BinaryCode& code);

/// Smallest number of columns of the generator that sum to zero (the
/// minimum distance of the dual code), if it is at most `max_weight` <= 4.
std::optional<std::size_t> dual_distance_up_to(const BinaryCode& code, std::size_t max_weight);

/// Equality of row spaces. Throws std::invalid_argument on a length mismatch.
bool codes_equal(const BinaryCode& a, const BinaryCode& b);

/// Dual weight distribution from a primal one (exact integer arithmetic).
/// `dimension` is the primal dimension. Throws std::domain_error if a
/// result is not a nonnegative integer, std::invalid_argument when n > 96.
WeightDistribution macwilliams_transform(const WeightDistribution& primal, std::size_t dimension);

}  // namespace walshcode

#endif  // WALSHCODE_LINEAR_CODE_HPP
