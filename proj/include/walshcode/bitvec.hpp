#ifndef WALSHCODE_BITVEC_HPP
#define WALSHCODE_BITVEC_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace walshcode {

/// Packed vector over GF(2). Bit i lives in word i/64 at position i%64;
/// unused high bits of the last word are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const noexcept { return get(i); }
    void set(std::size_t i, bool value = true) noexcept;
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }

    std::size_t popcount() const noexcept;
    bool none() const noexcept;
    bool dot(const BitVec& other) const;
    std::optional<std::size_t> first_set() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Reduced row-echelon form of a GF(2) matrix. `rows` holds only the
/// nonzero rows; `pivots[i]` is the leading column of `rows[i]`.
struct Echelon {
    std::vector<BitVec> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return rows.size(); }
};

/// Gauss-Jordan elimination. All rows must share one length.
Echelon reduced_row_echelon(std::vector<BitVec> rows);

/// Rank of the span of `rows`.
std::size_t gf2_rank(std::vector<BitVec> rows);

/// Reduces `v` against an echelon basis; zero result means v is in the span.
BitVec reduce_against(const Echelon& basis, BitVec v);

}  // namespace walshcode

#endif  // WALSHCODE_BITVEC_HPP
