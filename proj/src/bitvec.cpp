#include "walshcode/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace walshcode {

BitVec::BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return v;
}

void BitVec::set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVec::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVec::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::optional<std::size_t> BitVec::first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

Echelon reduced_row_echelon(std::vector<BitVec> rows) {
    Echelon out;
    if (rows.empty()) return out;
    const std::size_t n = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("ragged matrix");
    }

    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

std::size_t gf2_rank(std::vector<BitVec> rows) { return reduced_row_echelon(std::move(rows)).rank(); }

BitVec reduce_against(const Echelon& basis, BitVec v) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        if (v.get(basis.pivots[i])) v ^= basis.rows[i];
    }
    return v;
}

}  // namespace walshcode
