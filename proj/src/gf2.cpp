#include "walshcode/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "walshcode/poly2.hpp"

namespace walshcode {

namespace {

// Least-integer irreducible polynomial of minimal weight for each degree.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kDefaultModuli = {
    0,        0x2,      0x7,      0xb,      0x13,     0x25,      0x43,
    0x83,     0x11b,    0x203,    0x409,    0x805,    0x1009,    0x201b,
    0x4021,   0x8003,   0x1002b,  0x20009,  0x40009,  0x80027,   0x100009,
};

void check_degree(int m) {
    if (m < 1 || m > Field::kMaxDegree) {
        throw std::invalid_argument("field degree must be in [1, 20], got " + std::to_string(m));
    }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

int word_rank(std::vector<std::uint32_t> rows) {
    int rank = 0;
    for (int bit = 31; bit >= 0; --bit) {
        const std::uint32_t mask = std::uint32_t{1} << bit;
        auto it = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint32_t r) { return r & mask; });
        if (it == rows.end()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], *it);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != static_cast<std::size_t>(rank) && (rows[r] & mask)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

int checked_subfield_degree(const Field& big, int h) {
    const int m = big.degree();
    if (h < 1 || h > m || m % h != 0) {
        throw std::invalid_argument("subfield degree " + std::to_string(h) + " does not divide " + std::to_string(m));
    }
    return h;
}

}  // namespace

Field::Field(int m) : Field(m, (check_degree(m), kDefaultModuli[static_cast<std::size_t>(m)])) {}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus), trace_mask_(0) {
    check_degree(m);
    if (std::bit_width(modulus) != static_cast<unsigned>(m) + 1) {
        throw std::invalid_argument("modulus must have degree " + std::to_string(m));
    }
    if (!is_irreducible(Poly2::from_word(modulus))) {
        throw std::invalid_argument("modulus " + Poly2::from_word(modulus).to_string() + " is reducible");
    }
    for (int i = 0; i < m; ++i) {
        const std::uint32_t power = std::uint32_t{1} << i;
        std::uint32_t acc = 0;
        std::uint32_t conj = power;
        for (int j = 0; j < m; ++j) {
            acc ^= conj;
            conj = square(conj);
        }
        if (acc > 1) throw std::logic_error("trace left the prime field");
        trace_mask_ |= acc << i;
    }
}

std::uint32_t Field::default_modulus(int m) {
    check_degree(m);
    return kDefaultModuli[static_cast<std::size_t>(m)];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t r = 0;
    const std::uint32_t top = size();
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus_;
    }
    return r;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1;
    while (e != 0) {
        if (e & 1u) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow(a, size() - 2);
}

int Field::trace(std::uint32_t a) const noexcept { return std::popcount(a & trace_mask_) & 1; }

std::uint64_t Field::order(std::uint32_t a) const {
    if (a == 0 || !contains(a)) throw std::domain_error("order of zero or foreign element");
    std::uint64_t ord = size() - 1;
    for (auto p : prime_factors(ord)) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

Element Field::element(std::uint32_t value) const { return Element(*this, value); }
Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

Element::Element(const Field& field, std::uint32_t value) : field_(field), value_(value) {
    if (!field.contains(value)) {
        throw std::invalid_argument("value does not fit GF(2^" + std::to_string(field.degree()) + ")");
    }
}

Element Element::inv() const { return Element(field_, field_.inv(value_)); }
Element Element::pow(std::uint64_t e) const { return Element(field_, field_.pow(value_, e)); }

Element operator+(const Element& a, const Element& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch");
    return Element(a.field_, a.value_ ^ b.value_);
}

Element operator*(const Element& a, const Element& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch");
    return Element(a.field_, a.field_.mul(a.value_, b.value_));
}

SubfieldEmbedding::SubfieldEmbedding(const Field& big, int h) : big_(big), small_(checked_subfield_degree(big, h)) {
    const std::uint32_t poly = small_.modulus();
    bool found = false;
    for (std::uint32_t x = 0; x < big.size() && !found; ++x) {
        std::uint32_t acc = 0;
        for (int i = h; i >= 0; --i) acc = big.mul(acc, x) ^ ((poly >> i) & 1u);
        if (acc == 0) {
            root_ = x;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no root of the subfield modulus in the big field");
    images_.resize(static_cast<std::size_t>(h));
    std::uint32_t power = 1;
    for (int i = 0; i < h; ++i) {
        images_[static_cast<std::size_t>(i)] = power;
        power = big.mul(power, root_);
    }
    inverse_.reserve(small_.size());
    for (std::uint32_t s = 0; s < small_.size(); ++s) inverse_.emplace_back(embed(s), s);
    std::sort(inverse_.begin(), inverse_.end());
}

bool SubfieldEmbedding::in_subfield(std::uint32_t big_value) const noexcept {
    std::uint32_t x = big_value;
    for (int i = 0; i < small_.degree(); ++i) x = big_.square(x);
    return x == big_value;
}

std::uint32_t SubfieldEmbedding::embed(std::uint32_t small_value) const {
    if (!small_.contains(small_value)) throw std::invalid_argument("value outside the subfield");
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if ((small_value >> i) & 1u) acc ^= images_[i];
    }
    return acc;
}

std::uint32_t SubfieldEmbedding::project(std::uint32_t big_value) const {
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::pair<std::uint32_t, std::uint32_t>{big_value, 0});
    if (it == inverse_.end() || it->first != big_value) throw std::domain_error("element is not in the subfield");
    return it->second;
}

std::uint32_t relative_trace_word(const Field& field, std::uint32_t a, int h) {
    const int m = field.degree();
    if (h < 1 || m % h != 0) throw std::invalid_argument("relative trace degree must divide the field degree");
    std::uint32_t acc = 0;
    std::uint32_t conj = a;
    for (int i = 0; i < m / h; ++i) {
        acc ^= conj;
        for (int s = 0; s < h; ++s) conj = field.square(conj);
    }
    return acc;
}

Element relative_trace(const Element& a, int h) {
    const Field& field = a.field();
    if (h == field.degree()) return a;
    const SubfieldEmbedding embedding(field, h);
    return embedding.small().element(embedding.project(relative_trace_word(field, a.value(), h)));
}

std::vector<std::uint32_t> invert_bit_matrix(std::vector<std::uint32_t> rows) {
    const std::size_t n = rows.size();
    std::vector<std::uint32_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = std::uint32_t{1} << i;
    for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t mask = std::uint32_t{1} << col;
        std::size_t pivot = col;
        while (pivot < n && !(rows[pivot] & mask)) ++pivot;
        if (pivot == n) throw std::domain_error("singular bit matrix");
        std::swap(rows[col], rows[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && (rows[r] & mask)) {
                rows[r] ^= rows[col];
                inv[r] ^= inv[col];
            }
        }
    }
    return inv;
}

Basis::Basis(const Field& field, std::vector<std::uint32_t> elements) : field_(field), elements_(std::move(elements)) {
    const auto m = static_cast<std::size_t>(field.degree());
    if (elements_.size() != m) throw std::invalid_argument("a basis needs exactly m elements");
    for (auto e : elements_) {
        if (!field.contains(e)) throw std::invalid_argument("basis element outside the field");
    }
    if (word_rank(elements_) != static_cast<int>(m)) throw std::invalid_argument("basis elements are linearly dependent");

    std::vector<std::uint32_t> gram(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            gram[i] |= static_cast<std::uint32_t>(field.trace(field.mul(elements_[i], elements_[j]))) << j;
        }
    }
    const auto gram_inv = invert_bit_matrix(std::move(gram));
    dual_.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if ((gram_inv[j] >> k) & 1u) dual_[j] ^= elements_[k];
        }
    }
}

Basis Basis::polynomial(const Field& field) {
    std::vector<std::uint32_t> elements(static_cast<std::size_t>(field.degree()));
    for (std::size_t i = 0; i < elements.size(); ++i) elements[i] = std::uint32_t{1} << i;
    return Basis(field, std::move(elements));
}

std::uint32_t Basis::coordinates(std::uint32_t x) const noexcept {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < dual_.size(); ++i) {
        c |= static_cast<std::uint32_t>(field_.trace(field_.mul(x, dual_[i]))) << i;
    }
    return c;
}

std::uint32_t Basis::recombine(std::uint32_t coords) const noexcept {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if ((coords >> i) & 1u) x ^= elements_[i];
    }
    return x;
}

Basis dual_basis(const Basis& basis) { return basis.dual(); }

std::vector<int> coordinates(const Element& x, const Basis& basis) {
    if (!(x.field() == basis.field())) throw std::invalid_argument("field mismatch");
    const std::uint32_t c = basis.coordinates(x.value());
    std::vector<int> out(basis.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>((c >> i) & 1u);
    return out;
}

}  // namespace walshcode
