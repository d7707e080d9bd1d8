#ifndef WALSHCODE_GF2_HPP
#define WALSHCODE_GF2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace walshcode {

class Element;

/// The binary extension field GF(2^m), 1 <= m <= 20, in polynomial-basis
/// representation: the word b_{m-1}..b_1b_0 stands for sum b_i alpha^i,
/// where alpha is the class of x modulo the field polynomial.
///
/// A Field is a small immutable value; two fields compare equal when they
/// have the same degree and modulus. The raw word API (`mul`, `trace`, ...)
/// is used by the bulk kernels; `Element` wraps a word with its field for
/// the checked API.
class Field {
public:
    static constexpr int kMaxDegree = 20;

    /// GF(2^m) with the built-in default modulus.
    explicit Field(int m);
    /// GF(2^m) with an explicit modulus word of degree m. Throws
    /// std::invalid_argument when m is out of range, the degree is wrong,
    /// or the polynomial is reducible.
    Field(int m, std::uint32_t modulus);

    /// The least-integer irreducible polynomial of minimal weight of degree m
    /// (x itself for m = 1).
    static std::uint32_t default_modulus(int m);

    int degree() const noexcept { return m_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
    std::uint32_t mask() const noexcept { return size() - 1; }

    /// Bit i is Tr(alpha^i); Tr(a) is the parity of (a & trace_mask()).
    std::uint32_t trace_mask() const noexcept { return trace_mask_; }

    bool contains(std::uint32_t a) const noexcept { return a < size(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t square(std::uint32_t a) const noexcept { return mul(a, a); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error for a == 0.
    std::uint32_t inv(std::uint32_t a) const;
    /// Absolute trace Tr_{2^m/2}(a), 0 or 1.
    int trace(std::uint32_t a) const noexcept;
    /// Multiplicative order of a != 0 (brute force over divisors of 2^m - 1).
    std::uint64_t order(std::uint32_t a) const;

    Element element(std::uint32_t value) const;
    Element zero() const;
    Element one() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    int m_;
    std::uint32_t modulus_;
    std::uint32_t trace_mask_;
};

/// A field element carrying its field. Mixing fields throws
/// std::invalid_argument.
class Element {
public:
    Element(const Field& field, std::uint32_t value);

    const Field& field() const noexcept { return field_; }
    std::uint32_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Element inv() const;
    Element pow(std::uint64_t e) const;
    int trace() const noexcept { return field_.trace(value_); }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    /// Ordering by integer encoding.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    Field field_;
    std::uint32_t value_;
};

/// Identification of GF(2^h) (default modulus) with the subfield
/// {x : x^(2^h) = x} of a larger field GF(2^m), h | m. The class of x in
/// GF(2^h) is sent to the least element of GF(2^m) that is a root of the
/// GF(2^h) default modulus.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const Field& big, int h);

    const Field& big() const noexcept { return big_; }
    const Field& small() const noexcept { return small_; }
    std::uint32_t root() const noexcept { return root_; }

    bool in_subfield(std::uint32_t big_value) const noexcept;
    std::uint32_t embed(std::uint32_t small_value) const;
    /// Inverse of `embed`; throws std::domain_error outside the subfield.
    std::uint32_t project(std::uint32_t big_value) const;

private:
    Field big_;
    Field small_;
    std::uint32_t root_ = 0;
    std::vector<std::uint32_t> images_;  // images of alpha^i, i < h
    std::vector<std::pair<std::uint32_t, std::uint32_t>> inverse_;  // sorted (big, small)
};

/// sum_{i < m/h} a^(2^(h i)), an element of the subfield, in big-field encoding.
std::uint32_t relative_trace_word(const Field& field, std::uint32_t a, int h);

/// Tr_{2^m/2^h}(a) as an element of the standalone GF(2^h). For h == m the
/// argument is returned unchanged. Throws std::invalid_argument unless h | m.
Element relative_trace(const Element& a, int h);

/// An ordered basis of GF(2^m) over GF(2), with its trace-dual basis.
class Basis {
public:
    /// Throws std::invalid_argument unless `elements` holds m linearly
    /// independent field elements.
    Basis(const Field& field, std::vector<std::uint32_t> elements);

    /// {1, alpha, ..., alpha^(m-1)}.
    static Basis polynomial(const Field& field);

    const Field& field() const noexcept { return field_; }
    std::span<const std::uint32_t> elements() const noexcept { return elements_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return elements_[i]; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// {beta_j} with Tr(alpha_i beta_j) = delta_ij.
    Basis dual() const { return Basis(field_, dual_); }
    std::span<const std::uint32_t> dual_elements() const noexcept { return dual_; }

    /// Coordinates c with x = sum c_i alpha_i, packed as bit i = c_i;
    /// computed as c_i = Tr(x beta_i).
    std::uint32_t coordinates(std::uint32_t x) const noexcept;
    std::uint32_t recombine(std::uint32_t coords) const noexcept;

    friend bool operator==(const Basis& a, const Basis& b) noexcept {
        return a.field_ == b.field_ && a.elements_ == b.elements_;
    }

private:
    Field field_;
    std::vector<std::uint32_t> elements_;
    std::vector<std::uint32_t> dual_;
};

Basis dual_basis(const Basis& basis);
std::vector<int> coordinates(const Element& x, const Basis& basis);

/// Inverse of a square GF(2) matrix given as row words (bit j = column j).
/// Throws std::domain_error when singular.
std::vector<std::uint32_t> invert_bit_matrix(std::vector<std::uint32_t> rows);

}  // namespace walshcode

#endif  // WALSHCODE_GF2_HPP
