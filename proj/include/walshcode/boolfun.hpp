#ifndef WALSHCODE_BOOLFUN_HPP
#define WALSHCODE_BOOLFUN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "walshcode/bitvec.hpp"
#include "walshcode/gf2.hpp"

namespace walshcode {

/// A Boolean function GF(2^m) -> GF(2) stored as its truth table; bit x of
/// the table is f at the element with integer encoding x.
class BooleanFunction {
public:
    /// Throws std::invalid_argument unless table.size() == 2^m.
    BooleanFunction(const Field& field, BitVec table);

    static BooleanFunction zero(const Field& field);
    static BooleanFunction constant_one(const Field& field);
    /// Characteristic function of D; throws std::invalid_argument on a
    /// repeated or out-of-range element.
    static BooleanFunction from_support(const Field& field, std::span<const std::uint32_t> support);
    static BooleanFunction from_rule(const Field& field, const std::function<bool(std::uint32_t)>& rule);

    const Field& field() const noexcept { return field_; }
    int num_variables() const noexcept { return field_.degree(); }
    const BitVec& table() const noexcept { return table_; }
    bool operator()(std::uint32_t x) const noexcept { return table_.get(x); }

    /// D_f in ascending order.
    std::vector<std::uint32_t> support() const;
    std::size_t weight() const noexcept { return table_.popcount(); }

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    Field field_;
    BitVec table_;
};

/// The 2^m integers f^(w) = sum_x (-1)^(f(x) + Tr(wx)), indexed by w.
class WalshSpectrum {
public:
    WalshSpectrum(int m, std::vector<std::int32_t> values);

    int num_variables() const noexcept { return m_; }
    std::span<const std::int32_t> values() const noexcept { return values_; }
    std::int32_t operator[](std::uint32_t w) const noexcept { return values_[w]; }
    std::size_t size() const noexcept { return values_.size(); }

    std::int32_t max_abs() const noexcept;
    /// Value -> multiplicity.
    std::map<std::int32_t, std::uint64_t> histogram() const;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;

private:
    int m_;
    std::vector<std::int32_t> values_;
};

/// Fast transform: a Hadamard butterfly over GF(2)^m followed by the index
/// change w -> T w, where T[i][j] = Tr(alpha^i alpha^j), so that the dot
/// product of T w with x equals Tr(w x).
WalshSpectrum walsh_transform(const BooleanFunction& f);

/// Direct double sum over (w, x). Throws std::invalid_argument for m > 12.
WalshSpectrum walsh_transform_naive(const BooleanFunction& f);

/// Algebraic normal form in the coordinates of the polynomial basis: bit u
/// of `coefficients` is the coefficient of prod_{i in u} x_i.
class AlgebraicNormalForm {
public:
    AlgebraicNormalForm(int m, BitVec coefficients);

    int num_variables() const noexcept { return m_; }
    const BitVec& coefficients() const noexcept { return coefficients_; }
    /// Largest monomial size; -1 for the zero function.
    int degree() const noexcept;
    std::vector<std::uint32_t> monomials() const;
    bool evaluate(std::uint32_t x) const;
    BitVec truth_table() const;

private:
    int m_;
    BitVec coefficients_;
};

AlgebraicNormalForm anf(const BooleanFunction& f);

/// 2^(m-1) - max_w |f^(w)| / 2.
std::uint32_t nonlinearity(const WalshSpectrum& spectrum);
std::uint32_t nonlinearity(const BooleanFunction& f);

enum class SpectralClass { affine, bent, plateaued, balanced, general };

std::string_view to_string(SpectralClass c);

/// Spectral class with the full histogram. When several classes apply the
/// label is the first of affine, bent, plateaued, balanced; the individual
/// predicates are reported alongside it.
struct Classification {
    SpectralClass label = SpectralClass::general;
    bool affine = false;
    bool bent = false;
    bool plateaued = false;
    bool balanced = false;
    /// Common nonzero |f^(w)| of a plateaued function, 0 otherwise.
    std::int32_t amplitude = 0;
    std::map<std::int32_t, std::uint64_t> histogram;
};

Classification classify(const WalshSpectrum& spectrum);
Classification classify(const BooleanFunction& f);

}  // namespace walshcode

#endif  // WALSHCODE_BOOLFUN_HPP
