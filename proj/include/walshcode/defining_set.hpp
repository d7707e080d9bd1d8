#ifndef WALSHCODE_DEFINING_SET_HPP
#define WALSHCODE_DEFINING_SET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walshcode/boolfun.hpp"
#include "walshcode/gf2.hpp"
#include "walshcode/linear_code.hpp"

namespace walshcode {

/// An ordered list d_1..d_n of elements of GF(2^m), n >= 1. Repeated
/// elements are allowed and reported by `has_duplicates()`.
class DefiningSet {
public:
    /// Throws std::invalid_argument when empty or when an element does not
    /// belong to the field.
    DefiningSet(const Field& field, std::vector<std::uint32_t> elements);

    /// The support of f, ascending.
    static DefiningSet from_support(const BooleanFunction& f);

    const Field& field() const noexcept { return field_; }
    std::span<const std::uint32_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return elements_[i]; }
    bool has_duplicates() const noexcept { return has_duplicates_; }
    bool contains_zero() const noexcept;

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

private:
    Field field_;
    std::vector<std::uint32_t> elements_;
    bool has_duplicates_ = false;
};

/// C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in GF(2^m)}, generated by the m
/// rows r_i[j] = Tr(alpha^i d_j). The rank may be below m.
BinaryCode code_from_defining_set(const DefiningSet& set);

/// Weight of the codeword indexed by x: (n - sum_d (-1)^Tr(x d)) / 2.
std::size_t codeword_weight(const DefiningSet& set, std::uint32_t x);

/// Defining set of a nonzero code over GF(2^k), k = dim C: with G the
/// reduced row-echelon generator and {beta_i} the dual of `basis` (the
/// polynomial basis by default), d_j = sum_i G[i][j] beta_i. The column
/// order of C is preserved, so code_from_defining_set reproduces G exactly.
/// Throws std::invalid_argument for the zero code or k > 20.
DefiningSet extract_defining_set(const BinaryCode& code, const std::optional<Basis>& basis = std::nullopt);

/// Raised when a code-to-function map is asked for a non-projective code.
class NotProjectiveError : public std::invalid_argument {
public:
    explicit NotProjectiveError(ProjectivityCheck check)
        : std::invalid_argument(check.diagnostic()), check_(std::move(check)) {}
    const ProjectivityCheck& check() const noexcept { return check_; }

private:
    ProjectivityCheck check_;
};

/// The characteristic function f_C of the extracted defining set. Throws
/// NotProjectiveError for a non-projective code.
BooleanFunction boolean_from_code(const BinaryCode& code, const std::optional<Basis>& basis = std::nullopt);

/// Weight distribution of C_{D_f} read off the Walsh spectrum of f.
struct SpectralWeightReport {
    std::size_t support_size = 0;     ///< n_f
    std::uint64_t zero_multiplicity = 0;  ///< e, multiplicity of weight 0
    int dimension = 0;                ///< m - log2(e)
    WeightDistribution weights{0};    ///< weight -> e_w / e
};

/// Builds the multiset {(2 n_f + f^(w)) / 4 : w != 0} plus {0} and divides
/// every multiplicity by e. Throws std::invalid_argument for an empty
/// support and std::logic_error if a multiplicity is not divisible by e
/// or e is not a power of two.
SpectralWeightReport spectral_weight_distribution(const BooleanFunction& f);
SpectralWeightReport spectral_weight_distribution(const BooleanFunction& f, const WalshSpectrum& spectrum);

/// True when the spectral report matches brute-force enumeration of C_{D_f}.
bool verify_spectral_weights(const BooleanFunction& f, std::size_t max_k = kMaxEnumerationDimension);

/// C_D rewritten over GF(2^h) x GF(2^h) for m = 2h.
struct BivariateView {
    Field subfield;
    /// Basis {u_1, u_2} of GF(2^m) over the subfield and its dual {v_1, v_2}
    /// under the relative trace, in big-field encoding.
    std::uint32_t u1 = 0, u2 = 0, v1 = 0, v2 = 0;
    /// Pairs (d_{i,1}, d_{i,2}) with d_i = d_{i,1} v_1 + d_{i,2} v_2, in
    /// subfield encoding.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    /// {(Tr_h(e_1 x_1 + e_2 x_2))_{(e_1,e_2)} : x_1, x_2 in GF(2^h)}.
    BinaryCode code;
};

/// Throws std::invalid_argument unless the field degree is 2h.
BivariateView bivariate_view(const DefiningSet& set, int h);

}  // namespace walshcode

#endif  // WALSHCODE_DEFINING_SET_HPP
