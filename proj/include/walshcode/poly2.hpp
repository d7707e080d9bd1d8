#ifndef WALSHCODE_POLY2_HPP
#define WALSHCODE_POLY2_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace walshcode {

/// Polynomial over GF(2) of arbitrary degree; coefficient i is bit i.
class Poly2 {
public:
    Poly2() = default;
    /// Low 64 coefficients given as a bit word.
    static Poly2 from_word(std::uint64_t word);
    /// x^k.
    static Poly2 monomial(std::size_t k);

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);

    /// Coefficient word; throws if the degree exceeds 63.
    std::uint64_t to_word() const;

    Poly2& operator+=(const Poly2& other);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b);
    friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }
    friend Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).first; }

    static Poly2 gcd(Poly2 a, Poly2 b);

    /// "x^3+x+1" style rendering; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

/// Rabin-style irreducibility test: p has degree m, divides x^(2^m) - x,
/// and is coprime to x^(2^d) - x for every proper divisor d of m.
bool is_irreducible(const Poly2& p);

}  // namespace walshcode

#endif  // WALSHCODE_POLY2_HPP
