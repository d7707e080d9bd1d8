#include "walshcode/poly2.hpp"

#include <bit>
#include <stdexcept>

namespace walshcode {

Poly2 Poly2::from_word(std::uint64_t word) {
    Poly2 p;
    if (word != 0) p.words_.push_back(word);
    return p;
}

Poly2 Poly2::monomial(std::size_t k) {
    Poly2 p;
    p.set_coeff(k, true);
    return p;
}

long Poly2::degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<long>((words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back()));
}

bool Poly2::coeff(std::size_t i) const noexcept {
    const std::size_t w = i >> 6;
    return w < words_.size() && ((words_[w] >> (i & 63)) & 1u);
}

void Poly2::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i >> 6;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[w] |= mask;
    } else {
        words_[w] &= ~mask;
    }
    trim();
}

std::uint64_t Poly2::to_word() const {
    if (words_.size() > 1) throw std::overflow_error("polynomial degree exceeds 63");
    return words_.empty() ? 0 : words_.front();
}

Poly2& Poly2::operator+=(const Poly2& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    if (a.is_zero() || b.is_zero()) return out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    const long db = b.degree();
    for (long i = 0; i <= db; ++i) {
        if (!b.coeff(static_cast<std::size_t>(i))) continue;
        const std::size_t word_shift = static_cast<std::size_t>(i) >> 6;
        const unsigned bit_shift = static_cast<unsigned>(i) & 63u;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            out.words_[w + word_shift] ^= a.words_[w] << bit_shift;
            if (bit_shift != 0) out.words_[w + word_shift + 1] ^= a.words_[w] >> (64 - bit_shift);
        }
    }
    out.trim();
    return out;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly2 quotient;
    Poly2 rem = a;
    const long db = b.degree();
    while (rem.degree() >= db) {
        const auto shift = static_cast<std::size_t>(rem.degree() - db);
        quotient.set_coeff(shift, true);
        rem += b * Poly2::monomial(shift);
    }
    return {std::move(quotient), std::move(rem)};
}

Poly2 Poly2::gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<std::size_t>(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0) {
            s += '1';
        } else if (i == 1) {
            s += 'x';
        } else {
            s += "x^" + std::to_string(i);
        }
    }
    return s;
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

namespace {

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& p) { return (a * b) % p; }

// x^(2^e) mod p by repeated squaring.
Poly2 frobenius_power(const Poly2& p, long e) {
    Poly2 x = Poly2::monomial(1) % p;
    for (long i = 0; i < e; ++i) x = mulmod(x, x, p);
    return x;
}

}  // namespace

bool is_irreducible(const Poly2& p) {
    const long m = p.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    const Poly2 x = Poly2::monomial(1);
    if (frobenius_power(p, m) != x % p) return false;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const Poly2 g = Poly2::gcd(p, frobenius_power(p, d) + x);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace walshcode
