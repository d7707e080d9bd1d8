#include "walshcode/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace walshcode {

BooleanFunction::BooleanFunction(const Field& field, BitVec table) : field_(field), table_(std::move(table)) {
    if (table_.size() != field_.size()) throw std::invalid_argument("truth table length must be 2^m");
}

BooleanFunction BooleanFunction::zero(const Field& field) { return BooleanFunction(field, BitVec(field.size())); }

BooleanFunction BooleanFunction::constant_one(const Field& field) {
    BitVec table(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x) table.set(x);
    return BooleanFunction(field, std::move(table));
}

BooleanFunction BooleanFunction::from_support(const Field& field, std::span<const std::uint32_t> support) {
    BitVec table(field.size());
    for (auto d : support) {
        if (!field.contains(d)) throw std::invalid_argument("support element outside the field");
        if (table.get(d)) throw std::invalid_argument("support contains a repeated element");
        table.set(d);
    }
    return BooleanFunction(field, std::move(table));
}

BooleanFunction BooleanFunction::from_rule(const Field& field, const std::function<bool(std::uint32_t)>& rule) {
    BitVec table(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x) table.set(x, rule(x));
    return BooleanFunction(field, std::move(table));
}

std::vector<std::uint32_t> BooleanFunction::support() const {
    std::vector<std::uint32_t> out;
    out.reserve(weight());
    for (std::uint32_t x = 0; x < field_.size(); ++x) {
        if (table_.get(x)) out.push_back(x);
    }
    return out;
}

WalshSpectrum::WalshSpectrum(int m, std::vector<std::int32_t> values) : m_(m), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << m)) throw std::invalid_argument("spectrum length must be 2^m");
}

std::int32_t WalshSpectrum::max_abs() const noexcept {
    std::int32_t best = 0;
    for (auto v : values_) best = std::max(best, std::abs(v));
    return best;
}

std::map<std::int32_t, std::uint64_t> WalshSpectrum::histogram() const {
    std::map<std::int32_t, std::uint64_t> h;
    for (auto v : values_) ++h[v];
    return h;
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
    const Field& field = f.field();
    const int m = field.degree();
    const std::uint32_t size = field.size();

    std::vector<std::int32_t> s(size);
    for (std::uint32_t x = 0; x < size; ++x) s[x] = f(x) ? -1 : 1;

    for (std::uint32_t half = 1; half < size; half <<= 1) {
        for (std::uint32_t block = 0; block < size; block += half << 1) {
            for (std::uint32_t i = block; i < block + half; ++i) {
                const std::int32_t a = s[i];
                const std::int32_t b = s[i + half];
                s[i] = a + b;
                s[i + half] = a - b;
            }
        }
    }

    // Column j of the trace Gram matrix: bit i is Tr(alpha^(i+j)).
    std::vector<std::uint32_t> gram_col(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const std::uint32_t prod = field.mul(std::uint32_t{1} << i, std::uint32_t{1} << j);
            gram_col[static_cast<std::size_t>(j)] |= static_cast<std::uint32_t>(field.trace(prod)) << i;
        }
    }

    std::vector<std::uint32_t> image(size, 0);
    std::vector<std::int32_t> values(size);
    values[0] = s[0];
    for (std::uint32_t w = 1; w < size; ++w) {
        image[w] = image[w & (w - 1)] ^ gram_col[static_cast<std::size_t>(std::countr_zero(w))];
        values[w] = s[image[w]];
    }
    return WalshSpectrum(m, std::move(values));
}

WalshSpectrum walsh_transform_naive(const BooleanFunction& f) {
    const Field& field = f.field();
    if (field.degree() > 12) throw std::invalid_argument("naive Walsh transform is limited to m <= 12");
    std::vector<std::int32_t> values(field.size(), 0);
    for (std::uint32_t w = 0; w < field.size(); ++w) {
        std::int32_t acc = 0;
        for (std::uint32_t x = 0; x < field.size(); ++x) {
            acc += ((f(x) ? 1 : 0) ^ field.trace(field.mul(w, x))) ? -1 : 1;
        }
        values[w] = acc;
    }
    return WalshSpectrum(field.degree(), std::move(values));
}

AlgebraicNormalForm::AlgebraicNormalForm(int m, BitVec coefficients) : m_(m), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != (std::size_t{1} << m)) throw std::invalid_argument("ANF length must be 2^m");
}

int AlgebraicNormalForm::degree() const noexcept {
    int deg = -1;
    for (std::uint32_t u = 0; u < coefficients_.size(); ++u) {
        if (coefficients_.get(u)) deg = std::max(deg, std::popcount(u));
    }
    return deg;
}

std::vector<std::uint32_t> AlgebraicNormalForm::monomials() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < coefficients_.size(); ++u) {
        if (coefficients_.get(u)) out.push_back(u);
    }
    return out;
}

bool AlgebraicNormalForm::evaluate(std::uint32_t x) const {
    bool acc = false;
    // Monomial u is 1 at x exactly when u is a subset of x.
    for (std::uint32_t u = x;; u = (u - 1) & x) {
        acc ^= coefficients_.get(u);
        if (u == 0) break;
    }
    return acc;
}

namespace {

// In-place binary Moebius transform; it is an involution.
void moebius(BitVec& t, int m) {
    for (int i = 0; i < m; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            if ((x & bit) && t.get(x ^ bit)) t.flip(x);
        }
    }
}

}  // namespace

BitVec AlgebraicNormalForm::truth_table() const {
    BitVec t = coefficients_;
    moebius(t, m_);
    return t;
}

AlgebraicNormalForm anf(const BooleanFunction& f) {
    BitVec t = f.table();
    moebius(t, f.num_variables());
    return AlgebraicNormalForm(f.num_variables(), std::move(t));
}

std::uint32_t nonlinearity(const WalshSpectrum& spectrum) {
    const auto half = static_cast<std::uint32_t>(spectrum.size() / 2);
    return half - static_cast<std::uint32_t>(spectrum.max_abs() / 2);
}

std::uint32_t nonlinearity(const BooleanFunction& f) { return nonlinearity(walsh_transform(f)); }

std::string_view to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::affine: return "affine";
        case SpectralClass::bent: return "bent";
        case SpectralClass::plateaued: return "plateaued";
        case SpectralClass::balanced: return "balanced";
        case SpectralClass::general: return "general";
    }
    return "general";
}

Classification classify(const WalshSpectrum& spectrum) {
    Classification c;
    c.histogram = spectrum.histogram();
    const int m = spectrum.num_variables();
    const auto full = static_cast<std::int32_t>(spectrum.size());

    std::int32_t amplitude = 0;
    bool single_amplitude = true;
    for (const auto& [value, count] : c.histogram) {
        if (value == 0) continue;
        if (amplitude == 0) {
            amplitude = std::abs(value);
        } else if (std::abs(value) != amplitude) {
            single_amplitude = false;
        }
    }

    c.affine = spectrum.max_abs() == full;
    c.balanced = spectrum[0] == 0;
    c.plateaued = single_amplitude && amplitude != 0;
    c.amplitude = c.plateaued ? amplitude : 0;
    c.bent = m % 2 == 0 && c.plateaued && amplitude == (std::int32_t{1} << (m / 2)) && !c.histogram.contains(0);

    if (c.affine) {
        c.label = SpectralClass::affine;
    } else if (c.bent) {
        c.label = SpectralClass::bent;
    } else if (c.plateaued) {
        c.label = SpectralClass::plateaued;
    } else if (c.balanced) {
        c.label = SpectralClass::balanced;
    }
    return c;
}

Classification classify(const BooleanFunction& f) { return classify(walsh_transform(f)); }

}  // namespace walshcode
