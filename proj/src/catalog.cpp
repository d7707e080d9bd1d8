#include "walshcode/catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace walshcode::catalog {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

// prod (x - r) over GF(2^m); every coefficient must land in GF(2).
Poly2 expand_roots(const Field& field, const std::vector<std::uint32_t>& roots) {
    std::vector<std::uint32_t> coeffs{1};
    for (auto r : roots) {
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= field.mul(coeffs[i], r);
        }
        coeffs = std::move(next);
    }
    Poly2 p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1) throw std::logic_error("root set is not closed under conjugation");
        p.set_coeff(i, coeffs[i] == 1);
    }
    return p;
}

Poly2 x_to_n_minus_one(std::size_t n) { return Poly2::monomial(n) + Poly2::from_word(1); }

}  // namespace

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n) {
    require(n % 2 == 1 && n >= 3 && n <= 4095, "cyclotomic cosets need an odd modulus in [3, 4095]");
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        CyclotomicCoset coset{n, s, {}};
        std::uint32_t x = s;
        do {
            seen[x] = true;
            coset.members.push_back(x);
            x = (2 * x) % n;
        } while (x != s);
        std::sort(coset.members.begin(), coset.members.end());
        out.push_back(std::move(coset));
    }
    return out;
}

int multiplicative_order_of_two(std::uint32_t n) {
    require(n % 2 == 1, "2 is invertible only modulo odd n");
    if (n == 1) return 1;
    std::uint64_t x = 2 % n;
    int m = 1;
    while (x != 1) {
        x = (2 * x) % n;
        ++m;
    }
    return m;
}

std::uint32_t primitive_root_of_unity(const Field& field, std::uint32_t n) {
    const std::uint64_t group = field.size() - 1;
    require(n >= 1 && group % n == 0, "n must divide 2^m - 1");
    for (std::uint32_t a = 1; a < field.size(); ++a) {
        if (field.order(a) == n) return a;
    }
    throw std::logic_error("no element of the requested order");
}

Poly2 minimal_polynomial(const Field& field, std::uint32_t a) {
    require(field.contains(a), "element outside the field");
    if (a == 0) return Poly2::monomial(1);
    std::vector<std::uint32_t> conjugates;
    std::uint32_t c = a;
    do {
        conjugates.push_back(c);
        c = field.square(c);
    } while (c != a);
    return expand_roots(field, conjugates);
}

BinaryCode cyclic_code(const Poly2& generator, std::size_t n) {
    require(!generator.is_zero() && generator.degree() <= static_cast<long>(n), "generator degree exceeds the length");
    require((x_to_n_minus_one(n) % generator).is_zero(), "generator does not divide x^n - 1");
    const std::size_t deg = static_cast<std::size_t>(generator.degree());
    const std::size_t k = n - deg;
    std::vector<BitVec> rows;
    if (k == 0) rows.emplace_back(n);
    for (std::size_t i = 0; i < k; ++i) {
        BitVec row(n);
        for (std::size_t j = 0; j <= deg; ++j) row.set(i + j, generator.coeff(j));
        rows.push_back(std::move(row));
    }
    return BinaryCode(std::move(rows));
}

BinaryCode simplex(int k) {
    require(k >= 2 && k <= 20, "simplex needs 2 <= k <= 20");
    const std::size_t n = (std::size_t{1} << k) - 1;
    std::vector<BitVec> rows(static_cast<std::size_t>(k), BitVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t column = j + 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((column >> i) & 1u) rows[i].set(j);
        }
    }
    return BinaryCode(std::move(rows));
}

BinaryCode macdonald(int k) {
    require(k >= 3 && k <= 20, "MacDonald needs 3 <= k <= 20");
    const BinaryCode full = simplex(k);
    std::vector<std::size_t> keep(full.length() - 1);
    for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = j + 1;
    std::vector<BitVec> rows;
    for (const auto& r : full.rows()) {
        BitVec p(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) p.set(j, r.get(keep[j]));
        rows.push_back(std::move(p));
    }
    return BinaryCode(std::move(rows));
}

BinaryCode hamming(int m) {
    require(m >= 3 && m <= 12, "Hamming needs 3 <= m <= 12");
    return dual(simplex(m));
}

BinaryCode reed_muller(int l, int m) {
    require(m <= 12 && l >= 1 && l < m, "Reed-Muller needs 1 <= l < m <= 12");
    const std::size_t n = std::size_t{1} << m;
    std::vector<BitVec> rows;
    for (std::uint32_t t = 0; t < n; ++t) {
        if (std::popcount(t) > l) continue;
        BitVec row(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            if ((t & x) == t) row.set(x);
        }
        rows.push_back(std::move(row));
    }
    return BinaryCode(std::move(rows));
}

CyclicConstruction bch(std::uint32_t n, std::uint32_t designed_distance) {
    require(n % 2 == 1 && n >= 3 && n <= 4095, "BCH length must be odd in [3, 4095]");
    require(designed_distance >= 2 && designed_distance <= n, "designed distance must lie in [2, n]");
    const int m = multiplicative_order_of_two(n);
    require(m <= Field::kMaxDegree, "ord_n(2) = " + std::to_string(m) + " exceeds the field cap of 20");
    const Field field(m);
    const std::uint32_t gamma = primitive_root_of_unity(field, n);

    Poly2 g = Poly2::from_word(1);
    for (const auto& coset : cyclotomic_cosets(n)) {
        const bool hit = std::any_of(coset.members.begin(), coset.members.end(),
                                     [&](std::uint32_t e) { return e >= 1 && e < designed_distance; });
        if (hit) g = g * minimal_polynomial(field, field.pow(gamma, coset.leader));
    }
    return {g, cyclic_code(g, n)};
}

CyclicConstruction quadratic_residue(std::uint32_t n) {
    require(n <= 127 && is_prime(n) && (n % 8 == 1 || n % 8 == 7),
            "QR codes need a prime n <= 127 with n = +-1 (mod 8)");
    const int m = multiplicative_order_of_two(n);
    require(m <= Field::kMaxDegree, "ord_n(2) = " + std::to_string(m) + " exceeds the field cap of 20");
    const Field field(m);
    const std::uint32_t gamma = primitive_root_of_unity(field, n);

    std::vector<bool> residue(n, false);
    for (std::uint32_t i = 1; i < n; ++i) residue[(i * i) % n] = true;
    std::vector<std::uint32_t> roots;
    for (std::uint32_t r = 1; r < n; ++r) {
        if (residue[r]) roots.push_back(field.pow(gamma, r));
    }
    Poly2 g = expand_roots(field, roots);
    return {g, cyclic_code(g, n)};
}

BinaryCode golay23() { return quadratic_residue(23).code; }

BinaryCode extended_golay24() {
    const BinaryCode base = golay23();
    std::vector<BitVec> rows;
    for (const auto& r : base.rows()) {
        BitVec e(r.size() + 1);
        for (std::size_t j = 0; j < r.size(); ++j) e.set(j, r.get(j));
        e.set(r.size(), r.popcount() % 2 == 1);
        rows.push_back(std::move(e));
    }
    return BinaryCode(std::move(rows));
}

IrreducibleCyclic irreducible_cyclic(int m, std::uint32_t N) {
    require(m >= 1 && m <= Field::kMaxDegree, "irreducible cyclic code needs 1 <= m <= 20");
    const Field field(m);
    const std::uint32_t group = field.size() - 1;
    require(N >= 1 && group % N == 0, "N must divide 2^m - 1");
    const std::uint32_t gamma = primitive_root_of_unity(field, group);
    const std::uint32_t step = field.pow(gamma, N);
    std::vector<std::uint32_t> elements;
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < group / N; ++i) {
        elements.push_back(x);
        x = field.mul(x, step);
    }
    DefiningSet set(field, std::move(elements));
    BinaryCode code = code_from_defining_set(set);
    return {std::move(set), std::move(code)};
}

namespace {

struct ParsedName {
    std::string family;
    std::map<std::string, std::uint32_t> params;
};

ParsedName parse_name(std::string_view spec) {
    ParsedName out;
    const auto colon = spec.find(':');
    out.family = std::string(spec.substr(0, colon));
    if (colon == std::string_view::npos) return out;
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto eq = item.find('=');
        require(eq != std::string_view::npos && eq > 0, "malformed parameter '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        const std::string_view text = item.substr(eq + 1);
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(),
                "parameter '" + key + "' must be a nonnegative integer");
        require(!out.params.contains(key), "parameter '" + key + "' given twice");
        out.params[key] = value;
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::uint32_t take(const ParsedName& p, const std::string& key) {
    auto it = p.params.find(key);
    require(it != p.params.end(), p.family + " needs parameter '" + key + "'");
    return it->second;
}

void expect_keys(const ParsedName& p, std::initializer_list<const char*> keys) {
    require(p.params.size() == keys.size(), p.family + " expects exactly " + std::to_string(keys.size()) + " parameter(s)");
    for (const char* k : keys) take(p, k);
}

int as_int(std::uint32_t v) {
    require(v <= 4096, "parameter value too large");
    return static_cast<int>(v);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"simplex", "macdonald", "hamming", "rm",      "bch",
                                                   "qr",      "golay23",   "golay24", "irrcyclic"};
    return names;
}

}  // namespace

bool is_catalog_name(std::string_view spec) {
    const std::string family(spec.substr(0, spec.find(':')));
    const auto& names = family_names();
    return std::find(names.begin(), names.end(), family) != names.end();
}

NamedCode from_name(std::string_view spec) {
    const ParsedName p = parse_name(spec);
    const std::string name(spec);
    if (p.family == "simplex") {
        expect_keys(p, {"k"});
        return {name, simplex(as_int(take(p, "k"))), std::nullopt, std::nullopt};
    }
    if (p.family == "macdonald") {
        expect_keys(p, {"k"});
        return {name, macdonald(as_int(take(p, "k"))), std::nullopt, std::nullopt};
    }
    if (p.family == "hamming") {
        expect_keys(p, {"m"});
        return {name, hamming(as_int(take(p, "m"))), std::nullopt, std::nullopt};
    }
    if (p.family == "rm") {
        expect_keys(p, {"l", "m"});
        return {name, reed_muller(as_int(take(p, "l")), as_int(take(p, "m"))), std::nullopt, std::nullopt};
    }
    if (p.family == "bch") {
        expect_keys(p, {"n", "d"});
        auto c = bch(take(p, "n"), take(p, "d"));
        return {name, std::move(c.code), std::nullopt, std::move(c.generator)};
    }
    if (p.family == "qr") {
        expect_keys(p, {"n"});
        auto c = quadratic_residue(take(p, "n"));
        return {name, std::move(c.code), std::nullopt, std::move(c.generator)};
    }
    if (p.family == "golay23") {
        expect_keys(p, {});
        auto c = quadratic_residue(23);
        return {name, std::move(c.code), std::nullopt, std::move(c.generator)};
    }
    if (p.family == "golay24") {
        expect_keys(p, {});
        return {name, extended_golay24(), std::nullopt, std::nullopt};
    }
    if (p.family == "irrcyclic") {
        expect_keys(p, {"m", "N"});
        auto c = irreducible_cyclic(as_int(take(p, "m")), take(p, "N"));
        return {name, std::move(c.code), std::move(c.defining_set), std::nullopt};
    }
    throw std::invalid_argument("unknown code family '" + p.family + "'");
}

std::vector<std::string> standard_instances() {
    return {
        "simplex:k=2",      "simplex:k=3",      "simplex:k=4",     "simplex:k=5",     "simplex:k=6",
        "macdonald:k=3",    "macdonald:k=4",    "macdonald:k=5",   "macdonald:k=6",   "hamming:m=3",
        "hamming:m=4",      "hamming:m=5",      "rm:l=1,m=3",      "rm:l=1,m=4",      "rm:l=2,m=4",
        "rm:l=1,m=5",       "rm:l=2,m=5",       "rm:l=3,m=5",      "bch:n=7,d=3",     "bch:n=15,d=3",
        "bch:n=15,d=5",     "bch:n=15,d=7",     "bch:n=31,d=5",    "bch:n=31,d=7",    "qr:n=7",
        "qr:n=17",          "qr:n=23",          "qr:n=31",         "golay23",         "golay24",
        "irrcyclic:m=4,N=3", "irrcyclic:m=4,N=5", "irrcyclic:m=6,N=3", "irrcyclic:m=6,N=7",
        "irrcyclic:m=6,N=9", "irrcyclic:m=8,N=5", "irrcyclic:m=8,N=15", "irrcyclic:m=8,N=17",
    };
}

}  // namespace walshcode::catalog
