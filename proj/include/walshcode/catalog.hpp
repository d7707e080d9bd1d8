#ifndef WALSHCODE_CATALOG_HPP
#define WALSHCODE_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walshcode/defining_set.hpp"
#include "walshcode/gf2.hpp"
#include "walshcode/linear_code.hpp"
#include "walshcode/poly2.hpp"

namespace walshcode::catalog {

/// Orbit of a residue under multiplication by 2 modulo n.
struct CyclotomicCoset {
    std::uint32_t modulus = 0;
    std::uint32_t leader = 0;
    std::vector<std::uint32_t> members;  // ascending
};

/// Partition of {0, ..., n-1}; n odd, 3 <= n <= 4095.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n);

/// Least m >= 1 with 2^m = 1 (mod n), n odd.
int multiplicative_order_of_two(std::uint32_t n);

/// Smallest-encoded element of multiplicative order n in `field`.
std::uint32_t primitive_root_of_unity(const Field& field, std::uint32_t n);

/// prod over the conjugates c of a of (x - c); x for a = 0.
Poly2 minimal_polynomial(const Field& field, std::uint32_t a);

/// Rows x^i g(x), i < n - deg g, as length-n vectors (coefficient j in column j).
BinaryCode cyclic_code(const Poly2& generator, std::size_t n);

/// [2^k - 1, k, 2^(k-1)]: columns are 1..2^k-1 in ascending order, bit i of
/// the column in row i. 2 <= k <= 20.
BinaryCode simplex(int k);

/// simplex(k) with the column for the integer 1 removed; 3 <= k <= 20.
BinaryCode macdonald(int k);

/// Null space of the simplex(m) matrix; 3 <= m <= 12.
BinaryCode hamming(int m);

/// Evaluations over GF(2)^m of all monomials of degree <= l; 1 <= l < m <= 12.
BinaryCode reed_muller(int l, int m);

struct CyclicConstruction {
    Poly2 generator;
    BinaryCode code;
};

/// Narrow-sense BCH code of length n and designed distance delta.
CyclicConstruction bch(std::uint32_t n, std::uint32_t designed_distance);

/// Generator prod_{r in QR(n)} (x - gamma^r); n prime, n = +-1 (mod 8),
/// n <= 127 and ord_n(2) <= 20.
CyclicConstruction quadratic_residue(std::uint32_t n);

BinaryCode golay23();
/// golay23 with an overall parity bit appended to every generator row.
BinaryCode extended_golay24();

struct IrreducibleCyclic {
    DefiningSet defining_set;
    BinaryCode code;
};

/// D = {gamma^(N i) : 0 <= i < (2^m - 1) / N}, gamma the least primitive element.
IrreducibleCyclic irreducible_cyclic(int m, std::uint32_t N);

/// A catalog code resolved from its name string.
struct NamedCode {
    std::string name;
    BinaryCode code;
    std::optional<DefiningSet> defining_set;  ///< when the family is built from one
    std::optional<Poly2> generator_polynomial;
};

/// Parses "simplex:k=3", "macdonald:k=4", "hamming:m=3", "rm:l=1,m=4",
/// "bch:n=15,d=5", "qr:n=17", "golay23", "golay24", "irrcyclic:m=4,N=3".
/// Throws std::invalid_argument on unknown names or bad parameters.
NamedCode from_name(std::string_view spec);

/// True when `spec` names a catalog family (whether or not its parameters are valid).
bool is_catalog_name(std::string_view spec);

/// Desk-scale instance names used by the verification suites and reports.
std::vector<std::string> standard_instances();

}  // namespace walshcode::catalog

#endif  // WALSHCODE_CATALOG_HPP
