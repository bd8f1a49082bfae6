#ifndef HODGE_MORSE_HPP
#define HODGE_MORSE_HPP

#include <map>
#include <string>
#include <vector>

#include "hodge/complex.hpp"

namespace hodge {

/// Validated discrete Morse data: the function, its arrow field, and the
/// critical cells per dimension.
struct MorseData {
    const SimplicialComplex* cx;
    std::map<Simplex, Rational> f;
    std::map<Simplex, Simplex> arrow;      // tail (dim k) -> head (dim k+1)
    std::map<Simplex, Simplex> arrow_rev;  // head -> tail
    std::vector<std::vector<Simplex>> critical;
    std::vector<long long> m_vector;

    bool is_critical(const Simplex& s) const {
        return !arrow.count(s) && !arrow_rev.count(s);
    }
};

// Checks the two at-most-one rules, the not-both consequence, and V-path
// acyclicity; throws ValidationError naming the offending simplex pair.
MorseData validate_morse(const SimplicialComplex& cx,
                         const std::map<Simplex, Rational>& f);

/// Boundary operator on critical cells from the recursive path rules.
struct FormanBoundary {
    std::vector<std::vector<Simplex>> critical;  // per dimension
    // matrices[k]: rows = critical (k-1)-cells, cols = critical k-cells
    std::vector<IntMatrix> matrices;
    std::vector<long long> homology() const;  // rational ranks
    bool squares_to_zero() const;             // over Z (hence over Z/2)
};
FormanBoundary forman_boundary(const MorseData& md);

struct MorseInequalityReport {
    std::vector<long long> m, b;
    bool weak_ok;         // m_k >= b_k
    bool euler_ok;        // alternating sums agree
    bool polynomial_ok;   // (sum (m_k - b_k) t^k) / (1+t) has coeffs in N
    std::vector<long long> q;  // the quotient coefficients
};
MorseInequalityReport morse_inequalities(const MorseData& md);

// Forman's extra condition for the combinatorial Witten deformation:
// a simplex below two cofacets must not exceed either of their values.
struct WittenConditionReport {
    bool holds;
    std::string violation;  // offending simplex and cofacets if not
};
WittenConditionReport forman_witten_condition(const MorseData& md);

// Morse-function file: lines "<vertices...> = value"; the listed simplices
// must form a face-closed complex and the function must be total on it.
std::pair<SimplicialComplex, std::map<Simplex, Rational>> parse_morse_file(
    const std::string& text);
std::string morse_to_text(const SimplicialComplex& cx,
                          const std::map<Simplex, Rational>& f);

}  // namespace hodge

#endif
