#ifndef HODGE_COMPLEX_HPP
#define HODGE_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/exact_linalg.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/**
 * A simplex is a strictly increasing list of vertex ids; its dimension is
 * one less than the number of vertices.  The sorted ordering is the
 * canonical positive orientation.
 */
using Simplex = std::vector<int>;

struct OrientedSimplex {
    Simplex simplex;
    int sign = 1;  // +1 / -1 orientation class relative to sorted order
};

// Normalizes an arbitrary vertex ordering: sorts and tracks permutation
// parity.  Throws ValidationError on repeated vertices.
OrientedSimplex normalize_ordering(const std::vector<int>& vertices);

/**
 * A finite abstract simplicial complex with positive rational weights.
 * Face-closed by construction, immutable afterwards.  Default weights are
 * deg(sigma) below the top dimension (1 where the degree vanishes, which is
 * flagged) and 1 on the top dimension, realizing the normalized up-Laplacian
 * weighting at every level that has cofaces.
 */
class SimplicialComplex {
  public:
    static SimplicialComplex from_maximal_simplices(
        const std::vector<std::vector<int>>& maximal,
        const std::map<Simplex, Rational>& weights = {});

    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    size_t level_size(int k) const {
        return (k < 0 || k > dimension()) ? 0 : levels_[k].size();
    }
    const std::vector<Simplex>& level(int k) const;
    size_t total_simplices() const;

    bool contains(const Simplex& s) const;
    int index_of(const Simplex& s) const;  // -1 if absent

    // number of (k+1)-dimensional cofaces
    int degree(const Simplex& s) const;

    const Rational& weight(const Simplex& s) const;
    RatVector level_weights(int k) const;
    bool has_flagged_weights() const { return !flagged_.empty(); }
    const std::vector<Simplex>& flagged_zero_degree() const { return flagged_; }

    // signed incidence: 0 unless sigma is a facet of tau, else the
    // coefficient of sigma in the boundary of tau (both sorted-oriented)
    int incidence_sign(const Simplex& sigma, const Simplex& tau) const;

    // integer coboundary matrix D_k: rows tau in Sigma_{k+1}, cols sigma in
    // Sigma_k, entries = incidence signs.  Empty levels give 0 x 0 shapes.
    IntMatrix coboundary_matrix(int k) const;
    RatMatrix coboundary_matrix_rat(int k) const;

    // Rank-based homology oracle: b_k = dim C_k - rank d_k - rank d_{k+1},
    // exact over the rationals.  Independent of any spectral computation.
    std::vector<long long> betti_numbers() const;

    std::string to_text() const;

  private:
    std::vector<std::vector<Simplex>> levels_;
    std::vector<std::map<Simplex, int>> index_;
    std::map<Simplex, Rational> weights_;
    std::vector<Simplex> flagged_;
    void finalize(const std::map<Simplex, Rational>& user_weights);
};

// chain of the boundary of an oriented simplex, as (facet, coefficient) pairs
std::vector<std::pair<Simplex, int>> boundary_chain(const OrientedSimplex& s);

/**
 * A k-cochain: coefficients on positively oriented k-simplices, extended to
 * negative orientations by antisymmetry.
 */
class Cochain {
  public:
    Cochain(const SimplicialComplex* cx, int k)
        : cx_(cx), level_(k), coeffs_(cx->level_size(k), Rational(0)) {}
    int level() const { return level_; }
    Rational& operator[](size_t i) { return coeffs_[i]; }
    const Rational& operator[](size_t i) const { return coeffs_[i]; }
    size_t size() const { return coeffs_.size(); }
    Rational evaluate(const OrientedSimplex& s) const;
    const RatVector& coefficients() const { return coeffs_; }

  private:
    const SimplicialComplex* cx_;
    int level_;
    RatVector coeffs_;
};

// Text format: one maximal simplex per line (whitespace-separated vertex
// ids), '#' comments, optional lines "w <vertices...> <weight>".
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::string& path);

}  // namespace hodge

#endif
