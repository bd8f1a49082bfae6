#ifndef HODGE_EXACT_LINALG_HPP
#define HODGE_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "hodge/rational.hpp"

// Exact dense linear algebra over the rationals and the integers, sized for
// desk-scale complexes.  This is the machinery behind the rank-based homology
// oracle, the integer-lattice tests of the combinatorial Cheeger constants,
// and the exact LP used by the 1-Laplacian solver.

namespace hodge {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<Int>>;
using IntVector = std::vector<Int>;

inline RatMatrix rat_zeros(size_t r, size_t c) {
    return RatMatrix(r, RatVector(c, Rational(0)));
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix rat_transpose(const RatMatrix& a);
size_t rat_rank(RatMatrix a);

// Basis of the (right) null space of a, as columns.
std::vector<RatVector> rat_kernel_basis(const RatMatrix& a);

// One rational solution of a x = b, if any.
std::optional<RatVector> rat_solve(RatMatrix a, RatVector b);

size_t gf2_rank(std::vector<std::vector<uint8_t>> a);

// Column Hermite form of the lattice spanned by the columns of a.
// Returned columns are independent; pivot_rows[j] is the pivot row of
// column j, strictly increasing.
struct Lattice {
    IntMatrix basis;               // rows x r, column basis
    std::vector<size_t> pivot_rows;
    size_t rows = 0;
    bool contains(const IntVector& v) const;
    bool empty() const { return basis.empty() || basis[0].empty(); }
    size_t rank() const { return pivot_rows.size(); }
};
Lattice lattice_from_columns(const IntMatrix& a);

// Exact min of sum_i w_i |v_i + y_i| over lattice points y, by bounded DFS
// over the Hermite basis.  Weights must be positive.
Rational lattice_coset_min_weighted_l1(const Lattice& lat, const IntVector& v,
                                       const RatVector& w);

// Bounded-variable primal simplex, exact rational pivots (Bland's rule).
//   minimize c.x  subject to  A x = b,  lo <= x <= hi.
// Entries of lo/hi may be unbounded via the flags below.
struct LpProblem {
    RatMatrix a;
    RatVector b, c, lo, hi;
    std::vector<uint8_t> lo_finite, hi_finite;
};
struct LpResult {
    enum Status { Optimal, Infeasible, Unbounded } status;
    Rational objective;
    RatVector x;
};
LpResult lp_solve(const LpProblem& p);

// min over z in span(columns of K) of sum_i w_i |v_i - z_i|, exact.
Rational weighted_l1_dist_to_subspace(const RatMatrix& kernel_cols,
                                      const RatVector& v, const RatVector& w);

}  // namespace hodge

#endif
