#ifndef HODGE_PL_MORSE_HPP
#define HODGE_PL_MORSE_HPP

#include <map>
#include <string>
#include <vector>

#include "hodge/complex.hpp"
#include "hodge/morse.hpp"

namespace hodge {

/// Order complex of a simplicial complex: one vertex per simplex of the
/// base, faces the inclusion chains.  Combinatorially the barycentric
/// subdivision.
struct OrderComplex {
    SimplicialComplex complex;          // vertex ids = positions in vertex_simplices
    std::vector<Simplex> vertex_simplices;  // id -> simplex of the base
    std::map<Simplex, int> id_of;
};
OrderComplex order_complex(const SimplicialComplex& base);

// Lovasz-extension value of a simplex function at a point of the geometric
// realization |S_Sigma| given in the base vertex coordinates (size N).
// Every threshold set must be a simplex of the base complex.
Rational lovasz_extension_on_realization(const SimplicialComplex& base,
                                         const std::map<Simplex, Rational>& f,
                                         const RatVector& point);

struct PlCriticalPoint {
    Simplex simplex;                 // base simplex = subdivision vertex
    std::vector<long long> multiplicity;  // m_k = b_k(closed lower star, lower link)
    bool critical;
    bool nondegenerate;              // sum m_k == 1
    int index;                       // the k with m_k != 0 (first, if several)
};

// PL criticality at every subdivision vertex for the vertex values f(sigma);
// the function values must be pairwise distinct.
std::vector<PlCriticalPoint> pl_critical_points(
    const OrderComplex& oc, const std::map<Simplex, Rational>& f);

struct PlDiscreteComparison {
    std::vector<long long> discrete_vector, pl_vector;
    bool vectors_match;
    bool pointwise_match;  // sigma critical discrete <=> 1_sigma critical PL with index dim sigma
    std::string mismatch;
};
PlDiscreteComparison compare_discrete_and_pl(const SimplicialComplex& cx,
                                             const std::map<Simplex, Rational>& f);

}  // namespace hodge

#endif
