#ifndef HODGE_CHEEGER_HIGHDIM_HPP
#define HODGE_CHEEGER_HIGHDIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodge/complex.hpp"
#include "hodge/signed_graph.hpp"

namespace hodge {

enum class SignConvention {
    Smallest,  // asc2: s = -sgn * sgn, Laplacian identity with Delta_k^up
    Largest    // sign1: s = +sgn * sgn, used for the top-of-spectrum theory
};

/// Signed graph on the k-simplices: sigma ~ sigma' iff they share a (unique)
/// cofacet, signed by the chosen convention.
struct DerivedSignedGraph {
    int level;
    SignConvention convention;
    SignedGraph graph;           // vertices indexed like cx.level(level)
    RatVector sigma_degrees;     // deg in the complex (cofacet counts)
};
DerivedSignedGraph derived_signed_graph(const SimplicialComplex& cx, int k,
                                        SignConvention conv);

// Entrywise check of Delta_k^up = (k+1) Delta_{(Gamma_k,s)} - k Id in exact
// rationals (asc3); requires positive degrees on Sigma_k.
bool verify_up_laplacian_identity(const SimplicialComplex& cx, int k,
                                  std::string* detail = nullptr);

struct MultisetChain {
    int level;
    IntVector multiplicity;  // indexed like cx.level(level), entries in [-M, M]
};

struct CheegerConstant {
    Rational value;
    std::optional<MultisetChain> witness;
    bool trivial = false;  // level has no coboundary; reported 0 with warning
    std::string warning;
};

struct CheegerBudget {
    size_t max_level_size = 8;
    int multiset_bound = 2;  // M, also the h2/h4 box bound
    size_t enum_budget = 2000000;
};

// eq:combinatorial-h(S_d); exact enumeration over M-bounded multisets,
// excluding coboundaries of (k-1)-multisets upfront (level -1 carries the
// augmentation, so the exclusion at k = 0 removes the constants).
CheegerConstant cheeger_h1(const SimplicialComplex& cx, int k,
                           const CheegerBudget& budget = {});

struct H2H4Result {
    Rational h2, h4;
    bool trivial = false;
    std::string warning;
};
H2H4Result cheeger_h2_h4(const SimplicialComplex& cx, int k,
                         const CheegerBudget& budget = {});

// smallest positive eigenvalue of the up 1-Laplacian (exact, via the
// variational module); agrees with h1 on every complex within budget
CheegerConstant cheeger_h3(const SimplicialComplex& cx, int k,
                           const CheegerBudget& budget = {});

struct CheegerEstimateReport {
    Rational h;
    double lambda_min_positive;
    double lower_bound;   // h^2 / |Sigma_{k+1}|
    double upper_bound;   // Vol(Sigma_k) * h
    bool lower_ok, upper_ok;
    bool upper_applicable;  // h > 0
};
CheegerEstimateReport cheeger_estimate_check(const SimplicialComplex& cx, int k,
                                             const CheegerBudget& budget = {});

struct TopSpectrumReport {
    int level, j;
    Rational h_j;
    double lambda_top_j;    // lambda_{M+1-j} of the normalized up-Laplacian
    double gap;             // k+2 - lambda_{M+1-j}
    bool upper_ok;          // gap <= 2 h_j
    double empirical_lower_ratio;  // h_j^2 / ((k+1) j^6 gap), 0 if gap = 0
    std::vector<std::pair<std::vector<int>, std::vector<int>>> witness;
};
// h_j(Sigma_k) from eq (bip2) with the sign1 convention and complex degrees
// as volumes; checks the upper bound k+2-lambda <= 2 h_j
TopSpectrumReport cheeger_hj_and_top_spectrum(const SimplicialComplex& cx,
                                              int k, int j,
                                              const CheegerBudget& budget = {});

struct DisorientabilityReport {
    bool disorientable;
    bool pure;
    std::vector<int> orientation;  // +-1 per top simplex when disorientable
    std::string obstruction;       // description of a conflicting constraint
    double lambda_max;             // of the normalized up-Laplacian at n-1
    bool spectral_verdict;         // lambda_max == n+1 within 1e-8
};
DisorientabilityReport is_disorientable(const SimplicialComplex& cx);

}  // namespace hodge

#endif
