#ifndef HODGE_VARIATIONAL_HPP
#define HODGE_VARIATIONAL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/complex.hpp"
#include "hodge/signed_graph.hpp"

namespace hodge {

/// Set function on P({0..n-1}) given by its full value table; F(empty) = 0.
class SetFunction {
  public:
    SetFunction(int n, std::vector<Rational> table);
    static SetFunction cut_function(const SignedGraph& g);
    static SetFunction volume_function(const SignedGraph& g);
    static SetFunction parse(const std::string& text);

    int ground_size() const { return n_; }
    const Rational& value(uint32_t mask) const { return table_[mask]; }
    uint32_t full_mask() const { return (uint32_t(1) << n_) - 1; }

  private:
    int n_;
    std::vector<Rational> table_;
};

// Threshold-integral Lovasz extension; exact on rational points.
Rational lovasz_extension(const SetFunction& f, const RatVector& x);
double lovasz_extension(const SetFunction& f, const std::vector<double>& x);

struct SubmodularityVerdict {
    bool submodular;
    std::optional<std::pair<uint32_t, uint32_t>> violating_pair;
    bool midpoint_convex;  // spot-checked on random segments
    std::optional<std::pair<RatVector, RatVector>> convexity_violator;
    bool relaxation_consistent;  // sampled F^L never below the subset minimum
    Rational subset_minimum;
};
SubmodularityVerdict submodularity_and_convexity(const SetFunction& f,
                                                 uint64_t seed = 1,
                                                 int samples = 200);

struct F1F2Result {
    Rational value;
    uint32_t witness_mask;
};
// min over A not in {empty, V} of F1(A)/min(F2(A), F2(V\A))
F1F2Result f1f2_constant(const SetFunction& f1, const SetFunction& f2);

// exact minimum over t of F2^L(|x - t 1|); used by the theorem check
Rational f1f2_relaxed_quotient(const SetFunction& f1, const SetFunction& f2,
                               const RatVector& x);

struct PEigenpair {
    int d = 0;
    double p = 2;
    int k = 1;
    double lambda = 0;
    Eigen::VectorXd f;
    double residual = 0;   // componentwise inclusion residual
    bool certified = false;
    std::string certificate;  // how the value was certified, if it was
};

// Minimax eigenvalues of the up p-Laplacian at level d (k = 1 or 2) computed
// by projected (sub)gradient descent with a deterministic restart ladder.
// p = 2 values are certified against the linear solver; p = 1, d = 0 values
// carry an exact eigen-inclusion certificate at the threshold witness.
PEigenpair p_laplacian_eigen(const SimplicialComplex& cx, int d, double p,
                             int k, uint64_t seed = 1, int restarts = 64,
                             int iterations = 4000);

// Smallest positive eigenvalue of the up 1-Laplacian at level k, computed
// exactly: the quotient |delta f|_1 / dist_{1,deg}(f, ker delta) is dualized
// to maximizing a support function over a polytope, evaluated at its
// vertices with rational LPs.  Returns 0 (with has_warning) when the
// coboundary vanishes identically.
struct OneLapMinPositive {
    Rational value;
    bool trivial = false;  // no coboundary at this level
};
OneLapMinPositive one_laplacian_lambda_min_positive(const SimplicialComplex& cx,
                                                    int k);

// exhaustive graph Cheeger constant (che17b) and the sweep cut (che17a)
struct GraphCheegerResult {
    Rational value;
    uint32_t witness_mask;
};
GraphCheegerResult graph_cheeger_exhaustive(const SignedGraph& g);
Rational sweep_cut_value(const SignedGraph& g, const std::vector<double>& order_key,
                         uint32_t* witness = nullptr);

}  // namespace hodge

#endif
