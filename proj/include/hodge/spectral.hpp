#ifndef HODGE_SPECTRAL_HPP
#define HODGE_SPECTRAL_HPP

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "hodge/complex.hpp"

namespace hodge {

/// Diagonal positive scalar product on the k-cochains.
struct InnerProduct {
    int level = 0;
    RatVector weights;
    Eigen::VectorXd to_vector() const;
};

InnerProduct unit_inner_product(const SimplicialComplex& cx, int k);
// the complex's own weights
InnerProduct weight_inner_product(const SimplicialComplex& cx, int k);
// deg(sigma) with fallback 1 on degree-0 simplices (flagged on the complex)
InnerProduct degree_inner_product(const SimplicialComplex& cx, int k);

enum class LapVariant { Up, Down, Full };
LapVariant parse_variant(const std::string& name);
std::string variant_name(LapVariant v);

// Weighted Laplacian at level k, exact in rationals.  `ips` supplies one
// inner product per level 0..n (entries for unused levels are ignored).
RatMatrix laplacian_rat(const SimplicialComplex& cx, int k, LapVariant variant,
                        const std::vector<InnerProduct>& ips);
std::vector<InnerProduct> default_inner_products(const SimplicialComplex& cx);

// Normalized up-Laplacian: weights deg(sigma) on level k, 1 on level k+1.
// Spectrum lies in [0, k+2]; zero multiplicity is the Betti number of the
// coboundary kernel at this level.
RatMatrix normalized_up_laplacian_rat(const SimplicialComplex& cx, int k);

// deg(v) f(v) - sum w_uv f(u) on a 1-dimensional complex
RatMatrix algebraic_graph_laplacian(const SimplicialComplex& cx);

Eigen::MatrixXd rat_to_mat(const RatMatrix& a);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors;     // columns, orthonormal in the product
    int zero_multiplicity = 0;
    double lambda_max = 0.0;
    double max_residual = 0.0;
};

// Dense solve of the generalized symmetric problem L v = lambda v where L is
// self-adjoint in the diagonal product `w` (checked to 1e-12 relative).
// Residuals are bounded by 1e-9 * ||L||; violations raise ContractError.
SpectrumReport eigendecomposition(const Eigen::MatrixXd& lap,
                                  const Eigen::VectorXd& w);
SpectrumReport eigendecomposition(const RatMatrix& lap, const InnerProduct& ip);

// Witten-deformed Laplacian: the coboundary is conjugated by diag(e^{t f}),
// the adjoint taken in the complex's inner products.  f must be defined on
// every simplex; t * max|f| > 300 raises a rescaling error.
Eigen::MatrixXd witten_deformed_laplacian(const SimplicialComplex& cx, int k,
                                          const std::map<Simplex, Rational>& f,
                                          double t);

struct WittenDiagnostic {
    double t;
    std::vector<double> eigenvalues;
    int low_count;        // eigenvalues below 0.5 * smallest "large" one
    double split_value;   // the smallest "large" eigenvalue, 0 if no split
    int kernel_dim;
};
// runs the deformation over a t-grid and reports the low-eigenvalue counts
std::vector<WittenDiagnostic> witten_diagnostics(
    const SimplicialComplex& cx, int k, const std::map<Simplex, Rational>& f,
    const std::vector<double>& ts);

}  // namespace hodge

#endif
