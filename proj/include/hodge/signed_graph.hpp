#ifndef HODGE_SIGNED_GRAPH_HPP
#define HODGE_SIGNED_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodge/complex.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

struct SignedEdge {
    int u, v;  // indices into the vertex list, u < v
    Rational weight;
    int sign;  // +1 or -1
};

/// Weighted loop-free graph with +-1 edge signs.
class SignedGraph {
  public:
    SignedGraph(std::vector<int> vertex_ids, std::vector<SignedEdge> edges);

    static SignedGraph parse(const std::string& text);
    // 1-dimensional complexes embed with every edge signed +1
    static SignedGraph from_complex(const SimplicialComplex& cx);

    size_t size() const { return ids_.size(); }
    const std::vector<int>& vertex_ids() const { return ids_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    Rational degree(size_t vi) const { return deg_[vi]; }
    bool connected() const;

    // f(v) - (1/deg v) sum s(vv') w(vv') f(v'); requires positive degrees
    RatMatrix laplacian_rat() const;
    SpectrumReport spectrum() const;

    SignedGraph switched(const std::vector<uint8_t>& flip_set) const;

    // Balance: a +-1 vertex coloring turns all signs positive (negative for
    // antibalance).  The witness is the switching set that realizes it.
    bool is_balanced(std::vector<uint8_t>* witness = nullptr) const;
    bool is_antibalanced(std::vector<uint8_t>* witness = nullptr) const;

    std::string to_text() const;

  private:
    std::vector<int> ids_;
    std::vector<SignedEdge> edges_;
    RatVector deg_;
};

struct SubBipartition {
    std::vector<int> v1, v2;  // vertex ids
};

// signed bipartiteness ratio of a sub-bipartition given as the assignment
// vector (0 = unused, 1 = V1, 2 = V2); the pair must be non-empty
Rational signed_bipartiteness_ratio(const SignedGraph& g,
                                    const std::vector<int>& assign);

struct SignedCheegerResult {
    Rational value;
    std::vector<SubBipartition> witness;  // j sub-bipartitions
};

// Exact j-way signed Cheeger constant by enumeration of all assignments of
// vertices to {unused, V1, V2, ..., V_{2j-1}, V_{2j}}, ties broken by the
// lexicographically smallest assignment.  Refuses when (2j+1)^n exceeds the
// budget.
SignedCheegerResult signed_cheeger(const SignedGraph& g, int j,
                                   size_t enum_budget = 8000000);

struct DualCheegerResult {
    Rational h_bar;              // dual Cheeger constant (hh)
    Rational beta;               // bipartiteness ratio (dual2); = 1 - h_bar
    SubBipartition witness;
};
DualCheegerResult dual_cheeger(const SignedGraph& g,
                               size_t enum_budget = 8000000);

}  // namespace hodge

#endif
