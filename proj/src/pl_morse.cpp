#include "hodge/pl_morse.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hodge {

OrderComplex order_complex(const SimplicialComplex& base) {
    OrderComplex oc;
    for (int k = 0; k <= base.dimension(); ++k)
        for (const auto& s : base.level(k)) {
            oc.id_of[s] = static_cast<int>(oc.vertex_simplices.size());
            oc.vertex_simplices.push_back(s);
        }
    size_t t = oc.vertex_simplices.size();
    // comparability by inclusion
    auto subset = [](const Simplex& a, const Simplex& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<std::vector<int>> above(t);
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j)
            if (i != j &&
                oc.vertex_simplices[i].size() < oc.vertex_simplices[j].size() &&
                subset(oc.vertex_simplices[i], oc.vertex_simplices[j]))
                above[i].push_back(static_cast<int>(j));

    // maximal chains by depth-first extension
    std::vector<std::vector<int>> maximal;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int v) {
        chain.push_back(v);
        bool extended = false;
        for (int u : above[v]) {
            // only extend by covering steps reachable from the full chain
            extend(u);
            extended = true;
        }
        if (!extended) maximal.push_back(chain);
        chain.pop_back();
    };
    // start chains at minimal elements only (vertices of the base)
    for (size_t i = 0; i < t; ++i)
        if (oc.vertex_simplices[i].size() == 1) extend(static_cast<int>(i));
    oc.complex = SimplicialComplex::from_maximal_simplices(maximal);
    return oc;
}

Rational lovasz_extension_on_realization(const SimplicialComplex& base,
                                         const std::map<Simplex, Rational>& f,
                                         const RatVector& point) {
    // vertex coordinates indexed like base.level(0)
    const auto& verts = base.level(0);
    size_t n = verts.size();
    if (point.size() != n)
        throw ValidationError("point has the wrong number of coordinates");
    for (const auto& c : point)
        if (c < 0)
            throw ValidationError("realization points have non-negative coordinates");
    std::vector<Rational> vals(point.begin(), point.end());
    std::sort(vals.begin(), vals.end(), std::greater<Rational>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    Rational out = 0;
    auto level_set = [&](const Rational& threshold) {
        Simplex s;
        for (size_t i = 0; i < n; ++i)
            if (point[i] >= threshold) s.push_back(verts[i][0]);
        return s;
    };
    auto value_of = [&](const Simplex& s) -> Rational {
        auto it = f.find(s);
        if (it == f.end())
            throw ValidationError("point leaves the realization: level set not a simplex");
        return it->second;
    };
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        Simplex a = level_set(vals[i]);
        out += (vals[i] - vals[i + 1]) * value_of(a);
    }
    if (vals.back() > 0) {
        // the support is the whole vertex set
        Simplex full = level_set(vals.back());
        out += vals.back() * value_of(full);
    }
    return out;
}

std::vector<PlCriticalPoint> pl_critical_points(
    const OrderComplex& oc, const std::map<Simplex, Rational>& f) {
    // distinct values required
    {
        std::set<Rational> seen;
        for (const auto& s : oc.vertex_simplices) {
            auto it = f.find(s);
            if (it == f.end())
                throw ValidationError("function undefined on a base simplex");
            if (!seen.insert(it->second).second)
                throw ValidationError("PL criticality needs injective values");
        }
    }
    std::vector<PlCriticalPoint> out;
    const SimplicialComplex& sd = oc.complex;
    int t = static_cast<int>(oc.vertex_simplices.size());
    for (int v = 0; v < t; ++v) {
        const Simplex& sigma = oc.vertex_simplices[v];
        const Rational& fv = f.at(sigma);
        // lower star: subdivision simplices (chains) containing v whose other
        // vertices all have smaller values; A = their closure, B = link part
        std::vector<Simplex> a_cells, b_cells;  // as subdivision simplices
        std::set<Simplex> a_set, b_set;
        for (int k = 0; k <= sd.dimension(); ++k)
            for (const auto& c : sd.level(k)) {
                bool contains_v = std::binary_search(c.begin(), c.end(), v);
                bool lower = true;
                for (int u : c)
                    if (u != v && f.at(oc.vertex_simplices[u]) >= fv) lower = false;
                if (!lower) continue;
                if (contains_v)
                    a_set.insert(c);
                else {
                    // keep only link cells: must co-appear with v
                    Simplex with_v = c;
                    with_v.push_back(v);
                    std::sort(with_v.begin(), with_v.end());
                    if (sd.contains(with_v)) {
                        a_set.insert(c);
                        b_set.insert(c);
                    }
                }
            }
        // relative complex A/B: cells of A containing v
        std::vector<std::vector<Simplex>> rel(sd.dimension() + 2);
        for (const auto& c : a_set)
            if (!b_set.count(c)) rel[c.size() - 1].push_back(c);
        PlCriticalPoint pc;
        pc.simplex = sigma;
        pc.multiplicity.assign(sd.dimension() + 1, 0);
        // relative boundary ranks
        std::vector<size_t> rank(sd.dimension() + 3, 0);
        for (int k = 1; k <= sd.dimension(); ++k) {
            const auto& rows = rel[k - 1];
            const auto& cols = rel[k];
            if (rows.empty() || cols.empty()) continue;
            std::map<Simplex, int> rid;
            for (size_t i = 0; i < rows.size(); ++i)
                rid[rows[i]] = static_cast<int>(i);
            RatMatrix m = rat_zeros(rows.size(), cols.size());
            for (size_t c = 0; c < cols.size(); ++c)
                for (const auto& [face, coef] : boundary_chain({cols[c], 1})) {
                    auto it = rid.find(face);
                    if (it != rid.end()) m[it->second][c] = coef;
                }
            rank[k] = rat_rank(m);
        }
        long long total = 0;
        for (int k = 0; k <= sd.dimension(); ++k) {
            long long mk = static_cast<long long>(rel[k].size()) - rank[k] -
                           rank[k + 1];
            pc.multiplicity[k] = mk;
            total += mk;
        }
        pc.critical = false;
        pc.index = -1;
        for (int k = 0; k <= sd.dimension(); ++k)
            if (pc.multiplicity[k] != 0) {
                pc.critical = true;
                if (pc.index < 0) pc.index = k;
            }
        pc.nondegenerate = total == 1;
        out.push_back(pc);
    }
    return out;
}

PlDiscreteComparison compare_discrete_and_pl(
    const SimplicialComplex& cx, const std::map<Simplex, Rational>& f) {
    MorseData md = validate_morse(cx, f);
    OrderComplex oc = order_complex(cx);
    auto pl = pl_critical_points(oc, f);

    PlDiscreteComparison rep;
    rep.discrete_vector = md.m_vector;
    rep.pl_vector.assign(md.m_vector.size(), 0);
    rep.vectors_match = true;
    rep.pointwise_match = true;

    std::map<Simplex, const PlCriticalPoint*> by_simplex;
    for (const auto& pc : pl) by_simplex[pc.simplex] = &pc;

    for (int k = 0; k <= cx.dimension(); ++k)
        for (const auto& s : cx.level(k)) {
            const PlCriticalPoint& pc = *by_simplex.at(s);
            bool disc = md.is_critical(s);
            if (pc.critical) {
                for (size_t d = 0; d < pc.multiplicity.size(); ++d)
                    if (pc.multiplicity[d] != 0 && d < rep.pl_vector.size())
                        rep.pl_vector[d] += pc.multiplicity[d];
            }
            bool pl_crit_at_dim = pc.critical && pc.nondegenerate &&
                                  pc.index == k;
            if (disc != pl_crit_at_dim) {
                rep.pointwise_match = false;
                std::ostringstream os;
                os << "mismatch at simplex of dimension " << k
                   << ": discrete critical = " << disc
                   << ", PL critical(index " << k << ") = " << pl_crit_at_dim;
                rep.mismatch = os.str();
            }
        }
    for (size_t k = 0; k < rep.discrete_vector.size(); ++k)
        if (rep.discrete_vector[k] != rep.pl_vector[k]) rep.vectors_match = false;
    return rep;
}

}  // namespace hodge
