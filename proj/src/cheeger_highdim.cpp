#include "hodge/cheeger_highdim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hodge/spectral.hpp"
#include "hodge/variational.hpp"

namespace hodge {

DerivedSignedGraph derived_signed_graph(const SimplicialComplex& cx, int k,
                                        SignConvention conv) {
    if (k < 0 || k >= cx.dimension())
        throw ValidationError("derived signed graph needs 0 <= k < dim");
    const auto& sigmas = cx.level(k);
    std::vector<int> ids(sigmas.size());
    for (size_t i = 0; i < sigmas.size(); ++i) ids[i] = static_cast<int>(i);
    std::map<std::pair<int, int>, int> seen;  // joint-cofacet uniqueness
    std::vector<SignedEdge> edges;
    for (const auto& tau : cx.level(k + 1)) {
        std::vector<std::pair<int, int>> facets;  // (index, incidence sign)
        for (size_t j = 0; j < tau.size(); ++j) {
            Simplex f;
            for (size_t i = 0; i < tau.size(); ++i)
                if (i != j) f.push_back(tau[i]);
            facets.push_back({cx.index_of(f), j % 2 == 0 ? 1 : -1});
        }
        for (size_t a = 0; a < facets.size(); ++a)
            for (size_t b = a + 1; b < facets.size(); ++b) {
                auto key = std::minmax(facets[a].first, facets[b].first);
                if (seen.count({key.first, key.second}))
                    throw ContractError(
                        "two simplices share more than one cofacet");
                seen[{key.first, key.second}] = 1;
                int prod = facets[a].second * facets[b].second;
                int sign = conv == SignConvention::Smallest ? -prod : prod;
                edges.push_back({facets[a].first, facets[b].first, Rational(1),
                                 sign});
            }
    }
    DerivedSignedGraph out{k, conv, SignedGraph(ids, edges), RatVector{}};
    for (const auto& s : sigmas) out.sigma_degrees.push_back(cx.degree(s));
    return out;
}

bool verify_up_laplacian_identity(const SimplicialComplex& cx, int k,
                                  std::string* detail) {
    auto dg = derived_signed_graph(cx, k, SignConvention::Smallest);
    for (const auto& d : dg.sigma_degrees)
        if (d == 0) {
            if (detail) *detail = "level has a degree-0 simplex; identity skipped";
            return true;
        }
    RatMatrix up = normalized_up_laplacian_rat(cx, k);
    RatMatrix sg = dg.graph.laplacian_rat();
    size_t n = up.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational rhs = Rational(k + 1) * sg[i][j];
            if (i == j) rhs -= k;
            if (up[i][j] != rhs) {
                if (detail) {
                    std::ostringstream os;
                    os << "asc3 identity fails at entry (" << i << "," << j
                       << "): " << to_string(up[i][j]) << " vs "
                       << to_string(rhs);
                    *detail = os.str();
                }
                return false;
            }
        }
    return true;
}

namespace {

// coboundary lattice from the level below; level 0 uses the augmentation
// (constants), matching the multiset exclusion S != coboundary(T)
Lattice lower_coboundary_lattice(const SimplicialComplex& cx, int k) {
    size_t m = cx.level_size(k);
    IntMatrix cols;
    if (k == 0) {
        cols.assign(m, IntVector(1, Int(1)));
    } else {
        IntMatrix d = cx.coboundary_matrix(k - 1);  // m x |S_{k-1}|
        cols = d;
    }
    return lattice_from_columns(cols);
}

struct BoxEnumeration {
    // per coboundary-group data
    struct Group {
        Rational numerator;       // |delta m|_1, constant on the group
        Rational min_vol;         // min Vol over non-zero members
        bool has_nonzero = false;
        IntVector min_witness;
    };
    std::map<IntVector, Group> groups;
    bool zero_group_has_non_lattice_member = false;  // admissible cocycle
    IntVector non_lattice_cocycle;
};

BoxEnumeration enumerate_box(const SimplicialComplex& cx, int k, int bound,
                             const CheegerBudget& budget) {
    size_t m = cx.level_size(k);
    if (m == 0) throw ValidationError("empty level");
    if (m > budget.max_level_size)
        throw BudgetExceeded("level size " + std::to_string(m) +
                             " exceeds cheeger budget " +
                             std::to_string(budget.max_level_size));
    double total = std::pow(2.0 * bound + 1.0, static_cast<double>(m));
    if (total > static_cast<double>(budget.enum_budget))
        throw BudgetExceeded("multiset enumeration over budget");

    IntMatrix dup = cx.coboundary_matrix(k);
    size_t rows = dup.size();
    RatVector deg = degree_inner_product(cx, k).weights;
    Lattice lower = lower_coboundary_lattice(cx, k);

    BoxEnumeration out;
    std::vector<int> mvec(m, -bound);
    while (true) {
        IntVector cob(rows, Int(0));
        for (size_t r = 0; r < rows; ++r) {
            long long acc = 0;
            for (size_t i = 0; i < m; ++i)
                acc += static_cast<long long>(to_ll(dup[r][i])) * mvec[i];
            cob[r] = acc;
        }
        bool nonzero = false;
        Rational vol = 0;
        for (size_t i = 0; i < m; ++i) {
            if (mvec[i] != 0) nonzero = true;
            if (mvec[i] != 0) vol += deg[i] * (mvec[i] > 0 ? mvec[i] : -mvec[i]);
        }
        auto& grp = out.groups[cob];
        if (grp.numerator == 0 && !grp.has_nonzero) {
            Rational num = 0;
            for (const auto& c : cob) num += Rational(abs(c));
            grp.numerator = num;
        }
        if (nonzero) {
            if (!grp.has_nonzero || vol < grp.min_vol) {
                grp.min_vol = vol;
                grp.min_witness = IntVector(mvec.begin(), mvec.end());
            }
            grp.has_nonzero = true;
        }
        // admissibility only matters inside the zero-coboundary group: any
        // other multiset cannot be a coboundary (its own coboundary is 0)
        bool zero_cob = true;
        for (const auto& c : cob)
            if (c != 0) zero_cob = false;
        if (zero_cob && nonzero && !out.zero_group_has_non_lattice_member) {
            IntVector v(mvec.begin(), mvec.end());
            if (!lower.contains(v)) {
                out.zero_group_has_non_lattice_member = true;
                out.non_lattice_cocycle = v;
            }
        }
        size_t pos = 0;
        while (pos < m) {
            if (++mvec[pos] <= bound) break;
            mvec[pos] = -bound;
            ++pos;
        }
        if (pos == m) break;
    }
    return out;
}

bool coboundary_is_zero(const SimplicialComplex& cx, int k) {
    IntMatrix d = cx.coboundary_matrix(k);
    for (const auto& row : d)
        for (const auto& e : row)
            if (e != 0) return false;
    return true;
}

}  // namespace

CheegerConstant cheeger_h1(const SimplicialComplex& cx, int k,
                           const CheegerBudget& budget) {
    CheegerConstant out;
    if (k < 0 || k > cx.dimension()) throw ValidationError("level out of range");
    if (coboundary_is_zero(cx, k)) {
        out.value = 0;
        out.trivial = true;
        out.warning = "level has no cofacets; constant is trivially 0";
        return out;
    }
    auto en = enumerate_box(cx, k, budget.multiset_bound, budget);
    if (en.zero_group_has_non_lattice_member) {
        out.value = 0;
        out.witness = MultisetChain{k, en.non_lattice_cocycle};
        return out;
    }
    std::optional<Rational> best;
    IntVector witness;
    for (const auto& [cob, grp] : en.groups) {
        bool zero_cob = true;
        for (const auto& c : cob)
            if (c != 0) zero_cob = false;
        if (zero_cob) continue;  // members here are inadmissible or excluded
        if (!grp.has_nonzero) continue;
        Rational q = grp.numerator / grp.min_vol;
        if (!best || q < *best || (q == *best && grp.min_witness < witness)) {
            best = q;
            witness = grp.min_witness;
        }
    }
    if (!best)
        throw ValidationError("undefined constant: all multisets inadmissible");
    out.value = *best;
    out.witness = MultisetChain{k, witness};
    return out;
}

H2H4Result cheeger_h2_h4(const SimplicialComplex& cx, int k,
                         const CheegerBudget& budget) {
    H2H4Result out;
    if (k < 0 || k > cx.dimension()) throw ValidationError("level out of range");
    if (coboundary_is_zero(cx, k)) {
        out.h2 = out.h4 = 0;
        out.trivial = true;
        out.warning = "level has no cofacets; constants are trivially 0";
        return out;
    }
    size_t m = cx.level_size(k);
    int bound = budget.multiset_bound;
    if (m > budget.max_level_size)
        throw BudgetExceeded("level size exceeds cheeger budget");
    double total = std::pow(2.0 * bound + 1.0, static_cast<double>(m));
    if (total > static_cast<double>(budget.enum_budget))
        throw BudgetExceeded("cochain box enumeration over budget");

    IntMatrix dup = cx.coboundary_matrix(k);
    size_t rows = dup.size();
    RatVector deg = degree_inner_product(cx, k).weights;
    Lattice lower = lower_coboundary_lattice(cx, k);

    // canonical residue of v modulo the lattice (coset id)
    auto canonical = [&](const IntVector& v) {
        IntVector r = v;
        for (size_t j = 0; j < lower.pivot_rows.size(); ++j) {
            size_t pr = lower.pivot_rows[j];
            Int piv = lower.basis[pr][j];
            Int q;
            // floor division for a canonical residue in [0, piv)
            Int a = r[pr];
            q = a / piv;
            if (a % piv != 0 && ((a < 0) != (piv < 0))) q -= 1;
            if (q != 0)
                for (size_t i = 0; i < lower.rows; ++i)
                    r[i] -= q * lower.basis[i][j];
        }
        return r;
    };

    std::optional<Rational> best_h2;
    std::map<IntVector, std::pair<Rational, Rational>> classes;  // num, denom
    std::map<IntVector, Rational> coset_min_cache;

    std::vector<int> phi(m, -bound);
    while (true) {
        bool nonzero = false;
        for (size_t i = 0; i < m; ++i)
            if (phi[i] != 0) nonzero = true;
        if (nonzero) {
            IntVector v(phi.begin(), phi.end());
            IntVector cob(rows, Int(0));
            bool zero_cob = true;
            for (size_t r = 0; r < rows; ++r) {
                long long acc = 0;
                for (size_t i = 0; i < m; ++i)
                    acc += static_cast<long long>(to_ll(dup[r][i])) * phi[i];
                cob[r] = acc;
                if (acc != 0) zero_cob = false;
            }
            bool in_lattice = zero_cob ? lower.contains(v) : false;
            if (!in_lattice) {
                Rational num = 0;
                for (const auto& c : cob) num += Rational(abs(c));
                IntVector canon = canonical(v);
                auto it = coset_min_cache.find(canon);
                Rational denom;
                if (it != coset_min_cache.end()) {
                    denom = it->second;
                } else {
                    denom = lattice_coset_min_weighted_l1(lower, canon, deg);
                    coset_min_cache[canon] = denom;
                }
                if (denom <= 0)
                    throw ContractError("quotient norm vanished off the image");
                Rational q = num / denom;
                if (!best_h2 || q < *best_h2) best_h2 = q;
                auto cit = classes.find(canon);
                if (cit == classes.end()) classes[canon] = {num, denom};
            }
        }
        size_t pos = 0;
        while (pos < m) {
            if (++phi[pos] <= bound) break;
            phi[pos] = -bound;
            ++pos;
        }
        if (pos == m) break;
    }
    if (!best_h2)
        throw ValidationError("no integer cochain off the coboundary image");
    out.h2 = *best_h2;
    std::optional<Rational> best_h4;
    for (const auto& [canon, nd] : classes) {
        Rational q = nd.first / nd.second;
        if (!best_h4 || q < *best_h4) best_h4 = q;
    }
    out.h4 = *best_h4;
    return out;
}

CheegerConstant cheeger_h3(const SimplicialComplex& cx, int k,
                           const CheegerBudget& budget) {
    CheegerConstant out;
    if (k < 0 || k > cx.dimension()) throw ValidationError("level out of range");
    if (cx.level_size(k) > budget.max_level_size)
        throw BudgetExceeded("level size exceeds cheeger budget");
    auto res = one_laplacian_lambda_min_positive(cx, k);
    out.value = res.value;
    out.trivial = res.trivial;
    if (res.trivial)
        out.warning = "level has no cofacets; constant is trivially 0";
    return out;
}

CheegerEstimateReport cheeger_estimate_check(const SimplicialComplex& cx, int k,
                                             const CheegerBudget& budget) {
    for (const auto& s : cx.level(k))
        if (cx.degree(s) == 0)
            throw ValidationError("cheeger estimate needs positive degrees");
    CheegerEstimateReport rep;
    rep.h = cheeger_h1(cx, k, budget).value;
    auto spec = eigendecomposition(normalized_up_laplacian_rat(cx, k),
                                   degree_inner_product(cx, k));
    double ztol = 1e-8 * std::max(1.0, spec.lambda_max);
    rep.lambda_min_positive = 0;
    for (double ev : spec.eigenvalues)
        if (ev > ztol) {
            rep.lambda_min_positive = ev;
            break;
        }
    double h = to_double(rep.h);
    Rational vol = 0;
    for (const auto& s : cx.level(k)) vol += cx.degree(s);
    rep.lower_bound = h * h / std::max<double>(1.0, cx.level_size(k + 1));
    rep.upper_bound = to_double(vol) * h;
    rep.lower_ok = rep.lower_bound <= rep.lambda_min_positive + 1e-10;
    rep.upper_applicable = rep.h > 0;
    rep.upper_ok = !rep.upper_applicable ||
                   rep.lambda_min_positive <= rep.upper_bound + 1e-10;
    return rep;
}

TopSpectrumReport cheeger_hj_and_top_spectrum(const SimplicialComplex& cx,
                                              int k, int j,
                                              const CheegerBudget& budget) {
    if (j < 1) throw ValidationError("j must be >= 1");
    auto dg = derived_signed_graph(cx, k, SignConvention::Largest);
    size_t m = dg.graph.size();
    if (m > budget.max_level_size)
        throw BudgetExceeded("level size exceeds cheeger budget");
    size_t labels = 2 * static_cast<size_t>(j) + 1;
    double total = std::pow(static_cast<double>(labels), static_cast<double>(m));
    if (total > static_cast<double>(budget.enum_budget))
        throw BudgetExceeded("j-way enumeration over budget");

    // beta (bip2) over an assignment; volumes use the complex degrees
    auto beta = [&](const std::vector<int>& assign, int pair) -> Rational {
        Rational num = 0, vol = 0;
        bool any = false;
        int l1 = 2 * pair - 1, l2 = 2 * pair;
        for (size_t i = 0; i < m; ++i)
            if (assign[i] == l1 || assign[i] == l2) {
                vol += dg.sigma_degrees[i];
                any = true;
            }
        if (!any) throw ValidationError("empty pair");
        for (const auto& e : dg.graph.edges()) {
            int au = assign[e.u], av = assign[e.v];
            bool u_in = au == l1 || au == l2, v_in = av == l1 || av == l2;
            if (!u_in && !v_in) continue;
            if (u_in != v_in) {
                num += 1;  // boundary edge in Gamma_k
                continue;
            }
            bool same = au == av;
            if (same && e.sign < 0) num += 2;
            if (!same && e.sign > 0) num += 2;
        }
        return num / vol;
    };

    std::vector<int> assign(m, 0);
    std::optional<Rational> best;
    std::vector<int> best_assign;
    while (true) {
        bool canonical = true;
        {
            int max_pair_seen = 0;
            for (size_t i = 0; i < m && canonical; ++i) {
                int a = assign[i];
                if (a == 0) continue;
                int pair = (a + 1) / 2;
                if (pair > max_pair_seen + 1) canonical = false;
                if (pair == max_pair_seen + 1) {
                    if (a != 2 * pair - 1) canonical = false;
                    max_pair_seen = pair;
                }
            }
        }
        if (canonical) {
            std::vector<uint8_t> used(j + 1, 0);
            for (size_t i = 0; i < m; ++i)
                if (assign[i] != 0) used[(assign[i] + 1) / 2] = 1;
            bool all_used = true;
            for (int p = 1; p <= j; ++p) all_used = all_used && used[p];
            if (all_used) {
                Rational worst = 0;
                for (int p = 1; p <= j; ++p)
                    worst = std::max(worst, beta(assign, p));
                if (!best || worst < *best ||
                    (worst == *best && assign < best_assign)) {
                    best = worst;
                    best_assign = assign;
                }
            }
        }
        size_t pos = 0;
        while (pos < m) {
            if (++assign[pos] < static_cast<int>(labels)) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    if (!best) throw ValidationError("no admissible sub-bipartition family");

    TopSpectrumReport rep;
    rep.level = k;
    rep.j = j;
    rep.h_j = *best;
    auto spec = eigendecomposition(normalized_up_laplacian_rat(cx, k),
                                   degree_inner_product(cx, k));
    size_t count = spec.eigenvalues.size();
    if (static_cast<size_t>(j) > count)
        throw ValidationError("j exceeds the spectrum size");
    rep.lambda_top_j = spec.eigenvalues[count - j];
    rep.gap = (k + 2) - rep.lambda_top_j;
    rep.upper_ok = rep.gap <= 2 * to_double(rep.h_j) + 1e-8;
    double hj = to_double(rep.h_j);
    rep.empirical_lower_ratio =
        rep.gap > 1e-12 ? hj * hj / ((k + 1) * std::pow(j, 6) * rep.gap) : 0.0;
    for (int p = 1; p <= j; ++p) {
        std::vector<int> v1, v2;
        for (size_t i = 0; i < m; ++i) {
            if (best_assign[i] == 2 * p - 1) v1.push_back(static_cast<int>(i));
            if (best_assign[i] == 2 * p) v2.push_back(static_cast<int>(i));
        }
        rep.witness.push_back({v1, v2});
    }
    return rep;
}

DisorientabilityReport is_disorientable(const SimplicialComplex& cx) {
    int n = cx.dimension();
    DisorientabilityReport rep;
    const auto& tops = cx.level(n);
    rep.pure = true;
    for (int k = 0; k < n; ++k)
        for (const auto& s : cx.level(k))
            if (cx.degree(s) == 0) rep.pure = false;

    // parity constraints: for every (n-1)-simplex shared by several top
    // simplices, all induced orientations must agree
    size_t t = tops.size();
    std::vector<int> eps(t, 0);
    rep.disorientable = true;
    if (n == 0) {
        rep.disorientable = true;
        rep.orientation.assign(t, 1);
    } else {
        std::vector<std::vector<std::pair<size_t, int>>> adj(t);
        for (const auto& rho : cx.level(n - 1)) {
            std::vector<std::pair<size_t, int>> cof;
            for (size_t i = 0; i < t; ++i) {
                int s = cx.incidence_sign(rho, tops[i]);
                if (s != 0) cof.push_back({i, s});
            }
            for (size_t a = 1; a < cof.size(); ++a) {
                // eps_a * sign_a = eps_0 * sign_0
                int rel = cof[0].second * cof[a].second;
                adj[cof[0].first].push_back({cof[a].first, rel});
                adj[cof[a].first].push_back({cof[0].first, rel});
            }
        }
        for (size_t s = 0; s < t && rep.disorientable; ++s) {
            if (eps[s] != 0) continue;
            eps[s] = 1;
            std::vector<size_t> stack{s};
            while (!stack.empty() && rep.disorientable) {
                size_t v = stack.back();
                stack.pop_back();
                for (auto [u, rel] : adj[v]) {
                    int want = eps[v] * rel;
                    if (eps[u] == 0) {
                        eps[u] = want;
                        stack.push_back(u);
                    } else if (eps[u] != want) {
                        rep.disorientable = false;
                        std::ostringstream os;
                        os << "conflicting induced orientations between top "
                              "simplices "
                           << v << " and " << u;
                        rep.obstruction = os.str();
                    }
                }
            }
        }
        if (rep.disorientable) rep.orientation.assign(eps.begin(), eps.end());
    }

    if (n >= 1) {
        auto spec = eigendecomposition(normalized_up_laplacian_rat(cx, n - 1),
                                       degree_inner_product(cx, n - 1));
        rep.lambda_max =
            spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.back();
    } else {
        rep.lambda_max = 0;
    }
    rep.spectral_verdict = std::abs(rep.lambda_max - (n + 1)) <= 1e-8;
    return rep;
}

}  // namespace hodge
