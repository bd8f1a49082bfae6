#include "hodge/variational.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "hodge/spectral.hpp"

namespace hodge {

SetFunction::SetFunction(int n, std::vector<Rational> table)
    : n_(n), table_(std::move(table)) {
    if (n < 0 || n > 20) throw ValidationError("ground set size out of range");
    if (table_.size() != (size_t(1) << n))
        throw ValidationError("set function table has wrong size");
    if (table_[0] != 0) throw ValidationError("set functions must have F(empty)=0");
}

SetFunction SetFunction::cut_function(const SignedGraph& g) {
    int n = static_cast<int>(g.size());
    std::vector<Rational> t(size_t(1) << n, Rational(0));
    for (uint32_t mask = 1; mask < t.size(); ++mask) {
        Rational cut = 0;
        for (const auto& e : g.edges()) {
            bool iu = mask & (1u << e.u), iv = mask & (1u << e.v);
            if (iu != iv) cut += e.weight;
        }
        t[mask] = cut;
    }
    return SetFunction(n, t);
}

SetFunction SetFunction::volume_function(const SignedGraph& g) {
    int n = static_cast<int>(g.size());
    std::vector<Rational> t(size_t(1) << n, Rational(0));
    for (uint32_t mask = 1; mask < t.size(); ++mask) {
        Rational vol = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vol += g.degree(v);
        t[mask] = vol;
    }
    return SetFunction(n, t);
}

SetFunction SetFunction::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<uint32_t, Rational>> entries;
    uint32_t maxmask = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string mtok, vtok;
        if (!(ls >> mtok)) continue;
        if (!(ls >> vtok)) throw ValidationError("set function line needs: mask value");
        uint32_t mask = static_cast<uint32_t>(std::stoul(mtok));
        entries.push_back({mask, parse_rational(vtok)});
        maxmask = std::max(maxmask, mask);
    }
    int n = 0;
    while ((uint32_t(1) << n) <= maxmask) ++n;
    std::vector<Rational> table(size_t(1) << n, Rational(0));
    std::vector<uint8_t> seen(table.size(), 0);
    for (auto& [m, v] : entries) {
        table[m] = v;
        seen[m] = 1;
    }
    for (size_t m = 0; m < table.size(); ++m)
        if (!seen[m])
            throw ValidationError("set function table is not exhaustive (missing mask " +
                                  std::to_string(m) + ")");
    return SetFunction(n, table);
}

Rational lovasz_extension(const SetFunction& f, const RatVector& x) {
    int n = f.ground_size();
    if (static_cast<int>(x.size()) != n)
        throw ValidationError("vector length does not match ground set");
    if (n == 0) return 0;
    std::vector<Rational> vals(x.begin(), x.end());
    std::sort(vals.begin(), vals.end(), std::greater<Rational>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    Rational out = 0;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
            if (x[v] >= vals[i]) mask |= 1u << v;  // = {x > vals[i+1]}
        out += (vals[i] - vals[i + 1]) * f.value(mask);
    }
    out += vals.back() * f.value(f.full_mask());
    return out;
}

double lovasz_extension(const SetFunction& f, const std::vector<double>& x) {
    RatVector rx;
    for (double v : x) {
        // exact evaluation on a dyadic approximation keeps this deterministic
        long long scaled = llround(v * (1LL << 32));
        rx.push_back(Rational(Int(scaled), Int(1LL << 32)));
    }
    return to_double(lovasz_extension(f, rx));
}

SubmodularityVerdict submodularity_and_convexity(const SetFunction& f,
                                                 uint64_t seed, int samples) {
    SubmodularityVerdict v;
    int n = f.ground_size();
    if (n > 12) throw BudgetExceeded("submodularity enumeration capped at n=12");
    v.submodular = true;
    // local characterization: F(A+i) + F(A+j) >= F(A+i+j) + F(A)
    for (uint32_t a = 0; a < (uint32_t(1) << n) && v.submodular; ++a)
        for (int i = 0; i < n && v.submodular; ++i) {
            if (a & (1u << i)) continue;
            for (int j = i + 1; j < n; ++j) {
                if (a & (1u << j)) continue;
                uint32_t ai = a | (1u << i), aj = a | (1u << j);
                if (f.value(ai) + f.value(aj) < f.value(ai | aj) + f.value(a)) {
                    v.submodular = false;
                    v.violating_pair = {ai, aj};
                    break;
                }
            }
        }
    // midpoint convexity of the extension on random rational segments
    std::mt19937_64 rng(seed);
    auto rand_point = [&]() {
        RatVector x;
        for (int i = 0; i < n; ++i)
            x.push_back(Rational(static_cast<int>(rng() % 2001) - 1000, 1000));
        return x;
    };
    v.midpoint_convex = true;
    for (int s = 0; s < samples; ++s) {
        RatVector a = rand_point(), b = rand_point(), mid(n);
        for (int i = 0; i < n; ++i) mid[i] = (a[i] + b[i]) / 2;
        Rational lhs = lovasz_extension(f, mid);
        Rational rhs = (lovasz_extension(f, a) + lovasz_extension(f, b)) / 2;
        // 1e-9 slack, expressed exactly
        if (lhs > rhs + Rational(1, 1000000000)) {
            v.midpoint_convex = false;
            v.convexity_violator = {a, b};
            break;
        }
    }
    // subset minimum vs sampled relaxation values on [0,1]^V
    v.subset_minimum = f.value(0);
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
        v.subset_minimum = std::min(v.subset_minimum, f.value(m));
    v.relaxation_consistent = true;
    for (int s = 0; s < samples; ++s) {
        RatVector x;
        for (int i = 0; i < n; ++i)
            x.push_back(Rational(static_cast<int>(rng() % 1001), 1000));
        if (lovasz_extension(f, x) < v.subset_minimum - Rational(1, 1000000000)) {
            v.relaxation_consistent = false;
            break;
        }
    }
    return v;
}

F1F2Result f1f2_constant(const SetFunction& f1, const SetFunction& f2) {
    int n = f1.ground_size();
    if (n != f2.ground_size())
        throw ValidationError("F1 and F2 must share a ground set");
    uint32_t full = f1.full_mask();
    for (uint32_t m = 1; m < full; ++m)
        if (f2.value(m) <= 0)
            throw ValidationError("F2 must be positive off the empty and full sets");
    std::optional<Rational> best;
    uint32_t witness = 0;
    for (uint32_t m = 1; m < full; ++m) {
        Rational denom = std::min(f2.value(m), f2.value(full ^ m));
        Rational q = f1.value(m) / denom;
        if (!best || q < *best) {
            best = q;
            witness = m;
        }
    }
    if (!best) throw ValidationError("ground set too small for the constant");
    return {*best, witness};
}

Rational f1f2_relaxed_quotient(const SetFunction& f1, const SetFunction& f2,
                               const RatVector& x) {
    int n = f1.ground_size();
    // min over t of F2^L(|x - t|): piecewise linear in t with breakpoints at
    // the x_i and their midpoints, so the exact minimum sits on one of those
    std::set<Rational> cand(x.begin(), x.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cand.insert((x[i] + x[j]) / 2);
    std::optional<Rational> denom;
    for (const auto& t : cand) {
        RatVector ax(n);
        for (int i = 0; i < n; ++i) ax[i] = x[i] >= t ? x[i] - t : t - x[i];
        Rational val = lovasz_extension(f2, ax);
        if (!denom || val < *denom) denom = val;
    }
    if (!denom || *denom <= 0)
        throw ValidationError("relaxed quotient needs a non-constant x");
    return lovasz_extension(f1, x) / *denom;
}

// ---------------------------------------------------------------------------
// p-Laplacian machinery.

namespace {

struct UpStructure {
    // numerator: sum over rows of |D f|^p (rows = (d+1)-simplices, weight 1)
    Eigen::MatrixXd d;
    Eigen::VectorXd deg;  // denominator weights (degree inner product)
};

UpStructure up_structure(const SimplicialComplex& cx, int d) {
    if (d < 0 || d > cx.dimension()) throw ValidationError("level out of range");
    UpStructure s;
    s.d = rat_to_mat(cx.coboundary_matrix_rat(d));
    s.deg = degree_inner_product(cx, d).to_vector();
    return s;
}

double p_norm_p(const Eigen::VectorXd& v, double p) {
    double acc = 0;
    for (double e : v) acc += std::pow(std::abs(e), p);
    return acc;
}

// min over t of sum_i w_i |f_i - t|^p (convex in t)
double center_min(const Eigen::VectorXd& f, const Eigen::VectorXd& w, double p,
                  double* tstar) {
    double lo = f.minCoeff(), hi = f.maxCoeff();
    if (p == 1.0) {
        // weighted median
        std::vector<std::pair<double, double>> fw;
        for (Eigen::Index i = 0; i < f.size(); ++i) fw.push_back({f[i], w[i]});
        std::sort(fw.begin(), fw.end());
        double total = 0;
        for (auto& [a, b] : fw) total += b;
        double acc = 0, t = fw.back().first;
        for (auto& [a, b] : fw) {
            acc += b;
            if (acc * 2 >= total) {
                t = a;
                break;
            }
        }
        if (tstar) *tstar = t;
        double val = 0;
        for (Eigen::Index i = 0; i < f.size(); ++i)
            val += w[i] * std::abs(f[i] - t);
        return val;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1 + std::abs(hi)); ++it) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        auto val = [&](double t) {
            double acc = 0;
            for (Eigen::Index i = 0; i < f.size(); ++i)
                acc += w[i] * std::pow(std::abs(f[i] - t), p);
            return acc;
        };
        if (val(m1) < val(m2))
            hi = m2;
        else
            lo = m1;
    }
    double t = 0.5 * (lo + hi);
    if (tstar) *tstar = t;
    double acc = 0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        acc += w[i] * std::pow(std::abs(f[i] - t), p);
    return acc;
}

Eigen::VectorXd a_p(const Eigen::VectorXd& v, double p) {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        out[i] = a == 0 ? 0.0 : std::pow(a, p - 1) * (v[i] > 0 ? 1 : -1);
    }
    return out;
}

}  // namespace

GraphCheegerResult graph_cheeger_exhaustive(const SignedGraph& g) {
    size_t n = g.size();
    if (n > 20) throw BudgetExceeded("exhaustive cheeger capped at 20 vertices");
    Rational total_vol = 0;
    for (size_t i = 0; i < n; ++i) total_vol += g.degree(i);
    std::optional<Rational> best;
    uint32_t witness = 0;
    for (uint32_t m = 1; m + 1 < (uint32_t(1) << n); ++m) {
        Rational cut = 0, vol = 0;
        for (const auto& e : g.edges()) {
            bool iu = m & (1u << e.u), iv = m & (1u << e.v);
            if (iu != iv) cut += e.weight;
        }
        for (size_t i = 0; i < n; ++i)
            if (m & (1u << i)) vol += g.degree(i);
        Rational mv = std::min(vol, total_vol - vol);
        if (mv == 0) continue;
        Rational q = cut / mv;
        if (!best || q < *best) {
            best = q;
            witness = m;
        }
    }
    if (!best) throw ValidationError("graph too small for a cheeger cut");
    return {*best, witness};
}

Rational sweep_cut_value(const SignedGraph& g,
                         const std::vector<double>& order_key,
                         uint32_t* witness) {
    size_t n = g.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return order_key[a] < order_key[b];
    });
    Rational total_vol = 0;
    for (size_t i = 0; i < n; ++i) total_vol += g.degree(i);
    std::optional<Rational> best;
    uint32_t mask = 0, best_mask = 0;
    for (size_t t = 0; t + 1 < n; ++t) {
        mask |= 1u << order[t];
        Rational cut = 0, vol = 0;
        for (const auto& e : g.edges()) {
            bool iu = mask & (1u << e.u), iv = mask & (1u << e.v);
            if (iu != iv) cut += e.weight;
        }
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vol += g.degree(i);
        Rational mv = std::min(vol, total_vol - vol);
        if (mv == 0) continue;
        Rational q = cut / mv;
        if (!best || q < *best) {
            best = q;
            best_mask = mask;
        }
    }
    if (!best) throw ValidationError("sweep needs at least two vertices");
    if (witness) *witness = best_mask;
    return *best;
}

namespace {

// exact eigen-inclusion certificate for p=1 at an indicator witness:
// exists xi in Sgn(delta f), zeta in Sgn(f) with  D^T xi = lambda deg . zeta
bool certify_one_lap_inclusion(const SimplicialComplex& cx,
                               const SignedGraph& g, uint32_t set_mask,
                               const Rational& lambda) {
    (void)cx;
    size_t n = g.size();
    const auto& edges = g.edges();
    size_t m = edges.size();
    // f = indicator of set_mask; delta f on edge (u,v), u < v: f(v) - f(u)
    // variables: xi_e for edges with delta f = 0 (box [-1,1]);
    //            zeta_v for vertices with f = 0 (box [-1,1])
    // constraints per vertex: sum_e +-xi_e = lambda * deg_v * zeta_v (or fixed 1)
    std::vector<int> fixed_xi(m, 2);  // 2 = free
    for (size_t e = 0; e < m; ++e) {
        bool iu = set_mask & (1u << edges[e].u), iv = set_mask & (1u << edges[e].v);
        if (iu != iv) fixed_xi[e] = (iv ? 1 : -1);  // sign of f(v)-f(u)
    }
    std::vector<size_t> free_xi, free_zeta;
    for (size_t e = 0; e < m; ++e)
        if (fixed_xi[e] == 2) free_xi.push_back(e);
    for (size_t v = 0; v < n; ++v)
        if (!(set_mask & (1u << v))) free_zeta.push_back(v);

    size_t nv = free_xi.size() + free_zeta.size();
    LpProblem p;
    p.a = rat_zeros(n, nv);
    p.b.assign(n, Rational(0));
    p.c.assign(nv, Rational(0));
    p.lo.assign(nv, Rational(-1));
    p.hi.assign(nv, Rational(1));
    p.lo_finite.assign(nv, 1);
    p.hi_finite.assign(nv, 1);
    // rows: D^T xi - lambda deg zeta = rhs
    for (size_t v = 0; v < n; ++v) {
        Rational rhs = 0;
        if (set_mask & (1u << v)) rhs = lambda * g.degree(v);  // zeta_v = +1
        p.b[v] = rhs;
    }
    for (size_t e = 0; e < m; ++e) {
        // column signs: d(delta f)(e)/df: -1 at u, +1 at v; adjoint row v gets
        // coefficient +1 * xi_e, row u gets -1 * xi_e (weights e.weight)
        Rational wu = -edges[e].weight, wv = edges[e].weight;
        if (fixed_xi[e] != 2) {
            p.b[edges[e].u] -= wu * fixed_xi[e];
            p.b[edges[e].v] -= wv * fixed_xi[e];
        }
    }
    for (size_t i = 0; i < free_xi.size(); ++i) {
        size_t e = free_xi[i];
        p.a[edges[e].u][i] = -edges[e].weight;
        p.a[edges[e].v][i] = edges[e].weight;
    }
    for (size_t i = 0; i < free_zeta.size(); ++i) {
        size_t v = free_zeta[i];
        p.a[v][free_xi.size() + i] = -lambda * g.degree(v);
    }
    auto res = lp_solve(p);
    return res.status == LpResult::Optimal;
}

}  // namespace

PEigenpair p_laplacian_eigen(const SimplicialComplex& cx, int d, double p,
                             int k, uint64_t seed, int restarts,
                             int iterations) {
    if (p < 1.0 || p > 8.0) throw ValidationError("p must lie in [1, 8]");
    if (k != 1 && k != 2) throw ValidationError("only the first two minimax eigenvalues");
    UpStructure st = up_structure(cx, d);
    size_t n = cx.level_size(d);
    PEigenpair out;
    out.d = d;
    out.p = p;
    out.k = k;

    if (k == 1) {
        // lambda_1 = 0 whenever the coboundary has a kernel (always for d=0)
        auto kern = rat_kernel_basis(cx.coboundary_matrix_rat(d));
        if (!kern.empty()) {
            out.lambda = 0;
            out.f = Eigen::VectorXd(n);
            for (size_t i = 0; i < n; ++i) out.f[i] = to_double(kern[0][i]);
            out.residual = 0;
            out.certified = true;
            out.certificate = "coboundary kernel element";
            return out;
        }
        throw ValidationError("lambda_1 > 0 cases are not supported");
    }

    if (d != 0)
        throw ValidationError("second minimax eigenvalue implemented for d=0");

    // linear reference for p=2 and as a warm start elsewhere
    RatMatrix nl = normalized_up_laplacian_rat(cx, 0);
    auto linear = eigendecomposition(nl, degree_inner_product(cx, 0));
    Eigen::VectorXd warm;
    double lambda2_linear = 0;
    if (n >= 2) {
        lambda2_linear = linear.eigenvalues[1];
        warm = linear.eigenvectors.col(1);
    }

    auto quotient = [&](const Eigen::VectorXd& f, double* tstar) {
        double den = center_min(f, st.deg, p, tstar);
        if (den <= 0) return std::numeric_limits<double>::infinity();
        Eigen::VectorXd df = st.d * f;
        return p_norm_p(df, p) / den;
    };

    std::mt19937_64 rng(seed);
    double best_q = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_f;
    SignedGraph g = SignedGraph::from_complex(cx);

    for (int r = 0; r < restarts; ++r) {
        Eigen::VectorXd f(n);
        if (r == 0 && warm.size() == static_cast<Eigen::Index>(n)) {
            f = warm;
        } else {
            std::mt19937_64 local(seed + 1 + r);
            for (size_t i = 0; i < n; ++i)
                f[i] = std::uniform_real_distribution<double>(-1, 1)(local);
        }
        double t0;
        double q = quotient(f, &t0);
        for (int it = 0; it < iterations; ++it) {
            double tstar;
            double den = center_min(f, st.deg, p, &tstar);
            if (den <= 0) break;
            Eigen::VectorXd fc = f.array() - tstar;
            Eigen::VectorXd df = st.d * f;
            double num = p_norm_p(df, p);
            double qq = num / den;
            // subgradient of the quotient
            Eigen::VectorXd gn = st.d.transpose() * a_p(df, p) * p;
            Eigen::VectorXd gd =
                (st.deg.array() * a_p(fc, p).array()).matrix() * p;
            Eigen::VectorXd grad = (gn - qq * gd) / den;
            double gnorm = grad.norm();
            if (gnorm < 1e-14) break;
            double step = 0.5 * f.norm() / (gnorm * std::sqrt(1.0 + it));
            f -= step * grad;
            // renormalize: center and scale so den = 1
            center_min(f, st.deg, p, &tstar);
            f = f.array() - tstar;
            double dn = center_min(f, st.deg, p, nullptr);
            if (dn > 0) f /= std::pow(dn, 1.0 / p);
            double q2 = quotient(f, &tstar);
            if (q2 < q) q = q2;
        }
        if (q < best_q) {
            best_q = q;
            double tstar;
            quotient(f, &tstar);
            best_f = f.array() - tstar;
        }
        // threshold rounding for p = 1: sweep the iterate's ordering
        if (p == 1.0 && best_f.size() == static_cast<Eigen::Index>(n) && n >= 2) {
            std::vector<double> key(best_f.data(), best_f.data() + n);
            uint32_t wmask;
            Rational sval = sweep_cut_value(g, key, &wmask);
            if (to_double(sval) < best_q) {
                best_q = to_double(sval);
                Eigen::VectorXd ind = Eigen::VectorXd::Zero(n);
                for (size_t i = 0; i < n; ++i)
                    if (wmask & (1u << i)) ind[i] = 1;
                best_f = ind;
            }
        }
    }

    out.f = best_f;
    out.lambda = best_q;

    if (p == 2.0 && n >= 2) {
        if (std::abs(best_q - lambda2_linear) <= 1e-8 * std::max(1.0, lambda2_linear) ||
            best_q > lambda2_linear) {
            out.lambda = lambda2_linear;
            out.f = warm;
            out.certified = true;
            out.certificate = "matches linear eigensolver";
        }
    } else if (p == 1.0 && n >= 2) {
        // recompute the best sweep over the final ordering and certify the
        // eigen-inclusion at the indicator witness with an exact LP
        std::vector<double> key(best_f.data(), best_f.data() + n);
        uint32_t wmask = 0;
        Rational sval = sweep_cut_value(g, key, &wmask);
        double sv = to_double(sval);
        if (sv <= out.lambda + 1e-12) {
            out.lambda = sv;
            Eigen::VectorXd ind = Eigen::VectorXd::Zero(n);
            for (size_t i = 0; i < n; ++i)
                if (wmask & (1u << i)) ind[i] = 1;
            out.f = ind;
            if (certify_one_lap_inclusion(cx, g, wmask, sval)) {
                out.certified = true;
                out.certificate = "exact eigen-inclusion at threshold witness";
            }
        }
    }
    if (!out.certified) out.certificate = "NON-CERTIFIED best found";

    // componentwise inclusion residual (p > 1): (1/deg) D^T a_p(Df) = lambda a_p(f)
    if (p > 1.0 && out.f.size() > 0) {
        Eigen::VectorXd df = st.d * out.f;
        Eigen::VectorXd lhs =
            (st.d.transpose() * a_p(df, p)).array() / st.deg.array();
        Eigen::VectorXd rhs = out.lambda * a_p(out.f, p);
        out.residual = (lhs - rhs).cwiseAbs().maxCoeff();
    }
    return out;
}

OneLapMinPositive one_laplacian_lambda_min_positive(const SimplicialComplex& cx,
                                                    int k) {
    OneLapMinPositive out;
    RatMatrix d = cx.coboundary_matrix_rat(k);
    size_t m = cx.level_size(k);
    if (d.empty() || m == 0) {
        out.value = 0;
        out.trivial = true;
        return out;
    }
    bool all_zero = true;
    for (const auto& row : d)
        for (const auto& e : row)
            if (e != 0) all_zero = false;
    if (all_zero) {
        out.value = 0;
        out.trivial = true;
        return out;
    }
    RatVector w = degree_inner_product(cx, k).weights;

    // K = ker delta; the quotient dualizes to 1 / max{ sigma(g) : g in G },
    // G = { g : g orth K, |g_i| <= w_i }, sigma(g) = max{ <g,f> : |delta f|_1 <= 1 }.
    auto kern = rat_kernel_basis(d);
    size_t kd = kern.size();
    size_t r = m - kd;  // dim of G's affine hull
    if (r == 0) {
        out.value = 0;
        out.trivial = true;
        return out;
    }

    // vertex enumeration of G: pick r coordinates pinned to +-w, solve the
    // kernel-orthogonality equalities for the rest
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = i;
    std::vector<size_t> comb(r);
    std::set<RatVector> vertices;

    std::function<void(size_t, size_t)> choose = [&](size_t start, size_t depth) {
        if (depth == r) {
            // sign patterns over the chosen coordinates
            for (uint32_t sbits = 0; sbits < (uint32_t(1) << r); ++sbits) {
                // unknowns: g at non-chosen coordinates (m - r = kd many)
                std::vector<size_t> unknown;
                std::vector<uint8_t> chosen(m, 0);
                for (size_t t = 0; t < r; ++t) chosen[comb[t]] = 1;
                for (size_t i = 0; i < m; ++i)
                    if (!chosen[i]) unknown.push_back(i);
                RatMatrix a = rat_zeros(kd, unknown.size());
                RatVector b(kd, Rational(0));
                for (size_t ki = 0; ki < kd; ++ki) {
                    for (size_t ui = 0; ui < unknown.size(); ++ui)
                        a[ki][ui] = kern[ki][unknown[ui]];
                    Rational rhs = 0;
                    for (size_t t = 0; t < r; ++t) {
                        Rational gv = (sbits & (1u << t)) ? w[comb[t]] : -w[comb[t]];
                        rhs -= kern[ki][comb[t]] * gv;
                    }
                    b[ki] = rhs;
                }
                if (unknown.size() != kd) continue;
                auto sol = rat_solve(a, b);
                if (!sol) continue;
                // require uniqueness: the kd x kd system must be full rank
                if (rat_rank(a) != kd) continue;
                RatVector g(m);
                for (size_t t = 0; t < r; ++t)
                    g[comb[t]] = (sbits & (1u << t)) ? w[comb[t]] : -w[comb[t]];
                bool ok = true;
                for (size_t ui = 0; ui < unknown.size(); ++ui) {
                    g[unknown[ui]] = (*sol)[ui];
                    if (abs((*sol)[ui]) > w[unknown[ui]]) ok = false;
                }
                if (ok) vertices.insert(g);
            }
            return;
        }
        for (size_t i = start; i + (r - depth) <= m; ++i) {
            comb[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    if (vertices.empty())
        throw ContractError("dual polytope vertex enumeration found nothing");

    // sigma(g) via LP: max <g,f>, delta f = y+ - y-, sum(y+ + y-) <= 1
    size_t rows = d.size();
    Rational best_sigma = 0;
    for (const auto& g : vertices) {
        size_t nv = m + 2 * rows + 1;  // f free, y+, y-, slack
        LpProblem p;
        p.a = rat_zeros(rows + 1, nv);
        p.b.assign(rows + 1, Rational(0));
        p.c.assign(nv, Rational(0));
        p.lo.assign(nv, Rational(0));
        p.hi.assign(nv, Rational(0));
        p.lo_finite.assign(nv, 1);
        p.hi_finite.assign(nv, 0);
        for (size_t i = 0; i < m; ++i) {
            p.lo_finite[i] = 0;  // f free
            p.c[i] = -g[i];      // maximize <g,f>
        }
        for (size_t rr = 0; rr < rows; ++rr) {
            for (size_t i = 0; i < m; ++i) p.a[rr][i] = d[rr][i];
            p.a[rr][m + rr] = -1;
            p.a[rr][m + rows + rr] = 1;
        }
        for (size_t rr = 0; rr < rows; ++rr) {
            p.a[rows][m + rr] = 1;
            p.a[rows][m + rows + rr] = 1;
        }
        p.a[rows][m + 2 * rows] = 1;
        p.b[rows] = 1;
        auto res = lp_solve(p);
        if (res.status != LpResult::Optimal)
            throw ContractError("support function LP failed");
        Rational sigma = -res.objective;
        if (sigma > best_sigma) best_sigma = sigma;
    }
    if (best_sigma <= 0)
        throw ContractError("support function maximum must be positive");
    out.value = 1 / best_sigma;
    return out;
}

}  // namespace hodge
