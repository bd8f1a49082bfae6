#include "hodge/signed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hodge {

SignedGraph::SignedGraph(std::vector<int> vertex_ids,
                         std::vector<SignedEdge> edges)
    : ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    std::sort(ids_.begin(), ids_.end());
    for (auto& e : edges_) {
        if (e.u == e.v) throw ValidationError("signed graph has a loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= static_cast<int>(ids_.size()))
            throw ValidationError("edge endpoint out of range");
        if (e.weight <= 0) throw ValidationError("edge weights must be positive");
        if (e.sign != 1 && e.sign != -1)
            throw ValidationError("edge sign must be +1 or -1");
    }
    std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw ValidationError("duplicate edge");
    deg_.assign(ids_.size(), Rational(0));
    for (const auto& e : edges_) {
        deg_[e.u] += e.weight;
        deg_[e.v] += e.weight;
    }
}

SignedGraph SignedGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<int, int> seen;
    std::vector<int> ids;
    struct Raw {
        int u, v, sign;
        Rational w;
    };
    std::vector<Raw> raw;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        std::string wtok, stok;
        if (!(ls >> u)) continue;
        if (!(ls >> v >> wtok >> stok))
            throw ValidationError("signed graph line needs: u v weight sign");
        int sign;
        if (stok == "+" || stok == "+1" || stok == "1")
            sign = 1;
        else if (stok == "-" || stok == "-1")
            sign = -1;
        else
            throw ValidationError("bad sign token: " + stok);
        raw.push_back({u, v, sign, parse_rational(wtok)});
        for (int x : {u, v})
            if (!seen.count(x)) {
                seen[x] = 1;
                ids.push_back(x);
            }
    }
    std::sort(ids.begin(), ids.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
    std::vector<SignedEdge> edges;
    for (const auto& r : raw)
        edges.push_back({idx[r.u], idx[r.v], r.w, r.sign});
    return SignedGraph(ids, edges);
}

SignedGraph SignedGraph::from_complex(const SimplicialComplex& cx) {
    if (cx.dimension() > 1)
        throw ValidationError("graph embedding needs a 1-dimensional complex");
    std::vector<int> ids;
    for (const auto& v : cx.level(0)) ids.push_back(v[0]);
    std::map<int, int> idx;
    for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
    std::vector<SignedEdge> edges;
    for (const auto& e : cx.level(1))
        edges.push_back({idx[e[0]], idx[e[1]], cx.weight(e), 1});
    return SignedGraph(ids, edges);
}

bool SignedGraph::connected() const {
    size_t n = size();
    if (n == 0) return true;
    std::vector<uint8_t> seen(n, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : edges_) {
            size_t other;
            if (static_cast<size_t>(e.u) == v)
                other = e.v;
            else if (static_cast<size_t>(e.v) == v)
                other = e.u;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == n;
}

RatMatrix SignedGraph::laplacian_rat() const {
    size_t n = size();
    for (size_t i = 0; i < n; ++i)
        if (deg_[i] == 0)
            throw ValidationError("signed laplacian undefined on isolated vertex " +
                                  std::to_string(ids_[i]));
    RatMatrix out = rat_zeros(n, n);
    for (size_t i = 0; i < n; ++i) out[i][i] = 1;
    for (const auto& e : edges_) {
        out[e.u][e.v] -= Rational(e.sign) * e.weight / deg_[e.u];
        out[e.v][e.u] -= Rational(e.sign) * e.weight / deg_[e.v];
    }
    return out;
}

SpectrumReport SignedGraph::spectrum() const {
    InnerProduct ip{0, deg_};
    return eigendecomposition(laplacian_rat(), ip);
}

SignedGraph SignedGraph::switched(const std::vector<uint8_t>& flip) const {
    std::vector<SignedEdge> edges = edges_;
    for (auto& e : edges)
        if (flip[e.u] != flip[e.v]) e.sign = -e.sign;
    return SignedGraph(ids_, edges);
}

namespace {

// two-coloring so that target(uv) = color(u)*color(v); target = sign for
// balance, -sign for antibalance
bool two_colorable(const SignedGraph& g, int flip_target,
                   std::vector<uint8_t>* witness) {
    size_t n = g.size();
    std::vector<int> color(n, 0);
    std::vector<std::vector<std::pair<size_t, int>>> adj(n);
    for (const auto& e : g.edges()) {
        int t = e.sign * flip_target;
        adj[e.u].push_back({static_cast<size_t>(e.v), t});
        adj[e.v].push_back({static_cast<size_t>(e.u), t});
    }
    for (size_t s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        color[s] = 1;
        std::vector<size_t> stack{s};
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (auto [u, t] : adj[v]) {
                int want = color[v] * t;
                if (color[u] == 0) {
                    color[u] = want;
                    stack.push_back(u);
                } else if (color[u] != want) {
                    return false;
                }
            }
        }
    }
    if (witness) {
        witness->assign(n, 0);
        for (size_t i = 0; i < n; ++i) (*witness)[i] = color[i] < 0 ? 1 : 0;
    }
    return true;
}

}  // namespace

bool SignedGraph::is_balanced(std::vector<uint8_t>* witness) const {
    return two_colorable(*this, 1, witness);
}

bool SignedGraph::is_antibalanced(std::vector<uint8_t>* witness) const {
    return two_colorable(*this, -1, witness);
}

std::string SignedGraph::to_text() const {
    std::ostringstream out;
    for (const auto& e : edges_)
        out << ids_[e.u] << " " << ids_[e.v] << " " << to_string(e.weight)
            << " " << (e.sign > 0 ? "1" : "-1") << "\n";
    return out.str();
}

Rational signed_bipartiteness_ratio(const SignedGraph& g,
                                    const std::vector<int>& assign) {
    Rational num = 0, vol = 0;
    bool any = false;
    for (size_t i = 0; i < g.size(); ++i)
        if (assign[i] != 0) {
            vol += g.degree(i);
            any = true;
        }
    if (!any) throw ValidationError("empty sub-bipartition");
    for (const auto& e : g.edges()) {
        int au = assign[e.u], av = assign[e.v];
        if (au == 0 && av == 0) continue;
        if (au == 0 || av == 0) {
            num += e.weight;  // boundary edge of V1 u V2
            continue;
        }
        bool same = au == av;
        if (same && e.sign < 0) num += 2 * e.weight;
        if (!same && e.sign > 0) num += 2 * e.weight;
    }
    return num / vol;
}

SignedCheegerResult signed_cheeger(const SignedGraph& g, int j,
                                   size_t enum_budget) {
    size_t n = g.size();
    if (j < 1) throw ValidationError("j must be >= 1");
    size_t labels = 2 * static_cast<size_t>(j) + 1;
    double total = std::pow(static_cast<double>(labels), static_cast<double>(n));
    if (total > static_cast<double>(enum_budget))
        throw BudgetExceeded("signed cheeger enumeration over budget: " +
                             std::to_string(total) + " assignments");

    std::vector<int> assign(n, 0);
    std::optional<Rational> best;
    std::vector<int> best_assign;
    // odometer over label vectors
    while (true) {
        // canonical form: pairs used in order of first appearance, and inside
        // a pair the smaller-labelled side appears first
        bool canonical = true;
        {
            int max_pair_seen = 0;
            std::vector<int> first_label_of_pair(j + 1, 0);
            for (size_t i = 0; i < n && canonical; ++i) {
                int a = assign[i];
                if (a == 0) continue;
                int pair = (a + 1) / 2;
                if (pair > max_pair_seen + 1) canonical = false;
                if (pair == max_pair_seen + 1) {
                    if (a != 2 * pair - 1) canonical = false;  // V1 side first
                    max_pair_seen = pair;
                }
            }
        }
        if (canonical) {
            // every pair must be non-empty
            std::vector<uint8_t> used(j + 1, 0);
            for (size_t i = 0; i < n; ++i)
                if (assign[i] != 0) used[(assign[i] + 1) / 2] = 1;
            bool all_used = true;
            for (int p = 1; p <= j; ++p) all_used = all_used && used[p];
            if (all_used) {
                Rational worst = 0;
                bool first = true;
                for (int p = 1; p <= j; ++p) {
                    std::vector<int> sub(n, 0);
                    for (size_t i = 0; i < n; ++i) {
                        if (assign[i] == 2 * p - 1) sub[i] = 1;
                        if (assign[i] == 2 * p) sub[i] = 2;
                    }
                    Rational b = signed_bipartiteness_ratio(g, sub);
                    if (first || b > worst) worst = b;
                    first = false;
                }
                if (!best || worst < *best ||
                    (worst == *best && assign < best_assign)) {
                    best = worst;
                    best_assign = assign;
                }
            }
        }
        // increment odometer
        size_t pos = 0;
        while (pos < n) {
            if (++assign[pos] < static_cast<int>(labels)) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    if (!best) throw ValidationError("no admissible sub-bipartition");
    SignedCheegerResult res;
    res.value = *best;
    for (int p = 1; p <= j; ++p) {
        SubBipartition sb;
        for (size_t i = 0; i < n; ++i) {
            if (best_assign[i] == 2 * p - 1) sb.v1.push_back(g.vertex_ids()[i]);
            if (best_assign[i] == 2 * p) sb.v2.push_back(g.vertex_ids()[i]);
        }
        res.witness.push_back(sb);
    }
    return res;
}

DualCheegerResult dual_cheeger(const SignedGraph& g, size_t enum_budget) {
    size_t n = g.size();
    double total = std::pow(3.0, static_cast<double>(n));
    if (total > static_cast<double>(enum_budget))
        throw BudgetExceeded("dual cheeger enumeration over budget");
    for (const auto& e : g.edges())
        if (e.sign != 1)
            throw ValidationError("dual cheeger constant is for unsigned graphs");

    std::vector<int> assign(n, 0);
    std::optional<Rational> best;        // max of 2E(V1,V2)/vol  (hh)
    std::optional<Rational> best_beta;   // min of the dual2 expression
    std::vector<int> best_assign;
    while (true) {
        size_t first_used = n;
        for (size_t i = 0; i < n && first_used == n; ++i)
            if (assign[i] != 0) first_used = i;
        // dedupe (V1,V2) <-> (V2,V1) by pinning the first used vertex to V1
        if (first_used < n && assign[first_used] == 1) {
            Rational cross = 0, internal = 0, boundary = 0, vol = 0;
            for (size_t i = 0; i < n; ++i)
                if (assign[i] != 0) vol += g.degree(i);
            for (const auto& e : g.edges()) {
                int au = assign[e.u], av = assign[e.v];
                if (au == 0 && av == 0) continue;
                if (au == 0 || av == 0)
                    boundary += e.weight;
                else if (au == av)
                    internal += e.weight;
                else
                    cross += e.weight;
            }
            Rational val = 2 * cross / vol;
            Rational beta = (2 * internal + boundary) / vol;
            if (!best || val > *best || (val == *best && assign < best_assign)) {
                best = val;
                best_assign = assign;
            }
            if (!best_beta || beta < *best_beta) best_beta = beta;
        }
        size_t pos = 0;
        while (pos < n) {
            if (++assign[pos] < 3) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    if (!best) throw ValidationError("empty graph");
    if (*best_beta != 1 - *best)
        throw ContractError("bipartiteness ratio identity beta = 1 - h violated");
    DualCheegerResult res;
    res.h_bar = *best;
    res.beta = *best_beta;
    for (size_t i = 0; i < n; ++i) {
        if (best_assign[i] == 1) res.witness.v1.push_back(g.vertex_ids()[i]);
        if (best_assign[i] == 2) res.witness.v2.push_back(g.vertex_ids()[i]);
    }
    return res;
}

}  // namespace hodge
