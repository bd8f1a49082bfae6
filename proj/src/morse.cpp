#include "hodge/morse.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hodge {

namespace {

std::string simplex_str(const Simplex& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

}  // namespace

MorseData validate_morse(const SimplicialComplex& cx,
                         const std::map<Simplex, Rational>& f) {
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const auto& s : cx.level(k))
            if (!f.count(s))
                throw ValidationError("morse function undefined on " +
                                      simplex_str(s));

    MorseData md;
    md.cx = &cx;
    md.f = f;
    for (int k = 0; k <= cx.dimension(); ++k) {
        for (const auto& s : cx.level(k)) {
            const Rational& fs = f.at(s);
            std::vector<Simplex> up, down;
            for (const auto& tau : cx.level(k + 1))
                if (cx.incidence_sign(s, tau) != 0 && f.at(tau) <= fs)
                    up.push_back(tau);
            if (k > 0)
                for (const auto& rho : cx.level(k - 1))
                    if (cx.incidence_sign(rho, s) != 0 && f.at(rho) >= fs)
                        down.push_back(rho);
            if (up.size() > 1)
                throw ValidationError("not a Morse function: " + simplex_str(s) +
                                      " has two cofaces with no larger value, e.g. " +
                                      simplex_str(up[0]) + " and " +
                                      simplex_str(up[1]));
            if (down.size() > 1)
                throw ValidationError("not a Morse function: " + simplex_str(s) +
                                      " has two facets with no smaller value, e.g. " +
                                      simplex_str(down[0]) + " and " +
                                      simplex_str(down[1]));
            if (up.size() == 1 && down.size() == 1)
                throw ValidationError(
                    "not a Morse function: " + simplex_str(s) +
                    " pairs both upward with " + simplex_str(up[0]) +
                    " and downward with " + simplex_str(down[0]));
            if (up.size() == 1) {
                md.arrow[s] = up[0];
                md.arrow_rev[up[0]] = s;
            }
        }
    }
    // a head cannot be a tail (follows from the rules; checked anyway)
    for (const auto& [tail, head] : md.arrow)
        if (md.arrow.count(head))
            throw ValidationError("arrow head " + simplex_str(head) +
                                  " is also an arrow tail");

    // V-path acyclicity per dimension
    for (int k = 0; k <= cx.dimension(); ++k) {
        const auto& lv = cx.level(k);
        std::map<Simplex, int> id;
        for (size_t i = 0; i < lv.size(); ++i) id[lv[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> next(lv.size());
        for (size_t i = 0; i < lv.size(); ++i) {
            auto it = md.arrow.find(lv[i]);
            if (it == md.arrow.end()) continue;
            const Simplex& tau = it->second;
            for (const auto& rho : cx.level(k))
                if (rho != lv[i] && cx.incidence_sign(rho, tau) != 0)
                    next[i].push_back(id[rho]);
        }
        std::vector<int> state(lv.size(), 0);
        std::function<void(int)> dfs = [&](int v) {
            state[v] = 1;
            for (int u : next[v]) {
                if (state[u] == 1)
                    throw ValidationError("arrow field has a closed V-path through " +
                                          simplex_str(lv[u]));
                if (state[u] == 0) dfs(u);
            }
            state[v] = 2;
        };
        for (size_t i = 0; i < lv.size(); ++i)
            if (state[i] == 0) dfs(static_cast<int>(i));
    }

    md.critical.assign(cx.dimension() + 1, {});
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const auto& s : cx.level(k))
            if (md.is_critical(s)) md.critical[k].push_back(s);
    md.m_vector.clear();
    for (const auto& lv : md.critical)
        md.m_vector.push_back(static_cast<long long>(lv.size()));
    return md;
}

namespace {

// recursive path expansion per the three rules; weight carries the
// orientation: incidence signs along the way, negated at arrow traversals
void expand_paths(const MorseData& md, const Simplex& cur,
                  const Simplex& entry, long long weight,
                  std::map<Simplex, long long>& acc, int depth) {
    if (depth > 10000)
        throw ContractError("path expansion revisits a simplex; internal cycle");
    const SimplicialComplex& cx = *md.cx;
    for (const auto& [rho, coef] : boundary_chain({cur, 1})) {
        if (rho == entry) continue;
        long long w = weight * coef;
        if (md.is_critical(rho)) {
            acc[rho] += w;
            continue;
        }
        auto it = md.arrow.find(rho);
        if (it == md.arrow.end()) continue;  // downward noncritical: ignore
        const Simplex& nxt = it->second;
        int backsign = cx.incidence_sign(rho, nxt);
        expand_paths(md, nxt, rho, -w * backsign, acc, depth + 1);
    }
}

}  // namespace

FormanBoundary forman_boundary(const MorseData& md) {
    const SimplicialComplex& cx = *md.cx;
    FormanBoundary fb;
    fb.critical = md.critical;
    int n = cx.dimension();
    fb.matrices.assign(n + 1, {});
    for (int k = 1; k <= n; ++k) {
        const auto& rows = fb.critical[k - 1];
        const auto& cols = fb.critical[k];
        std::map<Simplex, int> row_id;
        for (size_t i = 0; i < rows.size(); ++i)
            row_id[rows[i]] = static_cast<int>(i);
        IntMatrix mat(rows.size(), IntVector(cols.size(), Int(0)));
        for (size_t c = 0; c < cols.size(); ++c) {
            std::map<Simplex, long long> acc;
            expand_paths(md, cols[c], {}, 1, acc, 0);
            for (const auto& [rho, w] : acc)
                mat[row_id[rho]][c] = w;
        }
        fb.matrices[k] = mat;
    }
    if (!fb.squares_to_zero())
        throw ContractError("forman boundary does not square to zero");
    return fb;
}

bool FormanBoundary::squares_to_zero() const {
    for (size_t k = 1; k + 1 < matrices.size(); ++k) {
        const IntMatrix& a = matrices[k];      // (k-1) x k
        const IntMatrix& b = matrices[k + 1];  // k x (k+1)
        if (a.empty() || b.empty()) continue;
        size_t rows = a.size(), mid = b.size(), cols = b[0].size();
        if (mid == 0 || cols == 0 || rows == 0) continue;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                Int acc = 0;
                for (size_t l = 0; l < mid; ++l) acc += a[i][l] * b[l][j];
                if (acc != 0) return false;
            }
    }
    return true;
}

std::vector<long long> FormanBoundary::homology() const {
    size_t levels = critical.size();
    std::vector<size_t> rank(levels + 1, 0);
    for (size_t k = 1; k < levels; ++k) {
        const IntMatrix& m = matrices[k];
        if (m.empty() || m[0].empty()) {
            rank[k] = 0;
            continue;
        }
        RatMatrix rm(m.size(), RatVector(m[0].size()));
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m[0].size(); ++j) rm[i][j] = Rational(m[i][j]);
        rank[k] = rat_rank(rm);
    }
    std::vector<long long> b(levels);
    for (size_t k = 0; k < levels; ++k)
        b[k] = static_cast<long long>(critical[k].size()) - rank[k] -
               rank[k + 1];
    return b;
}

MorseInequalityReport morse_inequalities(const MorseData& md) {
    MorseInequalityReport rep;
    rep.m = md.m_vector;
    rep.b = md.cx->betti_numbers();
    size_t n = std::max(rep.m.size(), rep.b.size());
    rep.m.resize(n, 0);
    rep.b.resize(n, 0);
    rep.weak_ok = true;
    for (size_t k = 0; k < n; ++k)
        if (rep.m[k] < rep.b[k]) rep.weak_ok = false;
    long long am = 0, ab = 0;
    for (size_t k = 0; k < n; ++k) {
        long long sgn = (k % 2 == 0) ? 1 : -1;
        am += sgn * rep.m[k];
        ab += sgn * rep.b[k];
    }
    rep.euler_ok = am == ab;
    // divide sum (m_k - b_k) t^k by (1 + t)
    std::vector<long long> c(n);
    for (size_t k = 0; k < n; ++k) c[k] = rep.m[k] - rep.b[k];
    rep.q.assign(n, 0);
    long long carry = 0;
    rep.polynomial_ok = true;
    for (size_t k = 0; k < n; ++k) {
        long long qk = c[k] - carry;
        rep.q[k] = qk;
        carry = qk;
        if (qk < 0) rep.polynomial_ok = false;
    }
    if (carry != 0) rep.polynomial_ok = false;  // nonzero remainder
    while (!rep.q.empty() && rep.q.back() == 0) rep.q.pop_back();
    return rep;
}

WittenConditionReport forman_witten_condition(const MorseData& md) {
    const SimplicialComplex& cx = *md.cx;
    WittenConditionReport rep;
    rep.holds = true;
    for (int k = 0; k < cx.dimension(); ++k)
        for (const auto& s : cx.level(k)) {
            std::vector<Simplex> cof;
            for (const auto& tau : cx.level(k + 1))
                if (cx.incidence_sign(s, tau) != 0) cof.push_back(tau);
            if (cof.size() < 2) continue;
            for (const auto& tau : cof)
                if (md.f.at(s) > md.f.at(tau)) {
                    rep.holds = false;
                    rep.violation = "f" + simplex_str(s) + " exceeds f" +
                                    simplex_str(tau) +
                                    " under a doubly shared face";
                    return rep;
                }
        }
    return rep;
}

std::pair<SimplicialComplex, std::map<Simplex, Rational>> parse_morse_file(
    const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<Simplex, Rational> f;
    std::vector<std::vector<int>> simplices;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok)
                throw ValidationError("morse line needs '=': " + line);
            continue;
        }
        std::istringstream lhs(line.substr(0, eq));
        std::vector<int> verts;
        int v;
        while (lhs >> v) verts.push_back(v);
        if (verts.empty()) throw ValidationError("morse line without a simplex");
        std::istringstream rhs(line.substr(eq + 1));
        std::string vtok;
        if (!(rhs >> vtok)) throw ValidationError("morse line without a value");
        Simplex s = normalize_ordering(verts).simplex;
        f[s] = parse_rational(vtok);
        simplices.push_back(verts);
    }
    if (simplices.empty()) throw ValidationError("empty morse file");
    SimplicialComplex cx = SimplicialComplex::from_maximal_simplices(simplices);
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const auto& s : cx.level(k))
            if (!f.count(s))
                throw ValidationError(
                    "morse file omits a face required for closure: " +
                    simplex_str(s));
    return {std::move(cx), std::move(f)};
}

std::string morse_to_text(const SimplicialComplex& cx,
                          const std::map<Simplex, Rational>& f) {
    std::ostringstream out;
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const auto& s : cx.level(k)) {
            for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << " = " << to_string(f.at(s)) << "\n";
        }
    return out.str();
}

}  // namespace hodge
