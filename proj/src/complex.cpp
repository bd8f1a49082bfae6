#include "hodge/complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hodge {

OrientedSimplex normalize_ordering(const std::vector<int>& vertices) {
    if (vertices.empty()) throw ValidationError("empty simplex");
    std::vector<int> v = vertices;
    int sign = 1;
    // insertion sort, counting transpositions
    for (size_t i = 1; i < v.size(); ++i) {
        for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1])
            throw ValidationError("malformed simplex: repeated vertex " +
                                  std::to_string(v[i]));
    return {v, sign};
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    const std::vector<std::vector<int>>& maximal,
    const std::map<Simplex, Rational>& weights) {
    if (maximal.empty()) throw ValidationError("complex needs at least one simplex");
    std::set<Simplex> all;
    for (const auto& raw : maximal) {
        for (int v : raw)
            if (v < 0) throw ValidationError("negative vertex id");
        Simplex s = normalize_ordering(raw).simplex;
        // face closure by subset enumeration
        size_t n = s.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            Simplex f;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) f.push_back(s[i]);
            all.insert(f);
        }
    }
    SimplicialComplex cx;
    int dim = 0;
    for (const auto& s : all) dim = std::max<int>(dim, (int)s.size() - 1);
    cx.levels_.assign(dim + 1, {});
    cx.index_.assign(dim + 1, {});
    for (const auto& s : all) cx.levels_[s.size() - 1].push_back(s);
    for (int k = 0; k <= dim; ++k) {
        std::sort(cx.levels_[k].begin(), cx.levels_[k].end());
        for (size_t i = 0; i < cx.levels_[k].size(); ++i)
            cx.index_[k][cx.levels_[k][i]] = static_cast<int>(i);
    }
    cx.finalize(weights);
    return cx;
}

void SimplicialComplex::finalize(const std::map<Simplex, Rational>& user) {
    int n = dimension();
    for (int k = 0; k <= n; ++k) {
        for (const auto& s : levels_[k]) {
            auto it = user.find(s);
            if (it != user.end()) {
                if (it->second <= 0)
                    throw ValidationError("weights must be positive");
                weights_[s] = it->second;
                continue;
            }
            if (k == n) {
                weights_[s] = 1;
            } else {
                int d = degree(s);
                if (d == 0) {
                    weights_[s] = 1;
                    flagged_.push_back(s);
                } else {
                    weights_[s] = d;
                }
            }
        }
    }
    for (const auto& [s, w] : user)
        if (!contains(s))
            throw ValidationError("weight given for a simplex not in the complex");
}

const std::vector<Simplex>& SimplicialComplex::level(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k > dimension()) return empty;
    return levels_[k];
}

size_t SimplicialComplex::total_simplices() const {
    size_t t = 0;
    for (const auto& lv : levels_) t += lv.size();
    return t;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s) >= 0;
}

int SimplicialComplex::index_of(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dimension()) return -1;
    auto it = index_[k].find(s);
    return it == index_[k].end() ? -1 : it->second;
}

int SimplicialComplex::degree(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    if (k + 1 > dimension()) return 0;
    int d = 0;
    for (const auto& tau : levels_[k + 1])
        if (incidence_sign(s, tau) != 0) ++d;
    return d;
}

const Rational& SimplicialComplex::weight(const Simplex& s) const {
    auto it = weights_.find(s);
    if (it == weights_.end()) throw ValidationError("simplex not in complex");
    return it->second;
}

RatVector SimplicialComplex::level_weights(int k) const {
    RatVector w;
    for (const auto& s : level(k)) w.push_back(weight(s));
    return w;
}

int SimplicialComplex::incidence_sign(const Simplex& sigma,
                                      const Simplex& tau) const {
    if (sigma.size() + 1 != tau.size()) return 0;
    // sigma must be tau minus one vertex
    size_t i = 0, j = 0;
    int removed = -1;
    while (j < tau.size()) {
        if (i < sigma.size() && sigma[i] == tau[j]) {
            ++i;
            ++j;
        } else {
            if (removed >= 0) return 0;
            removed = static_cast<int>(j);
            ++j;
        }
    }
    if (i != sigma.size() || removed < 0) return 0;
    return removed % 2 == 0 ? 1 : -1;
}

IntMatrix SimplicialComplex::coboundary_matrix(int k) const {
    const auto& lo = level(k);
    const auto& hi = level(k + 1);
    IntMatrix d(hi.size(), IntVector(lo.size(), Int(0)));
    for (size_t r = 0; r < hi.size(); ++r)
        for (size_t c = 0; c < lo.size(); ++c)
            d[r][c] = incidence_sign(lo[c], hi[r]);
    return d;
}

RatMatrix SimplicialComplex::coboundary_matrix_rat(int k) const {
    IntMatrix d = coboundary_matrix(k);
    RatMatrix out(d.size(), RatVector(d.empty() ? 0 : d[0].size()));
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d[i].size(); ++j) out[i][j] = Rational(d[i][j]);
    return out;
}

std::vector<long long> SimplicialComplex::betti_numbers() const {
    int n = dimension();
    std::vector<size_t> rank(n + 2, 0);  // rank[k] = rank of d_k : C_k -> C_{k-1}
    for (int k = 1; k <= n; ++k) rank[k] = rat_rank(coboundary_matrix_rat(k - 1));
    std::vector<long long> b(n + 1);
    for (int k = 0; k <= n; ++k)
        b[k] = static_cast<long long>(level_size(k)) - rank[k] - rank[k + 1];
    return b;
}

std::string SimplicialComplex::to_text() const {
    // maximal simplices = those with degree 0
    std::ostringstream out;
    for (int k = dimension(); k >= 0; --k)
        for (const auto& s : level(k))
            if (degree(s) == 0) {
                for (size_t i = 0; i < s.size(); ++i)
                    out << (i ? " " : "") << s[i];
                out << "\n";
            }
    for (const auto& [s, w] : weights_) {
        // only emit weights that differ from the defaults
        int k = static_cast<int>(s.size()) - 1;
        Rational def =
            (k == dimension()) ? Rational(1)
                               : (degree(s) == 0 ? Rational(1) : Rational(degree(s)));
        if (w != def) {
            out << "w";
            for (int v : s) out << " " << v;
            out << " " << hodge::to_string(w) << "\n";
        }
    }
    return out.str();
}

std::vector<std::pair<Simplex, int>> boundary_chain(const OrientedSimplex& os) {
    std::vector<std::pair<Simplex, int>> out;
    const Simplex& s = os.simplex;
    if (s.size() <= 1) return out;  // boundary of a vertex is the zero chain
    for (size_t j = 0; j < s.size(); ++j) {
        Simplex f;
        for (size_t i = 0; i < s.size(); ++i)
            if (i != j) f.push_back(s[i]);
        int c = (j % 2 == 0 ? 1 : -1) * os.sign;
        out.push_back({f, c});
    }
    return out;
}

Rational Cochain::evaluate(const OrientedSimplex& s) const {
    int idx = cx_->index_of(s.simplex);
    if (idx < 0 || static_cast<int>(s.simplex.size()) - 1 != level_)
        throw ValidationError("cochain evaluated off its level");
    return coeffs_[idx] * s.sign;
}

SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> maximal;
    std::map<Simplex, Rational> weights;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "w") {
            std::vector<std::string> parts;
            std::string t;
            while (ls >> t) parts.push_back(t);
            if (parts.size() < 2)
                throw ValidationError("weight line needs a simplex and a value");
            std::vector<int> verts;
            for (size_t i = 0; i + 1 < parts.size(); ++i)
                verts.push_back(std::stoi(parts[i]));
            weights[normalize_ordering(verts).simplex] =
                parse_rational(parts.back());
        } else {
            std::vector<int> verts{std::stoi(tok)};
            int v;
            while (ls >> v) verts.push_back(v);
            maximal.push_back(verts);
        }
    }
    if (maximal.empty()) throw ValidationError("no simplices in input");
    return SimplicialComplex::from_maximal_simplices(maximal, weights);
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_complex(ss.str());
}

}  // namespace hodge
