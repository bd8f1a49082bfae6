#include "hodge/floer.hpp"

#include <algorithm>
#include <sstream>

#include "hodge/exact_linalg.hpp"

namespace hodge {

namespace {

std::string kind_letter(FloerKind k) {
    switch (k) {
        case FloerKind::RestPoint: return "p";
        case FloerKind::Orbit: return "O";
        default: return "H";
    }
}

}  // namespace

FloerComplex FloerComplex::parse(const std::string& text) {
    FloerComplex fc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "conn") {
            std::string a, b;
            if (!(ls >> a >> b))
                throw ValidationError("conn line needs two generator names");
            fc.add_connection(a, b);
        } else if (tok == "p" || tok == "O" || tok == "H") {
            int index;
            std::string name;
            if (!(ls >> index >> name))
                throw ValidationError("generator line needs: kind index name");
            FloerKind k = tok == "p" ? FloerKind::RestPoint
                          : tok == "O" ? FloerKind::Orbit
                                       : FloerKind::Homoclinic;
            fc.add_generator(k, index, name);
        } else {
            throw ValidationError("unknown floer line: " + line);
        }
    }
    if (fc.gens_.empty() && fc.conn_.empty()) return fc;  // empty complex
    return fc;
}

std::string FloerComplex::to_text() const {
    std::ostringstream out;
    for (const auto& g : gens_)
        out << kind_letter(g.kind) << " " << g.index << " " << g.name << "\n";
    for (const auto& [key, count] : conn_)
        for (int i = 0; i < count; ++i)
            out << "conn " << gens_[key.first].name << " "
                << gens_[key.second].name << "\n";
    return out.str();
}

void FloerComplex::add_generator(FloerKind kind, int index,
                                 const std::string& name) {
    if (by_name_.count(name))
        throw ValidationError("duplicate generator name: " + name);
    if (index < 0) throw ValidationError("generator index must be >= 0");
    by_name_[name] = static_cast<int>(gens_.size());
    gens_.push_back({kind, index, name});
}

void FloerComplex::add_connection(const std::string& from,
                                  const std::string& to, int count) {
    if (!by_name_.count(from) || !by_name_.count(to))
        throw ValidationError("connection references unknown generator");
    conn_[{by_name_.at(from), by_name_.at(to)}] += count;
}

int FloerComplex::raw_count(const std::string& from,
                            const std::string& to) const {
    auto it = conn_.find({by_name_.at(from), by_name_.at(to)});
    return it == conn_.end() ? 0 : it->second;
}

const FloerGenerator& FloerComplex::gen(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw ValidationError("unknown generator: " + name);
    return gens_[it->second];
}

void FloerComplex::check_kind(const FloerGenerator& a,
                              const FloerGenerator& b) const {
    if (a.index == b.index)
        throw ValidationError("connection between objects of the same index: " +
                              a.name + " and " + b.name);
    int diff = a.index - b.index;
    bool ok = false;
    if (a.kind == FloerKind::RestPoint) {
        if (b.kind == FloerKind::RestPoint)
            ok = diff == 1;
        else
            ok = diff == 2;  // p_k feeds the upper generator of O/H_{k-2}
    } else {
        ok = diff == 1;  // orbit and homoclinic sources connect one index down
    }
    if (!ok)
        throw ValidationError(
            "connection kind not among the displayed boundary formulas: " +
            a.name + " -> " + b.name);
}

void FloerComplex::validate() const {
    for (const auto& [key, count] : conn_) {
        if (count < 0) throw ValidationError("negative connection count");
        check_kind(gens_[key.first], gens_[key.second]);
    }
    auto mats = boundary_matrices();
    for (size_t d = 1; d + 1 < mats.size(); ++d) {
        const auto& a = mats[d];
        const auto& b = mats[d + 1];
        if (a.empty() || b.empty() || b[0].empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b[0].size(); ++j) {
                int acc = 0;
                for (size_t l = 0; l < b.size(); ++l) acc ^= a[i][l] & b[l][j];
                if (acc)
                    throw ValidationError(
                        "boundary operator does not square to zero");
            }
    }
}

int FloerComplex::max_dimension() const {
    int mx = -1;
    for (const auto& g : gens_) {
        int top = g.kind == FloerKind::RestPoint ? g.index : g.index + 1;
        mx = std::max(mx, top);
    }
    return mx;
}

std::vector<std::vector<std::vector<uint8_t>>> FloerComplex::boundary_matrices()
    const {
    int mx = max_dimension();
    // graded generators: (gen id, part) with part 0 = lower / rest point,
    // part 1 = upper generator of an orbit or homoclinic
    std::vector<std::vector<std::pair<int, int>>> graded(mx + 1);
    auto dim_of = [&](int gi, int part) {
        return gens_[gi].index + part;
    };
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
        graded[gens_[gi].index].push_back({static_cast<int>(gi), 0});
        if (gens_[gi].kind != FloerKind::RestPoint)
            graded[gens_[gi].index + 1].push_back({static_cast<int>(gi), 1});
    }
    std::map<std::pair<int, int>, int> pos;  // (gen,part) -> position in level
    for (int d = 0; d <= mx; ++d)
        for (size_t i = 0; i < graded[d].size(); ++i)
            pos[graded[d][i]] = static_cast<int>(i);

    std::vector<std::vector<std::vector<uint8_t>>> mats(mx + 1);
    for (int d = 1; d <= mx; ++d)
        mats[d].assign(graded[d - 1].size(),
                       std::vector<uint8_t>(graded[d].size(), 0));

    auto add_entry = [&](int from_gi, int from_part, int to_gi, int to_part,
                         int parity) {
        if (!parity) return;
        int d = dim_of(from_gi, from_part);
        mats[d][pos.at({to_gi, to_part})][pos.at({from_gi, from_part})] ^= 1;
    };

    for (const auto& [key, count] : conn_) {
        int parity = count % 2;
        if (!parity) continue;
        const auto& a = gens_[key.first];
        const auto& b = gens_[key.second];
        bool a_rest = a.kind == FloerKind::RestPoint;
        bool b_rest = b.kind == FloerKind::RestPoint;
        if (a_rest && b_rest) {
            add_entry(key.first, 0, key.second, 0, parity);
        } else if (a_rest && !b_rest) {
            // p_k -> upper generator of O/H_{k-2}
            add_entry(key.first, 0, key.second, 1, parity);
        } else if (!a_rest && b_rest) {
            // lower generator only
            add_entry(key.first, 0, key.second, 0, parity);
        } else {
            // orbit/homoclinic to orbit/homoclinic: lower->lower, upper->upper
            add_entry(key.first, 0, key.second, 0, parity);
            add_entry(key.first, 1, key.second, 1, parity);
        }
    }
    return mats;
}

std::vector<long long> FloerComplex::homology() const {
    validate();
    int mx = max_dimension();
    if (mx < 0) return {};
    auto mats = boundary_matrices();
    std::vector<size_t> dims(mx + 1, 0), rank(mx + 2, 0);
    {
        std::vector<std::vector<std::pair<int, int>>> graded(mx + 1);
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            graded[gens_[gi].index].push_back({static_cast<int>(gi), 0});
            if (gens_[gi].kind != FloerKind::RestPoint)
                graded[gens_[gi].index + 1].push_back({static_cast<int>(gi), 1});
        }
        for (int d = 0; d <= mx; ++d) dims[d] = graded[d].size();
    }
    for (int d = 1; d <= mx; ++d)
        if (!mats[d].empty() && !mats[d][0].empty()) rank[d] = gf2_rank(mats[d]);
    std::vector<long long> h(mx + 1);
    for (int d = 0; d <= mx; ++d)
        h[d] = static_cast<long long>(dims[d]) - rank[d] - rank[d + 1];
    return h;
}

FloerComplex FloerComplex::franks_replacement(const std::string& orbit_name) const {
    const FloerGenerator& o = gen(orbit_name);
    if (o.kind != FloerKind::Orbit)
        throw ValidationError(orbit_name + " is not a periodic orbit");
    int oid = by_name_.at(orbit_name);
    // reattachment is only defined against rest points: an orbit or
    // homoclinic neighbour would need a p->O connection of index gap one,
    // which the displayed formulas exclude (it would pair same-index objects
    // after the replacement)
    for (const auto& [key, count] : conn_) {
        (void)count;
        if (key.first == oid && gens_[key.second].kind != FloerKind::RestPoint)
            throw ValidationError(
                "franks replacement refused: orbit connects to " +
                gens_[key.second].name +
                "; reattachment would create a same-index connection");
        if (key.second == oid && gens_[key.first].kind != FloerKind::RestPoint)
            throw ValidationError(
                "franks replacement refused: " + gens_[key.first].name +
                " connects into the orbit; reattachment would create a "
                "same-index connection");
    }
    FloerComplex out;
    std::string up = orbit_name + "_up", lo = orbit_name + "_lo";
    for (const auto& g : gens_) {
        if (g.name == orbit_name) {
            out.add_generator(FloerKind::RestPoint, o.index + 1, up);
            out.add_generator(FloerKind::RestPoint, o.index, lo);
        } else {
            out.add_generator(g.kind, g.index, g.name);
        }
    }
    // the heteroclinic pair: two lines, cancelling mod 2
    out.add_connection(up, lo, 2);
    for (const auto& [key, count] : conn_) {
        const auto& a = gens_[key.first];
        const auto& b = gens_[key.second];
        if (key.first == oid && key.second == oid)
            throw ValidationError("orbit self-connection");
        if (key.first == oid) {
            out.add_connection(lo, b.name, count);  // O^0 connections
        } else if (key.second == oid) {
            out.add_connection(a.name, up, count);  // O^1 connections
        } else {
            out.add_connection(a.name, b.name, count);
        }
    }
    out.validate();
    return out;
}

FloerComplex FloerComplex::cancel_pair(const std::string& upper,
                                       const std::string& lower) const {
    const FloerGenerator& a = gen(upper);
    const FloerGenerator& b = gen(lower);
    if (a.kind != FloerKind::RestPoint || b.kind != FloerKind::RestPoint)
        throw ValidationError("cancellation needs a rest-point pair");
    if (a.index != b.index + 1)
        throw ValidationError("cancellation needs an index difference of one");
    int ai = by_name_.at(upper), bi = by_name_.at(lower);
    auto it = conn_.find({ai, bi});
    if (it == conn_.end() || it->second != 1)
        throw ValidationError(
            "cancellation needs exactly one flow line between the pair");

    FloerComplex out;
    for (const auto& g : gens_)
        if (g.name != upper && g.name != lower)
            out.add_generator(g.kind, g.index, g.name);
    // copy the surviving connections
    for (const auto& [key, count] : conn_) {
        if (key.first == ai || key.second == ai || key.first == bi ||
            key.second == bi)
            continue;
        out.add_connection(gens_[key.first].name, gens_[key.second].name,
                           count);
    }
    // reroute X -> lower through upper -> Y, mod 2
    for (const auto& [kx, cx] : conn_) {
        if (kx.second != bi || kx.first == ai) continue;
        if (cx % 2 == 0) continue;
        for (const auto& [ky, cy] : conn_) {
            if (ky.first != ai || ky.second == bi) continue;
            if (cy % 2 == 0) continue;
            const auto& x = gens_[kx.first];
            const auto& y = gens_[ky.second];
            // legality of the rerouted kind
            bool x_rest = x.kind == FloerKind::RestPoint;
            bool y_rest = y.kind == FloerKind::RestPoint;
            if (!x_rest && !y_rest)
                throw ValidationError(
                    "cancellation refused: rerouting " + x.name + " -> " +
                    y.name + " leaves the displayed boundary formulas");
            out.add_connection(x.name, y.name, 1);  // parity flip
        }
    }
    out.validate();
    return out;
}

}  // namespace hodge
