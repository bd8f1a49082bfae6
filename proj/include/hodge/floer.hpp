#ifndef HODGE_FLOER_HPP
#define HODGE_FLOER_HPP

#include <map>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

enum class FloerKind { RestPoint, Orbit, Homoclinic };

struct FloerGenerator {
    FloerKind kind;
    int index;
    std::string name;
};

/**
 * Chain-level data for a generalized Morse-Smale system: rest points plus
 * periodic/homoclinic orbits, with mod-2 connection counts.  An orbit or
 * homoclinic of index k contributes two graded generators, in dimensions k
 * and k+1; the boundary operator follows the five displayed formulas and
 * rejects any other connection kind.
 */
class FloerComplex {
  public:
    static FloerComplex parse(const std::string& text);
    std::string to_text() const;

    void add_generator(FloerKind kind, int index, const std::string& name);
    void add_connection(const std::string& from, const std::string& to,
                        int count = 1);

    const std::vector<FloerGenerator>& generators() const { return gens_; }
    int raw_count(const std::string& from, const std::string& to) const;

    // same-index check, displayed-kind check, and d^2 = 0 over Z/2;
    // throws ValidationError naming the offending pair
    void validate() const;

    // graded mod-2 boundary matrices; matrices[d] maps dimension d to d-1
    std::vector<std::vector<std::vector<uint8_t>>> boundary_matrices() const;
    std::vector<long long> homology() const;  // mod-2 Betti numbers
    int max_dimension() const;

    // Replace a periodic orbit by a rest-point pair joined by two lines;
    // the upper point inherits the O^1 connections, the lower the O^0 ones.
    // Refuses when the orbit touches another orbit or homoclinic (no legal
    // reattachment exists among the displayed kinds).
    FloerComplex franks_replacement(const std::string& orbit_name) const;

    // Cancel a uniquely-connected rest-point pair (index difference one) by
    // mod-2 Gaussian elimination, rerouting connections through the pair.
    FloerComplex cancel_pair(const std::string& upper,
                             const std::string& lower) const;

  private:
    std::vector<FloerGenerator> gens_;
    std::map<std::string, int> by_name_;
    std::map<std::pair<int, int>, int> conn_;  // (from, to) -> raw line count
    const FloerGenerator& gen(const std::string& name) const;
    void check_kind(const FloerGenerator& a, const FloerGenerator& b) const;
};

}  // namespace hodge

#endif
