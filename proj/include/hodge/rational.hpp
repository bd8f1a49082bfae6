#ifndef HODGE_RATIONAL_HPP
#define HODGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hodge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline long long to_ll(const Int& z) { return z.template convert_to<long long>(); }

// Accepts "3", "-2", "3/2" and plain decimals like "0.25".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        Int ip(head), fp = tail.empty() ? Int(0) : Int(tail);
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rational r = Rational(ip) + Rational(fp, den);
        return neg ? -r : r;
    }
    return Rational(Int(s));
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Errors shared across modules.  ValidationError maps to CLI exit code 2,
// BudgetExceeded to exit code 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hodge

#endif
