#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace linkcolor {

// All matrix/exponent arithmetic in this project is exact.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Least nonnegative residue; m must be positive.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Thrown when an operation would have to materialize more solutions than the
// configured cap allows. Callers must not downgrade this to an "unknown" verdict.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linkcolor
