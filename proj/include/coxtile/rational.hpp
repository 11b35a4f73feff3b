#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace coxtile {

// Exact rational used on the lattice side. Every Gram entry has denominator
// n+1, so 64-bit numerators are ample for the ranks handled here.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace coxtile
// boost's mixed rational/int operator== recurses forever under C++20
// rewritten comparisons. Compare against Rational or std::int64_t instead.
namespace boost {
bool operator==(const rational<std::int64_t>&, int) = delete;
bool operator==(int, const rational<std::int64_t>&) = delete;
}
