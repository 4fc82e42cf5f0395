#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace crystal {

// All path and matrix arithmetic in the library is exact: rationals are
// arbitrary-precision and never rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Renders "p/q", or just "p" for integers; the inverse of parse_rat.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
Rat parse_rat(const std::string& s);

RatVec rat_vec_add(const RatVec& a, const RatVec& b);
RatVec rat_vec_sub(const RatVec& a, const RatVec& b);
RatVec rat_vec_scale(const Rat& c, const RatVec& v);

}  // namespace crystal
