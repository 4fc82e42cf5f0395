#include "crystal/rational.hpp"

#include "crystal/error.hpp"

namespace crystal {

std::string rat_to_string(const Rat& r) {
  std::string s = rat_num(r).str();
  if (!is_integer(r)) {
    s += "/";
    s += rat_den(r).str();
  }
  return s;
}

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    require(den != 0, ErrorKind::parse_error, "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    fail(ErrorKind::parse_error, "bad rational '" + s + "'");
  }
}

RatVec rat_vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

RatVec rat_vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

RatVec rat_vec_scale(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
  return out;
}

}  // namespace crystal
