#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

using Exponents = std::vector<int>;

// Canonical monomial order: total degree ascending, then lexicographically
// descending exponent vector, so x1^2 precedes x1*x2 precedes x2^2.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  }
};

// Exact-integer sparse polynomial in the 2n character variables
// x_1..x_n, y_1..y_n (exponent slots 0..n-1 for x, n..2n-1 for y).
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Int, MonomialOrder>;

  explicit SparsePoly(int nvars) : nvars_(nvars) {}
  static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
  static SparsePoly one(int nvars);
  static SparsePoly monomial(Exponents exp, Int coef);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(const Exponents& exp) const;
  int degree() const;  // max total degree, -1 for zero

  void add_term(const Exponents& exp, const Int& coef);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  bool operator==(const SparsePoly& o) const = default;

  // Product dropping every term of total degree > max_degree.
  static SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, int max_degree);
  SparsePoly truncated(int max_degree) const;
  SparsePoly homogeneous_component(int degree) const;

  // Termwise exponent rewrite (for specializations like y := x).
  SparsePoly map_exponents(const std::function<Exponents(const Exponents&)>& f) const;

  std::string to_string() const;  // canonical order, "x1^2 + 2*x1*y2 - 1"

 private:
  int nvars_;
  TermMap terms_;
};

// Variable names x1..xn, y1..yn for printing; nvars must be even.
std::vector<std::string> xy_variable_names(int nvars);

// Specializations used by the identity engine and its tests.
SparsePoly substitute_y_equals_x(const SparsePoly& p);
SparsePoly reverse_x_variables(const SparsePoly& p);  // x_i -> x_{n+1-i}
SparsePoly swap_xy_blocks(const SparsePoly& p);

// Isobaric divided difference pi_i f = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1})
// acting on the x block; exact division, nonzero remainder is an internal
// error.
SparsePoly isobaric_divided_difference(const SparsePoly& f, int i);

}  // namespace crystal
