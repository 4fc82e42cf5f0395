#pragma once

#include <compare>
#include <string>
#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

// Piecewise-linear path [0,1] -> Q^n with pi(0) = 0, stored as breakpoints
// and values, all exact rationals.  Construction normalizes: interior
// breakpoints where the direction does not change are removed.
//
// Equality compares normalized breakpoint data, so it distinguishes
// reparametrizations of the same curve; use equivalent() for comparisons
// that should not.
class PLPath {
 public:
  PLPath(int n, std::vector<Rat> times, std::vector<RatVec> values);

  static PLPath straight(const RatVec& endpoint);  // t |-> t * endpoint
  static PLPath constant(int n);                   // the zero path

  int rank() const { return n_; }
  size_t segment_count() const { return t_.size() - 1; }
  const std::vector<Rat>& times() const { return t_; }
  const std::vector<RatVec>& values() const { return v_; }

  RatVec at(const Rat& t) const;
  const RatVec& endpoint() const { return v_.back(); }

  // <pi(t_k), h_i> at breakpoint k (0-based).
  Rat level(size_t k, int i) const;
  Rat min_level(int i) const;

  // Direction of segment k: (v_{k+1} - v_k) / (t_{k+1} - t_k).
  RatVec direction(size_t k) const;

  PLPath scaled(const Rat& c) const;  // pointwise c * pi

  // Reparametrized so each straight piece's time share is proportional to
  // its l1 displacement, with pauses dropped; two paths trace the same
  // curve iff their canonical forms are equal.
  PLPath canonical() const;

  auto operator<=>(const PLPath&) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Rat> t_;
  std::vector<RatVec> v_;
};

// Concatenation with equal time shares: a on [0,1/2], b translated after.
PLPath concat(const PLPath& a, const PLPath& b);

inline bool equivalent(const PLPath& a, const PLPath& b) {
  return a.canonical() == b.canonical();
}

}  // namespace crystal
