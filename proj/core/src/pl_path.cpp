#include "crystal/pl_path.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

PLPath::PLPath(int n, std::vector<Rat> times, std::vector<RatVec> values)
    : n_(n), t_(std::move(times)), v_(std::move(values)) {
  require(n_ >= 1, ErrorKind::parse_error, "path rank must be >= 1");
  require(t_.size() == v_.size() && t_.size() >= 2, ErrorKind::bad_cuts,
          "breakpoint and value lists must align");
  require(t_.front() == 0 && t_.back() == 1, ErrorKind::bad_cuts,
          "path domain must be [0,1]");
  for (size_t k = 0; k + 1 < t_.size(); ++k)
    require(t_[k] < t_[k + 1], ErrorKind::bad_cuts,
            "breakpoints must strictly increase");
  for (const auto& v : v_)
    require(static_cast<int>(v.size()) == n_, ErrorKind::shape_mismatch,
            "value dimension mismatch");
  for (const Rat& c : v_.front())
    require(c == 0, ErrorKind::bad_cuts, "path must start at 0");

  // Merge interior breakpoints where the direction is unchanged.
  std::vector<Rat> t{t_.front()};
  std::vector<RatVec> v{v_.front()};
  for (size_t k = 1; k + 1 < t_.size(); ++k) {
    const RatVec prev = rat_vec_scale(Rat(1) / (t_[k] - t.back()), rat_vec_sub(v_[k], v.back()));
    const RatVec next = rat_vec_scale(Rat(1) / (t_[k + 1] - t_[k]), rat_vec_sub(v_[k + 1], v_[k]));
    if (prev != next) {
      t.push_back(t_[k]);
      v.push_back(v_[k]);
    }
  }
  t.push_back(t_.back());
  v.push_back(v_.back());
  t_ = std::move(t);
  v_ = std::move(v);
}

PLPath PLPath::straight(const RatVec& endpoint) {
  const int n = static_cast<int>(endpoint.size());
  return PLPath(n, {Rat(0), Rat(1)}, {RatVec(n, Rat(0)), endpoint});
}

PLPath PLPath::constant(int n) { return straight(RatVec(n, Rat(0))); }

RatVec PLPath::at(const Rat& t) const {
  require(0 <= t && t <= 1, ErrorKind::index_out_of_range, "time outside [0,1]");
  size_t k = 0;
  while (k + 2 < t_.size() && t_[k + 1] <= t) ++k;
  const Rat s = (t - t_[k]) / (t_[k + 1] - t_[k]);
  return rat_vec_add(v_[k], rat_vec_scale(s, rat_vec_sub(v_[k + 1], v_[k])));
}

Rat PLPath::level(size_t k, int i) const {
  require(1 <= i && i < n_, ErrorKind::index_out_of_range, "coroot index");
  return v_[k][i - 1] - v_[k][i];
}

Rat PLPath::min_level(int i) const {
  Rat m = level(0, i);
  for (size_t k = 1; k < v_.size(); ++k) m = std::min(m, level(k, i));
  return m;
}

RatVec PLPath::direction(size_t k) const {
  return rat_vec_scale(Rat(1) / (t_[k + 1] - t_[k]), rat_vec_sub(v_[k + 1], v_[k]));
}

PLPath PLPath::scaled(const Rat& c) const {
  std::vector<RatVec> v;
  v.reserve(v_.size());
  for (const auto& val : v_) v.push_back(rat_vec_scale(c, val));
  return PLPath(n_, t_, std::move(v));
}

PLPath PLPath::canonical() const {
  std::vector<Rat> masses;
  Rat total = 0;
  for (size_t k = 0; k + 1 < v_.size(); ++k) {
    Rat m = 0;
    for (int c = 0; c < n_; ++c) m += abs(v_[k + 1][c] - v_[k][c]);
    masses.push_back(m);
    total += m;
  }
  if (total == 0) return constant(n_);
  std::vector<Rat> t{Rat(0)};
  std::vector<RatVec> v{v_.front()};
  Rat acc = 0;
  for (size_t k = 0; k < masses.size(); ++k) {
    if (masses[k] == 0) continue;  // pauses carry no crystal data
    acc += masses[k];
    t.push_back(acc / total);
    v.push_back(v_[k + 1]);
  }
  return PLPath(n_, std::move(t), std::move(v));
}

std::string PLPath::to_string() const {
  std::string s = "path[";
  for (size_t k = 0; k < t_.size(); ++k) {
    if (k) s += "; ";
    s += rat_to_string(t_[k]) + ":(";
    for (int c = 0; c < n_; ++c) {
      if (c) s += ",";
      s += rat_to_string(v_[k][c]);
    }
    s += ")";
  }
  return s + "]";
}

PLPath concat(const PLPath& a, const PLPath& b) {
  require(a.rank() == b.rank(), ErrorKind::shape_mismatch, "rank mismatch in concat");
  std::vector<Rat> t;
  std::vector<RatVec> v;
  for (size_t k = 0; k < a.times().size(); ++k) {
    t.push_back(a.times()[k] / 2);
    v.push_back(a.values()[k]);
  }
  const RatVec mid = a.endpoint();
  for (size_t k = 1; k < b.times().size(); ++k) {
    t.push_back(b.times()[k] / 2 + Rat(1, 2));
    v.push_back(rat_vec_add(mid, b.values()[k]));
  }
  return PLPath(a.rank(), std::move(t), std::move(v));
}

}  // namespace crystal
