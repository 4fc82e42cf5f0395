#include "crystal/ls_path.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

namespace {

RatVec to_rat_vec(const Weight& w) {
  RatVec v;
  v.reserve(w.rank());
  for (Coord c : w.coords()) v.emplace_back(c);
  return v;
}

Weight to_weight(const RatVec& v) {
  std::vector<Coord> c;
  c.reserve(v.size());
  for (const Rat& r : v) {
    require(is_integer(r), ErrorKind::internal, "expected an integral weight");
    c.push_back(static_cast<Coord>(rat_num(r)));
  }
  return Weight(std::move(c));
}

}  // namespace

OrbitPoset::OrbitPoset(const RatVec& dominant) : n_(static_cast<int>(dominant.size())) {
  for (size_t k = 0; k + 1 < dominant.size(); ++k)
    require(dominant[k] >= dominant[k + 1], ErrorKind::parse_error,
            "orbit base point must be dominant");

  RatVec sorted = dominant;
  std::sort(sorted.begin(), sorted.end());
  std::set<RatVec> pts;
  do {
    pts.insert(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  elems_.assign(pts.begin(), pts.end());

  const int m = static_cast<int>(elems_.size());
  // Downward steps u -> s_beta(u) for positive roots beta = eps_a - eps_b
  // (a < b) with <u, h_beta> < 0; dist is the longest chain length.
  std::vector<std::vector<int>> succ(m);
  for (int u = 0; u < m; ++u) {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (elems_[u][a] < elems_[u][b]) {
          RatVec w = elems_[u];
          std::swap(w[a], w[b]);
          const int v = index_of(w);
          succ[u].push_back(v);
        }
      }
    }
  }
  dist_.assign(m, std::vector<int>(m, -1));
  // Longest path by memoized DFS; the step potential argument makes the
  // graph acyclic.
  for (int src = 0; src < m; ++src) {
    auto& row = dist_[src];
    row[src] = 0;
    auto rec = [&](auto&& self, int u) -> void {
      for (int v : succ[u]) {
        if (row[v] < row[u] + 1) {
          row[v] = row[u] + 1;
          self(self, v);
        }
      }
    };
    rec(rec, src);
  }
  covers_.resize(m);
  for (int u = 0; u < m; ++u)
    for (int v : succ[u])
      if (dist_[u][v] == 1) {
        int a = 0;
        while (elems_[u][a] == elems_[v][a]) ++a;
        int b = a + 1;
        while (elems_[u][b] == elems_[v][b]) ++b;
        covers_[u].emplace_back(v, elems_[u][a] - elems_[u][b]);
      }
}

int OrbitPoset::index_of(const RatVec& w) const {
  const auto it = std::lower_bound(elems_.begin(), elems_.end(), w);
  if (it == elems_.end() || *it != w) return -1;
  return static_cast<int>(it - elems_.begin());
}

int OrbitPoset::idx(const RatVec& w) const {
  const int k = index_of(w);
  require(k >= 0, ErrorKind::weight_not_in_orbit, "weight not in the orbit");
  return k;
}

bool OrbitPoset::geq(const RatVec& nu, const RatVec& mu) const {
  return dist_[idx(nu)][idx(mu)] >= 0;
}

std::optional<int> OrbitPoset::dist(const RatVec& nu, const RatVec& mu) const {
  const int d = dist_[idx(nu)][idx(mu)];
  if (d < 0) return std::nullopt;
  return d;
}

bool OrbitPoset::has_a_chain(const RatVec& nu, const RatVec& mu, const Rat& a) const {
  const int from = idx(nu), to = idx(mu);
  if (dist_[from][to] < 0) return false;
  // Search over saturated chains; every step must be a cover whose pairing
  // against the cut is integral.
  std::vector<int> memo(elems_.size(), 0);  // 0 unknown, 1 yes, 2 no
  auto rec = [&](auto&& self, int u) -> bool {
    if (u == to) return true;
    if (memo[u]) return memo[u] == 1;
    bool ok = false;
    for (const auto& [v, pairing] : covers_[u]) {
      if (dist_[v][to] < 0) continue;
      if (!is_integer(a * pairing)) continue;
      if (self(self, v)) {
        ok = true;
        break;
      }
    }
    memo[u] = ok ? 1 : 2;
    return ok;
  };
  return rec(rec, from);
}

const RatVec& OrbitPoset::minimum() const {
  // The dominant point: coordinates weakly decreasing.
  for (const auto& w : elems_) {
    bool dom = true;
    for (size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] < w[k + 1]) dom = false;
    if (dom) return w;
  }
  fail(ErrorKind::internal, "orbit has no dominant point");
}

const RatVec& OrbitPoset::maximum() const { return elems_.front(); }

const OrbitPoset& shared_orbit_poset(const RatVec& dominant) {
  static std::mutex mutex;
  static std::map<RatVec, std::unique_ptr<OrbitPoset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace(dominant);
  if (inserted) it->second = std::make_unique<OrbitPoset>(dominant);
  return *it->second;
}

bool order_geq(const Weight& nu, const Weight& mu, const Partition& lambda) {
  const OrbitPoset& poset = shared_orbit_poset(to_rat_vec(lambda.weight()));
  return poset.geq(to_rat_vec(nu), to_rat_vec(mu));
}

std::optional<int> orbit_dist(const Weight& nu, const Weight& mu, const Partition& lambda) {
  const OrbitPoset& poset = shared_orbit_poset(to_rat_vec(lambda.weight()));
  return poset.dist(to_rat_vec(nu), to_rat_vec(mu));
}

LSPath::LSPath(const Partition& lambda, int n, std::vector<Weight> nus, std::vector<Rat> cuts)
    : lambda_(lambda), n_(n), nus_(std::move(nus)), cuts_(std::move(cuts)) {
  require(lambda.rank() == n, ErrorKind::shape_mismatch, "partition rank mismatch");
  require(!nus_.empty(), ErrorKind::unordered_chain, "LS path needs a direction");
  require(cuts_.size() == nus_.size() + 1, ErrorKind::bad_cuts,
          "cut list must be one longer than the direction chain");
  require(cuts_.front() == 0 && cuts_.back() == 1, ErrorKind::bad_cuts,
          "cuts must start at 0 and end at 1");
  for (size_t k = 0; k + 1 < cuts_.size(); ++k)
    require(cuts_[k] < cuts_[k + 1], ErrorKind::bad_cuts, "cuts must strictly increase");

  const OrbitPoset& poset = shared_orbit_poset(to_rat_vec(lambda_.weight()));
  for (const auto& nu : nus_)
    require(poset.contains(to_rat_vec(nu)), ErrorKind::weight_not_in_orbit,
            "direction " + nu.to_string() + " outside W.lambda");
  for (size_t k = 0; k + 1 < nus_.size(); ++k) {
    const auto d = poset.dist(to_rat_vec(nus_[k]), to_rat_vec(nus_[k + 1]));
    require(d.has_value() && *d >= 1, ErrorKind::unordered_chain,
            "directions must strictly decrease in the orbit order");
    require(poset.has_a_chain(to_rat_vec(nus_[k]), to_rat_vec(nus_[k + 1]), cuts_[k + 1]),
            ErrorKind::missing_a_chain,
            "no a-chain at cut " + rat_to_string(cuts_[k + 1]));
  }
}

LSPath LSPath::straight(const Partition& lambda, int n) {
  return LSPath(lambda, n, {lambda.weight()}, {Rat(0), Rat(1)});
}

Weight LSPath::weight() const {
  RatVec v = to_pl().endpoint();
  return to_weight(v);
}

PLPath LSPath::to_pl() const {
  std::vector<RatVec> values{RatVec(n_, Rat(0))};
  for (size_t k = 0; k < nus_.size(); ++k) {
    const Rat span = cuts_[k + 1] - cuts_[k];
    values.push_back(rat_vec_add(values.back(), rat_vec_scale(span, to_rat_vec(nus_[k]))));
  }
  return PLPath(n_, cuts_, std::move(values));
}

LSPath LSPath::from_pl(const PLPath& p, const Partition& lambda) {
  std::vector<Weight> nus;
  for (size_t k = 0; k < p.segment_count(); ++k) nus.push_back(to_weight(p.direction(k)));
  return LSPath(lambda, p.rank(), std::move(nus), p.times());
}

std::string LSPath::to_string() const {
  std::string s = "(";
  for (size_t k = 0; k < nus_.size(); ++k) {
    if (k) s += ",";
    s += nus_[k].to_string();
  }
  s += "; ";
  for (size_t k = 0; k < cuts_.size(); ++k) {
    if (k) s += ",";
    s += rat_to_string(cuts_[k]);
  }
  return s + ")";
}

namespace {

// Shared transform: fix the path on [0,t0], reflect levels relative to the
// level at t0 on [t0,t1], shift by tail_shift * alpha_i after t1.
PLPath reflect_and_shift(const PLPath& p, int i, const Rat& t0, const Rat& t1, int tail_shift) {
  std::vector<Rat> times;
  for (const Rat& t : p.times()) times.push_back(t);
  for (const Rat& t : {t0, t1})
    if (std::find(times.begin(), times.end(), t) == times.end()) times.push_back(t);
  std::sort(times.begin(), times.end());

  const RatVec alpha = [&] {
    RatVec a(p.rank(), Rat(0));
    a[i - 1] = 1;
    a[i] = -1;
    return a;
  }();
  const RatVec at0 = p.at(t0);
  const Rat level0 = at0[i - 1] - at0[i];

  std::vector<RatVec> values;
  for (const Rat& t : times) {
    RatVec v = p.at(t);
    if (t0 <= t && t <= t1) {
      const Rat lv = v[i - 1] - v[i];
      v = rat_vec_sub(v, rat_vec_scale(lv - level0, alpha));
    } else if (t > t1) {
      v = rat_vec_add(v, rat_vec_scale(Rat(tail_shift), alpha));
    }
    values.push_back(std::move(v));
  }
  return PLPath(p.rank(), std::move(times), std::move(values));
}

// First t with level == target scanning segments left to right, or the last
// such t scanning right to left, restricted to [lo, hi].
std::optional<Rat> attainment(const PLPath& p, int i, const Rat& target, const Rat& lo,
                              const Rat& hi, bool first) {
  const auto& ts = p.times();
  std::optional<Rat> found;
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    const Rat a = std::max(ts[k], lo), b = std::min(ts[k + 1], hi);
    if (a > b) continue;
    const Rat la = p.at(a)[i - 1] - p.at(a)[i];
    const Rat lb = p.at(b)[i - 1] - p.at(b)[i];
    std::optional<Rat> hit;
    if (la == lb) {
      if (la == target) hit = first ? a : b;
    } else {
      const Rat s = (target - la) / (lb - la);
      if (0 <= s && s <= 1) hit = a + s * (b - a);
    }
    if (hit) {
      if (first) return hit;
      found = hit;
    }
  }
  return found;
}

}  // namespace

std::optional<LSPath> path_op(const LSPath& pi, int i, Dir dir) {
  require(1 <= i && i < pi.rank(), ErrorKind::index_out_of_range,
          "operator index " + std::to_string(i));
  const PLPath p = pi.to_pl();
  const Rat h = p.min_level(i);
  require(is_integer(h), ErrorKind::internal, "LS path minimum level must be integral");

  if (dir == Dir::raise) {
    if (h >= 0) return std::nullopt;
    const auto t1 = attainment(p, i, h, Rat(0), Rat(1), /*first=*/true);
    require(t1.has_value(), ErrorKind::internal, "minimum level not attained");
    const auto t0 = attainment(p, i, h + 1, Rat(0), *t1, /*first=*/false);
    require(t0.has_value(), ErrorKind::internal, "level h+1 not attained before t1");
    return LSPath::from_pl(reflect_and_shift(p, i, *t0, *t1, +1), pi.cls());
  }

  const Rat end_level = p.level(p.times().size() - 1, i);
  if (end_level - h < 1) return std::nullopt;
  const auto t0 = attainment(p, i, h, Rat(0), Rat(1), /*first=*/false);
  require(t0.has_value(), ErrorKind::internal, "minimum level not attained");
  const auto t1 = attainment(p, i, h + 1, *t0, Rat(1), /*first=*/true);
  require(t1.has_value(), ErrorKind::internal, "level h+1 not attained after t0");
  return LSPath::from_pl(reflect_and_shift(p, i, *t0, *t1, -1), pi.cls());
}

LSPath psi(const Tableau& t, const Partition& lambda) {
  require(t.shape() == lambda, ErrorKind::shape_mismatch,
          "tableau shape differs from the path class");
  std::vector<int> script;
  Tableau cur = t;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < t.alphabet() && !moved; ++i) {
      if (auto up = tableau_op(cur, i, Dir::raise)) {
        cur = *up;
        script.push_back(i);
        moved = true;
      }
    }
  }
  require(cur == Tableau::highest_weight(lambda, t.alphabet()), ErrorKind::internal,
          "raising in B(lambda) missed v_lambda");
  LSPath out = LSPath::straight(lambda, t.alphabet());
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    auto down = path_op(out, *it, Dir::lower);
    require(down.has_value(), ErrorKind::internal, "path replay of a tableau script failed");
    out = *down;
  }
  return out;
}

Tableau psi_inv(const LSPath& pi) {
  std::vector<int> script;
  LSPath cur = pi;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < pi.rank() && !moved; ++i) {
      if (auto up = path_op(cur, i, Dir::raise)) {
        cur = *up;
        script.push_back(i);
        moved = true;
      }
    }
  }
  require(cur == LSPath::straight(pi.cls(), pi.rank()), ErrorKind::internal,
          "raising an LS path missed pi_lambda");
  Tableau out = Tableau::highest_weight(pi.cls(), pi.rank());
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    auto down = tableau_op(out, *it, Dir::lower);
    require(down.has_value(), ErrorKind::internal, "tableau replay of a path script failed");
    out = *down;
  }
  return out;
}

std::vector<LSPath> enumerate_ls_paths(const Partition& lambda, int n) {
  std::set<LSPath> seen;
  std::vector<LSPath> queue{LSPath::straight(lambda, n)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    LSPath cur = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i < n; ++i)
      if (auto down = path_op(cur, i, Dir::lower))
        if (seen.insert(*down).second) queue.push_back(*down);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace crystal
