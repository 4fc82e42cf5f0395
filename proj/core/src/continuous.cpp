#include "crystal/continuous.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

Rat cont_eps(const PLPath& pi, int i) { return -pi.min_level(i); }

Rat cont_phi(const PLPath& pi, int i) {
  return pi.level(pi.times().size() - 1, i) - pi.min_level(i);
}

namespace {

struct Node {
  Rat t;
  Rat c;
};

void push_node(std::vector<Node>& nodes, const Rat& t, const Rat& c) {
  if (!nodes.empty() && nodes.back().t == t) {
    require(nodes.back().c == c, ErrorKind::internal, "conflicting path subdivision");
    return;
  }
  nodes.push_back({t, c});
}

// Time inside [ta,tb] where the linear level la -> lb hits target.
Rat crossing(const Rat& ta, const Rat& tb, const Rat& la, const Rat& lb, const Rat& target) {
  return ta + (target - la) / (lb - la) * (tb - ta);
}

}  // namespace

std::optional<PLPath> cont_op(const PLPath& pi, int i, const Rat& r) {
  require(1 <= i && i < pi.rank(), ErrorKind::index_out_of_range,
          "operator index " + std::to_string(i));
  if (r == 0) return pi;

  const auto& ts = pi.times();
  const size_t s = ts.size();
  std::vector<Rat> L(s);
  for (size_t k = 0; k < s; ++k) L[k] = pi.level(k, i);
  const Rat m = *std::min_element(L.begin(), L.end());

  std::vector<Node> nodes;
  if (r > 0) {
    // Raising branch: coefficient min{0, -r - m + g(t)} with g the running
    // minimum of the level.
    if (r > -m) return std::nullopt;
    auto c_of = [&](const Rat& g) { return std::min(Rat(0), Rat(g - m - r)); };
    Rat g = L[0];
    push_node(nodes, ts[0], c_of(g));
    for (size_t k = 0; k + 1 < s; ++k) {
      if (L[k + 1] >= g) {
        push_node(nodes, ts[k + 1], c_of(g));
        continue;
      }
      // The level dips below the running minimum within this segment.
      if (L[k] > g) {
        const Rat tc = crossing(ts[k], ts[k + 1], L[k], L[k + 1], g);
        push_node(nodes, tc, c_of(g));
      }
      if (g > m + r && m + r > L[k + 1]) {
        const Rat tx = crossing(ts[k], ts[k + 1], L[k], L[k + 1], m + r);
        push_node(nodes, tx, Rat(0));
      }
      g = L[k + 1];
      push_node(nodes, ts[k + 1], c_of(g));
    }
  } else {
    // Lowering branch: coefficient min{-r, ghat(t) - m} with ghat the
    // minimum of the level over the remaining time.
    const Rat phi = L[s - 1] - m;
    if (-r > phi) return std::nullopt;
    auto c_of = [&](const Rat& gh) { return std::min(Rat(-r), Rat(gh - m)); };
    std::vector<Node> rev;
    Rat gh = L[s - 1];
    push_node(rev, ts[s - 1], c_of(gh));
    for (size_t k = s - 1; k-- > 0;) {
      if (L[k] >= gh) {
        push_node(rev, ts[k], c_of(gh));
        continue;
      }
      if (L[k + 1] > gh) {
        const Rat tc = crossing(ts[k], ts[k + 1], L[k], L[k + 1], gh);
        push_node(rev, tc, c_of(gh));
      }
      if (gh > m - r && m - r > L[k]) {
        const Rat tx = crossing(ts[k], ts[k + 1], L[k], L[k + 1], m - r);
        push_node(rev, tx, -r);
      }
      gh = L[k];
      push_node(rev, ts[k], c_of(gh));
    }
    nodes.assign(rev.rbegin(), rev.rend());
  }

  RatVec alpha(pi.rank(), Rat(0));
  alpha[i - 1] = 1;
  alpha[i] = -1;
  std::vector<Rat> times;
  std::vector<RatVec> values;
  for (const auto& node : nodes) {
    times.push_back(node.t);
    values.push_back(rat_vec_sub(pi.at(node.t), rat_vec_scale(node.c, alpha)));
  }
  return PLPath(pi.rank(), std::move(times), std::move(values));
}

std::optional<std::pair<PLPath, PLPath>> cont_tensor_op(const PLPath& b1, const PLPath& b2,
                                                        int i, const Rat& r) {
  const Rat gap = cont_eps(b2, i) - cont_phi(b1, i);
  const Rat r1 = std::max(r, gap) - std::max(Rat(0), gap);
  const Rat r2 = std::min(r, gap) + std::max(Rat(0), Rat(-gap));
  auto p1 = cont_op(b1, i, r1);
  auto p2 = cont_op(b2, i, r2);
  if (!p1 || !p2) return std::nullopt;
  return std::make_pair(std::move(*p1), std::move(*p2));
}

RatMatrix::RatMatrix(int n, std::vector<Rat> entries) : n_(n), m_(std::move(entries)) {
  require(n_ >= 1, ErrorKind::parse_error, "matrix size must be >= 1");
  require(static_cast<int>(m_.size()) == n_ * n_, ErrorKind::shape_mismatch,
          "entry count must be n^2");
  for (const Rat& v : m_)
    require(v >= 0, ErrorKind::parse_error, "matrix entries must be >= 0");
}

RatMatrix RatMatrix::zeros(int n) { return RatMatrix(n, std::vector<Rat>(n * n, Rat(0))); }

RatMatrix RatMatrix::from_integer(const NNMatrix& m) {
  std::vector<Rat> entries;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) entries.emplace_back(m.at(i, j));
  return RatMatrix(m.size(), std::move(entries));
}

RatMatrix RatMatrix::diagonal(const RatVec& lambda) {
  RatMatrix m = zeros(static_cast<int>(lambda.size()));
  for (size_t k = 0; k < lambda.size(); ++k) m.at(static_cast<int>(k) + 1, static_cast<int>(k) + 1) = lambda[k];
  return m;
}

const Rat& RatMatrix::at(int i, int j) const {
  require(1 <= i && i <= n_ && 1 <= j && j <= n_, ErrorKind::index_out_of_range,
          "matrix index");
  return m_[(i - 1) * n_ + (j - 1)];
}

Rat& RatMatrix::at(int i, int j) {
  require(1 <= i && i <= n_ && 1 <= j && j <= n_, ErrorKind::index_out_of_range,
          "matrix index");
  return m_[(i - 1) * n_ + (j - 1)];
}

Rat RatMatrix::entry_sum() const {
  Rat s = 0;
  for (const Rat& v : m_) s += v;
  return s;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t = zeros(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  std::vector<Rat> entries = m_;
  for (Rat& v : entries) v *= c;
  return RatMatrix(n_, std::move(entries));
}

bool RatMatrix::lower_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

std::optional<RatVec> RatMatrix::as_diagonal_dominant() const {
  RatVec diag;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j)
      if (i != j && at(i, j) != 0) return std::nullopt;
    diag.push_back(at(i, i));
  }
  for (size_t k = 0; k + 1 < diag.size(); ++k)
    if (diag[k] < diag[k + 1]) return std::nullopt;
  return diag;
}

std::string RatMatrix::to_string() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) s += ";";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) s += ",";
      s += rat_to_string(at(i, j));
    }
  }
  return s;
}

RatMatrix RatMatrix::parse(const std::string& s) {
  std::vector<std::vector<Rat>> rows{{}};
  std::string cur;
  auto flush = [&] {
    require(!cur.empty(), ErrorKind::parse_error, "empty matrix entry in '" + s + "'");
    rows.back().push_back(parse_rat(cur));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (ch == ';') {
      flush();
      rows.emplace_back();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  const int n = static_cast<int>(rows.size());
  std::vector<Rat> entries;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, ErrorKind::parse_error,
            "matrix '" + s + "' is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RatMatrix(n, std::move(entries));
}

namespace {

struct Segment {
  int row, col;
  Rat mass;
};

// Column-major blocks, rows n..1 inside each block: the canonical order of
// pi_M.
std::vector<Segment> labeled_segments(const RatMatrix& m) {
  std::vector<Segment> segs;
  for (int j = 1; j <= m.size(); ++j)
    for (int i = m.size(); i >= 1; --i)
      if (m.at(i, j) > 0) segs.push_back({i, j, m.at(i, j)});
  return segs;
}

int level_slope(int row, int i) { return row == i ? 1 : row == i + 1 ? -1 : 0; }

// Level values before and after each segment for the h_i functional.
std::vector<Rat> boundary_levels(const std::vector<Segment>& segs, int i) {
  std::vector<Rat> L{Rat(0)};
  for (const auto& seg : segs)
    L.push_back(L.back() + Rat(level_slope(seg.row, i)) * seg.mass);
  return L;
}

}  // namespace

PLPath build_pi_M(const RatMatrix& m) {
  const auto segs = labeled_segments(m);
  if (segs.empty()) return PLPath::constant(m.size());
  const int count = static_cast<int>(segs.size());
  std::vector<Rat> times{Rat(0)};
  std::vector<RatVec> values{RatVec(m.size(), Rat(0))};
  for (int k = 0; k < count; ++k) {
    times.emplace_back(k + 1, count);
    RatVec v = values.back();
    v[segs[k].row - 1] += segs[k].mass;
    values.push_back(std::move(v));
  }
  return PLPath(m.size(), std::move(times), std::move(values));
}

Rat cont_matrix_eps(const RatMatrix& m, int i, Side side) {
  if (side == Side::col) return cont_matrix_eps(m.transposed(), i, Side::row);
  const auto L = boundary_levels(labeled_segments(m), i);
  return -*std::min_element(L.begin(), L.end());
}

Rat cont_matrix_phi(const RatMatrix& m, int i, Side side) {
  if (side == Side::col) return cont_matrix_phi(m.transposed(), i, Side::row);
  const auto L = boundary_levels(labeled_segments(m), i);
  return L.back() - *std::min_element(L.begin(), L.end());
}

std::optional<RatMatrix> cont_matrix_op(const RatMatrix& m, int i, const Rat& r, Side side) {
  require(1 <= i && i < m.size(), ErrorKind::index_out_of_range,
          "operator index " + std::to_string(i));
  if (side == Side::col) {
    auto t = cont_matrix_op(m.transposed(), i, r, Side::row);
    if (!t) return std::nullopt;
    return t->transposed();
  }
  if (r == 0) return m;

  const auto segs = labeled_segments(m);
  const auto L = boundary_levels(segs, i);
  const Rat mmin = *std::min_element(L.begin(), L.end());

  RatMatrix out = m;
  Rat moved = 0;
  if (r > 0) {
    if (r > -mmin) return std::nullopt;
    auto c_of = [&](const Rat& g) { return std::min(Rat(0), Rat(g - mmin - r)); };
    Rat g = L.front();
    for (size_t k = 0; k < segs.size(); ++k) {
      const Rat g_next = std::min(g, L[k + 1]);
      const Rat delta = c_of(g) - c_of(g_next);
      if (delta > 0) {
        require(segs[k].row == i + 1, ErrorKind::internal,
                "raising moved mass off a row-(i+1) segment");
        out.at(i + 1, segs[k].col) -= delta;
        out.at(i, segs[k].col) += delta;
        moved += delta;
      }
      g = g_next;
    }
    require(moved == r, ErrorKind::internal, "raising moved the wrong total mass");
  } else {
    const Rat phi = L.back() - mmin;
    if (-r > phi) return std::nullopt;
    auto c_of = [&](const Rat& gh) { return std::min(Rat(-r), Rat(gh - mmin)); };
    std::vector<Rat> ghat(L.size());
    ghat.back() = L.back();
    for (size_t k = L.size() - 1; k-- > 0;) ghat[k] = std::min(L[k], ghat[k + 1]);
    for (size_t k = 0; k < segs.size(); ++k) {
      const Rat delta = c_of(ghat[k + 1]) - c_of(ghat[k]);
      if (delta > 0) {
        require(segs[k].row == i, ErrorKind::internal,
                "lowering moved mass off a row-i segment");
        out.at(i, segs[k].col) -= delta;
        out.at(i + 1, segs[k].col) += delta;
        moved += delta;
      }
    }
    require(moved == -r, ErrorKind::internal, "lowering moved the wrong total mass");
  }
  return out;
}

ContRaiseResult cont_raise_to_highest(const RatMatrix& m) {
  Int denom = 1;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      denom = boost::multiprecision::lcm(denom, rat_den(m.at(i, j)));
  const Rat sum = m.entry_sum();
  const Int budget_big = Int(m.size()) * Int(m.size()) * denom *
                         (rat_num(sum) / rat_den(sum) + 1);
  const long long budget = std::max<long long>(16, static_cast<long long>(budget_big));

  RatMatrix cur = m;
  std::vector<ContStep> script;
  long long steps = 0;
  bool any = true;
  while (any) {
    any = false;
    for (Side side : {Side::row, Side::col}) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (int i = 1; i < m.size() && !moved; ++i) {
          const Rat eps = cont_matrix_eps(cur, i, side);
          if (eps > 0) {
            auto next = cont_matrix_op(cur, i, eps, side);
            require(next.has_value(), ErrorKind::internal, "full raise rejected");
            cur = *next;
            script.push_back({side, i, eps});
            any = moved = true;
            require(++steps <= budget, ErrorKind::budget_exceeded,
                    "raising exceeded the iteration budget at " + cur.to_string());
          }
        }
      }
    }
  }
  const auto diag = cur.as_diagonal_dominant();
  require(diag.has_value(), ErrorKind::internal,
          "raise-extremal matrix is not of the form M_lambda: " + cur.to_string());
  return {*diag, std::move(script)};
}

std::vector<RatVec> ls_direction_chain(const PLPath& pi, const RatVec& lambda) {
  const OrbitPoset& poset = shared_orbit_poset(lambda);
  const PLPath canon = pi.canonical();

  bool zero = true;
  for (const Rat& c : lambda)
    if (c != 0) zero = false;
  if (zero) return {lambda};

  std::vector<RatVec> chain;
  for (size_t k = 0; k < canon.segment_count(); ++k) {
    // Directions are read off the mass-proportional form, where each piece
    // moves with unit-speed multiple of an orbit point; rescale to match.
    RatVec d = canon.direction(k);
    Rat l1 = 0;
    for (const Rat& c : d) l1 += abs(c);
    Rat target = 0;
    for (const Rat& c : lambda) target += abs(c);
    d = rat_vec_scale(target / l1, d);
    require(poset.contains(d), ErrorKind::weight_not_in_orbit,
            "path direction is not in the orbit");
    chain.push_back(std::move(d));
  }
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto dd = poset.dist(chain[k], chain[k + 1]);
    require(dd.has_value() && *dd >= 1, ErrorKind::unordered_chain,
            "path directions must strictly decrease");
  }
  return chain;
}

namespace {

RatVec act_on_vec(const Permutation& w, const RatVec& v) {
  RatVec out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[w.image(static_cast<int>(k) + 1) - 1] = v[k];
  return out;
}

}  // namespace

Main2Report verify_main2(const RatMatrix& m) {
  require(m.lower_triangular(), ErrorKind::not_lower_triangular,
          "verify_main2 needs a lower-triangular matrix");
  const auto raised = cont_raise_to_highest(m);
  const PLPath straight = PLPath::straight(raised.lambda);

  PLPath p = straight, q = straight;
  for (auto it = raised.script.rbegin(); it != raised.script.rend(); ++it) {
    PLPath& target = it->side == Side::row ? p : q;
    auto lowered = cont_op(target, it->i, -it->r);
    require(lowered.has_value(), ErrorKind::internal, "replaying a raising script failed");
    target = *lowered;
  }

  const auto p_chain = ls_direction_chain(p, raised.lambda);
  const auto q_chain = ls_direction_chain(q, raised.lambda);
  const OrbitPoset& poset = shared_orbit_poset(raised.lambda);
  const RatVec tau_p = p_chain.back();
  const RatVec iota_q = q_chain.front();
  const bool cell = poset.geq(tau_p, iota_q);

  Permutation w = Permutation::identity(m.size());
  bool found = false;
  for (const auto& cand : symmetric_group(m.size())) {
    if (act_on_vec(cand, raised.lambda) == iota_q) {
      w = cand;
      found = true;
      break;
    }
  }
  require(found, ErrorKind::internal, "iota(Q) escaped the orbit");

  return {raised.lambda, w, p, q, tau_p, iota_q, cell};
}

}  // namespace crystal
