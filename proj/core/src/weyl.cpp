#include "crystal/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

Weight::Weight(std::vector<Coord> coords) : c_(std::move(coords)) {}

Weight Weight::zero(int n) { return Weight(std::vector<Coord>(n, 0)); }

Coord Weight::at(int i) const {
  require(1 <= i && i <= rank(), ErrorKind::index_out_of_range,
          "weight coordinate index " + std::to_string(i));
  return c_[i - 1];
}

Coord Weight::pairing(int i) const {
  require(1 <= i && i < rank(), ErrorKind::index_out_of_range,
          "coroot index " + std::to_string(i));
  return c_[i - 1] - c_[i];
}

Coord Weight::total() const {
  return std::accumulate(c_.begin(), c_.end(), Coord{0});
}

Weight& Weight::operator+=(const Weight& o) {
  for (int k = 0; k < rank(); ++k) c_[k] += o.c_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int k = 0; k < rank(); ++k) c_[k] -= o.c_[k];
  return *this;
}

bool Weight::dominant() const {
  for (int k = 0; k + 1 < rank(); ++k)
    if (c_[k] < c_[k + 1]) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (int k = 0; k < rank(); ++k) {
    if (k) s += ",";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

Weight unit_weight(int n, int i) {
  std::vector<Coord> c(n, 0);
  require(1 <= i && i <= n, ErrorKind::index_out_of_range, "unit weight index");
  c[i - 1] = 1;
  return Weight(std::move(c));
}

Weight simple_root(int n, int i) {
  require(1 <= i && i < n, ErrorKind::index_out_of_range, "simple root index");
  std::vector<Coord> c(n, 0);
  c[i - 1] = 1;
  c[i] = -1;
  return Weight(std::move(c));
}

Partition::Partition(std::vector<Coord> parts, int n) : parts_(std::move(parts)), n_(n) {
  require(n >= 1, ErrorKind::parse_error, "partition needs n >= 1");
  require(static_cast<int>(parts_.size()) <= n, ErrorKind::parse_error,
          "partition has more than n parts");
  parts_.resize(n, 0);
  for (int k = 0; k + 1 < n; ++k)
    require(parts_[k] >= parts_[k + 1], ErrorKind::parse_error,
            "partition parts must weakly decrease");
  require(parts_[n - 1] >= 0, ErrorKind::parse_error, "partition parts must be >= 0");
}

Coord Partition::part(int i) const {
  require(1 <= i && i <= n_, ErrorKind::index_out_of_range, "partition part index");
  return parts_[i - 1];
}

Coord Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), Coord{0});
}

Weight Partition::weight() const { return Weight(parts_); }

std::string Partition::to_string() const {
  std::string s;
  for (int k = 0; k < n_; ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s;
}

Partition Partition::parse(const std::string& s, int n) {
  std::vector<Coord> parts;
  std::string cur;
  auto flush = [&] {
    require(!cur.empty(), ErrorKind::parse_error, "empty partition part in '" + s + "'");
    try {
      parts.push_back(std::stoll(cur));
    } catch (const std::exception&) {
      fail(ErrorKind::parse_error, "bad partition part '" + cur + "'");
    }
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || parts.empty()) flush();
  return Partition(std::move(parts), n);
}

std::vector<Partition> Partition::all_up_to(int n, Coord bound) {
  std::vector<Partition> out;
  std::vector<Coord> parts;
  // Descend over weakly decreasing part lists, largest part first.
  auto rec = [&](auto&& self, Coord remaining, Coord maxpart) -> void {
    out.emplace_back(parts, n);
    if (static_cast<int>(parts.size()) == n) return;
    for (Coord p = std::min(remaining, maxpart); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, bound, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> Partition::all_of_size(int n, Coord size) {
  std::vector<Partition> out;
  for (const auto& la : all_up_to(n, size))
    if (la.size() == size) out.push_back(la);
  return out;
}

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    require(1 <= v && v <= n && !seen[v], ErrorKind::parse_error,
            "window is not a permutation of [n]");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  require(1 <= i && i < n, ErrorKind::index_out_of_range, "simple reflection index");
  auto w = identity(n).w_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = n - k;
  return Permutation(std::move(w));
}

int Permutation::image(int i) const {
  require(1 <= i && i <= rank(), ErrorKind::index_out_of_range, "permutation argument");
  return w_[i - 1];
}

Permutation Permutation::operator*(const Permutation& o) const {
  require(rank() == o.rank(), ErrorKind::shape_mismatch, "rank mismatch in product");
  std::vector<int> w(rank());
  for (int k = 0; k < rank(); ++k) w[k] = w_[o.w_[k] - 1];
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(rank());
  for (int k = 0; k < rank(); ++k) w[w_[k] - 1] = k + 1;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

bool Permutation::is_identity() const { return length() == 0; }

std::vector<int> Permutation::reduced_word() const {
  // Strip leftmost descents from the right end of the product: if i is a
  // descent of w then w = (w s_i) s_i with l(w s_i) = l(w) - 1, so the
  // indices collected here come out in product order when prepended.
  std::vector<int> word;
  std::vector<int> w = w_;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i + 1 < rank(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        word.push_back(i + 1);
        again = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int k = 0; k < rank(); ++k) {
    if (rank() > 9 && k) s += ",";
    s += std::to_string(w_[k]);
  }
  return s;
}

Permutation Permutation::parse(const std::string& s, int n) {
  if (s.find('s') != std::string::npos) {
    // Word in generators, e.g. "s1*s2" or "s1 s2".
    Permutation w = Permutation::identity(n);
    size_t k = 0;
    while (k < s.size()) {
      if (s[k] == '*' || s[k] == ' ') {
        ++k;
        continue;
      }
      require(s[k] == 's', ErrorKind::parse_error, "bad generator word '" + s + "'");
      ++k;
      size_t start = k;
      while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
      require(k > start, ErrorKind::parse_error, "bad generator word '" + s + "'");
      int i = std::stoi(s.substr(start, k - start));
      require(1 <= i && i < n, ErrorKind::parse_error,
              "generator s" + std::to_string(i) + " out of range");
      w = w * Permutation::simple(n, i);
    }
    return w;
  }
  if (s == "e") return Permutation::identity(n);
  std::vector<int> window;
  if (s.find(',') != std::string::npos) {
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        window.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) window.push_back(std::stoi(cur));
  } else {
    for (char ch : s) {
      require(isdigit(static_cast<unsigned char>(ch)), ErrorKind::parse_error,
              "bad one-line permutation '" + s + "'");
      window.push_back(ch - '0');
    }
  }
  require(static_cast<int>(window.size()) == n, ErrorKind::parse_error,
          "one-line permutation '" + s + "' has wrong length");
  return Permutation(std::move(window));
}

Weight act(const Permutation& w, const Weight& mu) {
  require(w.rank() == mu.rank(), ErrorKind::shape_mismatch, "rank mismatch in act");
  std::vector<Coord> c(mu.rank());
  for (int i = 1; i <= mu.rank(); ++i) c[w.image(i) - 1] = mu.at(i);
  return Weight(std::move(c));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require(u.rank() == v.rank(), ErrorKind::shape_mismatch, "rank mismatch in bruhat_leq");
  const int n = u.rank();
  // Dot criterion: u <= v iff for every prefix length the sorted prefix of u
  // is entrywise <= the sorted prefix of v.
  std::vector<int> pu, pv;
  for (int i = 1; i <= n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u.image(i)), u.image(i));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v.image(i)), v.image(i));
    for (int k = 0; k < i; ++k)
      if (pu[k] > pv[k]) return false;
  }
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.window() < b.window();
  });
  return all;
}

CosetData stabilizer_and_coset_reps(const Partition& lambda) {
  const int n = lambda.rank();
  CosetData data;
  for (int i = 1; i < n; ++i)
    if (lambda.part(i) == lambda.part(i + 1)) data.stabilizer_generators.push_back(i);

  // One minimal-length representative per orbit point; symmetric_group is
  // sorted by (length, lex window), so the first hit per weight is minimal.
  std::map<Weight, Permutation> best;
  for (const auto& w : symmetric_group(n)) {
    Weight mu = act(w, lambda.weight());
    best.insert({mu, w});
  }
  for (auto& [mu, w] : best) data.reps.push_back(w);
  std::sort(data.reps.begin(), data.reps.end(),
            [](const Permutation& a, const Permutation& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a.window() < b.window();
            });
  return data;
}

std::vector<Weight> orbit(const Partition& lambda) {
  std::set<Weight> pts;
  std::vector<Coord> c = lambda.parts();
  std::sort(c.begin(), c.end());
  do {
    pts.insert(Weight(c));
  } while (std::next_permutation(c.begin(), c.end()));
  return {pts.begin(), pts.end()};
}

Permutation min_coset_rep_for(const Partition& lambda, const Weight& mu) {
  for (const auto& w : stabilizer_and_coset_reps(lambda).reps)
    if (act(w, lambda.weight()) == mu) return w;
  fail(ErrorKind::weight_not_in_orbit,
       "weight " + mu.to_string() + " not in orbit of " + lambda.to_string());
}

}  // namespace crystal
