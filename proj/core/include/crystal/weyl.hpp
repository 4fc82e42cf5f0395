#pragma once

#include <compare>
#include <string>
#include <vector>

namespace crystal {

using Coord = long long;

// Element of the gl_n weight lattice, stored as the coefficients of
// eps_1..eps_n.  The simple-coroot pairing is <mu, h_i> = mu_i - mu_{i+1}.
class Weight {
 public:
  explicit Weight(std::vector<Coord> coords);
  static Weight zero(int n);

  int rank() const { return static_cast<int>(c_.size()); }
  Coord at(int i) const;  // 1-based, i in 1..n
  const std::vector<Coord>& coords() const { return c_; }

  Coord pairing(int i) const;  // <mu, h_i>, i in 1..n-1
  Coord total() const;         // sum of coordinates

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  bool dominant() const;  // weakly decreasing coordinates

  auto operator<=>(const Weight&) const = default;

  std::string to_string() const;  // "(a,b,c)"

 private:
  std::vector<Coord> c_;
};

// eps_i as a Weight, and the simple root alpha_i = eps_i - eps_{i+1}.
Weight unit_weight(int n, int i);
Weight simple_root(int n, int i);

// Partition with at most n parts, right-padded with zeros to length n.
// Identified with the dominant weight lambda_1 eps_1 + ... + lambda_n eps_n.
class Partition {
 public:
  Partition(std::vector<Coord> parts, int n);  // validates monotonicity
  static Partition empty(int n) { return Partition({}, n); }

  int rank() const { return n_; }
  Coord part(int i) const;  // 1-based
  const std::vector<Coord>& parts() const { return parts_; }
  Coord size() const;  // |lambda|

  Weight weight() const;

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "2,1,0"
  static Partition parse(const std::string& s, int n);

  // All partitions with at most n parts and |lambda| <= bound, sorted.
  static std::vector<Partition> all_up_to(int n, Coord bound);
  // Those with |lambda| == size exactly.
  static std::vector<Partition> all_of_size(int n, Coord size);

 private:
  std::vector<Coord> parts_;
  int n_;
};

// Permutation of [n] in one-line notation; acts on weights by permuting
// coordinate slots, s_i being the transposition of slots i, i+1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> window);
  static Permutation identity(int n);
  static Permutation simple(int n, int i);  // s_i
  static Permutation longest(int n);        // w_0

  int rank() const { return static_cast<int>(w_.size()); }
  int image(int i) const;  // 1-based
  const std::vector<int>& window() const { return w_; }

  Permutation operator*(const Permutation& o) const;  // (u*v)(i) = u(v(i))
  Permutation inverse() const;

  int length() const;  // inversion count
  bool is_identity() const;

  // Reduced word by repeatedly stripping the leftmost descent; the returned
  // indices satisfy w = s_{r[0]} * s_{r[1]} * ... * s_{r.back()}.
  std::vector<int> reduced_word() const;

  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;  // one-line, "231" (digits while n <= 9)
  // Accepts one-line notation ("231") or a word in generators ("s1*s2").
  static Permutation parse(const std::string& s, int n);

 private:
  std::vector<int> w_;
};

// w . mu, the coordinate-permutation action: (w.mu)_{w(i)} = mu_i.
Weight act(const Permutation& w, const Weight& mu);

// Bruhat order on S_n via the sorted-prefix (dot) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// All of S_n ordered by (length, lexicographic window).
std::vector<Permutation> symmetric_group(int n);

struct CosetData {
  std::vector<int> stabilizer_generators;  // i with lambda_i = lambda_{i+1}
  std::vector<Permutation> reps;           // minimal-length, (length, lex) order
};

// The stabilizer W_lambda and the minimal-length representatives of
// W / W_lambda, one per orbit point.
CosetData stabilizer_and_coset_reps(const Partition& lambda);

// The orbit W.lambda as a sorted set of weights.
std::vector<Weight> orbit(const Partition& lambda);

// The unique minimal-length coset representative w with w.lambda = mu.
Permutation min_coset_rep_for(const Partition& lambda, const Weight& mu);

}  // namespace crystal
