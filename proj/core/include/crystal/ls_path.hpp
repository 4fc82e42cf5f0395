#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crystal/pl_path.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

// The orbit W.lambda ordered by: nu >= mu iff mu is reachable from nu by
// reflections s_beta in positive roots with <current, h_beta> < 0.  The
// dominant point lambda is the unique minimum and w_0.lambda the maximum.
// Works for any dominant rational vector, so the continuous module shares
// it.  dist is the longest chain length; covers are dist-1 steps.
class OrbitPoset {
 public:
  explicit OrbitPoset(const RatVec& dominant);

  int rank() const { return n_; }
  size_t size() const { return elems_.size(); }
  const std::vector<RatVec>& elements() const { return elems_; }

  int index_of(const RatVec& w) const;  // -1 if absent
  bool contains(const RatVec& w) const { return index_of(w) >= 0; }

  bool geq(const RatVec& nu, const RatVec& mu) const;
  std::optional<int> dist(const RatVec& nu, const RatVec& mu) const;

  // Whether some saturated chain from nu down to mu has a<upper, h_beta>
  // integral at every cover step.
  bool has_a_chain(const RatVec& nu, const RatVec& mu, const Rat& a) const;

  const RatVec& minimum() const;  // the dominant point
  const RatVec& maximum() const;

 private:
  int idx(const RatVec& w) const;  // throws weight_not_in_orbit

  int n_;
  std::vector<RatVec> elems_;           // sorted
  std::vector<std::vector<int>> dist_;  // -1 where incomparable
  // covers_[u] lists (v, <elems_[u], h_beta>) over the covers u -> v.
  std::vector<std::vector<std::pair<int, Rat>>> covers_;
};

// Shared, memoized poset per dominant point; safe for concurrent use.
const OrbitPoset& shared_orbit_poset(const RatVec& dominant);

bool order_geq(const Weight& nu, const Weight& mu, const Partition& lambda);
std::optional<int> orbit_dist(const Weight& nu, const Weight& mu, const Partition& lambda);

// Lakshmibai-Seshadri path of class lambda: directions nu_0 > ... > nu_{s-1}
// in W.lambda (strictly decreasing), cuts 0 = a_0 < ... < a_s = 1, with an
// a_k-chain between consecutive directions at each interior cut.  As a
// function it moves with velocity nu_k on [a_k, a_{k+1}].
class LSPath {
 public:
  // Validating constructor; raises distinct errors for weights outside the
  // orbit, an unordered chain, bad cuts, and a missing a-chain.
  LSPath(const Partition& lambda, int n, std::vector<Weight> nus, std::vector<Rat> cuts);

  static LSPath straight(const Partition& lambda, int n);  // pi_lambda

  const Partition& cls() const { return lambda_; }
  int rank() const { return n_; }
  const std::vector<Weight>& directions() const { return nus_; }
  const std::vector<Rat>& cuts() const { return cuts_; }

  const Weight& iota() const { return nus_.front(); }
  const Weight& tau() const { return nus_.back(); }
  Weight weight() const;  // pi(1), integral for integral classes

  PLPath to_pl() const;
  static LSPath from_pl(const PLPath& p, const Partition& lambda);

  auto operator<=>(const LSPath&) const = default;

  std::string to_string() const;

 private:
  Partition lambda_;
  int n_;
  std::vector<Weight> nus_;
  std::vector<Rat> cuts_;
};

// Littelmann root operators.  For f the corrected standard convention is
// used: t_0 is the last attainment of the minimum level h and t_1 the first
// attainment of h+1 after t_0.
std::optional<LSPath> path_op(const LSPath& pi, int i, Dir dir);

// The crystal isomorphism B(lambda) -> LS paths with v_lambda |-> pi_lambda,
// computed by raising to the highest weight element and replaying inverses.
LSPath psi(const Tableau& t, const Partition& lambda);
Tableau psi_inv(const LSPath& pi);

// All of B(lambda) as paths: the lowering closure of pi_lambda, sorted.
std::vector<LSPath> enumerate_ls_paths(const Partition& lambda, int n);

}  // namespace crystal
