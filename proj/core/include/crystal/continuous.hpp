#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/matrix.hpp"
#include "crystal/pl_path.hpp"
#include "crystal/weyl.hpp"

namespace crystal {

// eps_i / phi_i of a path: the extreme admissible raising and lowering
// amounts, -min level and <endpoint, h_i> - min level.
Rat cont_eps(const PLPath& pi, int i);
Rat cont_phi(const PLPath& pi, int i);

// The one-parameter operator e^r_i on paths (r < 0 lowers; f^r = e^{-r}).
// Exact rational arithmetic; nullopt outside the admissible range
// -phi_i <= r <= eps_i.
std::optional<PLPath> cont_op(const PLPath& pi, int i, const Rat& r);

// Tensor rule: splits r into (r_1, r_2) and applies the factors' operators
// componentwise; agrees with cont_op on the concatenation.
std::optional<std::pair<PLPath, PLPath>> cont_tensor_op(const PLPath& b1, const PLPath& b2,
                                                        int i, const Rat& r);

// n x n matrix over the nonnegative rationals.
class RatMatrix {
 public:
  RatMatrix(int n, std::vector<Rat> entries);  // row-major
  static RatMatrix zeros(int n);
  static RatMatrix from_integer(const NNMatrix& m);
  static RatMatrix diagonal(const RatVec& lambda);

  int size() const { return n_; }
  const Rat& at(int i, int j) const;  // 1-based
  Rat& at(int i, int j);
  Rat entry_sum() const;

  RatMatrix transposed() const;
  RatMatrix scaled(const Rat& c) const;
  bool lower_triangular() const;
  std::optional<RatVec> as_diagonal_dominant() const;  // M_lambda form

  auto operator<=>(const RatMatrix&) const = default;

  std::string to_string() const;  // entries as "p/q"
  static RatMatrix parse(const std::string& s);

 private:
  int n_;
  std::vector<Rat> m_;
};

// pi_M: per column j = 1..n the axis segments m_{nj} eps_n, ..., m_{1j}
// eps_1, concatenated over columns; zero segments dropped and the rest
// given equal time shares.
PLPath build_pi_M(const RatMatrix& m);

// eps_i of the row-side (or column-side) crystal structure on matrices.
Rat cont_matrix_eps(const RatMatrix& m, int i, Side side);
Rat cont_matrix_phi(const RatMatrix& m, int i, Side side);

// Matrix-level operator determined by pi_{e^r M} = e^r pi_M; moves mass r
// between rows i and i+1 column by column.
std::optional<RatMatrix> cont_matrix_op(const RatMatrix& m, int i, const Rat& r, Side side);

struct ContStep {
  Side side;
  int i;
  Rat r;  // the raising amount applied
};

struct ContRaiseResult {
  RatVec lambda;  // dominant, the diagonal of the terminal matrix
  std::vector<ContStep> script;
};

// Alternately exhausts row- and column-side raises, each with the full
// admissible amount, until the terminal M_lambda; an iteration budget
// guards against non-termination.
ContRaiseResult cont_raise_to_highest(const RatMatrix& m);

// Direction chain of a path in F(pi_lambda): every maximal straight piece
// must move along an orbit point and the chain must strictly decrease.
std::vector<RatVec> ls_direction_chain(const PLPath& pi, const RatVec& lambda);

struct Main2Report {
  RatVec lambda;
  Permutation w;        // minimal coset representative with w.lambda = iota(Q)
  PLPath p_path;        // row-side kappa component
  PLPath q_path;        // column-side kappa component
  RatVec tau_p;
  RatVec iota_q;
  bool tau_geq_iota;    // the tensor-cell condition
};

// The continuous main bijection check on one lower-triangular rational
// matrix: raises to M_lambda, replays the script on (pi_lambda, pi_lambda),
// and verifies the cell conditions.
Main2Report verify_main2(const RatMatrix& m);

}  // namespace crystal
