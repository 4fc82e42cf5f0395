#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/ls_path.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

// n x n matrix over the nonnegative integers: an element of the matrix
// bicrystal.  Row operators act through the biword's top row, column
// operators through the transpose.
class NNMatrix {
 public:
  NNMatrix(int n, std::vector<Coord> entries);  // row-major
  static NNMatrix zeros(int n);
  static NNMatrix diagonal(const Partition& lambda);  // M_lambda
  static NNMatrix unit(int n, int i, int j);          // e_{ij}

  int size() const { return n_; }
  Coord at(int i, int j) const;  // 1-based
  Coord& at(int i, int j);
  Coord entry_sum() const;

  NNMatrix transposed() const;
  bool lower_triangular() const;
  bool upper_triangular() const;

  // The diagonal partition if this is some M_lambda.
  std::optional<Partition> as_diagonal_partition() const;

  auto operator<=>(const NNMatrix&) const = default;

  std::string to_string() const;  // "r1c1,r1c2;r2c1,r2c2"
  static NNMatrix parse(const std::string& s);

 private:
  int n_;
  std::vector<Coord> m_;
};

// Biword: entries of a matrix listed with multiplicity, sorted by column
// and then by descending row, so (a,b) < (c,d) iff b < d, or b = d and
// a > c.
struct Biword {
  Word a;  // row indices
  Word b;  // column indices
};

Biword matrix_biword(const NNMatrix& m);
NNMatrix biword_matrix(const Biword& bw);  // errors on an unsorted biword

enum class Side { row, col };

// One bicrystal operator: the word operator applied through the a-word of M
// (side row) or of M^t (side col).
std::optional<NNMatrix> bicrystal_op(const NNMatrix& m, int i, Dir dir, Side side);

// The crystal structure transported through RSK: the two-factor tensor rule
// on a (x) c decides which side acts.
std::optional<NNMatrix> diagonal_op(const NNMatrix& m, int i, Dir dir);
std::optional<std::pair<NNMatrix, Side>> diagonal_op_routed(const NNMatrix& m, int i, Dir dir);

struct RaiseStep {
  int i;
  Side side;
};

struct RaiseResult {
  Partition lambda;
  std::vector<RaiseStep> script;
};

// Greedy diagonal raising (smallest index first) until extremal; the
// terminal matrix must be some M_lambda.
RaiseResult raise_to_highest(const NNMatrix& m);

// kappa: M |-> (b_a, b_c), the RSK pair of tableaux of a common shape.
std::pair<Tableau, Tableau> rsk(const NNMatrix& m);

struct LowClassification {
  Partition lambda;
  Permutation w;  // minimal coset representative
  Tableau p;      // in B^w(lambda)
  Tableau q;      // in the atom of w
};

// The main bijection on lower-triangular matrices: lambda and the pair from
// RSK, with w read off from iota(psi(Q)); membership of P is re-checked.
LowClassification classify_low(const NNMatrix& m);

// All n x n matrices with the given entry sum, optionally restricted to
// lower-triangular support; ordered lexicographically.
std::vector<NNMatrix> all_matrices(int n, Coord entry_sum, bool lower_only);

}  // namespace crystal
