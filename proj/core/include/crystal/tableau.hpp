#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/word.hpp"

namespace crystal {

// Semistandard Young tableau of a given shape with entries in [n],
// realizing the highest weight crystal B(lambda).
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows, int n);

  // v_lambda: row i filled with the letter i.
  static Tableau highest_weight(const Partition& lambda, int n);

  int alphabet() const { return n_; }
  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  Weight weight() const;

  // Reading word: columns right to left, top to bottom within a column.
  // Under the library's tensor convention this makes the reading of
  // v_lambda a highest weight word, and T |-> reading(T) a strict
  // embedding of B(lambda) into the word crystal.
  Word reading_word() const;

  // Cell of the k-th reading-word letter, as (row, col), 1-based.
  std::pair<int, int> reading_cell(size_t k) const;

  auto operator<=>(const Tableau&) const = default;

  std::string to_string() const;  // "[1,1|2]"

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;  // only the nonempty rows
  int n_;
};

// Crystal operator on B(lambda), computed through the reading word.
std::optional<Tableau> tableau_op(const Tableau& t, int i, Dir dir);

// The unique tableau b with b equivalent to the word a: raise a to its
// highest weight word, then replay the inverse lowering sequence from
// v_lambda inside the tableau crystal.
Tableau word_to_tableau(const Word& a);

// All of B(lambda) over [n]: the closure of v_lambda under lowering
// operators, returned sorted.  Coincides with the set of semistandard
// tableaux of shape lambda.
std::vector<Tableau> enumerate_crystal(const Partition& lambda, int n);

}  // namespace crystal
