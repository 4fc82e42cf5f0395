#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/weyl.hpp"

namespace crystal {

enum class Dir { raise, lower };

// Finite word over the alphabet [n] = {1..n}, read as the tensor product
// a_1 (x) a_2 (x) ... of single-letter crystals B(eps_1).
//
// Operator convention (fixed throughout the library): on b_1 (x) b_2 the
// raising operator acts on the FIRST factor when phi_i(b_1) >= eps_i(b_2),
// and the lowering operator acts on the first factor when the inequality is
// strict.  This is opposite to some textbook conventions; all derived data
// (readings, RSK, path replays) are calibrated to it.
struct Word {
  std::vector<int> letters;  // each in 1..n
  int n = 0;

  Word(std::vector<int> ls, int alphabet);
  static Word empty(int n) { return Word({}, n); }

  size_t length() const { return letters.size(); }
  Weight weight() const;

  auto operator<=>(const Word&) const = default;

  std::string to_string() const;  // digits while n <= 9, else comma-separated
  static Word parse(const std::string& s, int n);
};

struct CrystalStats {
  Weight wt;
  std::vector<Coord> eps;  // eps[i-1] = eps_i, i in 1..n-1
  std::vector<Coord> phi;

  Coord eps_at(int i) const { return eps.at(i - 1); }
  Coord phi_at(int i) const { return phi.at(i - 1); }
};

// Kashiwara operator on a word via left-to-right folding of the two-factor
// rule; nullopt is the formal zero.
std::optional<Word> word_op(const Word& a, int i, Dir dir);

// wt, eps_i, phi_i of a word by folding the tensor formulas.
CrystalStats word_stats(const Word& a);

// Stats of a single letter, for the folding base case.
Coord letter_eps(int letter, int i);
Coord letter_phi(int letter, int i);

}  // namespace crystal
