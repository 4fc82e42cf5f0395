#include "crystal/tableau.hpp"

#include <algorithm>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows, int n)
    : shape_(std::move(shape)), rows_(std::move(rows)), n_(n) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  int nonzero = 0;
  for (int r = 1; r <= shape_.rank(); ++r)
    if (shape_.part(r) > 0) ++nonzero;
  require(static_cast<int>(rows_.size()) == nonzero, ErrorKind::shape_mismatch,
          "row count does not match shape");
  for (size_t r = 0; r < rows_.size(); ++r) {
    require(static_cast<Coord>(rows_[r].size()) == shape_.part(static_cast<int>(r) + 1),
            ErrorKind::shape_mismatch, "row length does not match shape");
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      require(1 <= v && v <= n_, ErrorKind::non_semistandard, "entry outside [n]");
      if (c + 1 < rows_[r].size())
        require(v <= rows_[r][c + 1], ErrorKind::non_semistandard,
                "row must weakly increase");
      if (r + 1 < rows_.size() && c < rows_[r + 1].size())
        require(v < rows_[r + 1][c], ErrorKind::non_semistandard,
                "column must strictly increase");
    }
  }
}

Tableau Tableau::highest_weight(const Partition& lambda, int n) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= lambda.rank() && lambda.part(r) > 0; ++r) {
    require(r <= n, ErrorKind::shape_mismatch, "shape has more than n rows");
    rows.emplace_back(lambda.part(r), r);
  }
  return Tableau(lambda, std::move(rows), n);
}

Weight Tableau::weight() const {
  std::vector<Coord> c(n_, 0);
  for (const auto& row : rows_)
    for (int v : row) ++c[v - 1];
  return Weight(std::move(c));
}

Word Tableau::reading_word() const {
  std::vector<int> letters;
  const Coord width = shape_.part(1);
  for (Coord col = width; col >= 1; --col)
    for (size_t r = 0; r < rows_.size(); ++r)
      if (static_cast<Coord>(rows_[r].size()) >= col)
        letters.push_back(rows_[r][col - 1]);
  return Word(std::move(letters), n_);
}

std::pair<int, int> Tableau::reading_cell(size_t k) const {
  const Coord width = shape_.part(1);
  size_t pos = 0;
  for (Coord col = width; col >= 1; --col)
    for (size_t r = 0; r < rows_.size(); ++r)
      if (static_cast<Coord>(rows_[r].size()) >= col) {
        if (pos == k) return {static_cast<int>(r) + 1, static_cast<int>(col)};
        ++pos;
      }
  fail(ErrorKind::index_out_of_range, "reading position beyond tableau");
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "|";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows_[r][c]);
    }
  }
  return s + "]";
}

std::optional<Tableau> tableau_op(const Tableau& t, int i, Dir dir) {
  const Word w = t.reading_word();
  const auto moved = word_op(w, i, dir);
  if (!moved) return std::nullopt;
  size_t k = 0;
  while (k < w.length() && w.letters[k] == moved->letters[k]) ++k;
  const auto [row, col] = t.reading_cell(k);
  auto rows = t.rows();
  rows[row - 1][col - 1] = moved->letters[k];
  // B(lambda) is closed under the operators, so the rebuilt filling must be
  // semistandard again; the constructor re-checks that.
  return Tableau(t.shape(), std::move(rows), t.alphabet());
}

Tableau word_to_tableau(const Word& a) {
  std::vector<int> script;
  Word cur = a;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < a.n && !moved; ++i) {
      if (auto up = word_op(cur, i, Dir::raise)) {
        cur = *up;
        script.push_back(i);
        moved = true;
      }
    }
  }
  const Weight hw = cur.weight();
  require(hw.dominant(), ErrorKind::internal,
          "raising a word terminated at a non-dominant weight");
  Tableau t = Tableau::highest_weight(Partition(hw.coords(), a.n), a.n);
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    auto down = tableau_op(t, *it, Dir::lower);
    require(down.has_value(), ErrorKind::internal,
            "replaying a raising script failed in B(lambda)");
    t = *down;
  }
  return t;
}

std::vector<Tableau> enumerate_crystal(const Partition& lambda, int n) {
  std::set<Tableau> seen;
  std::vector<Tableau> queue{Tableau::highest_weight(lambda, n)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Tableau t = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i < n; ++i)
      if (auto down = tableau_op(t, i, Dir::lower))
        if (seen.insert(*down).second) queue.push_back(*down);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace crystal
