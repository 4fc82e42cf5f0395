#include "crystal/matrix.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

NNMatrix::NNMatrix(int n, std::vector<Coord> entries) : n_(n), m_(std::move(entries)) {
  require(n_ >= 1, ErrorKind::parse_error, "matrix size must be >= 1");
  require(static_cast<int>(m_.size()) == n_ * n_, ErrorKind::shape_mismatch,
          "entry count must be n^2");
  for (Coord v : m_)
    require(v >= 0, ErrorKind::parse_error, "matrix entries must be >= 0");
}

NNMatrix NNMatrix::zeros(int n) { return NNMatrix(n, std::vector<Coord>(n * n, 0)); }

NNMatrix NNMatrix::diagonal(const Partition& lambda) {
  NNMatrix m = zeros(lambda.rank());
  for (int k = 1; k <= lambda.rank(); ++k) m.at(k, k) = lambda.part(k);
  return m;
}

NNMatrix NNMatrix::unit(int n, int i, int j) {
  NNMatrix m = zeros(n);
  m.at(i, j) = 1;
  return m;
}

Coord NNMatrix::at(int i, int j) const {
  require(1 <= i && i <= n_ && 1 <= j && j <= n_, ErrorKind::index_out_of_range,
          "matrix index");
  return m_[(i - 1) * n_ + (j - 1)];
}

Coord& NNMatrix::at(int i, int j) {
  require(1 <= i && i <= n_ && 1 <= j && j <= n_, ErrorKind::index_out_of_range,
          "matrix index");
  return m_[(i - 1) * n_ + (j - 1)];
}

Coord NNMatrix::entry_sum() const {
  Coord s = 0;
  for (Coord v : m_) s += v;
  return s;
}

NNMatrix NNMatrix::transposed() const {
  NNMatrix t = zeros(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool NNMatrix::lower_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool NNMatrix::upper_triangular() const { return transposed().lower_triangular(); }

std::optional<Partition> NNMatrix::as_diagonal_partition() const {
  std::vector<Coord> diag;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j)
      if (i != j && at(i, j) != 0) return std::nullopt;
    diag.push_back(at(i, i));
  }
  for (int k = 0; k + 1 < n_; ++k)
    if (diag[k] < diag[k + 1]) return std::nullopt;
  return Partition(diag, n_);
}

std::string NNMatrix::to_string() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) s += ";";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(at(i, j));
    }
  }
  return s;
}

NNMatrix NNMatrix::parse(const std::string& s) {
  std::vector<std::vector<Coord>> rows{{}};
  std::string cur;
  auto flush = [&] {
    require(!cur.empty(), ErrorKind::parse_error, "empty matrix entry in '" + s + "'");
    try {
      rows.back().push_back(std::stoll(cur));
    } catch (const std::exception&) {
      fail(ErrorKind::parse_error, "bad matrix entry '" + cur + "'");
    }
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
  std::vector<Coord> entries;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, ErrorKind::parse_error,
            "matrix '" + s + "' is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return NNMatrix(n, std::move(entries));
}

Biword matrix_biword(const NNMatrix& m) {
  std::vector<int> a, b;
  for (int j = 1; j <= m.size(); ++j)
    for (int i = m.size(); i >= 1; --i)
      for (Coord k = 0; k < m.at(i, j); ++k) {
        a.push_back(i);
        b.push_back(j);
      }
  return {Word(std::move(a), m.size()), Word(std::move(b), m.size())};
}

NNMatrix biword_matrix(const Biword& bw) {
  require(bw.a.n == bw.b.n, ErrorKind::shape_mismatch, "biword alphabet mismatch");
  require(bw.a.length() == bw.b.length(), ErrorKind::unsorted_biword,
          "biword rows must have equal length");
  for (size_t k = 0; k + 1 < bw.a.length(); ++k) {
    const int a = bw.a.letters[k], c = bw.a.letters[k + 1];
    const int b = bw.b.letters[k], d = bw.b.letters[k + 1];
    const bool ordered = b < d || (b == d && a >= c);
    require(ordered, ErrorKind::unsorted_biword, "biword is not sorted");
  }
  NNMatrix m = NNMatrix::zeros(bw.a.n);
  for (size_t k = 0; k < bw.a.length(); ++k)
    ++m.at(bw.a.letters[k], bw.b.letters[k]);
  return m;
}

std::optional<NNMatrix> bicrystal_op(const NNMatrix& m, int i, Dir dir, Side side) {
  if (side == Side::col) {
    auto t = bicrystal_op(m.transposed(), i, dir, Side::row);
    if (!t) return std::nullopt;
    return t->transposed();
  }
  const Biword bw = matrix_biword(m);
  const auto moved = word_op(bw.a, i, dir);
  if (!moved) return std::nullopt;
  size_t k = 0;
  while (k < bw.a.length() && bw.a.letters[k] == moved->letters[k]) ++k;
  NNMatrix out = m;
  --out.at(bw.a.letters[k], bw.b.letters[k]);
  ++out.at(moved->letters[k], bw.b.letters[k]);
  return out;
}

std::optional<std::pair<NNMatrix, Side>> diagonal_op_routed(const NNMatrix& m, int i, Dir dir) {
  require(1 <= i && i < m.size(), ErrorKind::index_out_of_range,
          "operator index " + std::to_string(i));
  const Word a = matrix_biword(m).a;
  const Word c = matrix_biword(m.transposed()).a;
  const CrystalStats sa = word_stats(a), sc = word_stats(c);
  // Tensor rule on a (x) c.
  const bool first = dir == Dir::raise ? sa.phi_at(i) >= sc.eps_at(i)
                                       : sa.phi_at(i) > sc.eps_at(i);
  const Side side = first ? Side::row : Side::col;
  auto out = bicrystal_op(m, i, dir, side);
  if (!out) return std::nullopt;
  return std::make_pair(*out, side);
}

std::optional<NNMatrix> diagonal_op(const NNMatrix& m, int i, Dir dir) {
  auto routed = diagonal_op_routed(m, i, dir);
  if (!routed) return std::nullopt;
  return routed->first;
}

RaiseResult raise_to_highest(const NNMatrix& m) {
  NNMatrix cur = m;
  std::vector<RaiseStep> script;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < m.size() && !moved; ++i) {
      if (auto next = diagonal_op_routed(cur, i, Dir::raise)) {
        script.push_back({i, next->second});
        cur = next->first;
        moved = true;
      }
    }
  }
  const auto diag = cur.as_diagonal_partition();
  require(diag.has_value(), ErrorKind::internal,
          "raise-extremal matrix is not of the form M_lambda: " + cur.to_string());
  return {*diag, std::move(script)};
}

std::pair<Tableau, Tableau> rsk(const NNMatrix& m) {
  const Word a = matrix_biword(m).a;
  const Word c = matrix_biword(m.transposed()).a;
  Tableau p = word_to_tableau(a);
  Tableau q = word_to_tableau(c);
  require(p.shape() == q.shape(), ErrorKind::internal, "RSK pair shapes differ");
  return {std::move(p), std::move(q)};
}

LowClassification classify_low(const NNMatrix& m) {
  require(m.lower_triangular(), ErrorKind::not_lower_triangular,
          "classify_low needs a lower-triangular matrix");
  auto [p, q] = rsk(m);
  const Partition lambda = p.shape();
  const Weight iota_q = psi(q, lambda).iota();
  const Permutation w = min_coset_rep_for(lambda, iota_q);
  const Weight tau_p = psi(p, lambda).tau();
  require(order_geq(tau_p, act(w, lambda.weight()), lambda), ErrorKind::internal,
          "P escaped the opposite Demazure crystal of w");
  return {lambda, w, std::move(p), std::move(q)};
}

std::vector<NNMatrix> all_matrices(int n, Coord entry_sum, bool lower_only) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!lower_only || j <= i) slots.emplace_back(i, j);
  std::vector<NNMatrix> out;
  NNMatrix cur = NNMatrix::zeros(n);
  auto rec = [&](auto&& self, size_t slot, Coord remaining) -> void {
    if (slot == slots.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const auto [i, j] = slots[slot];
    for (Coord v = remaining; v >= 0; --v) {
      cur.at(i, j) = v;
      self(self, slot + 1, remaining - v);
    }
    cur.at(i, j) = 0;
  };
  rec(rec, 0, entry_sum);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystal
