#include "crystal/word.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

Word::Word(std::vector<int> ls, int alphabet) : letters(std::move(ls)), n(alphabet) {
  require(n >= 1, ErrorKind::parse_error, "alphabet size must be >= 1");
  for (int a : letters)
    require(1 <= a && a <= n, ErrorKind::parse_error,
            "letter " + std::to_string(a) + " outside [1," + std::to_string(n) + "]");
}

Weight Word::weight() const {
  std::vector<Coord> c(n, 0);
  for (int a : letters) ++c[a - 1];
  return Weight(std::move(c));
}

std::string Word::to_string() const {
  std::string s;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (n > 9 && k) s += ",";
    s += std::to_string(letters[k]);
  }
  return s;
}

Word Word::parse(const std::string& s, int n) {
  std::vector<int> letters;
  if (n <= 9) {
    for (char ch : s) {
      require(isdigit(static_cast<unsigned char>(ch)), ErrorKind::parse_error,
              "bad word '" + s + "'");
      letters.push_back(ch - '0');
    }
  } else {
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        letters.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) letters.push_back(std::stoi(cur));
  }
  return Word(std::move(letters), n);
}

Coord letter_eps(int letter, int i) { return letter == i + 1 ? 1 : 0; }
Coord letter_phi(int letter, int i) { return letter == i ? 1 : 0; }

namespace {

void check_index(const Word& a, int i) {
  require(1 <= i && i < a.n, ErrorKind::index_out_of_range,
          "operator index " + std::to_string(i) + " for n=" + std::to_string(a.n));
}

struct EpsPhi {
  Coord eps, phi;
};

// eps_i/phi_i of the prefix a_1..a_k, folded left to right.
std::vector<EpsPhi> prefix_stats(const Word& a, int i) {
  std::vector<EpsPhi> pre(a.length() + 1);
  pre[0] = {0, 0};
  Coord wt_pair = 0;  // <wt(prefix), h_i>
  for (size_t k = 0; k < a.length(); ++k) {
    const int c = a.letters[k];
    const Coord le = letter_eps(c, i), lp = letter_phi(c, i);
    const Coord lw = (c == i ? 1 : 0) - (c == i + 1 ? 1 : 0);
    pre[k + 1].eps = std::max(pre[k].eps, le - wt_pair);
    pre[k + 1].phi = std::max(pre[k].phi + lw, lp);
    wt_pair += lw;
  }
  return pre;
}

}  // namespace

std::optional<Word> word_op(const Word& a, int i, Dir dir) {
  check_index(a, i);
  if (a.letters.empty()) return std::nullopt;

  const auto pre = prefix_stats(a, i);
  // Walk the left fold (..((a_1 (x) a_2) (x) a_3)..) from the outside in:
  // at each step the right factor is the single letter a_k.
  size_t k = a.length();
  while (k > 1) {
    const int c = a.letters[k - 1];
    const bool first = dir == Dir::raise ? pre[k - 1].phi >= letter_eps(c, i)
                                         : pre[k - 1].phi > letter_eps(c, i);
    if (!first) break;
    --k;
  }
  // The operator lands on letter a_k (1-based position k).
  const int c = a.letters[k - 1];
  Word out = a;
  if (dir == Dir::raise) {
    if (c != i + 1) return std::nullopt;
    out.letters[k - 1] = i;
  } else {
    if (c != i) return std::nullopt;
    out.letters[k - 1] = i + 1;
  }
  return out;
}

CrystalStats word_stats(const Word& a) {
  CrystalStats st{a.weight(), {}, {}};
  st.eps.reserve(std::max(a.n - 1, 0));
  st.phi.reserve(std::max(a.n - 1, 0));
  for (int i = 1; i < a.n; ++i) {
    const auto pre = prefix_stats(a, i);
    st.eps.push_back(pre.back().eps);
    st.phi.push_back(pre.back().phi);
  }
  return st;
}

}  // namespace crystal
