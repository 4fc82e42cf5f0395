#include "crystal/poly.hpp"

#include <algorithm>

#include "crystal/error.hpp"

namespace crystal {

SparsePoly SparsePoly::one(int nvars) {
  SparsePoly p(nvars);
  p.add_term(Exponents(nvars, 0), 1);
  return p;
}

SparsePoly SparsePoly::monomial(Exponents exp, Int coef) {
  SparsePoly p(static_cast<int>(exp.size()));
  p.add_term(exp, coef);
  return p;
}

Int SparsePoly::coefficient(const Exponents& exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [exp, c] : terms_)
    d = std::max(d, std::accumulate(exp.begin(), exp.end(), 0));
  return d;
}

void SparsePoly::add_term(const Exponents& exp, const Int& coef) {
  require(static_cast<int>(exp.size()) == nvars_, ErrorKind::shape_mismatch,
          "exponent arity mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  return SparsePoly::mul_truncated(a, b, -1);
}

SparsePoly SparsePoly::mul_truncated(const SparsePoly& a, const SparsePoly& b, int max_degree) {
  SparsePoly out(a.nvars_);
  Exponents exp(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int deg = 0;
      for (int k = 0; k < a.nvars_; ++k) {
        exp[k] = ea[k] + eb[k];
        deg += exp[k];
      }
      if (max_degree >= 0 && deg > max_degree) continue;
      out.add_term(exp, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::truncated(int max_degree) const {
  SparsePoly out(nvars_);
  for (const auto& [exp, c] : terms_)
    if (std::accumulate(exp.begin(), exp.end(), 0) <= max_degree) out.add_term(exp, c);
  return out;
}

SparsePoly SparsePoly::homogeneous_component(int degree) const {
  SparsePoly out(nvars_);
  for (const auto& [exp, c] : terms_)
    if (std::accumulate(exp.begin(), exp.end(), 0) == degree) out.add_term(exp, c);
  return out;
}

SparsePoly SparsePoly::map_exponents(const std::function<Exponents(const Exponents&)>& f) const {
  SparsePoly out(nvars_);
  for (const auto& [exp, c] : terms_) out.add_term(f(exp), c);
  return out;
}

std::vector<std::string> xy_variable_names(int nvars) {
  require(nvars % 2 == 0, ErrorKind::shape_mismatch, "character ring has 2n variables");
  const int n = nvars / 2;
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  for (int k = 1; k <= n; ++k) names.push_back("y" + std::to_string(k));
  return names;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto names = xy_variable_names(nvars_);
  std::string s;
  for (const auto& [exp, c] : terms_) {
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (exp[k] > 1) mono += "^" + std::to_string(exp[k]);
    }
    if (mono.empty()) {
      s += mag.str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.str() + "*" + mono;
    }
  }
  return s;
}

SparsePoly substitute_y_equals_x(const SparsePoly& p) {
  const int n = p.nvars() / 2;
  return p.map_exponents([n](const Exponents& e) {
    Exponents out(e.size(), 0);
    for (int k = 0; k < n; ++k) out[k] = e[k] + e[n + k];
    return out;
  });
}

SparsePoly reverse_x_variables(const SparsePoly& p) {
  const int n = p.nvars() / 2;
  return p.map_exponents([n](const Exponents& e) {
    Exponents out = e;
    std::reverse(out.begin(), out.begin() + n);
    return out;
  });
}

SparsePoly swap_xy_blocks(const SparsePoly& p) {
  const int n = p.nvars() / 2;
  return p.map_exponents([n](const Exponents& e) {
    Exponents out = e;
    std::rotate(out.begin(), out.begin() + n, out.end());
    return out;
  });
}

SparsePoly isobaric_divided_difference(const SparsePoly& f, int i) {
  const int n = f.nvars() / 2;
  require(1 <= i && i < n, ErrorKind::index_out_of_range, "divided difference index");
  const int xi = i - 1, xj = i;

  // Numerator g - s_i g with g = x_i f.
  SparsePoly numer(f.nvars());
  for (const auto& [exp, c] : f.terms()) {
    Exponents e = exp;
    ++e[xi];
    numer.add_term(e, c);
    std::swap(e[xi], e[xj]);
    numer.add_term(e, -c);
  }

  // Synthetic division by (x_i - x_{i+1}): collect coefficients of powers of
  // x_i and run Horner with a = x_{i+1}; the remainder must vanish.
  std::map<int, SparsePoly> by_power;
  int dmax = 0;
  for (const auto& [exp, c] : numer.terms()) {
    const int d = exp[xi];
    Exponents e = exp;
    e[xi] = 0;
    auto [it, inserted] = by_power.try_emplace(d, SparsePoly(f.nvars()));
    it->second.add_term(e, c);
    dmax = std::max(dmax, d);
  }
  auto coeff_of = [&](int d) -> SparsePoly {
    const auto it = by_power.find(d);
    return it == by_power.end() ? SparsePoly(f.nvars()) : it->second;
  };

  SparsePoly quotient(f.nvars());
  SparsePoly carry(f.nvars());  // q_d while descending
  for (int d = dmax; d >= 1; --d) {
    SparsePoly qd = coeff_of(d);
    if (d < dmax) {
      SparsePoly shifted = carry.map_exponents([xj](const Exponents& e) {
        Exponents out = e;
        ++out[xj];
        return out;
      });
      qd += shifted;
    }
    quotient += qd.map_exponents([xi, d](const Exponents& e) {
      Exponents out = e;
      out[xi] = d - 1;
      return out;
    });
    carry = std::move(qd);
  }
  SparsePoly remainder = coeff_of(0);
  remainder += carry.map_exponents([xj](const Exponents& e) {
    Exponents out = e;
    ++out[xj];
    return out;
  });
  require(remainder.is_zero(), ErrorKind::internal,
          "divided difference division left a remainder");
  return quotient;
}

}  // namespace crystal
