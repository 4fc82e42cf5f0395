#include "crystal/json_io.hpp"

#include <json.hpp>

#include "crystal/error.hpp"

namespace crystal {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& s) {
  Json j = Json::parse(s, nullptr, false);
  require(!j.is_discarded(), ErrorKind::parse_error, "malformed JSON");
  return j;
}

Json weight_json(const Weight& w) {
  Json out = Json::array();
  for (Coord c : w.coords()) out.push_back(c);
  return out;
}

Json rat_vec_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_to_string(r));
  return out;
}

Json tableau_json(const Tableau& t) {
  Json shape = Json::array();
  for (Coord p : t.shape().parts()) shape.push_back(p);
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return Json{{"shape", shape}, {"rows", rows}};
}

Json poly_json(const SparsePoly& p) {
  Json out = Json::array();
  for (const auto& [exp, coef] : p.terms()) {
    Json term{{"exp", exp}};
    // Counts fit signed 64 bits at desk scale; fall back to a string.
    if (coef >= std::numeric_limits<long long>::min() &&
        coef <= std::numeric_limits<long long>::max()) {
      term["coef"] = static_cast<long long>(coef);
    } else {
      term["coef"] = coef.str();
    }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

std::string tableau_to_json(const Tableau& t) { return tableau_json(t).dump(); }

Tableau tableau_from_json(const std::string& s, int n) {
  const Json j = parse_json(s);
  require(j.contains("shape") && j.contains("rows"), ErrorKind::parse_error,
          "tableau JSON needs shape and rows");
  std::vector<Coord> shape = j["shape"].get<std::vector<Coord>>();
  std::vector<std::vector<int>> rows = j["rows"].get<std::vector<std::vector<int>>>();
  return Tableau(Partition(shape, n), std::move(rows), n);
}

std::string word_to_json(const Word& w) { return Json(w.to_string()).dump(); }

std::string ls_path_to_json(const LSPath& p) {
  Json nus = Json::array();
  for (const auto& nu : p.directions()) nus.push_back(weight_json(nu));
  Json cuts = Json::array();
  for (const auto& c : p.cuts()) cuts.push_back(rat_to_string(c));
  return Json{{"nus", nus}, {"cuts", cuts}}.dump();
}

LSPath ls_path_from_json(const std::string& s, const Partition& lambda, int n) {
  const Json j = parse_json(s);
  require(j.contains("nus") && j.contains("cuts"), ErrorKind::parse_error,
          "LS path JSON needs nus and cuts");
  std::vector<Weight> nus;
  for (const auto& arr : j["nus"]) nus.emplace_back(arr.get<std::vector<Coord>>());
  std::vector<Rat> cuts;
  for (const auto& c : j["cuts"]) cuts.push_back(parse_rat(c.get<std::string>()));
  return LSPath(lambda, n, std::move(nus), std::move(cuts));
}

std::string pl_path_to_json(const PLPath& p) {
  Json t = Json::array();
  for (const auto& x : p.times()) t.push_back(rat_to_string(x));
  Json v = Json::array();
  for (const auto& val : p.values()) v.push_back(rat_vec_json(val));
  return Json{{"t", t}, {"v", v}}.dump();
}

PLPath pl_path_from_json(const std::string& s) {
  const Json j = parse_json(s);
  require(j.contains("t") && j.contains("v"), ErrorKind::parse_error,
          "PL path JSON needs t and v");
  std::vector<Rat> times;
  for (const auto& x : j["t"]) times.push_back(parse_rat(x.get<std::string>()));
  std::vector<RatVec> values;
  for (const auto& arr : j["v"]) {
    RatVec v;
    for (const auto& c : arr) v.push_back(parse_rat(c.get<std::string>()));
    values.push_back(std::move(v));
  }
  require(!values.empty(), ErrorKind::parse_error, "PL path JSON has no values");
  const int n = static_cast<int>(values.front().size());
  return PLPath(n, std::move(times), std::move(values));
}

std::string poly_to_json(const SparsePoly& p) { return poly_json(p).dump(); }

SparsePoly poly_from_json(const std::string& s, int nvars) {
  const Json j = parse_json(s);
  SparsePoly out(nvars);
  for (const auto& term : j) {
    require(term.contains("exp") && term.contains("coef"), ErrorKind::parse_error,
            "polynomial term needs exp and coef");
    Exponents exp = term["exp"].get<Exponents>();
    Int coef = term["coef"].is_string() ? Int(term["coef"].get<std::string>())
                                        : Int(term["coef"].get<long long>());
    out.add_term(exp, coef);
  }
  return out;
}

std::string nn_matrix_to_json(const NNMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

NNMatrix nn_matrix_from_json(const std::string& s) {
  const Json j = parse_json(s);
  const int n = static_cast<int>(j.size());
  std::vector<Coord> entries;
  for (const auto& row : j) {
    require(static_cast<int>(row.size()) == n, ErrorKind::parse_error,
            "matrix JSON is not square");
    for (const auto& v : row) entries.push_back(v.get<Coord>());
  }
  return NNMatrix(n, std::move(entries));
}

std::string rat_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

RatMatrix rat_matrix_from_json(const std::string& s) {
  const Json j = parse_json(s);
  const int n = static_cast<int>(j.size());
  std::vector<Rat> entries;
  for (const auto& row : j) {
    require(static_cast<int>(row.size()) == n, ErrorKind::parse_error,
            "matrix JSON is not square");
    for (const auto& v : row)
      entries.push_back(v.is_string() ? parse_rat(v.get<std::string>())
                                      : Rat(v.get<long long>()));
  }
  return RatMatrix(n, std::move(entries));
}

std::string classification_to_json(const LowClassification& c) {
  Json lambda = Json::array();
  for (Coord p : c.lambda.parts()) lambda.push_back(p);
  return Json{{"lambda", lambda},
              {"w", c.w.to_string()},
              {"P", tableau_json(c.p)},
              {"Q", tableau_json(c.q)}}
      .dump();
}

std::string identity_report_to_json(const IdentityReport& r) {
  Json degrees = Json::array();
  for (const auto& dc : r.per_degree)
    degrees.push_back(Json{{"degree", dc.degree},
                           {"lhs_terms", dc.lhs_terms},
                           {"rhs_terms", dc.rhs_terms},
                           {"diff_terms", dc.diff_terms}});
  return Json{{"variant", variant_name(r.variant)},
              {"n", r.n},
              {"D", r.degree_bound},
              {"difference_terms", r.difference.term_count()},
              {"ok", r.ok},
              {"per_degree", degrees}}
      .dump();
}

std::string main2_report_to_json(const Main2Report& r) {
  return Json{{"lambda", rat_vec_json(r.lambda)},
              {"w", r.w.to_string()},
              {"P_path", Json::parse(pl_path_to_json(r.p_path))},
              {"Q_path", Json::parse(pl_path_to_json(r.q_path))},
              {"tau_P", rat_vec_json(r.tau_p)},
              {"iota_Q", rat_vec_json(r.iota_q)},
              {"tau_geq_iota", r.tau_geq_iota}}
      .dump();
}

}  // namespace crystal
