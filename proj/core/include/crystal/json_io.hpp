#pragma once

#include <string>

#include "crystal/continuous.hpp"
#include "crystal/identity.hpp"
#include "crystal/ls_path.hpp"
#include "crystal/matrix.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

// JSON shapes are part of the external interface:
//   tableau   {"shape":[...], "rows":[[...],...]}
//   LS path   {"nus":[[...],...], "cuts":["0","1/2","1"]}
//   PL path   {"t":["0","1/3","1"], "v":[["0","0"],["1/3","0"],["1/3","1/3"]]}
//   poly      [{"exp":[...], "coef":k}, ...]
//   matrix    [[...],...]  (rationals as "p/q" strings)
std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& s, int n);

std::string word_to_json(const Word& w);

std::string ls_path_to_json(const LSPath& p);
LSPath ls_path_from_json(const std::string& s, const Partition& lambda, int n);

std::string pl_path_to_json(const PLPath& p);
PLPath pl_path_from_json(const std::string& s);

std::string poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const std::string& s, int nvars);

std::string nn_matrix_to_json(const NNMatrix& m);
NNMatrix nn_matrix_from_json(const std::string& s);

std::string rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const std::string& s);

std::string classification_to_json(const LowClassification& c);
std::string identity_report_to_json(const IdentityReport& r);
std::string main2_report_to_json(const Main2Report& r);

}  // namespace crystal
