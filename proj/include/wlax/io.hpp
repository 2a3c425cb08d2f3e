#pragma once

#include <string>

#include "json.hpp"
#include "wlax/laxop.hpp"
#include "wlax/report.hpp"

namespace wlax {

using nlohmann::json;

json to_json(const Rational& q);  // "p/q" string
json to_json(const QMatrix& m);   // rows of "p/q"
// [{monomial: [basis indices], coeff: "p/q"}]
json uea_json(const UEARing& R, const UEAElement& a);
// {floor: doubled int or null, terms: [{exp: doubled int, value: <term list>}]}
json series_json(const UEARing& R, const Poly& p, int floor);
json series_matrix_json(const UEARing& R, const SeriesMatrix& m);
json lax_json(const UEARing& R, const LaxResult& r);
json report_json(const UEARing* R, const Report& rep);

std::string exp_text(int exp2);  // "3", "5/2"
std::string series_text(const UEARing& R, const Poly& p, int floor);
std::string report_text(const UEARing* R, const Report& rep);

// Generic representation file:
//   {"labels": [...], "matrices": [N x N, ...], "f": N x N, "x": N x N, "e": N x N}
// Entries are integers or "p/q" strings.  x must be diagonal.
GradedSetup load_rep_file(const std::string& path);

}  // namespace wlax
