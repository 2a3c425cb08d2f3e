#include "wlax/io.hpp"

#include <fstream>
#include <sstream>

#include "wlax/errors.hpp"

namespace wlax {

json to_json(const Rational& q) { return q.str(); }

json to_json(const QMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json uea_json(const UEARing& R, const UEAElement& a) {
    json out = json::array();
    for (auto& [m, c] : a.terms) out.push_back({{"monomial", R.factors(m)}, {"coeff", c.str()}});
    return out;
}

namespace {
json floor_json(int floor) { return floor == kExact ? json(nullptr) : json(floor); }
}  // namespace

json series_json(const UEARing& R, const Poly& p, int floor) {
    json terms = json::array();
    for (auto it = p.rbegin(); it != p.rend(); ++it) terms.push_back({{"exp", it->first}, {"value", uea_json(R, it->second)}});
    return {{"floor", floor_json(floor)}, {"terms", terms}};
}

json series_matrix_json(const UEARing& R, const SeriesMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(series_json(R, m.at(i, j), m.floor));
        rows.push_back(row);
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"floor", floor_json(m.floor)}, {"entries", rows}};
}

json lax_json(const UEARing& R, const LaxResult& r) {
    const auto& s = R.setup();
    json j;
    j["family"] = family_name(s.algebra.family);
    j["N"] = s.algebra.N;
    j["partition"] = s.partition;
    j["basis"] = s.algebra.labels;
    j["d"] = r.d;
    j["r1"] = r.r1;
    j["floor"] = r.floor;
    j["row_coordinates"] = r.T;
    j["col_coordinates"] = r.S;
    j["D"] = to_json(r.D);
    j["L"] = series_matrix_json(R, r.L);
    return j;
}

json report_json(const UEARing* R, const Report& rep) {
    json j;
    j["check"] = rep.check;
    j["status"] = rep.pass ? "pass" : "fail";
    j["floor"] = floor_json(rep.floor);
    json res = json::array();
    for (auto& r : rep.residues) {
        json e = {{"exp", r.exp2}, {"wexp", r.wexp2}, {"row", r.row}, {"col", r.col}};
        e["term"] = R ? uea_json(*R, r.term) : json::array();
        if (R) e["text"] = R->render(r.term);
        res.push_back(e);
    }
    j["residues"] = res;
    json info = json::object();
    for (auto& [k, v] : rep.info) {
        // repeated keys collect into arrays
        if (!info.contains(k)) info[k] = v;
        else {
            if (!info[k].is_array()) info[k] = json::array({info[k]});
            info[k].push_back(v);
        }
    }
    j["info"] = info;
    return j;
}

std::string exp_text(int exp2) {
    if (exp2 % 2 == 0) return std::to_string(exp2 / 2);
    return std::to_string(exp2) + "/2";
}

std::string series_text(const UEARing& R, const Poly& p, int floor) {
    std::ostringstream os;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << R.render(it->second) << ")";
        if (it->first != 0) os << " z^" << exp_text(it->first);
    }
    if (first) os << "0";
    if (floor != kExact) os << " + O(z^" << exp_text(floor - 1) << ")";
    return os.str();
}

std::string report_text(const UEARing* R, const Report& rep) {
    std::ostringstream os;
    os << rep.check << ": " << (rep.pass ? "PASS" : "FAIL");
    if (rep.floor != kExact) os << " (floor z^" << exp_text(rep.floor) << ")";
    os << "\n";
    for (auto& [k, v] : rep.info) os << "  " << k << " = " << v << "\n";
    for (auto& r : rep.residues) {
        os << "  residue [" << r.row << "," << r.col << "] z^" << exp_text(r.exp2);
        if (r.wexp2) os << " w^" << exp_text(r.wexp2);
        os << ": " << (R ? R->render(r.term) : std::string("?")) << "\n";
    }
    return os.str();
}

namespace {

Rational parse_entry(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::logic_error& e) {
            throw Error(Errc::InvalidInput, e.what());
        }
    }
    throw Error(Errc::InvalidInput, "matrix entries must be integers or \"p/q\" strings");
}

QMatrix parse_matrix(const json& v, int N) {
    if (!v.is_array() || static_cast<int>(v.size()) != N) throw Error(Errc::InvalidInput, "matrix must have N rows");
    QMatrix m(N, N);
    for (int i = 0; i < N; ++i) {
        if (!v[i].is_array() || static_cast<int>(v[i].size()) != N)
            throw Error(Errc::InvalidInput, "matrix rows must have N entries");
        for (int j = 0; j < N; ++j) m(i, j) = parse_entry(v[i][j]);
    }
    return m;
}

}  // namespace

GradedSetup load_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].empty())
        throw Error(Errc::InvalidInput, "missing \"matrices\"");
    for (const char* k : {"f", "x", "e"})
        if (!j.contains(k)) throw Error(Errc::InvalidInput, std::string("missing \"") + k + "\"");
    int N = static_cast<int>(j["matrices"][0].size());
    std::vector<QMatrix> reps;
    for (auto& m : j["matrices"]) reps.push_back(parse_matrix(m, N));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    else
        for (size_t i = 0; i < reps.size(); ++i) labels.push_back("u" + std::to_string(i + 1));
    if (labels.size() != reps.size()) throw Error(Errc::InvalidInput, "one label per matrix");
    QMatrix F = parse_matrix(j["f"], N), X = parse_matrix(j["x"], N), E = parse_matrix(j["e"], N);
    // a file that does not describe a graded Lie algebra is bad input, not a failed computation
    try {
        return setup_from_triple(model_from_rep(labels, reps), F, X, E);
    } catch (const Error& e) {
        if (is_config_error(e.code())) throw;
        throw Error(Errc::InvalidInput, e.what());
    }
}

}  // namespace wlax
