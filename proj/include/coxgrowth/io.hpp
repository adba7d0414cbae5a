#pragma once

// JSON serialization of polyhedra, Coxeter matrices, and growth
// reports, plus certified decimal rendering of isolating intervals.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coxeter.hpp"
#include "growth3d.hpp"
#include "polyhedron.hpp"

namespace coxgrowth {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& w) : std::runtime_error("ParseError: " + w) {}
};

// --- decimal rendering ------------------------------------------------------

// Truncated (toward zero) decimal expansion with `digits` places.
inline std::string decimal_string(const Rat& x, int digits) {
    Int n = num(x), d = den(x);
    bool neg = n < 0;
    if (neg) n = -n;
    Int ip = n / d;
    Int rem = n % d;
    std::ostringstream os;
    if (neg && (ip != 0 || rem != 0)) os << '-';
    os << ip;
    if (digits > 0) {
        os << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << rem / d;
            rem %= d;
        }
    }
    return os.str();
}

// Midpoint of the interval truncated to the requested digits; exact
// values render exactly when they terminate.
inline std::string decimal_string(const IsolatingInterval& iv, int digits) {
    if (iv.exact) {
        // terminating expansions get an " (exact)"-worthy short form
        Rat v = *iv.exact;
        if (is_integer(v)) return num(v).str();
        return decimal_string(v, digits);
    }
    return decimal_string((iv.lo + iv.hi) / 2, digits);
}

// --- polynomials ------------------------------------------------------------

inline json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (long k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(static_cast<std::size_t>(k)).str());
    if (p.is_zero()) a.push_back("0");
    return a;
}

inline IntPoly poly_from_json(const json& a) {
    if (!a.is_array()) throw ParseError("polynomial must be a coefficient array");
    std::vector<Int> c;
    for (const auto& x : a) {
        if (x.is_number_integer())
            c.emplace_back(x.get<long long>());
        else if (x.is_string())
            c.emplace_back(Int(x.get<std::string>()));
        else
            throw ParseError("polynomial coefficient must be an integer or string");
    }
    return IntPoly(std::move(c));
}

inline json ratfunc_to_json(const RatFunc& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

// --- polyhedra --------------------------------------------------------------

inline json polyhedron_to_json(const CombPolyhedron& p) {
    json faces = json::object();
    for (const auto& [id, cyc] : p.faces) faces[id] = cyc;
    json angles = json::object();
    for (const auto& [e, m] : p.angles) angles[detail::edge_name(e)] = m;
    return json{{"faces", faces}, {"angles", angles}};
}

inline CombPolyhedron polyhedron_from_json(const json& j) {
    if (!j.is_object() || !j.contains("faces") || !j.contains("angles"))
        throw ParseError("polyhedron file needs \"faces\" and \"angles\"");
    CombPolyhedron p;
    for (const auto& [id, cyc] : j.at("faces").items()) {
        if (!cyc.is_array()) throw ParseError("face " + id + " must be a vertex array");
        std::vector<VertexId> vs;
        for (const auto& v : cyc) {
            if (!v.is_number_integer()) throw ParseError("face " + id + " has a non-integer vertex");
            vs.push_back(v.get<int>());
        }
        p.faces[id] = std::move(vs);
    }
    for (const auto& [key, m] : j.at("angles").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw ParseError("angle key " + key + " is not \"a-b\"");
        int a, b;
        try {
            a = std::stoi(key.substr(0, dash));
            b = std::stoi(key.substr(dash + 1));
        } catch (...) {
            throw ParseError("angle key " + key + " is not \"a-b\"");
        }
        if (!m.is_number_integer() || m.get<int>() < 2)
            throw ParseError("angle at " + key + " must be an integer >= 2");
        p.angles[edge_key(a, b)] = m.get<int>();
    }
    return p;
}

// --- Coxeter matrices -------------------------------------------------------
// {"rank": n, "labels": [[i, j, m], ...]}, generators numbered from 1,
// omitted pairs default to 2, "inf" allowed as a label.

inline json matrix_to_json(const CoxeterMatrix& m) {
    json labels = json::array();
    for (int i = 0; i < m.rank(); ++i)
        for (int j = i + 1; j < m.rank(); ++j) {
            if (m.label(i, j) == 2) continue;
            if (m.infinite_label(i, j))
                labels.push_back(json::array({i + 1, j + 1, "inf"}));
            else
                labels.push_back(json::array({i + 1, j + 1, m.label(i, j)}));
        }
    return json{{"rank", m.rank()}, {"labels", labels}};
}

inline CoxeterMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank")) throw ParseError("matrix file needs \"rank\"");
    int rank = j.at("rank").get<int>();
    if (rank < 1) throw ParseError("rank must be positive");
    CoxeterMatrix m(rank);
    for (const auto& entry : j.value("labels", json::array())) {
        if (!entry.is_array() || entry.size() != 3) throw ParseError("label entry must be [i, j, m]");
        int i = entry[0].get<int>(), jj = entry[1].get<int>();
        if (i < 1 || i > rank || jj < 1 || jj > rank || i == jj)
            throw ParseError("label indices out of range");
        int v;
        if (entry[2].is_string()) {
            if (entry[2].get<std::string>() != "inf") throw ParseError("label must be >= 2 or \"inf\"");
            v = CoxeterMatrix::kInfinity;
        } else {
            v = entry[2].get<int>();
            if (v < 2) throw ParseError("label must be >= 2 or \"inf\"");
        }
        m.set_label(i - 1, jj - 1, v);
    }
    return m;
}

// --- reports ----------------------------------------------------------------

inline json class_to_json(const AlgebraicClass& c) {
    json cyc = json::array();
    for (const auto& [k, mult] : c.cyclotomic_factors) cyc.push_back(json::array({k, mult}));
    json out{{"kind", to_string(c.kind)},
             {"cyclotomic_factors", cyc},
             {"paper_salem_vacuous", c.paper_salem_vacuous}};
    if (c.salem_or_pisot_factor) out["factor"] = poly_to_json(*c.salem_or_pisot_factor);
    return out;
}

inline json interval_to_json(const IsolatingInterval& iv) {
    json out{{"lo", decimal_string(iv.lo, 20)}, {"hi", decimal_string(iv.hi, 20)}};
    if (iv.exact) out["exact"] = {{"num", num(*iv.exact).str()}, {"den", den(*iv.exact).str()}};
    return out;
}

inline json report_to_json(const GrowthReport& r) {
    return json{{"f", ratfunc_to_json(r.f)},
                {"F", ratfunc_to_json(r.big_f)},
                {"virgin", {{"num", poly_to_json(r.virgin_num)}, {"den", poly_to_json(r.virgin_den)}}},
                {"tau", interval_to_json(r.tau)},
                {"class", class_to_json(r.tau_class)},
                {"anti_reciprocal", r.anti_reciprocal},
                {"compact", r.compact}};
}

// --- files ------------------------------------------------------------------

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace coxgrowth
