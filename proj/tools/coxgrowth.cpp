// Command-line front end: growth reports, rate queries, polynomial
// classification, Andreev checking, ridge operations, sweeps,
// generators, and the BFS oracle.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <coxgrowth/io.hpp>
#include <coxgrowth/tits.hpp>

using namespace coxgrowth;

namespace {

struct DomainFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string show(const RatFunc& f) {
    // canonical form fixes the sign of the leading denominator
    // coefficient; flip for display when the constant terms are negative
    IntPoly n = f.num(), d = f.den();
    if (d.coeff(0) < 0) {
        n = -n;
        d = -d;
    }
    if (d.degree() == 0 && d.coeff(0) == 1) return to_string(n);
    return "(" + to_string(n) + ") / (" + to_string(d) + ")";
}

std::string class_line(const AlgebraicClass& c) {
    std::string s = to_string(c.kind);
    if (c.paper_salem_vacuous) s += " (quadratic reciprocal unit, Salem only vacuously)";
    if (c.salem_or_pisot_factor) s += ", minimal factor " + to_string(*c.salem_or_pisot_factor);
    return s;
}

CombPolyhedron load_polyhedron(const std::string& path) {
    auto j = load_json(path);
    if (!j.contains("faces")) throw DomainFail(path + " is not a polyhedron file");
    auto p = polyhedron_from_json(j);
    auto r = validate(p);
    if (!r.ok()) throw DomainFail("validation failed: " + r.errors.front());
    return p;
}

EdgeKey parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--edge expects A,B");
    try {
        return edge_key(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
    } catch (...) {
        throw CLI::ValidationError("--edge expects two integers A,B");
    }
}

int cmd_growth(const std::string& file, const std::string& method, int digits,
               const std::string& format) {
    auto j = load_json(file);
    if (j.contains("rank")) {
        // matrix input: Steinberg only
        auto m = matrix_from_json(j);
        auto st = steinberg_growth_full(m);
        if (format == "json") {
            json out{{"f", ratfunc_to_json(st.f)},
                     {"F", ratfunc_to_json(st.big_f)},
                     {"virgin", {{"num", poly_to_json(st.virgin_num)}, {"den", poly_to_json(st.virgin_den)}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "f(t) = " << show(st.f) << "\n";
            std::cout << "F(t) = " << show(st.big_f) << "\n";
        }
        return 0;
    }

    auto p = polyhedron_from_json(j);
    auto vr = validate(p);
    if (!vr.ok()) throw DomainFail("validation failed: " + vr.errors.front());
    auto ar = andreev_check(p);
    if (!ar.all_pass()) throw DomainFail("Andreev condition " + ar.failing().front() + " fails");

    bool compact = is_compact(p);
    if (method == "parry" && !compact) throw DomainFail("Parry's formula needs a compact polyhedron");

    GrowthReport r = polyhedral_growth(p, digits);
    if (method == "parry" || (method == "auto" && compact)) {
        RatFunc pf = parry_growth(p);
        if (pf != r.f) throw InternalInconsistency("Parry and Steinberg growth functions differ");
        r.f = pf;
    }

    if (format == "json") {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        std::cout << "f(t) = " << show(r.f) << "\n";
        std::cout << "F(t) = " << show(r.big_f) << "\n";
        std::cout << "virgin form = (" << to_string(r.virgin_num) << ") / (" << to_string(r.virgin_den)
                  << ")\n";
        std::cout << "tau = " << decimal_string(r.tau, digits) << (r.tau.exact ? " (exact)" : "")
                  << "\n";
        std::cout << "class = " << class_line(r.tau_class) << "\n";
        std::cout << "anti_reciprocal = " << (r.anti_reciprocal ? "true" : "false") << "\n";
        std::cout << "compact = " << (r.compact ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_rate(const std::string& file, int digits, const std::string& format) {
    auto p = load_polyhedron(file);
    auto ar = andreev_check(p);
    if (!ar.all_pass()) throw DomainFail("Andreev condition " + ar.failing().front() + " fails");
    auto r = polyhedral_growth(p, digits);
    if (format == "json") {
        json out{{"tau", interval_to_json(r.tau)}, {"class", class_to_json(r.tau_class)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "tau = " << decimal_string(r.tau, digits) << (r.tau.exact ? " (exact)" : "")
                  << ", class = " << class_line(r.tau_class) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& coeffs, const std::string& format) {
    IntPoly p;
    try {
        p = parse_poly(coeffs);
    } catch (const std::exception& e) {
        throw DomainFail(std::string("cannot parse polynomial: ") + e.what());
    }
    AlgebraicClass c;
    try {
        c = classify(p);
    } catch (const std::domain_error& e) {
        throw DomainFail(e.what());
    }
    if (format == "json")
        std::cout << class_to_json(c).dump(2) << "\n";
    else {
        std::cout << "class = " << class_line(c) << "\n";
        if (!c.cyclotomic_factors.empty()) {
            std::cout << "cyclotomic factors:";
            for (auto& [k, mult] : c.cyclotomic_factors) {
                std::cout << " Phi_" << k;
                if (mult > 1) std::cout << "^" << mult;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_check(const std::string& file) {
    auto j = load_json(file);
    auto p = polyhedron_from_json(j);
    auto vr = validate(p);
    std::cout << "faces = " << vr.n_faces << ", edges = " << vr.n_edges
              << ", vertices = " << vr.n_vertices << "\n";
    if (!vr.ok()) {
        for (const auto& e : vr.errors) std::cout << "invalid: " << e << "\n";
        return 2;
    }
    if (vr.simplex) std::cout << "simplex: existence theorem inapplicable\n";
    auto ar = andreev_check(p);
    for (const auto& it : ar.items)
        std::cout << it.condition << ": " << (it.pass ? "pass" : "FAIL " + it.witness) << "\n";
    return ar.all_pass() ? 0 : 2;
}

int cmd_ridges(const std::string& file) {
    auto p = load_polyhedron(file);
    auto rs = find_ridges(p);
    for (const auto& r : rs)
        std::cout << "edge " << r.edge.first << "-" << r.edge.second << " type <" << r.k1 << ","
                  << r.k2 << "," << r.n << "," << r.l1 << "," << r.l2 << ">\n";
    std::cout << rs.size() << " ridge(s)\n";
    return 0;
}

int cmd_contract(const std::string& file, const std::string& edge, const std::string& out) {
    auto p = load_polyhedron(file);
    CombPolyhedron q;
    try {
        q = contract_ridge(p, parse_edge(edge));
    } catch (const NotContractible& e) {
        throw DomainFail(e.what());
    }
    save_json(out, polyhedron_to_json(q));
    std::cout << "contracted; wrote " << out << "\n";
    return 0;
}

int cmd_insert(const std::string& file, int vertex, int mode, int label, const std::string& out) {
    auto p = load_polyhedron(file);
    CombPolyhedron q;
    try {
        q = insert_edge(p, vertex, mode, label);
    } catch (const AndreevFailure& e) {
        throw DomainFail(e.what());
    } catch (const std::domain_error& e) {
        throw DomainFail(e.what());
    }
    save_json(out, polyhedron_to_json(q));
    std::cout << "inserted; wrote " << out << "\n";
    return 0;
}

int cmd_sweep(const std::string& file, const std::string& edge, int from, int to, int jobs,
              int digits, const std::string& format) {
    auto p = load_polyhedron(file);
    SweepTable t;
    try {
        t = deformation_sweep(p, parse_edge(edge), from, to, digits, jobs);
    } catch (const std::domain_error& e) {
        throw DomainFail(e.what());
    }
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json row{{"tau", interval_to_json(r.tau)}, {"class", class_to_json(r.cls)}};
            if (r.n) row["n"] = *r.n;
            rows.push_back(row);
        }
        json out{{"rows", rows},
                 {"monotone", t.monotone_certified},
                 {"compact_all_salem", t.all_compact_salem},
                 {"limit_pisot", t.limit_pisot}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%6s  %-*s  %s\n", "n", digits + 4, "tau", "class");
        for (const auto& r : t.rows) {
            std::string n = r.n ? std::to_string(*r.n) : "inf";
            std::printf("%6s  %-*s  %s\n", n.c_str(), digits + 4,
                        decimal_string(r.tau, digits).c_str(), class_line(r.cls).c_str());
        }
        std::cout << "monotone increasing: " << (t.monotone_certified ? "certified" : "NOT certified")
                  << "\n";
    }
    return t.monotone_certified ? 0 : 3;
}

int cmd_gen(const std::string& family, int m, int n, int pp, int qq, int rr,
            const std::string& out) {
    CombPolyhedron p;
    try {
        if (family == "dodecahedron")
            p = gen_dodecahedron(m);
        else if (family == "loebell")
            p = gen_loebell(n);
        else if (family == "loebell-ideal")
            p = gen_loebell_ideal(n);
        else if (family == "lambert")
            p = gen_lambert_cube(pp, qq, rr);
        else if (family == "ideal3-dodecahedron")
            p = gen_ideal3_dodecahedron();
        else
            throw CLI::ValidationError("unknown family " + family);
    } catch (const std::invalid_argument& e) {
        throw DomainFail(e.what());
    }
    save_json(out, polyhedron_to_json(p));
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_oracle(const std::string& file, int depth) {
    auto j = load_json(file);
    CoxeterMatrix m = j.contains("rank") ? matrix_from_json(j)
                                         : coxeter_matrix_of(polyhedron_from_json(j)).first;
    std::vector<Int> bfs;
    try {
        bfs = tits_bfs_sphere_sizes(m, depth);
    } catch (const OracleTooLarge& e) {
        throw DomainFail(e.what());
    } catch (const std::domain_error& e) {
        throw DomainFail(e.what());
    }
    auto taylor = taylor_coeffs(steinberg_growth(m), static_cast<std::size_t>(depth) + 1);
    std::printf("%4s  %16s  %16s  %s\n", "k", "bfs", "taylor", "match");
    bool all = true;
    for (int k = 0; k <= depth; ++k) {
        bool okk = bfs[static_cast<std::size_t>(k)] == taylor[static_cast<std::size_t>(k)];
        all = all && okk;
        std::printf("%4d  %16s  %16s  %s\n", k, bfs[static_cast<std::size_t>(k)].str().c_str(),
                    taylor[static_cast<std::size_t>(k)].str().c_str(), okk ? "yes" : "NO");
    }
    if (!all) throw InternalInconsistency("BFS oracle disagrees with the growth series");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth functions and deformations of hyperbolic Coxeter 3-polyhedra"};
    app.require_subcommand(1);

    std::string file, out, edge, method = "auto", format = "text", coeffs, family;
    int digits = 10, jobs = 1, depth = 8, vertex = 0, mode = 1, label = 2;
    int from = 2, to = 6, m = 2, n = 5, pp = 3, qq = 3, rr = 3;

    auto* g = app.add_subcommand("growth", "growth function report for a polyhedron or matrix file");
    g->add_option("file", file)->required();
    g->add_option("--method", method)->check(CLI::IsMember({"auto", "steinberg", "parry"}));
    g->add_option("--digits", digits)->check(CLI::PositiveNumber);
    g->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ra = app.add_subcommand("rate", "growth rate and its classification");
    ra->add_option("file", file)->required();
    ra->add_option("--digits", digits)->check(CLI::PositiveNumber);
    ra->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cl = app.add_subcommand("classify-poly", "classify an integer polynomial");
    cl->add_option("coeffs", coeffs, "coefficient list [a0,a1,...] or expression in t")->required();
    cl->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ch = app.add_subcommand("check", "validation and Andreev condition report");
    ch->add_option("file", file)->required();

    auto* ri = app.add_subcommand("ridges", "list the ridges of a polyhedron");
    ri->add_option("file", file)->required();

    auto* co = app.add_subcommand("contract", "contract a <2,2,n,2,2> ridge");
    co->add_option("file", file)->required();
    co->add_option("--edge", edge)->required();
    co->add_option("-o,--output", out)->required();

    auto* in = app.add_subcommand("insert", "split an ideal 4-valent vertex into a labelled edge");
    in->add_option("file", file)->required();
    in->add_option("--vertex", vertex)->required();
    in->add_option("--mode", mode)->check(CLI::IsMember({1, 2}));
    in->add_option("--label", label)->required();
    in->add_option("-o,--output", out)->required();

    auto* sw = app.add_subcommand("sweep", "deformation sweep over the middle label of a ridge");
    sw->add_option("file", file)->required();
    sw->add_option("--edge", edge)->required();
    sw->add_option("--from", from)->required();
    sw->add_option("--to", to)->required();
    sw->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sw->add_option("--digits", digits)->check(CLI::PositiveNumber);
    sw->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ge = app.add_subcommand("gen", "generate a polyhedron family member");
    ge->add_option("family", family)
        ->required()
        ->check(CLI::IsMember(
            {"dodecahedron", "loebell", "loebell-ideal", "lambert", "ideal3-dodecahedron"}));
    ge->add_option("--m", m);
    ge->add_option("--n", n);
    ge->add_option("--p", pp);
    ge->add_option("--q", qq);
    ge->add_option("--r", rr);
    ge->add_option("-o,--output", out)->required();

    auto* orc = app.add_subcommand("oracle", "BFS sphere sizes against Taylor coefficients");
    orc->add_option("file", file)->required();
    orc->add_option("--depth", depth)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (g->parsed()) return cmd_growth(file, method, digits, format);
        if (ra->parsed()) return cmd_rate(file, digits, format);
        if (cl->parsed()) return cmd_classify(coeffs, format);
        if (ch->parsed()) return cmd_check(file);
        if (ri->parsed()) return cmd_ridges(file);
        if (co->parsed()) return cmd_contract(file, edge, out);
        if (in->parsed()) return cmd_insert(file, vertex, mode, label, out);
        if (sw->parsed()) return cmd_sweep(file, edge, from, to, jobs, digits, format);
        if (ge->parsed()) return cmd_gen(family, m, n, pp, qq, rr, out);
        if (orc->parsed()) return cmd_oracle(file, depth);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
