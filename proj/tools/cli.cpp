#include "artifact/chart.hpp"
#include "artifact/curves.hpp"
#include "artifact/errors.hpp"
#include "artifact/index.hpp"
#include "artifact/ke.hpp"
#include "artifact/parallel.hpp"
#include "artifact/picard.hpp"
#include "artifact/plucker.hpp"
#include "artifact/polytope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace artifact;
using Json = nlohmann::ordered_json;

namespace {

std::string q(const Rat& x) { return to_string(x); }
std::string q(const Int& x) { return to_string(Rat(x)); }

Json tuple_json(const IndexTuple& t) { return Json(t); }

Json rats(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(q(x));
    return a;
}

Json ints(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(q(x));
    return a;
}

Json coords_json(const Coords& c) {
    Json a = Json::array();
    for (const auto& [t, v] : c) a.push_back({{"index", tuple_json(t)}, {"value", q(v)}});
    return a;
}

Json divisor_json(const DivisorClass& d) {
    Json o = Json::object();
    for (std::size_t i = 0; i < d.basis.names.size(); ++i) o[d.basis.names[i]] = q(d.coeffs[i]);
    return o;
}

Json matrix_json(const RatMatrix& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(rats(m.row(i)));
    return a;
}

Json polytope_json(const HPolytope& P) {
    Json a = Json::array();
    for (const auto& ineq : P.ineqs) a.push_back({{"a", rats(ineq.a)}, {"b", q(ineq.b)}});
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Space parse_space(const std::string& s) {
    if (s == "T") return Space::T;
    if (s == "M") return Space::M;
    throw ParamError("space must be T or M");
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        if (j.empty()) out << prefix << "\t{}\n";
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        if (j.empty()) out << prefix << "\t[]\n";
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out << prefix << "\t" << j.get<std::string>() << "\n";
    } else {
        out << prefix << "\t" << j.dump() << "\n";
    }
}

// ---- subcommands ----

Json cmd_indices(int s, int p, int n, std::optional<int> k) {
    validate({s, p, n});
    Json r;
    r["partition_check"] = partition_check(s, p, n);
    Json strata = Json::array();
    int lo = k ? *k : 0, hi = k ? *k : p;
    if (k && (*k < 0 || *k > p)) throw ParamError("k must be in [0, p]");
    for (int kk = lo; kk <= hi; ++kk) {
        Json t = Json::array();
        for (const auto& x : enumerate_stratum(s, p, n, kk)) t.push_back(tuple_json(x));
        strata.push_back({{"k", kk}, {"dimension", stratum_dimension(s, p, n, kk)}, {"count", t.size()}, {"tuples", t}});
    }
    r["strata"] = strata;
    return r;
}

Json cmd_plucker(const std::string& file, int s) {
    auto m = read_matrix(read_file(file));
    validate({s, m.rows(), m.cols()});
    auto b = blowup_map(m, s);
    Json r;
    r["p"] = m.rows();
    r["n"] = m.cols();
    r["full"] = coords_json(b.full);
    Json strata = Json::array();
    for (std::size_t k = 0; k < b.strata.size(); ++k) strata.push_back({{"k", k}, {"coords", coords_json(b.strata[k])}});
    r["strata"] = strata;
    return r;
}

Json cmd_chart_verify(int s, int p, int n, std::optional<int> l, int samples, std::uint64_t seed, bool& ok) {
    validate({s, p, n});
    if (samples < 1) throw ParamError("samples must be positive");
    int r = rank(s, p, n);
    if (l && (*l < 0 || *l > r)) throw ParamError("l must be in [0, " + std::to_string(r) + "]");
    std::mt19937_64 rng(seed);
    Json charts = Json::array();
    Json failures = Json::array();
    ok = true;
    for (int ll = l ? *l : 0; ll <= (l ? *l : r); ++ll) {
        auto c = canonical_chart(s, p, n, ll);
        int n1 = 0, n2 = 0, n3 = 0, cs = 0, bad = 0;
        for (int i = 0; i < samples; ++i) {
            auto pt = random_point(c, rng);
            auto r1 = verify_claim_I(c, pt);
            auto r2 = verify_claim_II(c, pt);
            auto r3 = verify_claim_III(c, pt);
            bool cstar = verify_cstar(c, pt, Rat(2));
            n1 += r1.checked;
            n2 += r2.checked;
            n3 += r3.checked;
            cs += 1;
            for (const auto* rep : {&r1, &r2, &r3})
                for (const auto& f : rep->failures) {
                    ++bad;
                    failures.push_back({{"l", ll}, {"sample", i}, {"family", f.family}, {"index", tuple_json(f.index)},
                                        {"expected", q(f.expected)}, {"actual", q(f.actual)}});
                }
            if (!cstar) {
                ++bad;
                failures.push_back({{"l", ll}, {"sample", i}, {"family", "C*"}});
            }
        }
        if (bad) ok = false;
        charts.push_back({{"l", ll}, {"samples", samples}, {"claim_I", n1}, {"claim_II", n2}, {"claim_III", n3}, {"cstar", cs}, {"failures", bad}});
    }
    Json res;
    res["seed"] = seed;
    res["ok"] = ok;
    res["charts"] = charts;
    res["failures"] = failures;
    return res;
}

Json cmd_picard(int s, int p, int n, Space space) {
    validate({s, p, n});
    auto b = pic_basis(space, s, p, n);
    Json r;
    r["space"] = to_string(space);
    r["variant"] = to_string(b.variant);
    r["r"] = b.r;
    r["basis"] = b.names;
    Json bs = Json::array();
    Json pulls = Json::array();
    Json w;
    // Weight data is defined on the normalized range only.
    bool normalized = 2 * p <= n && n <= 2 * s;
    WeightData wd;
    if (normalized) wd = weight_data(s, p, n);
    auto cow = [](const std::vector<Coweight>& v) {
        Json a = Json::array();
        for (const auto& c : v) a.push_back(ints(c));
        return a;
    };
    if (space == Space::T) {
        for (int j = 0; j <= b.r; ++j) bs.push_back({{"name", "B_" + std::to_string(j)}, {"class", divisor_json(divisor_B(s, p, n, j))}});
        r["B"] = bs;
        r["K"] = divisor_json(canonical_T(s, p, n));
        r["K_Bform"] = divisor_json(canonical_T_Bform(s, p, n));
        r["Bform_coefficients"] = ints(bform_coefficients_T(s, p, n));
        if (normalized) {
            w["rho_B"] = cow(wd.rho_B);
            w["v_D_plus"] = cow(wd.v_D_plus);
            w["v_D_minus"] = cow(wd.v_D_minus);
        }
    } else {
        for (int j = 0; j <= b.r; ++j) {
            if (j == 0 && p == s) continue;
            bs.push_back({{"name", "Bc_" + std::to_string(j)}, {"class", divisor_json(divisor_Bcheck(s, p, n, j))}});
        }
        r["B"] = bs;
        r["K"] = divisor_json(canonical_M(s, p, n));
        r["K_Bform"] = divisor_json(canonical_M_Bform(s, p, n));
        r["Bform_coefficients"] = ints(bform_coefficients_M(s, p, n));
        if (normalized) {
            w["v_D_check"] = cow(wd.v_D_check);
            std::vector<Coweight> rb(wd.rho_Bcheck.begin() + (wd.has_Bcheck0 ? 0 : 1), wd.rho_Bcheck.end());
            w["rho_Bcheck"] = cow(rb);
        }
    }
    std::vector<Symmetry> syms = space == Space::T ? std::vector<Symmetry>{Symmetry::USD, Symmetry::DUAL}
                                                   : std::vector<Symmetry>{Symmetry::Usd, Symmetry::Dual};
    for (auto sym : syms) {
        bool self = (sym == Symmetry::USD || sym == Symmetry::Usd) ? n == 2 * s : n == 2 * p;
        if (!self) continue;
        auto m = pullback(sym, s, p, n);
        pulls.push_back({{"symmetry", to_string(sym)}, {"integral", m.integral}, {"matrix", matrix_json(m.matrix)}});
    }
    r["pullbacks"] = pulls;
    r["weights"] = normalized ? w : Json(nullptr);
    return r;
}

Json curve_class_json(const CurveClass& c) { return {{"H", q(c.h)}, {"D-", ints(c.minus)}, {"D+", ints(c.plus)}}; }

Json cmd_curves(int s, int p, int n) {
    validate({s, p, n});
    auto ids = enumerate_curves(s, p, n);
    std::vector<Json> rows(ids.size());
    parallel_for(ids.size(), [&](std::size_t i) {
        rows[i] = {{"curve", ids[i].to_string()}, {"l", ids[i].l}, {"class", curve_class_json(curve_class(s, p, n, ids[i]))},
                   {"antiK", q(antik_degree(s, p, n, ids[i]))}};
    });
    Json r;
    r["count"] = ids.size();
    r["curves"] = rows;
    return r;
}

Json cmd_nef(int s, int p, int n) {
    validate({s, p, n});
    auto rep = nef_ample_T(s, p, n);
    Json r;
    r["nef"] = rep.nef;
    r["ample"] = rep.ample;
    r["witness"] = rep.witness ? Json(rep.witness->to_string()) : Json(nullptr);
    r["min_degree"] = q(rep.min_degree);
    r["curves"] = rep.curves;
    return r;
}

Json factored_json(const FactoredPoly& f) {
    Json a = Json::array();
    for (const auto& [lf, e] : f.factors) a.push_back({{"a", rats(lf.a)}, {"c", q(lf.c)}, {"power", e}});
    return {{"scale", q(f.scale)}, {"factors", a}};
}

Json cmd_ke(int s, int p, int n, Space space, bool certificate) {
    auto res = space == Space::T ? ke_test_T(s, p, n) : ke_test_M(s, p, n);
    const auto& c = res.normalized;
    Json r;
    r["space"] = to_string(space);
    r["decision"] = res.ke ? "KE" : "no-KE";
    r["method"] = res.method;
    r["normalized"] = {{"s", c.s}, {"p", c.p}, {"n", c.n}, {"trail", c.trail}};
    if (certificate) {
        Json cert;
        Json ints_ = Json::object();
        for (const auto& [name, v] : res.integrals) ints_[name] = q(v);
        cert["integrals"] = ints_;
        Json conds = Json::array();
        for (const auto& k : res.conditions)
            conds.push_back({{"name", k.name}, {"relation", k.relation}, {"lhs", q(k.lhs)}, {"rhs", q(k.rhs)}, {"holds", k.holds}});
        cert["conditions"] = conds;
        if (res.method != "homogeneous") {
            cert["region"] = polytope_json(moment_region(c.s, c.p, c.n, space));
            cert["density"] = factored_json(dh_density(c.s, c.p, c.n, space));
        }
        r["certificate"] = cert;
    }
    return r;
}

Json cmd_integrate(const std::string& poly, const std::string& polytope) {
    auto f = read_poly(read_file(poly));
    auto P = read_polytope(read_file(polytope));
    Json r;
    r["dimension"] = P.d;
    r["vertices"] = vertices(P).size();
    r["simplices"] = triangulate(P).size();
    r["volume"] = q(volume(P));
    r["integral"] = q(integrate(f, P));
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on Grassmannian compactifications"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    unsigned threads = 1;
    bool timing = false;
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "append elapsed milliseconds (breaks byte-identical output)");

    int s = 0, p = 0, n = 0;
    auto add_spn = [&](CLI::App* sub) {
        sub->add_option("s", s)->required();
        sub->add_option("p", p)->required();
        sub->add_option("n", n)->required();
    };

    std::optional<int> k_opt, l_opt;
    std::string matrix_file, space_str = "T", poly_file, polytope_file;
    int samples = 20, plucker_s = 0;
    std::uint64_t seed = 0;
    bool certificate = false;

    auto* ind = app.add_subcommand("indices", "Plucker index strata");
    add_spn(ind);
    ind->add_option("k", k_opt);
    auto* plk = app.add_subcommand("plucker", "Plucker and stratum coordinates of a matrix");
    plk->add_option("matrix-file", matrix_file)->required();
    plk->add_option("s", plucker_s)->required();
    auto* chv = app.add_subcommand("chart-verify", "Check chart closed forms on random points");
    add_spn(chv);
    chv->add_option("--l", l_opt);
    chv->add_option("--samples", samples);
    chv->add_option("--seed", seed);
    auto* pic = app.add_subcommand("picard", "Picard lattice data");
    add_spn(pic);
    pic->add_option("--space", space_str)->check(CLI::IsMember({"T", "M"}));
    auto* cur = app.add_subcommand("curves", "Curve classes and -K degrees");
    add_spn(cur);
    auto* nef = app.add_subcommand("nef-test", "Nefness and ampleness of -K_T");
    add_spn(nef);
    auto* ke = app.add_subcommand("ke-test", "Kahler-Einstein test");
    add_spn(ke);
    ke->add_option("--space", space_str)->required()->check(CLI::IsMember({"T", "M"}));
    ke->add_flag("--certificate", certificate);
    auto* itg = app.add_subcommand("integrate", "Exact polynomial integral over a polytope");
    itg->add_option("--poly", poly_file)->required();
    itg->add_option("--polytope", polytope_file)->required();

    auto emit = [&](const Json& doc) {
        if (format == "tsv")
            flatten(doc, "", std::cout);
        else
            std::cout << doc.dump(2) << "\n";
    };

    // Execution-only options are left out so output does not depend on them.
    std::string command_line;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--timing") continue;
        if (a == "--threads") {
            ++i;
            continue;
        }
        if (a.rfind("--threads=", 0) == 0) continue;
        command_line += (command_line.empty() ? "" : " ") + a;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit({{"command", command_line}, {"error", {{"type", "ParamError"}, {"message", e.what()}}}});
        return 1;
    }

    set_threads(threads);
    auto* sub = app.get_subcommands().front();
    Json doc;
    doc["command"] = command_line;
    Json params;
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        std::string name = sub->get_name();
        if (name != "plucker" && name != "integrate") params = {{"s", s}, {"p", p}, {"n", n}};
        if (name == "indices") {
            if (k_opt) params["k"] = *k_opt;
            doc["parameters"] = params;
            doc["results"] = cmd_indices(s, p, n, k_opt);
        } else if (name == "plucker") {
            params = {{"matrix_file", matrix_file}, {"s", plucker_s}};
            doc["parameters"] = params;
            doc["results"] = cmd_plucker(matrix_file, plucker_s);
        } else if (name == "chart-verify") {
            if (l_opt) params["l"] = *l_opt;
            params["samples"] = samples;
            params["seed"] = seed;
            doc["parameters"] = params;
            bool ok = true;
            doc["results"] = cmd_chart_verify(s, p, n, l_opt, samples, seed, ok);
            if (!ok) code = 2;
        } else if (name == "picard") {
            params["space"] = space_str;
            doc["parameters"] = params;
            doc["results"] = cmd_picard(s, p, n, parse_space(space_str));
        } else if (name == "curves") {
            doc["parameters"] = params;
            doc["results"] = cmd_curves(s, p, n);
        } else if (name == "nef-test") {
            doc["parameters"] = params;
            doc["results"] = cmd_nef(s, p, n);
        } else if (name == "ke-test") {
            params["space"] = space_str;
            params["certificate"] = certificate;
            doc["parameters"] = params;
            doc["results"] = cmd_ke(s, p, n, parse_space(space_str), certificate);
        } else if (name == "integrate") {
            params = {{"poly", poly_file}, {"polytope", polytope_file}};
            doc["parameters"] = params;
            doc["results"] = cmd_integrate(poly_file, polytope_file);
        }
    } catch (const ParamError& e) {
        doc["parameters"] = params;
        doc["error"] = {{"type", "ParamError"}, {"message", e.what()}};
        code = 1;
    } catch (const CrossCheckError& e) {
        doc["parameters"] = params;
        doc["error"] = {{"type", "CrossCheckError"}, {"message", e.what()}};
        code = 2;
    }
    if (timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        doc["timing_ms"] = ms;
    }
    emit(doc);
    return code;
}
