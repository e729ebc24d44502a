// Command-line front end: generate geometries, inspect parameters, arcs,
// quads and representation groups, and run the certification suite.
//
// Exit codes: 0 success / all pass; 1 check failure, parameter mismatch or
// missing representation; 2 usage or I/O error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearhex/catalog.hpp"
#include "nearhex/gq.hpp"
#include "nearhex/repgroup.hpp"
#include "nearhex/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace nearhex;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Target {
    geom::IncidenceGeometry g;
    std::string name;
    bool from_catalog = false;
    bool identified = false;  // name is a known parameter row
};

bool quads_match(const std::vector<cat::QuadTypeExpect>& expect,
                 const std::vector<cat::QuadProfileEntry>& got) {
    if (expect.size() != got.size()) return false;
    auto e = expect;
    auto g = got;
    auto by_t2 = [](const auto& a, const auto& b) { return a.t2 < b.t2; };
    std::sort(e.begin(), e.end(), by_t2);
    std::sort(g.begin(), g.end(), by_t2);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i].t2 != g[i].t2 || e[i].big != g[i].big || e[i].per_point != g[i].per_point)
            return false;
    return true;
}

Target resolve(const std::string& spec, double budget_secs) {
    Target t;
    if (auto k = cat::key_from_name(spec)) {
        t.name = spec;
        t.from_catalog = true;
        t.identified = true;
        if (*k == cat::Key::hex_vi_glued) {
            auto og = cat::try_build_glued(budget_secs);
            if (!og) throw Unavailable("hex_vi_glued unavailable within the search budget");
            t.g = std::move(*og);
        } else {
            t.g = cat::build(*k, budget_secs);
        }
        return t;
    }
    std::ifstream f(spec);
    if (!f) throw UsageError("unknown catalog key or unreadable file: " + spec);
    f.close();
    t.g = cat::load_geometry(spec);
    auto pr = cat::measure(t.g);
    for (const auto& row : cat::expected_table()) {
        if (row.num_points != pr.num_points || row.t != pr.t || row.diameter != pr.diameter ||
            row.dim_v != pr.dim_v || row.npdim != pr.npdim)
            continue;
        if (!quads_match(row.quads, pr.quads)) continue;
        t.name = row.name;
        t.identified = true;
        return t;
    }
    t.name = t.g.name().empty() ? spec : t.g.name();
    return t;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json param_json(const cat::ParamReport& pr, const Target& t) {
    json q = json::array();
    for (const auto& e : pr.quads)
        q.push_back(json{{"t2", e.t2}, {"big", e.big}, {"per_point", e.per_point},
                         {"total", e.total}});
    json j{{"name", t.name},
           {"identified", t.identified},
           {"num_points", pr.num_points},
           {"num_lines", pr.num_lines},
           {"t", pr.t},
           {"diameter", pr.diameter},
           {"near_polygon", pr.near_polygon},
           {"quads", q},
           {"dim_v", pr.dim_v},
           {"npdim", pr.npdim}};
    return j;
}

int cmd_params(const std::string& target, bool json_out, double budget) {
    Target t = resolve(target, budget);
    if (t.identified) {
        auto pr = cat::verify_params(t.g, t.name);
        if (json_out) {
            json j = param_json(pr, t);
            j["matches"] = pr.matches;
            j["mismatches"] = pr.mismatches;
            emit(j);
        } else {
            std::printf("geometry: %s (%d points, %d lines)\n", t.name.c_str(), pr.num_points,
                        pr.num_lines);
            std::printf("lines per point: %s  diameter: %d  near polygon: %s\n",
                        pr.t >= 0 ? std::to_string(pr.t + 1).c_str() : "nonuniform", pr.diameter,
                        pr.near_polygon ? "yes" : "no");
            for (const auto& e : pr.quads)
                std::printf("quads (2,%d)%s: %d total, %d per point\n", e.t2,
                            e.big ? " big" : "", e.total, e.per_point);
            std::printf("dim V: %d  NPdim: %d\n", pr.dim_v, pr.npdim);
            if (pr.matches) {
                std::printf("parameters match row %s\n", t.name.c_str());
            } else {
                std::printf("parameter mismatches:\n");
                for (const auto& m : pr.mismatches) std::printf("  %s\n", m.c_str());
            }
        }
        return pr.matches ? 0 : 1;
    }
    auto pr = cat::measure(t.g);
    if (json_out) {
        emit(param_json(pr, t));
    } else {
        std::printf("geometry: %s (%d points, %d lines) — no matching parameter row\n",
                    t.name.c_str(), pr.num_points, pr.num_lines);
        std::printf("lines per point: %s  diameter: %d  near polygon: %s\n",
                    pr.t >= 0 ? std::to_string(pr.t + 1).c_str() : "nonuniform", pr.diameter,
                    pr.near_polygon ? "yes" : "no");
        for (const auto& e : pr.quads)
            std::printf("quads (2,%d)%s: %d total, %d per point\n", e.t2, e.big ? " big" : "",
                        e.total, e.per_point);
        std::printf("dim V: %d  NPdim: %d\n", pr.dim_v, pr.npdim);
    }
    return 0;
}

int cmd_generate(const std::string& target, const std::string& out_path, double budget) {
    Target t = resolve(target, budget);
    if (out_path.empty()) {
        std::cout << cat::geometry_to_json_text(t.g, t.name);
    } else {
        cat::save_geometry(t.g, out_path, t.name);
    }
    return 0;
}

int cmd_repdim(const std::string& target, bool json_out, double budget) {
    Target t = resolve(target, budget);
    auto rs = rep::universal_module(t.g);
    if (json_out) {
        emit(json{{"name", t.name},
                  {"dim_v", rs.dim_v},
                  {"npdim", rs.npdim},
                  {"radical_dim", int(rs.radical_basis.size())}});
    } else {
        std::printf("geometry: %s\n", t.name.c_str());
        std::printf("dim V: %d\nNPdim: %d\nradical dimension: %d\n", rs.dim_v, rs.npdim,
                    int(rs.radical_basis.size()));
    }
    return 0;
}

const char* type_name(rep::GroupType t) {
    switch (t) {
        case rep::GroupType::Plus: return "plus";
        case rep::GroupType::Minus: return "minus";
        default: return "not_extraspecial";
    }
}

int cmd_group(const std::string& target, bool json_out, double budget) {
    Target t = resolve(target, budget);
    auto rs = rep::universal_module(t.g);
    if (t.g.diameter() < 3) {
        auto gr = rep::build_representation(rs);
        if (json_out) {
            emit(json{{"name", t.name},
                      {"dim_v", rs.dim_v},
                      {"npdim", rs.npdim},
                      {"group_order_log2", gr.order_log2()},
                      {"abelian", !gr.nonabelian()}});
        } else {
            std::printf("geometry: %s\ndim V: %d\nNPdim: %d\ngroup order: 2^%d (abelian)\n",
                        t.name.c_str(), rs.dim_v, rs.npdim, gr.order_log2());
        }
        return 0;
    }
    rep::CocycleGroup gr = [&] {
        try {
            return rep::build_representation(rs);
        } catch (const rep::InconsistentSystem&) {
            throw Unavailable("no non-abelian representation of this shape");
        }
    }();
    auto mq = rep::minimal_quotient(gr, rs);
    auto gs = rep::good_subset_search(rs);
    json j{{"dim_v", rs.dim_v},
           {"npdim", rs.npdim},
           {"group_order_log2", gr.order_log2()},
           {"minimal_order_log2", mq.order_log2},
           {"type", type_name(mq.type)},
           {"good_subset", json{{"a", gs.a}, {"b", gs.b}, {"X", gs.X}}}};
    if (json_out) {
        emit(j);
    } else {
        std::printf("geometry: %s\n", t.name.c_str());
        std::printf("dim V: %d  NPdim: %d\n", rs.dim_v, rs.npdim);
        std::printf("group order: 2^%d\n", gr.order_log2());
        std::printf("minimal quotient order: 2^%d, type %s\n", mq.order_log2, type_name(mq.type));
        std::printf("good subset: a=%d b=%d X=[", gs.a, gs.b);
        for (std::size_t i = 0; i < gs.X.size(); ++i)
            std::printf("%s%d", i ? ", " : "", gs.X[i]);
        std::printf("] (size %d)\n", int(gs.X.size()));
    }
    return 0;
}

int cmd_good_subset(const std::string& target, bool json_out, double budget) {
    Target t = resolve(target, budget);
    if (t.g.diameter() != 3) throw UsageError("good-subset applies to near hexagons");
    auto rs = rep::universal_module(t.g);
    auto gs = rep::good_subset_search(rs);
    int bound = 2 * int(gs.X.size()) + 3;
    if (json_out) {
        emit(json{{"a", gs.a},
                  {"b", gs.b},
                  {"X", gs.X},
                  {"size", int(gs.X.size())},
                  {"order_log2_lower_bound", bound}});
    } else {
        std::printf("geometry: %s\n", t.name.c_str());
        std::printf("a=%d b=%d (distance 3)\nX=[", gs.a, gs.b);
        for (std::size_t i = 0; i < gs.X.size(); ++i)
            std::printf("%s%d", i ? ", " : "", gs.X[i]);
        std::printf("] (size %d)\n", int(gs.X.size()));
        std::printf("certified lower bound: group order >= 2^%d\n", bound);
    }
    return 0;
}

int cmd_arcs(const std::string& target, int k, bool json_out) {
    gq::GqModel m;
    if (target == "gq21") m = gq::grid_gq();
    else if (target == "gq22") m = gq::duad_factor_gq();
    else if (target == "gq24") m = gq::q24_gq();
    else throw UsageError("arcs applies to gq21, gq22 or gq24");
    json per_k = json::array();
    auto report_k = [&](int kk) {
        auto as = gq::arcs(m, kk);
        if (as.empty()) return false;
        int complete = 0;
        std::map<int, int> center_hist;
        for (const auto& a : as) {
            if (a.complete) ++complete;
            ++center_hist[int(gq::centers(m, a.points).size())];
        }
        if (json_out) {
            json h = json::object();
            for (const auto& [cnt, num] : center_hist) h[std::to_string(cnt)] = num;
            per_k.push_back(json{{"k", kk}, {"arcs", int(as.size())}, {"complete", complete},
                                 {"centers", h}});
        } else {
            std::printf("%d-arcs: %d (%d complete); centers:", kk, int(as.size()), complete);
            for (const auto& [cnt, num] : center_hist) std::printf(" %d->%d", cnt, num);
            std::printf("\n");
        }
        return true;
    };
    if (k > 0) {
        report_k(k);
    } else {
        for (int kk = 2; report_k(kk); ++kk) {}
    }
    auto ov = gq::ovoids(m);
    auto sp = gq::spreads(m);
    if (json_out) {
        emit(json{{"name", target}, {"k", per_k}, {"ovoids", int(ov.size())},
                  {"spreads", int(sp.size())}});
    } else {
        std::printf("ovoids: %d  spreads: %d\n", int(ov.size()), int(sp.size()));
    }
    return 0;
}

int cmd_quads(const std::string& target, bool json_out, double budget) {
    Target t = resolve(target, budget);
    auto pr = cat::measure(t.g, t.name);
    if (json_out) {
        json q = json::array();
        for (const auto& e : pr.quads)
            q.push_back(json{{"t2", e.t2}, {"big", e.big}, {"per_point", e.per_point},
                             {"total", e.total}});
        emit(json{{"name", t.name}, {"quads", q}});
    } else {
        std::printf("geometry: %s\n", t.name.c_str());
        if (pr.quads.empty()) std::printf("no quads measured (diameter %d)\n", pr.diameter);
        for (const auto& e : pr.quads)
            std::printf("type (2,%d)%s: %d total, %d per point\n", e.t2, e.big ? " big" : "",
                        e.total, e.per_point);
    }
    return 0;
}

int print_results(const std::vector<verify::CheckResult>& results, bool json_out) {
    int fails = 0, passes = 0, skips = 0;
    for (const auto& r : results) {
        switch (r.status) {
            case verify::Status::Pass: ++passes; break;
            case verify::Status::Fail: ++fails; break;
            default: ++skips; break;
        }
    }
    if (json_out) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(r.to_json());
        emit(arr);
    } else {
        std::string last;
        for (const auto& r : results) {
            if (r.geometry != last) {
                std::printf("== %s\n", r.geometry.c_str());
                last = r.geometry;
            }
            std::printf("  %-32s %-8s %s\n", r.check.c_str(),
                        verify::to_string(r.status).c_str(), r.reason.c_str());
            if (r.status == verify::Status::Fail && !r.witness.is_null())
                std::printf("      witness: %s\n", r.witness.dump().c_str());
        }
        std::printf("%d pass, %d fail, %d skipped\n", passes, fails, skips);
    }
    return fails ? 1 : 0;
}

int cmd_verify(const std::string& target, const std::string& check, bool all, bool json_out,
               double budget) {
    if (all) return print_results(verify::full_report(budget), json_out);
    if (target.empty()) throw UsageError("verify needs a target or --all");
    Target t = resolve(target, budget);
    if (!check.empty()) {
        const auto& ids = verify::check_ids();
        if (std::find(ids.begin(), ids.end(), check) == ids.end())
            throw UsageError("unknown check id: " + check);
        return print_results({verify::run_check(t.g, t.name, check)}, json_out);
    }
    return print_results(verify::run_suite(t.g, t.name), json_out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slim dense near hexagons: geometries, representation groups, certification"};
    app.require_subcommand(1);
    bool json_out = false;
    double budget = 60.0;
    app.add_flag("--json", json_out, "machine-readable JSON output");
    app.add_option("--budget-secs", budget, "search budget for the glued hexagon (seconds)");

    std::string target, out_path, check;
    int arc_k = 0;
    bool all = false;
    int code = 0;
    auto run = [&](auto fn) {
        return [&, fn] { code = fn(); };
    };

    auto* cg = app.add_subcommand("generate", "write a geometry as JSON");
    cg->add_option("target", target, "catalog key or file")->required();
    cg->add_option("-o,--output", out_path, "output path (stdout if absent)");
    cg->fallthrough();
    cg->callback(run([&] { return cmd_generate(target, out_path, budget); }));

    auto* cp = app.add_subcommand("params", "measure parameters and compare to the tables");
    cp->add_option("target", target, "catalog key or file")->required();
    cp->fallthrough();
    cp->callback(run([&] { return cmd_params(target, json_out, budget); }));

    auto* cr = app.add_subcommand("repdim", "universal module dimensions");
    cr->add_option("target", target, "catalog key or file")->required();
    cr->fallthrough();
    cr->callback(run([&] { return cmd_repdim(target, json_out, budget); }));

    auto* cgr = app.add_subcommand("group", "representation group report");
    cgr->add_option("target", target, "catalog key or file")->required();
    cgr->fallthrough();
    cgr->callback(run([&] { return cmd_group(target, json_out, budget); }));

    auto* cgs = app.add_subcommand("good-subset", "good-subset search and lower bound");
    cgs->add_option("target", target, "catalog key or file")->required();
    cgs->fallthrough();
    cgs->callback(run([&] { return cmd_good_subset(target, json_out, budget); }));

    auto* ca = app.add_subcommand("arcs", "arc, ovoid and spread counts of a quadrangle");
    ca->add_option("target", target, "gq21, gq22 or gq24")->required();
    ca->add_option("-k", arc_k, "only this arc size");
    ca->fallthrough();
    ca->callback(run([&] { return cmd_arcs(target, arc_k, json_out); }));

    auto* cq = app.add_subcommand("quads", "quad profile of a geometry");
    cq->add_option("target", target, "catalog key or file")->required();
    cq->fallthrough();
    cq->callback(run([&] { return cmd_quads(target, json_out, budget); }));

    auto* cv = app.add_subcommand("verify", "run certification checks");
    cv->add_option("target", target, "catalog key or file");
    cv->add_option("--check", check, "run a single check id");
    cv->add_flag("--all", all, "run the suite on every built-in geometry");
    cv->fallthrough();
    cv->callback(run([&] { return cmd_verify(target, check, all, json_out, budget); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unavailable& e) {
        std::cout << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
