#ifndef GASYM_CLI_HPP
#define GASYM_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gasym/parser.hpp"
#include "gasym/spacecurve.hpp"

namespace gasym::cli {

using nlohmann::json;

struct JobConfig {
    std::string command;          // project | branches | asymptotes | plotdata
    std::string f1_text, f2_text; // either both expressions ...
    std::string input_file;       // ... or a two-line input file
    std::string method = "improved"; // basic | improved | both
    int depth = 4;                   // display terms down to z^-depth
    std::vector<double> samples = {100.0, 1000.0, 10000.0};
    std::string format = "text"; // text | structured
    unsigned seed = 20240817;
    bool deterministic = false;
};

// ---- input handling ---------------------------------------------------------

inline std::pair<MultiPoly, MultiPoly> load_inputs(const JobConfig& cfg) {
    static const std::vector<std::string> V3 = {"x1", "x2", "x3"};
    std::string t1 = cfg.f1_text, t2 = cfg.f2_text;
    if (!cfg.input_file.empty()) {
        std::ifstream in(cfg.input_file);
        if (!in) throw error("cannot open input file: " + cfg.input_file);
        std::vector<std::string> exprs;
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) exprs.push_back(line);
        }
        if (exprs.size() != 2)
            throw error("input file must contain exactly two polynomial lines, found " +
                        std::to_string(exprs.size()));
        t1 = exprs[0];
        t2 = exprs[1];
    }
    if (t1.empty() || t2.empty()) throw error("two defining polynomials are required");
    return {parse_poly(t1, V3), parse_poly(t2, V3)};
}

inline void validate(const JobConfig& cfg) {
    if (cfg.method != "basic" && cfg.method != "improved" && cfg.method != "both")
        throw error("unknown method: " + cfg.method);
    if (cfg.format != "text" && cfg.format != "structured")
        throw error("unknown format: " + cfg.format);
    if (cfg.depth < 0) throw error("depth must be non-negative");
    for (size_t i = 0; i < cfg.samples.size(); ++i) {
        if (cfg.samples[i] <= 0) throw error("sample magnitudes must be positive");
        if (i && cfg.samples[i] <= cfg.samples[i - 1])
            throw error("sample magnitudes must be strictly increasing");
    }
}

// ---- serialization ----------------------------------------------------------

inline std::string rat_str(const Rational& r) { return to_string(r); }

inline json coeff_json(const AlgNum& c) {
    if (c.is_rational()) return rat_str(c.as_rational());
    json arr = json::array();
    for (const auto& r : c.rep()) arr.push_back(rat_str(r));
    return arr;
}

inline json series_json(const Puiseux& s) {
    json arr = json::array();
    for (const auto& [e, c] : s.terms) arr.push_back(json{{"exp", rat_str(e)}, {"coeff", coeff_json(c)}});
    return arr;
}

inline json minpoly_json(const FieldPtr& f) {
    json arr = json::array();
    for (const auto& r : f->minpoly) arr.push_back(rat_str(r));
    return arr;
}

inline json asymptote_json(const AsymptoteParam& a, const MultiPoly* g1 = nullptr,
                           const MultiPoly* g2 = nullptr) {
    json j{{"k", a.k},
           {"c1", series_json(a.c1)},
           {"q2", series_json(a.q2)},
           {"q3", series_json(a.q3)},
           {"proper", a.proper},
           {"repaired", a.repaired}};
    if (a.field) j["minpoly"] = minpoly_json(a.field);
    if (g1 && g2) j["implicit"] = json::array({to_text(*g1), to_text(*g2)});
    return j;
}

inline Puiseux series_from_json(const json& arr, const FieldPtr& field) {
    Puiseux s;
    for (const auto& t : arr) {
        Rational e = parse_rational(t.at("exp").get<std::string>());
        const json& c = t.at("coeff");
        if (c.is_string()) {
            s.add_term(e, AlgNum(parse_rational(c.get<std::string>())));
        } else {
            QPoly rep;
            for (const auto& r : c) rep.push_back(parse_rational(r.get<std::string>()));
            s.add_term(e, AlgNum(rep, field));
        }
    }
    return s;
}

inline AsymptoteParam asymptote_from_json(const json& j) {
    AsymptoteParam a;
    a.k = j.at("k").get<int>();
    a.proper = j.at("proper").get<bool>();
    a.repaired = j.at("repaired").get<bool>();
    FieldPtr f;
    if (j.contains("minpoly")) {
        QPoly m;
        for (const auto& r : j.at("minpoly")) m.push_back(parse_rational(r.get<std::string>()));
        f = make_field(m);
        a.field = f;
    }
    a.c1 = series_from_json(j.at("c1"), f);
    a.q2 = series_from_json(j.at("q2"), f);
    a.q3 = series_from_json(j.at("q3"), f);
    return a;
}

// ---- deterministic ordering -------------------------------------------------

inline std::string asym_sort_key(const AsymptoteParam& a) {
    std::ostringstream os;
    os << a.k << '|' << to_text(a.q2, "t") << '|' << to_text(a.q3, "t");
    return os.str();
}

inline void sort_asymptotes(std::vector<AsymptoteParam>& as) {
    std::stable_sort(as.begin(), as.end(), [](const AsymptoteParam& x, const AsymptoteParam& y) {
        return asym_sort_key(x) < asym_sort_key(y);
    });
}

inline std::string branch_sort_key(const PlaneBranch& b) { return to_text(b.r2); }

// ---- rendering helpers ------------------------------------------------------

inline std::string param_text(const AsymptoteParam& a) {
    auto comp = [](const Puiseux& p) { return p.is_zero() ? std::string("0") : to_text(p, "t"); };
    return "(" + comp(a.c1) + ", " + comp(a.q2) + ", " + comp(a.q3) + ")";
}

inline Puiseux display_truncate(const Puiseux& s, int depth) {
    Puiseux t = series_truncate(s, make_rational(-(2 * depth + 1), 2));
    t.order_bound.reset();
    return t;
}

// ---- commands ---------------------------------------------------------------

namespace detail_cli {

struct Prepared {
    MultiPoly f1, f2;
    Pipeline pl;                       // per requested method (improved when both)
    std::vector<SpaceBranch> lifted;   // aligned with pl.branches
};

inline Pipeline run_method(const MultiPoly& f1, const MultiPoly& f2, const std::string& method,
                           unsigned seed) {
    return method == "basic" ? space_asymptotes_basic(f1, f2, seed)
                             : space_asymptotes_improved(f1, f2, seed);
}

inline std::vector<SpaceBranch> lift_all(Pipeline& pl, int extra_depth) {
    for (long deepen = 8;; deepen *= 2) {
        try {
            std::vector<SpaceBranch> out;
            for (const auto& b : pl.branches) {
                Rational order = make_rational(-(2 * std::max(1, extra_depth) * b.ramification + 1),
                                               2 * b.ramification);
                out.push_back(lift_branch(b, pl.proj.lift, order));
            }
            return out;
        } catch (const needs_more_terms&) {
            if (deepen > 256) throw;
            auto nb = plane_branches_of(pl.proj.fp, Rational(-deepen));
            if (nb.size() != pl.branches.size())
                throw internal_inconsistency("branch paths changed between expansion depths");
            for (size_t i = 0; i < nb.size(); ++i) {
                const Puiseux &a = nb[i].r2, &b = pl.branches[i].r2;
                if (!a.is_zero() != !b.is_zero() ||
                    (!a.is_zero() && (a.leading_exponent() != b.leading_exponent() ||
                                      a.leading_coeff() != b.leading_coeff())))
                    throw internal_inconsistency("branch order changed between expansion depths");
            }
            pl.branches = nb;
        }
    }
}

inline bool sets_agree(const std::vector<AsymptoteParam>& a, const std::vector<AsymptoteParam>& b) {
    auto contains = [](const std::vector<AsymptoteParam>& set, const AsymptoteParam& x) {
        for (const auto& y : set)
            if (same_asymptote(x, y)) return true;
        return false;
    };
    for (const auto& x : a)
        if (!contains(b, x)) return false;
    for (const auto& y : b)
        if (!contains(a, y)) return false;
    return true;
}

inline json transform_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r) row.push_back(rat_str(v));
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail_cli

inline int cmd_project(const JobConfig& cfg, std::ostream& out) {
    auto [f1, f2] = load_inputs(cfg);
    ProjectResult pr = project(f1, f2, cfg.seed);
    if (cfg.format == "structured") {
        json j{{"input", {{"f1", to_text(f1)}, {"f2", to_text(f2)}}},
               {"projection",
                {{"fp", to_text(pr.fp)},
                 {"transform", pr.transform ? detail_cli::transform_json(*pr.transform) : json()},
                 {"reduced", pr.fp_was_reduced}}},
               {"lift", {{"h1", to_text(pr.lift.h1)}, {"h2", to_text(pr.lift.h2)}}}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "projection fp = " << to_text(pr.fp) << "\n";
    if (pr.fp_was_reduced)
        out << "warning: projection had multiple factors; reduced to its squarefree part\n";
    if (pr.transform) {
        out << "coordinate change applied (rows are images of x1,x2,x3):\n";
        for (const auto& row : *pr.transform) {
            out << " ";
            for (const auto& v : row) out << " " << rat_str(v);
            out << "\n";
        }
    }
    out << "lift x3 = h1/h2 with\n  h1 = " << to_text(pr.lift.h1) << "\n  h2 = "
        << to_text(pr.lift.h2) << "\n";
    return 0;
}

inline int cmd_branches(const JobConfig& cfg, std::ostream& out) {
    auto [f1, f2] = load_inputs(cfg);
    Pipeline pl = space_asymptotes_improved(f1, f2, cfg.seed);
    auto lifted = detail_cli::lift_all(pl, cfg.depth + 1);
    std::vector<size_t> order(pl.branches.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return branch_sort_key(pl.branches[x]) < branch_sort_key(pl.branches[y]);
    });
    if (cfg.format == "structured") {
        json branches = json::array();
        for (size_t i : order) {
            const PlaneBranch& b = pl.branches[i];
            const SpaceBranch& sb = lifted[i];
            json jb{{"r2", series_json(display_truncate(b.r2, cfg.depth))},
                    {"r3", series_json(display_truncate(sb.r3, cfg.depth))},
                    {"ramification", b.ramification},
                    {"series_count", branch_series_count(b)},
                    {"degree", sb.degree}};
            if (b.field) jb["minpoly"] = minpoly_json(b.field);
            branches.push_back(jb);
        }
        json j{{"input", {{"f1", to_text(f1)}, {"f2", to_text(f2)}}},
               {"projection", {{"fp", to_text(pl.proj.fp)}}},
               {"branches", branches}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "infinity branches of the projected curve (" << pl.branches.size() << " paths):\n";
    for (size_t i : order) {
        const PlaneBranch& b = pl.branches[i];
        const SpaceBranch& sb = lifted[i];
        AlgNum m2 = b.r2.coeff(Rational(1)), m3 = sb.r3.coeff(Rational(1));
        out << "branch:\n";
        out << "  point at infinity: (1 : " << m2.to_text() << " : " << m3.to_text() << " : 0)";
        if (!b.r2.is_zero() && b.r2.leading_exponent() > 1) out << "  [superlinear growth in x2]";
        out << "\n";
        out << "  r2 = " << to_text(display_truncate(b.r2, cfg.depth)) << "\n";
        out << "  r3 = " << to_text(display_truncate(sb.r3, cfg.depth)) << "\n";
        out << "  ramification " << b.ramification << ", series in class " << branch_series_count(b)
            << ", degree " << sb.degree << "\n";
        if (b.field) {
            QPoly m = b.field->minpoly;
            out << "  coefficients lie in an extension of degree " << b.field->degree() << "\n";
        }
    }
    return 0;
}

inline int cmd_asymptotes(const JobConfig& cfg, std::ostream& out) {
    auto [f1, f2] = load_inputs(cfg);
    bool both = cfg.method == "both";
    Pipeline pl = detail_cli::run_method(f1, f2, both ? "improved" : cfg.method, cfg.seed);
    bool agree = true;
    if (both) {
        Pipeline basic = space_asymptotes_basic(f1, f2, cfg.seed);
        agree = detail_cli::sets_agree(pl.asymptotes, basic.asymptotes);
    }
    auto lifted = detail_cli::lift_all(pl, 2);
    std::vector<AsymptoteParam> as = pl.asymptotes;
    sort_asymptotes(as);

    bool all_converge = true;
    std::vector<json> checks;
    std::vector<std::string> check_lines;
    for (const auto& a : as) {
        for (size_t src : a.sources) {
            if (pl.proj.transform) break; // branch data lives in transformed coordinates
            ConvergenceReport rep = verify_convergence(a, lifted[src], cfg.samples);
            bool ok = rep.exact_match && (!rep.evaluated || rep.strictly_decreasing ||
                                          rep.distances.size() < 2);
            all_converge = all_converge && ok;
            std::ostringstream line;
            line << "convergence " << param_text(a) << ": exact="
                 << (rep.exact_match ? "yes" : "no") << " distances=[";
            json dist = json::array();
            for (size_t i = 0; i < rep.distances.size(); ++i) {
                line << (i ? ", " : "") << std::setprecision(6) << rep.distances[i];
                dist.push_back(rep.distances[i]);
            }
            line << "]" << (ok ? "" : "  FAILED");
            check_lines.push_back(line.str());
            checks.push_back(json{{"name", "convergence"},
                                  {"asymptote", param_text(a)},
                                  {"pass", ok},
                                  {"distances", dist}});
        }
    }
    if (both) {
        checks.push_back(json{{"name", "method_agreement"}, {"pass", agree}});
        check_lines.push_back(std::string("methods ") + (agree ? "agree" : "DISAGREE"));
    }

    if (cfg.format == "structured") {
        json arr = json::array();
        for (const auto& a : as) {
            if (a.field) {
                try {
                    auto [g1, g2] = eliminate_lambda(a);
                    arr.push_back(asymptote_json(a, &g1, &g2));
                    continue;
                } catch (const unsupported&) {
                }
            }
            arr.push_back(asymptote_json(a));
        }
        json j{{"input", {{"f1", to_text(f1)}, {"f2", to_text(f2)}}},
               {"projection",
                {{"fp", to_text(pl.proj.fp)},
                 {"transform",
                  pl.proj.transform ? detail_cli::transform_json(*pl.proj.transform) : json()}}},
               {"lift", {{"h1", to_text(pl.proj.lift.h1)}, {"h2", to_text(pl.proj.lift.h2)}}},
               {"branches", json::array()},
               {"asymptotes", arr},
               {"checks", checks}};
        for (size_t i = 0; i < pl.branches.size(); ++i)
            j["branches"].push_back(
                json{{"r2", series_json(display_truncate(pl.branches[i].r2, cfg.depth))}});
        out << j.dump(2) << "\n";
    } else {
        out << "asymptotes (" << as.size() << ", method " << cfg.method << "):\n";
        for (const auto& a : as) {
            out << "  " << param_text(a);
            if (a.repaired) out << "  [reparametrized to a proper form]";
            out << "\n";
            if (a.field) {
                out << "    where m(l) = ";
                Puiseux mp;
                for (size_t p = 0; p < a.field->minpoly.size(); ++p)
                    mp.add_term(Rational(static_cast<long>(p)), AlgNum(a.field->minpoly[p]));
                out << to_text(mp, "l") << " = 0\n";
                try {
                    auto [g1, g2] = eliminate_lambda(a);
                    out << "    implicit: g1 = " << to_text(g1) << "\n";
                    out << "              g2 = " << to_text(g2) << "\n";
                } catch (const unsupported&) {
                }
            }
        }
        for (const auto& line : check_lines) out << line << "\n";
    }
    return (all_converge && agree) ? 0 : 1;
}

inline int cmd_plotdata(const JobConfig& cfg, std::ostream& out) {
    auto [f1, f2] = load_inputs(cfg);
    Pipeline pl = space_asymptotes_improved(f1, f2, cfg.seed);
    auto lifted = detail_cli::lift_all(pl, 2);
    std::vector<AsymptoteParam> as = pl.asymptotes;
    sort_asymptotes(as);
    out << "object,z,x1,x2,x3,dist_to_asymptote\n";
    size_t skipped = 0;
    auto emit = [&](const std::string& name, double z, double x1v, double x2v, double x3v,
                    double dist) {
        out << name << "," << std::setprecision(15) << z << "," << x1v << "," << x2v << ","
            << x3v << "," << dist << "\n";
    };
    size_t ai = 0;
    for (const auto& a : as) {
        std::string aname = "asymptote_" + std::to_string(ai);
        double lam = 0.0;
        if (a.field) {
            auto roots = real_roots_double(a.field->minpoly);
            if (roots.empty()) {
                ++skipped;
                ++ai;
                continue;
            }
            lam = roots.front();
        }
        Rational invk(1, a.k);
        Puiseux aq2 = substitute_power(a.q2, invk), aq3 = substitute_power(a.q3, invk);
        for (double sgn : {1.0, -1.0}) {
            bool real_ok = sgn > 0 || a.k == 1;
            for (double s : cfg.samples) {
                if (!real_ok) {
                    ++skipped;
                    continue;
                }
                double z = sgn * s;
                emit(aname, z, z, series_eval_double(aq2, z, lam), series_eval_double(aq3, z, lam),
                     0.0);
            }
        }
        for (size_t src : a.sources) {
            const PlaneBranch& b = pl.branches[src];
            const SpaceBranch& sb = lifted[src];
            double blam = 0.0;
            if (b.field) {
                auto roots = real_roots_double(b.field->minpoly);
                if (roots.empty()) {
                    ++skipped;
                    continue;
                }
                blam = roots.front();
            }
            std::string bname = "branch_" + std::to_string(src);
            for (double sgn : {1.0, -1.0}) {
                bool real_ok = sgn > 0 || b.ramification == 1;
                for (double s : cfg.samples) {
                    if (!real_ok) {
                        ++skipped;
                        continue;
                    }
                    double z = sgn * s;
                    double b2 = series_eval_double(b.r2, z, blam);
                    double b3 = series_eval_double(sb.r3, z, blam);
                    double a2 = series_eval_double(aq2, z, lam);
                    double a3 = series_eval_double(aq3, z, lam);
                    double d = std::sqrt((b2 - a2) * (b2 - a2) + (b3 - a3) * (b3 - a3));
                    emit(bname, z, z, b2, b3, d);
                }
            }
        }
        ++ai;
    }
    out << "# skipped_non_real_records," << skipped << "\n";
    return 0;
}

inline int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        if (cfg.command == "project") return cmd_project(cfg, out);
        if (cfg.command == "branches") return cmd_branches(cfg, out);
        if (cfg.command == "asymptotes") return cmd_asymptotes(cfg, out);
        if (cfg.command == "plotdata") return cmd_plotdata(cfg, out);
        err << "unknown command: " << cfg.command << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
            << "\n";
        return 2;
    } catch (const not_a_curve& e) {
        err << "not a curve: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gasym::cli

#endif
