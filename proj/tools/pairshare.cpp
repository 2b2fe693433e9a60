// pairshare: exact certificates for rational pairs sharing values, curve
// implicitization and fiber checks, local branch expansions, value-distribution
// diagnostics for Q(e^z), and the constraint-system search.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "pairshare/jsonio.hpp"
#include "pairshare/parse.hpp"

using namespace pairshare;

namespace {

struct Common {
    std::string field_spec;  // "c0,c1" for t^2 + c1 t + c0
    std::string out_path;
    std::string format = "json";
};

FieldPtr make_field(const std::string& spec) {
    if (spec.empty()) return Field::rationals();
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--field expects 'c0,c1'");
    Rat c0(spec.substr(0, comma)), c1(spec.substr(comma + 1));
    c0.canonicalize();
    c1.canonicalize();
    return Field::quadratic(c0, c1);
}

void emit(const Common& common, const std::string& payload) {
    std::string path = common.out_path;
    if (path.empty()) {
        const char* dir = std::getenv("PAIRSHARE_OUT_DIR");
        if (dir && *dir) path = std::string(dir) + "/pairshare.out";
    }
    if (path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + tmp);
        os << payload << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move output into place");
}

SharedPairSpec pairs_from_json(const std::string& text, const FieldPtr& field) {
    SharedPairSpec spec;
    Json j = Json::parse(text);
    for (auto& pr : j) {
        spec.pairs.push_back({parse_value(pr[0].get<std::string>(), field),
                              parse_value(pr[1].get<std::string>(), field)});
        if (pr.size() > 2) {
            spec.cm_flags.resize(spec.pairs.size() - 1, false);
            spec.cm_flags.push_back(pr[2].get<bool>());
        }
    }
    if (!spec.cm_flags.empty()) spec.cm_flags.resize(spec.pairs.size(), false);
    return spec;
}

PointSet punctures_from_json(const std::string& text, const FieldPtr& field, char var) {
    PointSet ps;
    if (text.empty()) return ps;
    Json j = Json::parse(text);
    for (auto& item : j) {
        std::string s = item.get<std::string>();
        if (s == "inf") {
            ps.add_inf();
            continue;
        }
        ParsedExpr e = parse_expression(s, field);
        if (e.kind == ParsedExpr::Kind::Uni) {
            Poly1 cls = squarefree_part(e.p1).monic();
            cls.set_var(var);
            ps.add_class(cls);
        } else if (e.kind == ParsedExpr::Kind::Scalar) {
            // a bare value v stands for the class (var - v)
            Poly1 lin = Poly1::variable(field, var) -
                        Poly1::constant(e.scalar, var);
            ps.add_class(lin);
        } else
            throw std::invalid_argument("puncture entries are values or polynomials");
    }
    return ps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shared-value certificates for rational pairs"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--field", common.field_spec,
                   "quadratic field t^2 + c1*t + c0 as 'c0,c1' (default: rationals)");
    app.add_option("--out", common.out_path, "output path (default: stdout)");
    app.add_option("--format", common.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::string f_expr, g_expr, pairs_json, curve_expr, at_spec, punct_json;
    std::string config_path, h_expr, elim = "u";
    std::string rgrid = "10,20,40";
    int nodes = 256, terms = 4;

    auto* share = app.add_subcommand("share", "sharing certificate for a pair");
    share->add_option("--f", f_expr)->required();
    share->add_option("--g", g_expr)->required();
    share->add_option("--pairs", pairs_json, "[[a,b],...] or [[a,b,cm],...]")->required();
    share->add_option("--punctures", punct_json,
                      "extra per-pair verdicts against this supplied puncture set");

    auto* impl = app.add_subcommand("implicitize", "implicit curve of a rational pair");
    impl->add_option("--f", f_expr)->required();
    impl->add_option("--g", g_expr)->required();

    auto* chk = app.add_subcommand("check-curve", "on-curve, fiber and shape checks");
    chk->add_option("--curve", curve_expr)->required();
    chk->add_option("--f", f_expr)->required();
    chk->add_option("--g", g_expr)->required();
    chk->add_option("--pairs", pairs_json)->required();

    auto* br = app.add_subcommand("branches", "local fractional-power expansions");
    br->add_option("--curve", curve_expr)->required();
    br->add_option("--at", at_spec, "expansion point 'x,y'")->required();
    br->add_option("--terms", terms);

    auto* nev = app.add_subcommand("nevanlinna", "counting-identity table for Q(e^z)");
    nev->add_option("--f", f_expr)->required();
    nev->add_option("--g", g_expr)->required();
    nev->add_option("--pairs", pairs_json)->required();
    nev->add_option("--r-grid", rgrid);
    nev->add_option("--nodes", nodes);

    auto* pf = app.add_subcommand("proofcheck",
                                  "constancy of the pencil data plus the eliminant");
    pf->add_option("--f", f_expr)->required();
    pf->add_option("--g", g_expr)->required();
    pf->add_option("--pairs", pairs_json)->required();

    long seed_override = -1;
    double tol_override = -1;
    auto* se = app.add_subcommand("search", "constraint-system build/solve/verify");
    se->add_option("--config", config_path)->required();
    se->add_option("--seed", seed_override, "override the config seed");
    se->add_option("--tol", tol_override, "override the config residual tolerance");

    auto* rp = app.add_subcommand("resultant-pair",
                                  "eliminate the shared parameter of H(u,y), H(u,x)");
    rp->add_option("--poly", h_expr)->required();
    rp->add_option("--elim", elim);

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        FieldPtr field = make_field(common.field_spec);
        int exit_code = 0;
        Json out;

        if (share->parsed()) {
            RatFunc q = parse_ratfunc(f_expr, field), g = parse_ratfunc(g_expr, field);
            SharedPairSpec spec = pairs_from_json(pairs_json, field);
            SharingCertificate cert = sharing_certificate(q, g, spec);
            out = certificate_json(cert);
            if (!punct_json.empty()) {
                PointSet supplied = punctures_from_json(punct_json, field, q.var());
                Json at = Json::array();
                for (auto& pr : spec.pairs) {
                    PairResult r = check_pair(q, g, pr, supplied);
                    Json jr;
                    jr["a"] = pr.a.str();
                    jr["b"] = pr.b.str();
                    jr["verdict"] = verdict_str(r.verdict);
                    at.push_back(jr);
                }
                out["at_supplied_punctures"] = at;
            }
            exit_code = (cert.all_shared && cert.feasible && cert.cm_claims_hold) ? 0 : 1;
        } else if (impl->parsed()) {
            RatFunc q = parse_ratfunc(f_expr, field), g = parse_ratfunc(g_expr, field);
            out = curve_json(implicitize(q, g));
        } else if (chk->parsed()) {
            Poly2 k = parse_poly2(curve_expr, field);
            RatFunc q = parse_ratfunc(f_expr, field), g = parse_ratfunc(g_expr, field);
            SharedPairSpec spec = pairs_from_json(pairs_json, field);
            bool on = on_curve(k, q, g);
            out["on_curve"] = on;
            out["fibers"] = fiber_json(fiber_check(k, spec));
            out["shape"] = shape_json(shape_check(k, spec));
            exit_code = on ? 0 : 1;
        } else if (br->parsed()) {
            Poly2 k = parse_poly2(curve_expr, field);
            auto comma = at_spec.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--at expects 'x,y'");
            FieldElem ax = parse_scalar(at_spec.substr(0, comma), field);
            FieldElem ay = parse_scalar(at_spec.substr(comma + 1), field);
            out = branches_json(puiseux_branches(k, ax, ay, terms));
        } else if (nev->parsed()) {
            RatFunc q = parse_ratfunc(f_expr, field), g = parse_ratfunc(g_expr, field);
            SharedPairSpec spec = pairs_from_json(pairs_json, field);
            std::vector<double> rs;
            std::stringstream ss(rgrid);
            std::string tok;
            while (std::getline(ss, tok, ',')) rs.push_back(std::stod(tok));
            AuxQuadratics aq = aux_quadratics(spec);
            const Poly2& p = aq.degenerate ? aq.p0 : aq.p;
            const Poly2& pt = aq.degenerate ? aq.pt0 : aq.pt;
            auto rows = identity_report(q, g, spec, p, pt, rs, nodes);
            if (common.format == "tsv") {
                emit(common, identity_tsv(rows));
                return 0;
            }
            out["degenerate_quadrics"] = aq.degenerate;
            out["rows"] = identity_json(rows);
        } else if (pf->parsed()) {
            RatFunc q = parse_ratfunc(f_expr, field), g = parse_ratfunc(g_expr, field);
            SharedPairSpec spec = pairs_from_json(pairs_json, field);
            AuxQuadratics aq = aux_quadratics(spec);
            const Poly2& p = aq.degenerate ? aq.p0 : aq.p;
            const Poly2& pt = aq.degenerate ? aq.pt0 : aq.pt;
            out["degenerate_quadrics"] = aq.degenerate;
            out["P"] = p.str();
            out["Pt"] = pt.str();
            PencilCheck pc = pencil_constants(q, g, spec, p, pt);
            out["pencil"] = pencil_json(pc);
            bool ok = pc.ok;
            if (pc.ok) {
                Poly2 h = build_eliminant(p, pt, spec, pc.psi0, pc.u_norm, pc.v_norm);
                bool vanishes = on_curve(h, q, g);
                out["eliminant_deg_x"] = h.deg_x();
                out["eliminant_deg_y"] = h.deg_y();
                out["eliminant_vanishes_on_pair"] = vanishes;
                CurveModel cm = implicitize(q, g);
                Poly2 gcd = poly2_gcd(h, cm.k);
                out["gcd_with_curve"] = gcd.str();
                out["gcd_nonconstant"] = !gcd.is_constant();
                ok = ok && vanishes && !gcd.is_constant();
            }
            exit_code = ok ? 0 : 1;
        } else if (se->parsed()) {
            std::ifstream is(config_path);
            if (!is) throw std::runtime_error("cannot read " + config_path);
            Json cfg_json = Json::parse(is);
            SearchConfig cfg = search_config_from_json(cfg_json);
            if (seed_override >= 0) cfg.options.seed = (uint64_t)seed_override;
            if (tol_override > 0) cfg.options.tol = tol_override;
            if (cfg_json.value("exempt_scan", false)) {
                // iterate every per-pair choice of surviving derivative orders
                int jc = cfg.profile.m, lc = std::max(1, cfg.profile.n - 1);
                long total = 1;
                for (int i = 0; i < 8; ++i) total *= (i < 4 ? jc : lc);
                if (total > 4096)
                    throw std::runtime_error("exemption scan too large (> 4096 systems)");
                Json scans = Json::array();
                bool any = false;
                for (long code = 0; code < total; ++code) {
                    long rest = code;
                    DegreeProfile prof = cfg.profile;
                    prof.exempt_j.assign(4, 0);
                    prof.exempt_l.assign(4, 1);
                    for (int i = 0; i < 4; ++i) {
                        prof.exempt_j[i] = (int)(rest % jc);
                        rest /= jc;
                    }
                    for (int i = 0; i < 4; ++i) {
                        prof.exempt_l[i] = 1 + (int)(rest % lc);
                        rest /= lc;
                    }
                    ConstraintSystem ssys = build_constraints(prof, field);
                    auto scands = numeric_search(ssys, cfg.options);
                    int verified = 0;
                    for (auto& c : scands) {
                        exact_verify(c, ssys, cfg.lift_den);
                        if (c.verified) ++verified;
                    }
                    if (!scands.empty()) {
                        Json row;
                        row["exempt_j"] = prof.exempt_j;
                        row["exempt_l"] = prof.exempt_l;
                        row["candidates"] = candidates_json(scands, ssys);
                        row["verified"] = verified;
                        scans.push_back(row);
                        any = any || verified > 0;
                    }
                }
                out["exemption_scan"] = scans;
                emit(common, out.dump(2));
                return any ? 0 : 1;
            }
            ConstraintSystem sys = build_constraints(cfg.profile, field);
            out["unknowns"] = sys.unknown_names;
            out["emitted"] = sys.emitted;
            out["exempted"] = sys.exempted;
            out["count_formula"] = count_constraints(cfg.profile.m, cfg.profile.n);
            auto cands = numeric_search(sys, cfg.options);
            bool any_verified = false;
            Json reports = Json::array();
            for (auto& c : cands) {
                VerifyReport rep = exact_verify(c, sys, cfg.lift_den);
                Json jr;
                jr["cond1_ok"] = rep.cond1_ok;
                if (c.verified) {
                    jr["curve"] = rep.k.str();
                    jr["fibers"] = fiber_json(rep.fibers);
                    jr["shape"] = shape_json(rep.shape);
                }
                reports.push_back(jr);
                any_verified = any_verified || c.verified;
            }
            out["candidates"] = candidates_json(cands, sys);
            out["reports"] = reports;
            exit_code = any_verified ? 0 : 1;
        } else if (rp->parsed()) {
            Poly2 h = parse_poly2(h_expr, field);
            out = elimination_json(resultant_pair(h, elim.empty() ? 'u' : elim[0]));
        }

        emit(common, out.dump(2));
        return exit_code;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
