#include "pairshare/jsonio.hpp"

#include <cstdio>

namespace pairshare {

namespace {
std::string cplx_str(const Cplx& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}
}  // namespace

Json divisor_json(const Divisor& d) {
    Json entries = Json::array();
    for (auto& [p, m] : d.entries)
        entries.push_back(Json{{"factor", p.str()}, {"mult", m}});
    Json out;
    out["entries"] = entries;
    if (d.inf_mult) out["inf"] = d.inf_mult;
    return out;
}

Json pointset_json(const PointSet& ps) {
    Json cls = Json::array();
    for (auto& c : ps.classes) cls.push_back(c.str());
    Json out;
    out["classes"] = cls;
    out["inf"] = ps.inf;
    out["sphere_points"] = ps.sphere_points();
    return out;
}

Json pattern_json(const PatternReport& rep) {
    Json classes = Json::array();
    for (auto& c : rep.classes) {
        Json jc;
        jc["class"] = c.at_inf ? "inf" : c.pointclass.str();
        jc["mult"] = Json::array({c.mult_q, c.mult_qt});
        classes.push_back(jc);
    }
    Json out;
    out["classes"] = classes;
    out["count_p1"] = rep.count_p1;
    out["count_1q"] = rep.count_1q;
    out["count_11"] = rep.count_11;
    if (rep.p) out["p"] = *rep.p;
    if (rep.q) out["q"] = *rep.q;
    out["violation"] = rep.violation;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

Json certificate_json(const SharingCertificate& cert) {
    Json pairs = Json::array();
    for (auto& pr : cert.pairs) {
        Json jp;
        jp["a"] = pr.pair.a.str();
        jp["b"] = pr.pair.b.str();
        jp["verdict"] = verdict_str(pr.verdict);
        jp["pattern"] = pattern_json(pr.pattern);
        Json wit = Json::array();
        if (pr.witness) wit.push_back(pr.witness->str());
        if (pr.witness_at_inf) wit.push_back("inf");
        jp["witnesses"] = wit;
        jp["divisor_q"] = divisor_json(pr.div_q);
        jp["divisor_qt"] = divisor_json(pr.div_qt);
        pairs.push_back(jp);
    }
    Json out;
    out["pairs"] = pairs;
    out["punctures"] = pointset_json(cert.punctures);
    out["feasible"] = cert.feasible;
    out["excluded_mobius"] = cert.excluded_mobius;
    out["all_shared"] = cert.all_shared;
    out["cm_claims_hold"] = cert.cm_claims_hold;
    return out;
}

Json curve_json(const CurveModel& m) {
    Json out;
    out["poly"] = m.k.str();
    out["deg_x"] = m.deg_x;
    out["deg_y"] = m.deg_y;
    out["map_degree"] = m.map_degree;
    out["content_removed"] = m.content_removed;
    return out;
}

Json fiber_json(const FiberCheck& fc) {
    auto side = [](const std::vector<FiberResult>& v) {
        Json arr = Json::array();
        for (auto& r : v) {
            Json jr;
            if (r.skipped) {
                jr["skipped"] = true;
            } else {
                jr["monomial"] = r.monomial;
                jr["exponent"] = r.exponent;
                if (!r.monomial) jr["extra"] = r.extra.str();
            }
            arr.push_back(jr);
        }
        return arr;
    };
    Json out;
    out["x_fibers"] = side(fc.x_fibers);
    out["y_fibers"] = side(fc.y_fibers);
    out["all_monomial"] = fc.all_monomial;
    return out;
}

Json shape_json(const ShapeReport& rep) {
    Json out;
    out["matched"] = rep.matched;
    if (rep.matched) {
        out["lambda"] = rep.lambda;
        out["kappa"] = rep.kappa;
        out["s"] = rep.s;
        out["t"] = rep.t;
        out["A"] = rep.scale.str();
    }
    out["degree_bounds_ok"] = rep.degree_bounds_ok;
    out["derivative_conditions_ok"] = rep.derivative_conditions_ok;
    out["notes"] = rep.notes;
    return out;
}

Json branches_json(const std::vector<BranchExpansion>& brs) {
    Json arr = Json::array();
    for (auto& b : brs) {
        Json jb;
        jb["exponent"] = rat_str(b.leading_exponent);
        jb["ramification"] = b.ramification;
        Json terms = Json::array();
        for (auto& [e, c] : b.terms)
            terms.push_back(Json{{"u_exp", e}, {"coeff", c.str()}});
        jb["terms"] = terms;
        jb["exact"] = b.exact;
        if (b.needs_extension) {
            jb["needs_extension"] = true;
            jb["extension_poly"] = b.extension_poly.str();
        }
        if (b.certified_order > 0) jb["certified_order"] = b.certified_order;
        arr.push_back(jb);
    }
    return arr;
}

Json identity_json(const std::vector<IdentityRow>& rows) {
    Json arr = Json::array();
    for (auto& r : rows) {
        Json jr;
        jr["r"] = r.r;
        jr["T"] = r.t;
        jr["m"] = r.m;
        jr["Nbar"] = r.nbar;
        jr["m_F"] = r.m_big;
        jr["N_F"] = r.n_big;
        jr["Nbar_F"] = r.nbar_big;
        jr["m_1/F"] = r.m_inv;
        jr["N1_1/F"] = r.n1_inv;
        jr["Nbar_1/F"] = r.nbar_inv;
        jr["sum_pair_counts"] = r.sum_pairs;
        jr["res_i"] = r.res_i;
        jr["res_ii"] = r.res_ii;
        jr["res_iii"] = r.res_iii;
        jr["res_iv"] = r.res_iv;
        jr["rel_i"] = r.rel_i;
        jr["rel_ii"] = r.rel_ii;
        jr["rel_iii"] = r.rel_iii;
        jr["rel_iv"] = r.rel_iv;
        jr["pole_ratio"] = r.pole_ratio;
        jr["bound_5_7"] = 5.0 / 7.0;
        arr.push_back(jr);
    }
    return arr;
}

std::string identity_tsv(const std::vector<IdentityRow>& rows) {
    std::string out =
        "r\tT\tm\tNbar\tm_F\tN_F\tm_invF\tN1_invF\tsum_pairs\t"
        "rel_i\trel_ii\trel_iii\trel_iv\tpole_ratio\n";
    char buf[512];
    for (auto& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "%.6g\t%.10g\t%.10g\t%.10g\t%.10g\t%.10g\t%.10g\t%.10g\t"
                      "%.10g\t%.3e\t%.3e\t%.3e\t%.3e\t%.6f\n",
                      r.r, r.t, r.m, r.nbar, r.m_big, r.n_big, r.m_inv, r.n1_inv,
                      r.sum_pairs, r.rel_i, r.rel_ii, r.rel_iii, r.rel_iv,
                      r.pole_ratio);
        out += buf;
    }
    return out;
}

Json pencil_json(const PencilCheck& pc) {
    Json out;
    out["ok"] = pc.ok;
    if (!pc.violation.empty()) out["violation"] = pc.violation;
    if (pc.ok) {
        out["phi"] = pc.phi.str();
        out["phitilde"] = pc.phitilde.str();
        out["Psi_coeff"] = pc.monomial_c.str();
        out["Psi_exponent"] = pc.monomial_k;
        out["psi_zero"] = pc.psi_zero;
        if (pc.u) out["u"] = pc.u->str();
        if (pc.v) out["v"] = pc.v->str();
        out["eliminant_psi0"] = pc.psi0.str();
        out["eliminant_u"] = pc.u_norm.str();
        out["eliminant_v"] = pc.v_norm.str();
    }
    return out;
}

Json candidates_json(const std::vector<Candidate>& cands, const ConstraintSystem& sys) {
    Json arr = Json::array();
    for (auto& c : cands) {
        Json jc;
        Json asg;
        for (size_t i = 0; i < c.assignment.size(); ++i)
            asg[sys.unknown_names[i]] = cplx_str(c.assignment[i]);
        jc["assignment"] = asg;
        jc["residual"] = c.residual;
        jc["lifted"] = c.lifted;
        if (c.lifted) {
            Json ex;
            for (size_t i = 0; i < c.exact.size(); ++i)
                ex[sys.unknown_names[i]] = c.exact[i].str();
            jc["exact"] = ex;
        }
        jc["verified"] = c.verified;
        if (!c.first_violation.empty()) jc["violation"] = c.first_violation;
        arr.push_back(jc);
    }
    return arr;
}

Json elimination_json(const std::vector<EliminationCandidate>& cands) {
    Json arr = Json::array();
    for (auto& c : cands) {
        Json jc;
        jc["poly"] = c.k.str();
        jc["deg_x"] = c.k.deg_x();
        jc["deg_y"] = c.k.deg_y();
        jc["diagonal_power"] = c.diagonal_power;
        jc["content_removed"] = c.content_removed;
        Json sig = Json::array();
        for (auto& [probe, e] : c.fiber_signature)
            sig.push_back(Json{{"x", probe}, {"pure_power", e}});
        jc["fiber_signature"] = sig;
        arr.push_back(jc);
    }
    return arr;
}

SearchConfig search_config_from_json(const Json& j) {
    SearchConfig cfg;
    const Json& p = j.at("profile");
    cfg.profile.m = p.value("m", 2);
    cfg.profile.n = p.value("n", 2);
    cfg.profile.s = p.value("s", 1);
    cfg.profile.t = p.value("t", 1);
    cfg.profile.kappa = p.value("kappa", 1);
    cfg.profile.lambda = p.value("lambda", 1);
    cfg.profile.corner_shape = p.value("corner_shape", true);
    if (p.contains("exempt_j"))
        cfg.profile.exempt_j = p["exempt_j"].get<std::vector<int>>();
    if (p.contains("exempt_l"))
        cfg.profile.exempt_l = p["exempt_l"].get<std::vector<int>>();
    if (p.contains("free_tail"))
        for (auto& cell : p["free_tail"])
            cfg.profile.free_tail.emplace_back(cell[0].get<int>(), cell[1].get<int>());
    if (p.contains("fixed_cells"))
        for (auto& cell : p["fixed_cells"]) {
            Rat v(cell[2].get<std::string>());
            v.canonicalize();
            cfg.profile.fixed_cells.push_back(
                {{cell[0].get<int>(), cell[1].get<int>()}, v});
        }
    cfg.options.starts = j.value("starts", 200);
    cfg.options.seed = j.value("seed", 1);
    cfg.options.tol = j.value("tol", 1e-10);
    cfg.options.spread = j.value("spread", 1.0);
    if (j.contains("center")) {
        for (auto& z : j["center"])
            cfg.options.center.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    cfg.lift_den = j.value("lift_den", 1000000L);
    return cfg;
}

}  // namespace pairshare
