// Cross-check driver used by both the CLI `verify` command and the
// acceptance suite: matrix identities, engine vs closed form, character
// variety consistency, and finite-field agreement with its one documented
// systematic exception.

#pragma once

#include "charvar.hpp"
#include "ff_oracle.hpp"

#include <functional>
#include <sstream>

namespace sl2tqft {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // non-empty on failure or for reported findings
};

using CheckSink = std::function<void(const CheckResult&)>;

// ---------- matrix identity suite ----------

inline void run_matrix_checks(const CheckSink& sink) {
    auto emit = [&](const std::string& name, bool ok, const std::string& detail = "") {
        sink({name, ok, detail});
    };
    const CoreMatrix id = CoreMatrix::identity();
    emit("eta * eta_inv = Id", eta() * eta_inv() == id && eta_inv() * eta() == id);
    emit("(q^3-q) M = eta_inv Z(L)",
         LocalizedScalar(sl2_class()) * m_matrix() == eta_inv() * z_genus());
    emit("rz_jplus = z_jplus eta_inv", rz_jplus() == z_jplus() * eta_inv());
    emit("rz_jminus = sigma rz_jplus", rz_jminus() == sigma() * rz_jplus());
    emit("sigma^2 = Id", sigma() * sigma() == id);
    emit("rz(L) and rz_jplus commute",
         rz_genus() * rz_jplus() == rz_jplus() * rz_genus());
    emit("rz(L) and sigma commute", rz_genus() * sigma() == sigma() * rz_genus());
    emit("rz_jplus and sigma rz_jplus commute",
         rz_jplus() * rz_jminus() == rz_jminus() * rz_jplus());
    bool diag = false;
    std::string diag_msg;
    try {
        diag = diag_check();
    } catch (const SingularP& e) {
        diag_msg = e.what();
    }
    emit("P D P^-1 = rz_jplus", diag, diag_msg);
    emit("rank rz_jplus = 7", fraction_field_rank(rz_jplus()) == 7);
    emit("tube matrices denominator-free",
         rz_jplus().all_polynomial() && rz_jminus().all_polynomial() &&
             z_genus().all_polynomial() && m_matrix().all_polynomial());

    // measure anchors
    CoreVector u;
    for (int i = 0; i <= 4; ++i) u[i] = LocalizedScalar(1);
    emit("measure(eta(unit)) = q^3-q", measure(eta() * u) == LocalizedScalar(sl2_class()));
    CoreVector d;
    d[4] = LocalizedScalar(LaurentPoly::q(2));
    d[7] = LocalizedScalar(LaurentPoly::q());
    emit("measure(q^2 T_Bt + q S_2xS_-2) = q^3-2q^2-q",
         measure(d) == LocalizedScalar(LaurentPoly::parse("q^3 - 2*q^2 - q")));
}

// ---------- engine vs closed form ----------

inline void run_engine_grid(int max_genus, int max_punct_each, int max_punct_total,
                            const CheckSink& sink) {
    for (int g = 1; g <= max_genus; ++g)
        for (int rp = 0; rp <= max_punct_each; ++rp)
            for (int rm = 0; rm <= max_punct_each; ++rm)
                for (int t = 0; t <= max_punct_each; ++t) {
                    if (rp + rm + t > max_punct_total) continue;
                    SurfaceSpec spec{g, {}};
                    spec.punctures.insert(spec.punctures.end(), rp, PunctureClass::JPlus);
                    spec.punctures.insert(spec.punctures.end(), rm, PunctureClass::JMinus);
                    spec.punctures.insert(spec.punctures.end(), t, PunctureClass::NegId);
                    std::ostringstream name;
                    name << "engine = closed_form @ g=" << g << " r+=" << rp << " r-=" << rm
                         << " t=" << t;
                    std::string detail;
                    bool ok = false;
                    try {
                        ok = evaluate(spec) == closed_form(spec);
                        if (!ok)
                            detail = to_string(evaluate(spec)) + " vs " + to_string(closed_form(spec));
                    } catch (const std::exception& e) {
                        detail = e.what();
                    }
                    sink({name.str(), ok, detail});
                }
}

// ---------- character variety grid ----------

inline void run_charvar_checks(const CheckSink& sink) {
    auto run = [&](const std::string& name, const CharVarQuery& query) {
        std::string detail;
        bool ok = false;
        try {
            ok = consistency_check(query);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        sink({"charvar consistency: " + name, ok, detail});
    };
    for (int n = 1; n <= 6; ++n) run("FreeGroup(" + std::to_string(n) + ")", CharVarQuery::free_group(n));
    for (int g = 1; g <= 4; ++g) run("Surface(" + std::to_string(g) + ")", CharVarQuery::surface(g));
    for (int n = 1; n <= 3; ++n)
        for (int s = 1; s <= 3; ++s)
            run("FreeParabolic(" + std::to_string(n) + "," + std::to_string(s) + ")",
                CharVarQuery::free_parabolic(n, s));
    for (int g = 1; g <= 3; ++g)
        for (int r = 0; r <= 3; ++r)
            for (int twist = 0; twist <= 1; ++twist) {
                // sigma = (-1)^{r_- + t}; realize both signs with r J_+ and twist -Id's
                const CharVarQuery query = CharVarQuery::parabolic_surface(g, r, 0, twist);
                std::ostringstream name;
                name << "ParabolicSurface(g=" << g << ", r=" << r << ", sigma=" << (twist ? "-" : "+")
                     << ")";
                run(name.str(), query);
            }

    // free-group stratum sum reconstructs (q^3-q)^n
    for (int n = 1; n <= 5; ++n) {
        const auto st = detail::free_group_strata(n);
        const bool ok = st.xp_hat + st.xd_hat + st.xi + st.xtilde + st.xirr == sl2_class().pow(n);
        sink({"free-group stratum sum = (q^3-q)^" + std::to_string(n), ok, ""});
    }
}

// ---------- finite-field grid ----------

struct FFRecord {
    int genus;
    int p;
    std::vector<PunctureClass> punctures;
    Int counted;
    Int predicted;  // engine polynomial at q = p
    bool agree;
};

inline std::string puncture_names(const std::vector<PunctureClass>& ps) {
    if (ps.empty()) return "none";
    std::string out;
    for (auto c : ps) {
        if (!out.empty()) out += ",";
        switch (c) {
            case PunctureClass::Id: out += "id"; break;
            case PunctureClass::NegId: out += "negid"; break;
            case PunctureClass::JPlus: out += "jplus"; break;
            case PunctureClass::JMinus: out += "jminus"; break;
        }
    }
    return out;
}

// All multisets of size <= max_size over the four classes.
inline std::vector<std::vector<PunctureClass>> puncture_multisets(int max_size) {
    const PunctureClass all[4] = {PunctureClass::Id, PunctureClass::NegId, PunctureClass::JPlus,
                                  PunctureClass::JMinus};
    std::vector<std::vector<PunctureClass>> out{{}};
    std::vector<std::vector<PunctureClass>> prev{{}};
    for (int size = 1; size <= max_size; ++size) {
        std::vector<std::vector<PunctureClass>> next;
        for (const auto& base : prev)
            for (int k = base.empty() ? 0 : int(base.back()); k < 4; ++k) {
                auto v = base;
                v.push_back(all[k]);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

inline std::vector<FFRecord> run_ff_grid(int max_genus, int max_punctures,
                                         const std::vector<int>& primes) {
    std::vector<FFRecord> records;
    for (int p : primes) {
        const FiniteGroup group = build_group(p);
        const ClassFunction comm = commutator_distribution(group);
        for (int g = 1; g <= max_genus; ++g)
            for (const auto& ps : puncture_multisets(max_punctures)) {
                SurfaceSpec spec{g, ps};
                FFRecord rec{g, p, ps, count(spec, group, comm), evaluate(spec).eval_int(p), false};
                rec.agree = rec.counted == rec.predicted;
                records.push_back(std::move(rec));
            }
    }
    return records;
}

// The one documented systematic exception: twisted (sigma = -1) specs are not
// polynomial-count at p = 3 (and p = 7; p congruent to 3 mod 4). Everything
// else on the grid must agree exactly.
inline bool ff_mismatch_is_known(const FFRecord& rec) {
    SurfaceSpec spec{rec.genus, rec.punctures};
    return rec.p % 4 == 3 && spec.sigma_sign() == -1;
}

}  // namespace sl2tqft
