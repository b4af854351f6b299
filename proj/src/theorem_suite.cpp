#include "higgs_lab/theorem_suite.hpp"

#include "higgs_lab/error.hpp"
#include "higgs_lab/filtrations.hpp"
#include "higgs_lab/stability.hpp"

#include <functional>
#include <sstream>

namespace higgs_lab {

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

std::size_t SuiteResult::count(CheckStatus status) const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.status == status;
    return n;
}

void SuiteResult::append(const SuiteResult& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "rank-weighted-p",    "ladder",     "dim1-coincidence", "quotient-formulation", "tf-quotients",
        "morphism-table", "extensions", "jh-step-semistable", "jh-grading", "hn-uniqueness",
        "bogomolov",   "direct-sum",
    };
    return names;
}

namespace {

/// Thrown inside a check body to report a counterexample.
struct Failure {
    std::string detail;
};

/// Thrown inside a check body when the check does not apply.
struct Skipped {
    std::string reason;
};

[[noreturn]] void fail(const std::string& detail) { throw Failure{detail}; }
[[noreturn]] void skip(const std::string& reason) { throw Skipped{reason}; }

CheckRecord run_check(const std::string& name, const std::string& object, const std::function<void()>& body) {
    CheckRecord r{name, object, CheckStatus::Pass, {}};
    try {
        body();
    } catch (const Failure& f) {
        r.status = CheckStatus::Fail;
        r.detail = f.detail;
    } catch (const Skipped& s) {
        r.status = CheckStatus::Skip;
        r.detail = s.reason;
    } catch (const Error& e) {
        r.status = CheckStatus::Fail;
        r.detail = e.what();
    }
    return r;
}

std::string p_str(const NumericalSheafData& s) { return normalized_p(s).to_string(); }

std::string verdict_str(const StabilityVerdict& v) {
    std::string s = std::string(to_string(v.notion)) + " " + to_string(v.cls);
    if (v.witness) {
        s += " (witness " + *v.witness + ": " + v.compared->witness.to_string() + " vs " +
             v.compared->reference.to_string() + ")";
    }
    return s;
}

bool proper_positive(const HiggsObjectModel& m, const SubobjectEntry& e) {
    return e.data.rank > 0 && e.data.rank < m.data.rank;
}

void rank_weighted_p(const HiggsObjectModel& m) {
    const HilbertPolynomial pE = normalized_p(m.data);
    for (const auto* e : m.sorted_entries()) {
        if (!proper_positive(m, *e) || e->quotient.rank == 0) continue;
        const HilbertPolynomial r = rank_p_residual(m.data, e->data, e->quotient);
        if (!r.is_zero()) fail("entry " + e->id + ": residual " + r.to_string());
        // With the residual zero, p_F ≺ p_E exactly when p_E ≺ p_Q.
        const EventualOrder sub = compare_eventual(normalized_p(e->data), pE);
        const EventualOrder quo = compare_eventual(pE, normalized_p(e->quotient));
        if (sub != quo) {
            fail("entry " + e->id + ": p_F " + to_string(sub) + " p_E but p_E " + to_string(quo) + " p_Q");
        }
    }
}

void ladder(const HiggsObjectModel& m) {
    const auto g = gieseker_classify(m);
    const auto s = slope_classify(m);
    if (s.cls == StabilityClass::Stable && g.cls != StabilityClass::Stable) {
        fail("slope stable but " + verdict_str(g));
    }
    if (is_semistable(g.cls) && !is_semistable(s.cls)) fail("Gieseker semistable but " + verdict_str(s));
}

void dim1(const HiggsObjectModel& m) {
    if (m.ambient.n != 1) skip("ambient is not a curve");
    const auto g = gieseker_classify(m);
    const auto s = slope_classify(m);
    if (g.cls != s.cls) fail(verdict_str(g) + " but " + verdict_str(s));
}

void quotient_formulation(const HiggsObjectModel& m) {
    const auto a = gieseker_classify(m);
    const auto b = gieseker_classify_by_quotients(m);
    if (a.cls != b.cls) fail("subobjects give " + verdict_str(a) + ", quotients give " + verdict_str(b));
}

void tf_quotients(const HiggsObjectModel& m) {
    const auto a = gieseker_classify(m);
    StabilityVerdict b;
    try {
        b = gieseker_classify_tf_quotients(m);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IncompleteTorsionClosure) skip(e.what());
        throw;
    }
    if (a.cls != b.cls) fail("all subobjects give " + verdict_str(a) + ", torsion-free quotients give " + verdict_str(b));
    for (const auto* e : m.sorted_entries()) {
        if (!proper_positive(m, *e) || e->quotient.torsion_free) continue;
        const SubobjectEntry* sat = find_saturation(m, *e);
        if (!eventually_less(normalized_p(e->data), normalized_p(sat->data))) {
            fail("entry " + e->id + " has p " + p_str(e->data) + " not below its saturation " + sat->id + " with p " +
                 p_str(sat->data));
        }
    }
}

/// Known nonzero morphisms F → E (inclusion) and E → Q (projection) must be
/// compatible with the decision table.
void morphism_table(const HiggsObjectModel& m) {
    const auto vE = gieseker_classify(m);
    if (!is_semistable(vE.cls)) skip("object is not Gieseker semistable");
    const bool E_stable = vE.cls == StabilityClass::Stable;
    const HilbertPolynomial pE = normalized_p(m.data);
    for (const auto* e : m.sorted_entries()) {
        if (!proper_positive(m, *e)) continue;
        const auto vF = gieseker_classify(induced_submodel(m, e->id));
        if (is_semistable(vF.cls)) {
            const auto c = morphism_verdict(normalized_p(e->data), pE, vF.cls == StabilityClass::Stable, E_stable);
            if (c.verdict == MorphismVerdict::MustBeZero) fail("inclusion of " + e->id + " is nonzero but MustBeZero");
            if (c.verdict == MorphismVerdict::ZeroOrGenericallySurjective || c.also_generically_surjective) {
                fail("inclusion of " + e->id + " has lower rank but the table forces generic surjectivity");
            }
        }
        if (!e->quotient.torsion_free || e->quotient.rank == 0) continue;
        const auto vQ = gieseker_classify(quotient_model(m, e->id));
        if (!is_semistable(vQ.cls)) continue;
        const auto c = morphism_verdict(pE, normalized_p(e->quotient), E_stable, vQ.cls == StabilityClass::Stable);
        if (c.verdict == MorphismVerdict::MustBeZero) fail("projection to E/" + e->id + " is nonzero but MustBeZero");
        if (c.verdict == MorphismVerdict::ZeroOrInjective) {
            fail("projection to E/" + e->id + " has a kernel but the table forces injectivity");
        }
    }
}

void extensions_check(const HiggsObjectModel& m) {
    bool any = false;
    for (const auto* e : m.sorted_entries()) {
        if (!proper_positive(m, *e) || !e->quotient.torsion_free) continue;
        if (!(normalized_p(e->data) == normalized_p(e->quotient))) continue;
        const auto sub = induced_submodel(m, e->id);
        const auto quo = quotient_model(m, e->id);
        if (!is_semistable(gieseker_classify(sub).cls) || !is_semistable(gieseker_classify(quo).cls)) continue;
        any = true;
        if (!check_extension_semistability(sub, quo, m)) {
            fail("0 -> " + e->id + " -> E -> Q with both ends semistable of p " + p_str(e->data) +
                 ", but E is " + verdict_str(gieseker_classify(m)));
        }
    }
    if (!any) skip("no extension of equal-p semistable pieces among the entries");
}

void jh_step_semistable(const HiggsObjectModel& m) {
    const auto v = gieseker_classify(m);
    if (v.cls != StabilityClass::StrictlySemistable) skip("object is not strictly semistable");
    const SubobjectEntry& f = *m.find(*v.witness);
    const HilbertPolynomial pE = normalized_p(m.data);
    if (!f.quotient.torsion_free) fail("equalizer " + f.id + " has a torsion quotient");
    if (!(normalized_p(f.data) == pE)) fail("equalizer " + f.id + " has p " + p_str(f.data));
    if (!(normalized_p(f.quotient) == pE)) fail("quotient by " + f.id + " has p " + p_str(f.quotient));
    const auto vs = gieseker_classify(induced_submodel(m, f.id));
    if (!is_semistable(vs.cls)) fail("equalizer " + f.id + " is " + verdict_str(vs));
    const auto vq = gieseker_classify(quotient_model(m, f.id));
    if (!is_semistable(vq.cls)) fail("quotient by " + f.id + " is " + verdict_str(vq));
}

std::string steps_str(const Filtration& f) {
    std::string s;
    for (const auto& id : f.steps) s += (s.empty() ? "" : " ") + id;
    return "[" + s + "]";
}

void jh_grading(const HiggsObjectModel& m) {
    if (!is_semistable(gieseker_classify(m).cls)) skip("object is not Gieseker semistable");
    std::vector<Filtration> all;
    try {
        all = all_jordan_holder(m, chain_bound_from_env());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::TooLarge) skip(e.what());
        throw;
    }
    if (all.empty()) fail("no Jordan-Hölder filtration found");
    const Grading g0 = grading(all.front());
    for (const auto& f : all) {
        const auto vs = verify_filtration(m, f);
        if (!vs.empty()) fail(steps_str(f) + ": " + vs.front().message);
        if (!(grading(f) == g0)) fail(steps_str(f) + " and " + steps_str(all.front()) + " have different gradings");
    }
    const Filtration f = jordan_holder(m);
    if (!(grading(f) == g0)) fail("constructed filtration " + steps_str(f) + " has a different grading");
    const HilbertPolynomial pE = normalized_p(m.data);
    for (const auto* e : m.sorted_entries()) {
        if (!proper_positive(m, *e) || !(normalized_p(e->data) == pE)) continue;
        if (e->quotient.rank < f.quotients.front().rank) {
            fail("E/" + e->id + " has smaller rank than the first quotient of " + steps_str(f));
        }
    }
}

void hn_uniqueness(const HiggsObjectModel& m) {
    Filtration f;
    std::vector<Filtration> all;
    try {
        f = harder_narasimhan(m);
        all = all_harder_narasimhan(m, chain_bound_from_env());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::AmbiguousMaximizer || e.code() == ErrorCode::TooLarge) skip(e.what());
        throw;
    }
    const auto vs = verify_filtration(m, f);
    if (!vs.empty()) fail(steps_str(f) + ": " + vs.front().message);
    if (all.size() != 1) {
        std::string found;
        for (const auto& a : all) found += " " + steps_str(a);
        fail(std::to_string(all.size()) + " chains satisfy the conditions:" + found);
    }
    if (!(all.front() == f)) fail("search found " + steps_str(all.front()) + ", construction gave " + steps_str(f));
}

void bogomolov(const HiggsObjectModel& m) {
    if (m.ambient.n != 2) skip("ambient is not a surface");
    if (!m.chern) skip("no Chern data");
    if (!m.locally_free) skip("not declared locally free");
    const Rational d = bogomolov_discriminant(m.ambient, m.data.rank, *m.chern);
    const auto v = gieseker_classify(m);
    if (is_semistable(v.cls) && d < 0) {
        fail("contradiction: locally free and " + verdict_str(v) + " but discriminant " + pretty_rational(d) + " < 0");
    }
}

} // namespace

SuiteResult check_object(const HiggsObjectModel& m) {
    SuiteResult r;
    const std::string& id = m.id;
    r.records.push_back(run_check("rank-weighted-p", id, [&] { rank_weighted_p(m); }));
    r.records.push_back(run_check("ladder", id, [&] { ladder(m); }));
    r.records.push_back(run_check("dim1-coincidence", id, [&] { dim1(m); }));
    r.records.push_back(run_check("quotient-formulation", id, [&] { quotient_formulation(m); }));
    r.records.push_back(run_check("tf-quotients", id, [&] { tf_quotients(m); }));
    r.records.push_back(run_check("morphism-table", id, [&] { morphism_table(m); }));
    r.records.push_back(run_check("extensions", id, [&] { extensions_check(m); }));
    r.records.push_back(run_check("jh-step-semistable", id, [&] { jh_step_semistable(m); }));
    r.records.push_back(run_check("jh-grading", id, [&] { jh_grading(m); }));
    r.records.push_back(run_check("hn-uniqueness", id, [&] { hn_uniqueness(m); }));
    r.records.push_back(run_check("bogomolov", id, [&] { bogomolov(m); }));
    return r;
}

CheckRecord check_direct_sum(const HiggsObjectModel& a, const HiggsObjectModel& b) {
    return run_check("direct-sum", a.id + " (+) " + b.id, [&] {
        if (a.data.rank == 0 || b.data.rank == 0) skip("a summand has rank 0");
        const auto va = gieseker_classify(a), vb = gieseker_classify(b);
        const auto vs = gieseker_classify(direct_sum_model(a, b));
        const bool equal_p = normalized_p(a.data) == normalized_p(b.data);
        const bool expected = is_semistable(va.cls) && is_semistable(vb.cls) && equal_p;
        if (is_semistable(vs.cls) != expected) {
            std::ostringstream os;
            os << "sum is " << verdict_str(vs) << "; summands " << to_string(va.cls) << " with p " << p_str(a.data)
               << " and " << to_string(vb.cls) << " with p " << p_str(b.data);
            fail(os.str());
        }
    });
}

SuiteResult run_suite(const std::vector<HiggsObjectModel>& models) {
    SuiteResult r;
    for (const auto& m : models) r.append(check_object(m));
    for (std::size_t i = 0; i < models.size(); ++i) {
        for (std::size_t j = i + 1; j < models.size(); ++j) {
            if (models[i].ambient == models[j].ambient) r.records.push_back(check_direct_sum(models[i], models[j]));
        }
    }
    return r;
}

} // namespace higgs_lab
