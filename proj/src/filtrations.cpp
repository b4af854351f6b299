#include "higgs_lab/filtrations.hpp"

#include "higgs_lab/error.hpp"
#include "higgs_lab/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

namespace higgs_lab {

const char* to_string(FiltrationKind kind) {
    return kind == FiltrationKind::JordanHolder ? "JH" : "HN";
}

const char* to_string(FiltrationViolationKind kind) {
    switch (kind) {
        case FiltrationViolationKind::Chain: return "Chain";
        case FiltrationViolationKind::QuotientData: return "QuotientData";
        case FiltrationViolationKind::ZeroRankQuotient: return "ZeroRankQuotient";
        case FiltrationViolationKind::TorsionQuotient: return "TorsionQuotient";
        case FiltrationViolationKind::EqualP: return "EqualP";
        case FiltrationViolationKind::NotStable: return "NotStable";
        case FiltrationViolationKind::NotSemistable: return "NotSemistable";
        case FiltrationViolationKind::StrictDecrease: return "StrictDecrease";
        case FiltrationViolationKind::Conservation: return "Conservation";
    }
    return "?";
}

bool operator<(const GradedPiece& a, const GradedPiece& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.degH != b.degH) return a.degH < b.degH;
    return eventually_less(a.chi, b.chi);
}

namespace {

const SubobjectEntry& entry_or_throw(const HiggsObjectModel& model, const std::string& id) {
    const SubobjectEntry* e = model.find(id);
    if (!e) throw Error(ErrorCode::UnknownId, "no subobject '" + id + "' in model '" + model.id + "'");
    return *e;
}

bool proper_positive(const HiggsObjectModel& model, const SubobjectEntry& e) {
    return e.data.rank > 0 && e.data.rank < model.data.rank;
}

} // namespace

HiggsObjectModel induced_submodel(const HiggsObjectModel& model, const std::string& sub_id) {
    const SubobjectEntry& f = entry_or_throw(model, sub_id);

    HiggsObjectModel sub;
    sub.id = f.id;
    sub.ambient = model.ambient;
    sub.data = f.data;
    sub.data.torsion_free = true;
    sub.family_complete = model.family_complete;

    std::set<std::string> kept;
    for (const SubobjectEntry* g : model.sorted_entries()) {
        if (!f.contains.contains(g->id)) continue;
        SubobjectEntry e;
        e.id = g->id;
        e.data = g->data;
        if (g->quotient.torsion_free) {
            e.quotient = difference_data(f.data, g->data, true);
        } else {
            // The torsion of F/G is T_G exactly when the saturation of G lies in F.
            const SubobjectEntry* sat = find_saturation(model, *g);
            if (!sat || !(sat->id == f.id || f.contains.contains(sat->id))) {
                sub.family_complete = false;
                continue;
            }
            e.quotient = difference_data(f.data, g->data, false);
            e.quotient_torsion_part = g->quotient_torsion_part;
        }
        e.contains = g->contains;
        kept.insert(e.id);
        sub.subobjects.push_back(std::move(e));
    }
    for (auto& e : sub.subobjects) {
        std::erase_if(e.contains, [&](const std::string& id) { return !kept.contains(id); });
    }
    return sub;
}

HiggsObjectModel quotient_model(const HiggsObjectModel& model, const std::string& sub_id) {
    const SubobjectEntry& f = entry_or_throw(model, sub_id);
    if (!f.quotient.torsion_free) {
        throw Error(ErrorCode::InvalidModel, "quotient of '" + model.id + "' by '" + sub_id + "' has torsion");
    }

    HiggsObjectModel q;
    q.id = model.id + "/" + f.id;
    q.ambient = model.ambient;
    q.data = f.quotient;
    q.family_complete = model.family_complete;

    for (const SubobjectEntry* g : model.sorted_entries()) {
        if (!g->contains.contains(f.id)) continue;
        SubobjectEntry e;
        e.id = g->id;
        e.data = difference_data(g->data, f.data, true);
        e.quotient = g->quotient;
        e.quotient_torsion_part = g->quotient_torsion_part;
        for (const auto& h : g->contains) {
            const SubobjectEntry* he = model.find(h);
            if (he && he->contains.contains(f.id)) e.contains.insert(h);
        }
        q.subobjects.push_back(std::move(e));
    }
    return q;
}

HiggsObjectModel subquotient_model(const HiggsObjectModel& model, const std::string& upper,
                                   const std::string& lower) {
    HiggsObjectModel base = upper == model.id ? model : induced_submodel(model, upper);
    if (lower == "0") return base;
    return quotient_model(base, lower);
}

namespace {

struct JhState {
    std::vector<std::string> steps;
    std::vector<NumericalSheafData> quotients;
};

Filtration jordan_holder_unchecked(const HiggsObjectModel& m, const HilbertPolynomial& pE) {
    const StabilityVerdict v = gieseker_classify(m);
    if (v.cls == StabilityClass::Unstable) {
        throw Error(ErrorCode::BrokenInvariant, "step '" + m.id + "' is not semistable inside its induced family");
    }
    Filtration f;
    f.kind = FiltrationKind::JordanHolder;
    if (v.cls == StabilityClass::Stable) {
        f.steps = {m.id};
        f.quotients = {m.data};
        return f;
    }

    const SubobjectEntry* pick = nullptr;
    for (const SubobjectEntry* e : m.sorted_entries()) {
        if (!proper_positive(m, *e) || !(normalized_p(e->data) == pE)) continue;
        if (!pick || e->data.rank > pick->data.rank) pick = e;
    }
    if (!pick) throw Error(ErrorCode::BrokenInvariant, "strictly semistable step '" + m.id + "' has no equalizer");

    HiggsObjectModel q;
    try {
        q = quotient_model(m, pick->id);
    } catch (const Error&) {
        throw Error(ErrorCode::BrokenInvariant, "equalizer '" + pick->id + "' has a torsion quotient");
    }
    if (gieseker_classify(q).cls != StabilityClass::Stable) {
        throw Error(ErrorCode::BrokenInvariant,
                    "quotient " + q.id + " is not stable inside its induced family; the model is under-declared");
    }

    Filtration rest = jordan_holder_unchecked(induced_submodel(m, pick->id), pE);
    f.steps.push_back(m.id);
    f.quotients.push_back(q.data);
    f.steps.insert(f.steps.end(), rest.steps.begin(), rest.steps.end());
    f.quotients.insert(f.quotients.end(), rest.quotients.begin(), rest.quotients.end());
    return f;
}

void throw_if_violations(const HiggsObjectModel& model, const Filtration& f) {
    const auto violations = verify_filtration(model, f);
    if (violations.empty()) return;
    throw Error(ErrorCode::BrokenInvariant, std::string(to_string(f.kind)) + " filtration of '" + model.id +
                                                "' fails " + to_string(violations.front().kind) + ": " +
                                                violations.front().message);
}

} // namespace

Filtration jordan_holder(const HiggsObjectModel& model) {
    if (!is_semistable(gieseker_classify(model).cls)) {
        throw Error(ErrorCode::NotSemistable, "model '" + model.id + "' is not Gieseker semistable");
    }
    Filtration f = jordan_holder_unchecked(model, normalized_p(model.data));
    throw_if_violations(model, f);
    return f;
}

std::size_t chain_bound_from_env() {
    if (const char* raw = std::getenv("HIGGS_LAB_MAX_CHAINS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultChainBound;
}

std::vector<Filtration> all_jordan_holder(const HiggsObjectModel& model, std::size_t bound) {
    if (!is_semistable(gieseker_classify(model).cls)) {
        throw Error(ErrorCode::NotSemistable, "model '" + model.id + "' is not Gieseker semistable");
    }
    const HilbertPolynomial pE = normalized_p(model.data);
    std::vector<Filtration> out;
    JhState state;

    std::function<void(const HiggsObjectModel&)> walk = [&](const HiggsObjectModel& m) {
        if (gieseker_classify(m).cls == StabilityClass::Stable) {
            Filtration f;
            f.kind = FiltrationKind::JordanHolder;
            f.steps = state.steps;
            f.steps.push_back(m.id);
            f.quotients = state.quotients;
            f.quotients.push_back(m.data);
            out.push_back(std::move(f));
            if (out.size() > bound) {
                throw Error(ErrorCode::TooLarge, "more than " + std::to_string(bound) + " Jordan-Hölder filtrations");
            }
            return;
        }
        for (const SubobjectEntry* e : m.sorted_entries()) {
            if (!proper_positive(m, *e) || !e->quotient.torsion_free) continue;
            if (!(normalized_p(e->data) == pE)) continue;
            const HiggsObjectModel q = quotient_model(m, e->id);
            if (gieseker_classify(q).cls != StabilityClass::Stable) continue;
            state.steps.push_back(m.id);
            state.quotients.push_back(q.data);
            walk(induced_submodel(m, e->id));
            state.steps.pop_back();
            state.quotients.pop_back();
        }
    };
    walk(model);
    return out;
}

Grading grading(const Filtration& f) {
    Grading g;
    for (const auto& q : f.quotients) g.pieces.push_back({q.rank, q.degH, q.chi});
    std::sort(g.pieces.begin(), g.pieces.end());
    return g;
}

bool s_equivalent(const HiggsObjectModel& m1, const HiggsObjectModel& m2) {
    if (!is_semistable(gieseker_classify(m1).cls) || !is_semistable(gieseker_classify(m2).cls)) {
        throw Error(ErrorCode::PreconditionUnmet, "S-equivalence compares Gieseker semistable objects");
    }
    if (!(normalized_p(m1.data) == normalized_p(m2.data))) {
        throw Error(ErrorCode::PreconditionUnmet, "S-equivalence needs equal normalized Hilbert polynomials");
    }
    return grading(jordan_holder(m1)) == grading(jordan_holder(m2));
}

namespace {

Filtration harder_narasimhan_unchecked(const HiggsObjectModel& m) {
    Filtration f;
    f.kind = FiltrationKind::HarderNarasimhan;
    if (is_semistable(gieseker_classify(m).cls)) {
        f.steps = {m.id};
        f.quotients = {m.data};
        return f;
    }

    std::optional<HilbertPolynomial> best_p;
    std::vector<const SubobjectEntry*> best;
    for (const SubobjectEntry* e : m.sorted_entries()) {
        if (!proper_positive(m, *e)) continue;
        const HilbertPolynomial p = normalized_p(e->data);
        const EventualOrder o = best_p ? compare_eventual(p, *best_p) : EventualOrder::Succeeds;
        if (o == EventualOrder::Succeeds) {
            best_p = p;
            best = {e};
        } else if (o == EventualOrder::Equal) {
            if (e->data.rank > best.front()->data.rank) {
                best = {e};
            } else if (e->data.rank == best.front()->data.rank) {
                best.push_back(e);
            }
        }
    }
    if (best.size() > 1) {
        throw Error(ErrorCode::AmbiguousMaximizer, "'" + best[0]->id + "' and '" + best[1]->id +
                                                       "' both maximize p with equal rank in '" + m.id + "'");
    }
    const SubobjectEntry* top = best.front();
    if (!top->quotient.torsion_free) {
        throw Error(ErrorCode::BrokenInvariant,
                    "maximal destabilizer '" + top->id + "' has a torsion quotient; its saturation is missing");
    }

    Filtration rest = harder_narasimhan_unchecked(quotient_model(m, top->id));
    rest.steps.back() = m.id;
    f.steps.push_back(top->id);
    f.quotients.push_back(top->data);
    f.steps.insert(f.steps.end(), rest.steps.begin(), rest.steps.end());
    f.quotients.insert(f.quotients.end(), rest.quotients.begin(), rest.quotients.end());
    return f;
}

} // namespace

Filtration harder_narasimhan(const HiggsObjectModel& model) {
    require_valid(model);
    if (model.data.rank == 0) throw Error(ErrorCode::InvalidModel, "model '" + model.id + "' has rank 0");
    Filtration f = harder_narasimhan_unchecked(model);
    throw_if_violations(model, f);
    return f;
}

std::vector<Filtration> all_harder_narasimhan(const HiggsObjectModel& model, std::size_t bound) {
    require_valid(model);
    std::vector<Filtration> out;
    std::vector<std::string> steps;
    std::vector<NumericalSheafData> quotients;

    // Steps below E must have torsion-free quotient in E.
    std::function<void(const std::string&, const std::optional<HilbertPolynomial>&)> walk =
        [&](const std::string& lower, const std::optional<HilbertPolynomial>& prev_p) {
            std::vector<std::string> uppers;
            for (const SubobjectEntry* e : model.sorted_entries()) {
                if (!proper_positive(model, *e) || !e->quotient.torsion_free) continue;
                if (lower != "0" && !e->contains.contains(lower)) continue;
                uppers.push_back(e->id);
            }
            uppers.push_back(model.id);

            for (const auto& upper : uppers) {
                const HiggsObjectModel piece = subquotient_model(model, upper, lower);
                if (piece.data.rank == 0) continue;
                const HilbertPolynomial p = normalized_p(piece.data);
                if (prev_p && !eventually_less(p, *prev_p)) continue;
                if (!is_semistable(gieseker_classify(piece).cls)) continue;
                steps.push_back(upper);
                quotients.push_back(piece.data);
                if (upper == model.id) {
                    out.push_back({FiltrationKind::HarderNarasimhan, steps, quotients});
                    if (out.size() > bound) {
                        throw Error(ErrorCode::TooLarge,
                                    "more than " + std::to_string(bound) + " Harder-Narasimhan candidates");
                    }
                } else {
                    walk(upper, p);
                }
                steps.pop_back();
                quotients.pop_back();
            }
        };
    walk("0", std::nullopt);
    return out;
}

std::vector<FiltrationViolation> verify_filtration(const HiggsObjectModel& model, const Filtration& f) {
    std::vector<FiltrationViolation> out;
    auto report = [&out](FiltrationViolationKind kind, std::size_t step, std::string msg) {
        out.push_back({kind, step, std::move(msg)});
    };
    if (f.steps.empty() || f.steps.size() != f.quotients.size()) {
        report(FiltrationViolationKind::Chain, 0, "steps and quotients must be nonempty and of equal length");
        return out;
    }

    auto data_of = [&](const std::string& id) -> std::optional<NumericalSheafData> {
        if (id == "0") return NumericalSheafData::zero();
        if (id == model.id) return model.data;
        if (const SubobjectEntry* e = model.find(id)) return e->data;
        return std::nullopt;
    };
    auto strictly_below = [&](const std::string& lower, const std::string& upper) {
        if (lower == upper) return false;
        if (lower == "0" || upper == model.id) return true;
        const SubobjectEntry* u = model.find(upper);
        return u && u->contains.contains(lower);
    };

    const bool jh = f.kind == FiltrationKind::JordanHolder;
    // Normalize to an increasing chain 0 = c[0] ⊂ c[1] ⊂ ... ⊂ c[len] = E.
    std::vector<std::string> chain{"0"};
    if (jh) {
        if (f.steps.front() != model.id) report(FiltrationViolationKind::Chain, 0, "JH chain must start at E");
        chain.insert(chain.end(), f.steps.rbegin(), f.steps.rend());
    } else {
        if (f.steps.back() != model.id) report(FiltrationViolationKind::Chain, f.steps.size() - 1, "HN chain must end at E");
        chain.insert(chain.end(), f.steps.begin(), f.steps.end());
    }
    const std::size_t len = f.steps.size();
    // Increasing-chain position j (1..len) maps to step index.
    auto step_of = [&](std::size_t j) { return jh ? len - j : j - 1; };

    const HilbertPolynomial pE = normalized_p(model.data);
    unsigned rank_total = 0;
    HilbertPolynomial chi_total;
    std::optional<HilbertPolynomial> prev_p;
    for (std::size_t j = 1; j <= len; ++j) {
        const std::size_t step = step_of(j);
        const std::string& lower = chain[j - 1];
        const std::string& upper = chain[j];
        const NumericalSheafData& declared = f.quotients[step];
        rank_total += declared.rank;
        chi_total += declared.chi;

        const auto up = data_of(upper);
        const auto lo = data_of(lower);
        if (!up || !lo) {
            report(FiltrationViolationKind::Chain, step, "unknown id in chain");
            continue;
        }
        if (!strictly_below(lower, upper)) {
            report(FiltrationViolationKind::Chain, step, "'" + lower + "' is not strictly contained in '" + upper + "'");
            continue;
        }
        if (declared.rank != up->rank - lo->rank || declared.degH != up->degH - lo->degH ||
            !(declared.chi == up->chi - lo->chi)) {
            report(FiltrationViolationKind::QuotientData, step, "quotient data differs from chi subtraction");
        }
        if (up->rank <= lo->rank) {
            report(FiltrationViolationKind::ZeroRankQuotient, step, "quotient " + upper + "/" + lower + " has rank 0");
            continue;
        }
        HiggsObjectModel piece;
        try {
            piece = subquotient_model(model, upper, lower);
        } catch (const Error& err) {
            report(FiltrationViolationKind::TorsionQuotient, step, err.what());
            continue;
        }
        const HilbertPolynomial p = normalized_p(piece.data);
        const StabilityClass cls = gieseker_classify(piece).cls;
        if (jh) {
            if (!(p == pE)) {
                report(FiltrationViolationKind::EqualP, step, "quotient p = " + p.to_string() + " != p_E = " + pE.to_string());
            }
            if (cls != StabilityClass::Stable) {
                report(FiltrationViolationKind::NotStable, step, "quotient " + piece.id + " is " + to_string(cls));
            }
        } else {
            if (!is_semistable(cls)) {
                report(FiltrationViolationKind::NotSemistable, step, "quotient " + piece.id + " is Unstable");
            }
            if (prev_p && !eventually_less(p, *prev_p)) {
                report(FiltrationViolationKind::StrictDecrease, step,
                       "quotient p = " + p.to_string() + " does not fall below " + prev_p->to_string());
            }
            prev_p = p;
        }
    }
    if (rank_total != model.data.rank || !(chi_total == model.data.chi)) {
        report(FiltrationViolationKind::Conservation, 0, "quotient ranks/chi do not add up to E");
    }
    return out;
}

} // namespace higgs_lab
