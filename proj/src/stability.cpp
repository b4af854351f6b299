#include "higgs_lab/stability.hpp"

#include "higgs_lab/error.hpp"

#include <functional>

namespace higgs_lab {

const char* to_string(Notion notion) { return notion == Notion::Gieseker ? "Gieseker" : "Slope"; }

const char* to_string(StabilityClass cls) {
    switch (cls) {
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::StrictlySemistable: return "StrictlySemistable";
        case StabilityClass::Unstable: return "Unstable";
    }
    return "?";
}

const char* to_string(MorphismVerdict verdict) {
    switch (verdict) {
        case MorphismVerdict::MustBeZero: return "MustBeZero";
        case MorphismVerdict::ZeroOrInjective: return "ZeroOrInjective";
        case MorphismVerdict::ZeroOrGenericallySurjective: return "ZeroOrGenericallySurjective";
        case MorphismVerdict::NoConstraint: return "NoConstraint";
    }
    return "?";
}

namespace {

void require_classifiable(const HiggsObjectModel& model) {
    require_valid(model);
    if (model.data.rank == 0) throw Error(ErrorCode::InvalidModel, "model '" + model.id + "' has rank 0");
}

bool proper_positive(const HiggsObjectModel& model, const SubobjectEntry& e) {
    return e.data.rank > 0 && e.data.rank < model.data.rank;
}

/// `order(e)` is the order of the entry-side quantity against the reference
/// in the direction where Precedes means "fine for stability".
StabilityVerdict classify(const HiggsObjectModel& model, Notion notion,
                          const std::function<bool(const SubobjectEntry&)>& in_scope,
                          const std::function<EventualOrder(const SubobjectEntry&)>& order,
                          const std::function<WitnessComparison(const SubobjectEntry&)>& compared) {
    StabilityVerdict v;
    v.notion = notion;
    const SubobjectEntry* equalizer = nullptr;
    for (const SubobjectEntry* e : model.sorted_entries()) {
        if (!proper_positive(model, *e) || !in_scope(*e)) continue;
        const EventualOrder o = order(*e);
        if (o == EventualOrder::Succeeds) {
            v.cls = StabilityClass::Unstable;
            v.witness = e->id;
            v.compared = compared(*e);
            return v;
        }
        if (o == EventualOrder::Equal && !equalizer) equalizer = e;
    }
    if (equalizer) {
        v.cls = StabilityClass::StrictlySemistable;
        v.witness = equalizer->id;
        v.compared = compared(*equalizer);
    }
    return v;
}

bool always(const SubobjectEntry&) { return true; }

} // namespace

StabilityVerdict gieseker_classify(const HiggsObjectModel& model) {
    require_classifiable(model);
    const HilbertPolynomial pE = normalized_p(model.data);
    return classify(
        model, Notion::Gieseker, always,
        [&](const SubobjectEntry& e) { return compare_eventual(normalized_p(e.data), pE); },
        [&](const SubobjectEntry& e) { return WitnessComparison{normalized_p(e.data), pE}; });
}

StabilityVerdict slope_classify(const HiggsObjectModel& model) {
    require_classifiable(model);
    const Rational muE = slope(model.data);
    auto as_poly = [](const Rational& x) { return HilbertPolynomial::constant(x); };
    return classify(
        model, Notion::Slope, always,
        [&](const SubobjectEntry& e) {
            const int c = cmp(slope(e.data), muE);
            return c < 0 ? EventualOrder::Precedes : (c == 0 ? EventualOrder::Equal : EventualOrder::Succeeds);
        },
        [&](const SubobjectEntry& e) { return WitnessComparison{as_poly(slope(e.data)), as_poly(muE)}; });
}

StabilityVerdict gieseker_classify_by_quotients(const HiggsObjectModel& model) {
    require_classifiable(model);
    const HilbertPolynomial pE = normalized_p(model.data);
    // Stability wants p_E ≺ p_Q, i.e. the offending direction is p_Q ≺ p_E.
    return classify(
        model, Notion::Gieseker, always,
        [&](const SubobjectEntry& e) { return compare_eventual(pE, normalized_p(e.quotient)); },
        [&](const SubobjectEntry& e) { return WitnessComparison{normalized_p(e.quotient), pE}; });
}

const SubobjectEntry* find_saturation(const HiggsObjectModel& model, const SubobjectEntry& entry) {
    if (entry.quotient.torsion_free || !entry.quotient_torsion_part) return nullptr;
    const HilbertPolynomial target = entry.data.chi + entry.quotient_torsion_part->chi;
    for (const SubobjectEntry* g : model.sorted_entries()) {
        if (g->id == entry.id || !g->contains.contains(entry.id)) continue;
        if (g->data.rank == entry.data.rank && g->data.chi == target && g->quotient.torsion_free) return g;
    }
    return nullptr;
}

StabilityVerdict gieseker_classify_tf_quotients(const HiggsObjectModel& model) {
    require_classifiable(model);
    for (const SubobjectEntry* e : model.sorted_entries()) {
        if (!proper_positive(model, *e) || e->quotient.torsion_free) continue;
        if (!find_saturation(model, *e)) {
            throw Error(ErrorCode::IncompleteTorsionClosure,
                        "entry '" + e->id + "' has a torsion quotient but its saturation is not declared");
        }
    }
    const HilbertPolynomial pE = normalized_p(model.data);
    return classify(
        model, Notion::Gieseker, [](const SubobjectEntry& e) { return e.quotient.torsion_free; },
        [&](const SubobjectEntry& e) { return compare_eventual(normalized_p(e.data), pE); },
        [&](const SubobjectEntry& e) { return WitnessComparison{normalized_p(e.data), pE}; });
}

MorphismConclusion morphism_verdict(const HilbertPolynomial& pE, const HilbertPolynomial& pE2, bool E_stable,
                                    bool E2_stable) {
    const EventualOrder o = compare_eventual(pE2, pE);
    if (o == EventualOrder::Precedes) return {MorphismVerdict::MustBeZero, false};
    if (o == EventualOrder::Equal) {
        if (E_stable) return {MorphismVerdict::ZeroOrInjective, E2_stable};
        if (E2_stable) return {MorphismVerdict::ZeroOrGenericallySurjective, false};
    }
    return {MorphismVerdict::NoConstraint, false};
}

bool check_extension_semistability(const HiggsObjectModel& sub, const HiggsObjectModel& quotient,
                                   const HiggsObjectModel& extension) {
    const StabilityVerdict vf = gieseker_classify(sub);
    const StabilityVerdict vq = gieseker_classify(quotient);
    if (!is_semistable(vf.cls) || !is_semistable(vq.cls)) {
        throw Error(ErrorCode::PreconditionUnmet, "both ends of the extension must be Gieseker semistable");
    }
    const HilbertPolynomial p = normalized_p(sub.data);
    if (!(normalized_p(quotient.data) == p)) {
        throw Error(ErrorCode::PreconditionUnmet, "sub and quotient must share the normalized Hilbert polynomial");
    }
    const StabilityVerdict ve = gieseker_classify(extension);
    return is_semistable(ve.cls) && normalized_p(extension.data) == p;
}

} // namespace higgs_lab
