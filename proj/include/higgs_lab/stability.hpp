#pragma once

#include "higgs_lab/higgs_model.hpp"

#include <optional>
#include <string>

namespace higgs_lab {

enum class Notion { Gieseker, Slope };
enum class StabilityClass { Stable, StrictlySemistable, Unstable };

const char* to_string(Notion notion);
const char* to_string(StabilityClass cls);

inline bool is_semistable(StabilityClass cls) { return cls != StabilityClass::Unstable; }

/// The two quantities compared at the witness. Slopes are stored as constant
/// polynomials so both notions share one shape.
struct WitnessComparison {
    HilbertPolynomial witness;
    HilbertPolynomial reference;
};

struct StabilityVerdict {
    Notion notion = Notion::Gieseker;
    StabilityClass cls = StabilityClass::Stable;
    /// Destabilizer (Unstable) or equalizer (StrictlySemistable); absent for Stable.
    std::optional<std::string> witness;
    std::optional<WitnessComparison> compared;
};

/// Compares p_F with p_E over every declared entry with 0 < rk F < rk E.
/// Witnesses are the first offender in id order. Throws InvalidModel.
StabilityVerdict gieseker_classify(const HiggsObjectModel& model);

/// Same quantifier with slopes.
StabilityVerdict slope_classify(const HiggsObjectModel& model);

/// Decides Gieseker stability from the quotient data alone (p_E against p_Q).
StabilityVerdict gieseker_classify_by_quotients(const HiggsObjectModel& model);

/// Quantifies only over entries with torsion-free quotients. Every entry whose
/// quotient has torsion must come with its saturation F′ (same rank, containing
/// F, chi_F′ = chi_F + chi_T, torsion-free quotient), else
/// IncompleteTorsionClosure is thrown.
StabilityVerdict gieseker_classify_tf_quotients(const HiggsObjectModel& model);

/// The saturation F′ of `entry` inside `model`, if declared.
const SubobjectEntry* find_saturation(const HiggsObjectModel& model, const SubobjectEntry& entry);

enum class MorphismVerdict { MustBeZero, ZeroOrInjective, ZeroOrGenericallySurjective, NoConstraint };

const char* to_string(MorphismVerdict verdict);

struct MorphismConclusion {
    MorphismVerdict verdict = MorphismVerdict::NoConstraint;
    /// Set when both ends are stable: generic surjectivity holds as well.
    bool also_generically_surjective = false;
};

/// What any morphism E → E2 between Gieseker semistable objects must look
/// like, given their normalized Hilbert polynomials and stability.
MorphismConclusion morphism_verdict(const HilbertPolynomial& pE, const HilbertPolynomial& pE2, bool E_stable,
                                    bool E2_stable);

/// For an extension 0 → F → E → Q → 0 with F, Q Gieseker semistable of equal
/// p, reports whether E classifies semistable with p_E = p. Throws
/// PreconditionUnmet when F or Q is unstable or their p differ.
bool check_extension_semistability(const HiggsObjectModel& sub, const HiggsObjectModel& quotient,
                                   const HiggsObjectModel& extension);

} // namespace higgs_lab
