#pragma once

#include "higgs_lab/higgs_model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace higgs_lab {

enum class FiltrationKind { JordanHolder, HarderNarasimhan };

const char* to_string(FiltrationKind kind);

/// Jordan–Hölder: steps = [E, E_1, ..., E_s] (decreasing, 0 implicit at the
/// end), quotients[i] = E_i / E_(i+1).
/// Harder–Narasimhan: steps = [E_1, ..., E_l = E] (increasing, 0 implicit at
/// the start), quotients[i] = E_(i+1) / E_i.
struct Filtration {
    FiltrationKind kind = FiltrationKind::JordanHolder;
    std::vector<std::string> steps;
    std::vector<NumericalSheafData> quotients;

    friend bool operator==(const Filtration&, const Filtration&) = default;
};

struct GradedPiece {
    unsigned rank = 0;
    Rational degH{0};
    HilbertPolynomial chi;

    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

bool operator<(const GradedPiece& a, const GradedPiece& b);

/// Multiset of quotient invariants, kept sorted.
struct Grading {
    std::vector<GradedPiece> pieces;

    friend bool operator==(const Grading&, const Grading&) = default;
};

/// Model of the subobject F: its family is the declared entries below F, with
/// quotients recomputed inside F. Entries whose torsion inside F cannot be
/// determined are dropped and the result is marked incomplete. Throws UnknownId.
HiggsObjectModel induced_submodel(const HiggsObjectModel& model, const std::string& sub_id);

/// Model of E/F: its family is the images G/F of the entries G containing F.
/// Throws UnknownId, or InvalidModel when E/F has torsion.
HiggsObjectModel quotient_model(const HiggsObjectModel& model, const std::string& sub_id);

/// Model of upper/lower, where upper may be the model id and lower may be "0".
HiggsObjectModel subquotient_model(const HiggsObjectModel& model, const std::string& upper,
                                   const std::string& lower);

/// Throws NotSemistable, or BrokenInvariant when the declared family cannot
/// support a valid filtration.
Filtration jordan_holder(const HiggsObjectModel& model);

inline constexpr std::size_t kDefaultChainBound = std::size_t{1} << 12;

/// HIGGS_LAB_MAX_CHAINS when set to a positive integer, else the default.
std::size_t chain_bound_from_env();

/// Every chain satisfying the Jordan–Hölder conditions, in id order. Throws
/// NotSemistable, or TooLarge once more than `bound` chains are found.
std::vector<Filtration> all_jordan_holder(const HiggsObjectModel& model, std::size_t bound = kDefaultChainBound);

Grading grading(const Filtration& f);

/// Compares Jordan–Hölder gradings. Throws PreconditionUnmet unless both
/// models are semistable with equal normalized Hilbert polynomial.
bool s_equivalent(const HiggsObjectModel& m1, const HiggsObjectModel& m2);

/// Throws AmbiguousMaximizer when the maximal destabilizing subobject is not
/// determined by the declared family, or InvalidModel / BrokenInvariant.
Filtration harder_narasimhan(const HiggsObjectModel& model);

/// Exhaustive search for chains satisfying the Harder–Narasimhan conditions.
std::vector<Filtration> all_harder_narasimhan(const HiggsObjectModel& model,
                                              std::size_t bound = kDefaultChainBound);

enum class FiltrationViolationKind {
    Chain,
    QuotientData,
    ZeroRankQuotient,
    TorsionQuotient,
    EqualP,
    NotStable,
    NotSemistable,
    StrictDecrease,
    Conservation,
};

const char* to_string(FiltrationViolationKind kind);

struct FiltrationViolation {
    FiltrationViolationKind kind;
    std::size_t step;
    std::string message;
};

std::vector<FiltrationViolation> verify_filtration(const HiggsObjectModel& model, const Filtration& f);

} // namespace higgs_lab
