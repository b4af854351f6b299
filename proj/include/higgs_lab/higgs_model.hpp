#pragma once

#include "higgs_lab/chern_calculus.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace higgs_lab {

/// One declared Higgs subobject F of E together with the bookkeeping of the
/// extension 0 → F → E → Q → 0.
struct SubobjectEntry {
    std::string id;
    NumericalSheafData data;
    NumericalSheafData quotient;
    /// The torsion T of Q, present exactly when quotient.torsion_free is false.
    std::optional<NumericalSheafData> quotient_torsion_part;
    /// Ids of declared entries strictly contained in this one.
    std::set<std::string> contains;
};

/// An object E together with a finite declared family of Higgs subobjects.
/// The trivial subobjects 0 and E are implicit.
///
/// Every stability predicate quantifies over `subobjects` only;
/// `family_complete` records whether the family is claimed to exhaust the
/// relevant subobjects.
struct HiggsObjectModel {
    std::string id;
    KahlerData ambient;
    NumericalSheafData data;
    std::vector<SubobjectEntry> subobjects;
    bool family_complete = false;

    /// Optional surface Chern data, used by the Bogomolov check.
    std::optional<SurfaceChernInput> chern;
    bool locally_free = false;

    const SubobjectEntry* find(const std::string& entry_id) const;
    /// Entries sorted by id.
    std::vector<const SubobjectEntry*> sorted_entries() const;
};

/// A direct sum of line bundles L_1 ⊕ … ⊕ L_m on a curve with a Higgs field
/// whose nonzero components are given by `arrows`: (i, j) means φ has a
/// nonzero component L_i → L_j ⊗ K. Summands are numbered from 1.
struct HiggsChainSpec {
    KahlerData ambient;
    std::vector<long> summand_degrees;
    std::set<std::pair<unsigned, unsigned>> arrows;
};

/// Arrow-closed proper nonempty subsets of {1..m}, by size then
/// lexicographically. Each is returned as a sorted list of summand indices.
std::vector<std::vector<unsigned>> enumerate_invariant_subobjects(const HiggsChainSpec& spec);

/// "{1,3}"
std::string subset_id(const std::vector<unsigned>& subset);

/// Model of ⊕ L_i with one entry per arrow-closed proper subset. Throws
/// InvalidArrow when an arrow is out of range or violates
/// d_i <= d_j + 2g - 2.
HiggsObjectModel realize(const HiggsChainSpec& spec, const std::string& id = "E");

enum class ViolationKind {
    AmbientInvalid,
    ModelNotTorsionFree,
    Coherence,
    DuplicateId,
    RankBound,
    RankAdditivity,
    DegreeAdditivity,
    ChiAdditivity,
    RankPResidual,
    TorsionPart,
    UnknownContainment,
    ContainmentCycle,
    ContainmentNotTransitive,
    ContainmentRank,
};

const char* to_string(ViolationKind kind);

struct Violation {
    std::string entry;  ///< entry id, or the model id for model-level problems
    ViolationKind kind;
    std::string message;
};

/// Empty iff every model and entry invariant holds.
std::vector<Violation> validate(const HiggsObjectModel& model);

/// Throws Error(InvalidModel) listing the first violations, if any.
void require_valid(const HiggsObjectModel& model);

/// Model for a ⊕ b whose family is every product F_a ⊕ F_b of declared or
/// trivial subobjects, minus 0 ⊕ 0 and a ⊕ b. Throws AmbientMismatch.
HiggsObjectModel direct_sum_model(const HiggsObjectModel& a, const HiggsObjectModel& b);

/// Id of the product entry F_a ⊕ F_b, with "0" for the zero subobject.
std::string product_id(const std::string& fa, const std::string& fb);

} // namespace higgs_lab
