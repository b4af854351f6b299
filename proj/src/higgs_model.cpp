#include "higgs_lab/higgs_model.hpp"

#include "higgs_lab/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

namespace higgs_lab {

const SubobjectEntry* HiggsObjectModel::find(const std::string& entry_id) const {
    for (const auto& e : subobjects) {
        if (e.id == entry_id) return &e;
    }
    return nullptr;
}

std::vector<const SubobjectEntry*> HiggsObjectModel::sorted_entries() const {
    std::vector<const SubobjectEntry*> out;
    out.reserve(subobjects.size());
    for (const auto& e : subobjects) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](const auto* x, const auto* y) { return x->id < y->id; });
    return out;
}

namespace {

constexpr unsigned kMaxChainSummands = 20;

using Mask = std::uint32_t;

std::vector<unsigned> mask_to_subset(Mask mask, unsigned m) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < m; ++i) {
        if (mask & (Mask{1} << i)) out.push_back(i + 1);
    }
    return out;
}

void check_spec(const HiggsChainSpec& spec) {
    if (spec.ambient.n != 1 || !spec.ambient.genus) {
        throw Error(ErrorCode::PreconditionUnmet, "Higgs chains live on curves");
    }
    const unsigned m = static_cast<unsigned>(spec.summand_degrees.size());
    if (m > kMaxChainSummands) throw Error(ErrorCode::TooLarge, "too many chain summands");
    const long canonical = 2 * static_cast<long>(*spec.ambient.genus) - 2;
    for (const auto& [i, j] : spec.arrows) {
        if (i < 1 || j < 1 || i > m || j > m) {
            throw Error(ErrorCode::InvalidArrow,
                        "arrow (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
        if (spec.summand_degrees[i - 1] > spec.summand_degrees[j - 1] + canonical) {
            throw Error(ErrorCode::InvalidArrow, "arrow (" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") needs d_i <= d_j + 2g - 2");
        }
    }
}

std::vector<Mask> closed_proper_masks(const HiggsChainSpec& spec) {
    const unsigned m = static_cast<unsigned>(spec.summand_degrees.size());
    const Mask full = m == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << m) - 1);
    std::vector<Mask> out;
    for (Mask mask = 1; mask < full; ++mask) {
        bool closed = true;
        for (const auto& [i, j] : spec.arrows) {
            if ((mask >> (i - 1) & 1U) && !(mask >> (j - 1) & 1U)) {
                closed = false;
                break;
            }
        }
        if (closed) out.push_back(mask);
    }
    std::sort(out.begin(), out.end(), [m](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return mask_to_subset(a, m) < mask_to_subset(b, m);
    });
    return out;
}

NumericalSheafData sum_over(const HiggsChainSpec& spec, Mask mask) {
    NumericalSheafData s = NumericalSheafData::zero();
    for (unsigned i = 0; i < spec.summand_degrees.size(); ++i) {
        if (mask & (Mask{1} << i)) s = sum_data(s, chi_curve(spec.ambient, 1, spec.summand_degrees[i]));
    }
    return s;
}

} // namespace

std::vector<std::vector<unsigned>> enumerate_invariant_subobjects(const HiggsChainSpec& spec) {
    check_spec(spec);
    const unsigned m = static_cast<unsigned>(spec.summand_degrees.size());
    std::vector<std::vector<unsigned>> out;
    for (Mask mask : closed_proper_masks(spec)) out.push_back(mask_to_subset(mask, m));
    return out;
}

std::string subset_id(const std::vector<unsigned>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

HiggsObjectModel realize(const HiggsChainSpec& spec, const std::string& id) {
    check_spec(spec);
    const unsigned m = static_cast<unsigned>(spec.summand_degrees.size());
    const Mask full = m == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << m) - 1);

    HiggsObjectModel model;
    model.id = id;
    model.ambient = spec.ambient;
    model.data = sum_over(spec, full);
    model.family_complete = true;
    model.locally_free = true;

    const auto masks = closed_proper_masks(spec);
    for (Mask mask : masks) {
        SubobjectEntry e;
        e.id = subset_id(mask_to_subset(mask, m));
        e.data = sum_over(spec, mask);
        e.quotient = sum_over(spec, full & ~mask);
        for (Mask other : masks) {
            if (other != mask && (other & mask) == other) e.contains.insert(subset_id(mask_to_subset(other, m)));
        }
        model.subobjects.push_back(std::move(e));
    }
    return model;
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::AmbientInvalid: return "AmbientInvalid";
        case ViolationKind::ModelNotTorsionFree: return "ModelNotTorsionFree";
        case ViolationKind::Coherence: return "Coherence";
        case ViolationKind::DuplicateId: return "DuplicateId";
        case ViolationKind::RankBound: return "RankBound";
        case ViolationKind::RankAdditivity: return "RankAdditivity";
        case ViolationKind::DegreeAdditivity: return "DegreeAdditivity";
        case ViolationKind::ChiAdditivity: return "ChiAdditivity";
        case ViolationKind::RankPResidual: return "RankPResidual";
        case ViolationKind::TorsionPart: return "TorsionPart";
        case ViolationKind::UnknownContainment: return "UnknownContainment";
        case ViolationKind::ContainmentCycle: return "ContainmentCycle";
        case ViolationKind::ContainmentNotTransitive: return "ContainmentNotTransitive";
        case ViolationKind::ContainmentRank: return "ContainmentRank";
    }
    return "?";
}

std::vector<Violation> validate(const HiggsObjectModel& model) {
    std::vector<Violation> out;
    auto report = [&out](const std::string& who, ViolationKind kind, std::string message) {
        out.push_back({who, kind, std::move(message)});
    };

    for (auto& p : model.ambient.check()) report(model.id, ViolationKind::AmbientInvalid, p);
    if (!model.data.torsion_free) report(model.id, ViolationKind::ModelNotTorsionFree, "stability needs a torsion-free object");
    for (auto& p : check_coherence(model.ambient, model.data)) report(model.id, ViolationKind::Coherence, p);

    std::map<std::string, const SubobjectEntry*> by_id;
    for (const auto& e : model.subobjects) {
        if (e.id == model.id || e.id == "0" || !by_id.emplace(e.id, &e).second) {
            report(e.id, ViolationKind::DuplicateId, "entry id must be unique and distinct from '0' and the model id");
        }
    }

    const NumericalSheafData& whole = model.data;
    for (const auto& e : model.subobjects) {
        for (auto& p : check_coherence(model.ambient, e.data)) report(e.id, ViolationKind::Coherence, "sub: " + p);
        for (auto& p : check_coherence(model.ambient, e.quotient)) report(e.id, ViolationKind::Coherence, "quotient: " + p);

        if (e.data.rank > whole.rank) report(e.id, ViolationKind::RankBound, "rank exceeds the ambient object's rank");
        const bool ranks_ok = e.data.rank + e.quotient.rank == whole.rank;
        const bool chi_ok = e.data.chi + e.quotient.chi == whole.chi;
        if (!ranks_ok) report(e.id, ViolationKind::RankAdditivity, "rk F + rk Q != rk E");
        if (e.data.degH + e.quotient.degH != whole.degH) report(e.id, ViolationKind::DegreeAdditivity, "deg F + deg Q != deg E");
        if (!chi_ok) {
            report(e.id, ViolationKind::ChiAdditivity,
                   "chi_F + chi_Q = " + (e.data.chi + e.quotient.chi).to_string() + " != chi_E = " + whole.chi.to_string());
        }
        if (ranks_ok && chi_ok && e.data.rank > 0 && e.quotient.rank > 0) {
            const auto residual = rank_p_residual(whole, e.data, e.quotient);
            if (!residual.is_zero()) report(e.id, ViolationKind::RankPResidual, "residual " + residual.to_string());
        }

        if (e.quotient.torsion_free) {
            if (e.quotient_torsion_part && !e.quotient_torsion_part->is_zero()) {
                report(e.id, ViolationKind::TorsionPart, "torsion-free quotient declares a torsion part");
            }
        } else if (!e.quotient_torsion_part) {
            report(e.id, ViolationKind::TorsionPart, "quotient with torsion lacks its torsion part");
        } else {
            const auto& t = *e.quotient_torsion_part;
            if (t.rank != 0) report(e.id, ViolationKind::TorsionPart, "torsion part must have rank 0");
            if (!eventually_less(HilbertPolynomial{}, t.chi)) {
                report(e.id, ViolationKind::TorsionPart, "torsion part chi must be eventually positive");
            }
            if (e.quotient.rank == 0 && !(t.chi == e.quotient.chi)) {
                report(e.id, ViolationKind::TorsionPart, "a rank-0 quotient is its own torsion part");
            }
        }

        for (const auto& inner : e.contains) {
            auto it = by_id.find(inner);
            if (it == by_id.end()) {
                report(e.id, ViolationKind::UnknownContainment, "contains unknown id '" + inner + "'");
                continue;
            }
            if (inner == e.id) {
                report(e.id, ViolationKind::ContainmentCycle, "entry contains itself");
                continue;
            }
            if (it->second->data.rank > e.data.rank) {
                report(e.id, ViolationKind::ContainmentRank, "contains '" + inner + "' of larger rank");
            }
            for (const auto& deeper : it->second->contains) {
                if (deeper != e.id && !e.contains.contains(deeper)) {
                    report(e.id, ViolationKind::ContainmentNotTransitive,
                           "contains '" + inner + "' but not its subobject '" + deeper + "'");
                }
            }
        }
    }

    // Cycles through more than one entry.
    std::map<std::string, int> colour;
    std::set<std::string> reported;
    std::function<bool(const std::string&)> dfs = [&](const std::string& node) -> bool {
        colour[node] = 1;
        for (const auto& next : by_id.at(node)->contains) {
            if (next == node || !by_id.contains(next)) continue;
            const int c = colour[next];
            if (c == 1) return true;
            if (c == 0 && dfs(next)) return true;
        }
        colour[node] = 2;
        return false;
    };
    for (const auto& [name, entry] : by_id) {
        if (colour[name] == 0 && dfs(name) && reported.insert(name).second) {
            report(name, ViolationKind::ContainmentCycle, "containment relation has a cycle");
        }
    }
    return out;
}

void require_valid(const HiggsObjectModel& model) {
    const auto violations = validate(model);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "model '" << model.id << "' has " << violations.size() << " violation(s)";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
        msg << "; [" << violations[i].entry << "] " << to_string(violations[i].kind) << ": " << violations[i].message;
    }
    throw Error(ErrorCode::InvalidModel, msg.str());
}

namespace {

struct Factor {
    std::string id;
    NumericalSheafData data;
    NumericalSheafData quotient;
    NumericalSheafData torsion;  // zero when the quotient is torsion-free
    std::set<std::string> contains;
    bool zero = false;
    bool whole = false;
};

std::vector<Factor> factors_of(const HiggsObjectModel& m) {
    std::vector<Factor> out;
    out.push_back({"0", NumericalSheafData::zero(), m.data, NumericalSheafData::zero(), {}, true, false});
    for (const auto& e : m.subobjects) {
        out.push_back({e.id, e.data, e.quotient, e.quotient_torsion_part.value_or(NumericalSheafData::zero()),
                       e.contains, false, false});
    }
    out.push_back({m.id, m.data, NumericalSheafData::zero(), NumericalSheafData::zero(), {}, false, true});
    return out;
}

bool below_or_equal(const Factor& lower, const Factor& upper) {
    return lower.zero || upper.whole || lower.id == upper.id || upper.contains.contains(lower.id);
}

std::string wrap(const std::string& id) {
    return id.find('+') == std::string::npos ? id : "(" + id + ")";
}

} // namespace

std::string product_id(const std::string& fa, const std::string& fb) { return wrap(fa) + "+" + wrap(fb); }

HiggsObjectModel direct_sum_model(const HiggsObjectModel& a, const HiggsObjectModel& b) {
    if (!(a.ambient == b.ambient)) {
        throw Error(ErrorCode::AmbientMismatch, "direct sum of '" + a.id + "' and '" + b.id + "' over different ambients");
    }
    if (b.data.is_zero()) return a;
    if (a.data.is_zero()) return b;

    const auto fa = factors_of(a);
    const auto fb = factors_of(b);

    HiggsObjectModel sum;
    sum.id = product_id(a.id, b.id);
    sum.ambient = a.ambient;
    sum.data = sum_data(a.data, b.data);
    sum.family_complete = false;
    sum.locally_free = a.locally_free && b.locally_free;

    for (const auto& x : fa) {
        for (const auto& y : fb) {
            if ((x.zero && y.zero) || (x.whole && y.whole)) continue;
            SubobjectEntry e;
            e.id = product_id(x.id, y.id);
            e.data = sum_data(x.data, y.data);
            e.quotient = sum_data(x.quotient, y.quotient);
            e.quotient.torsion_free = x.quotient.torsion_free && y.quotient.torsion_free;
            if (!e.quotient.torsion_free) e.quotient_torsion_part = sum_data(x.torsion, y.torsion);
            for (const auto& u : fa) {
                for (const auto& v : fb) {
                    if (u.zero && v.zero) continue;
                    if (u.id == x.id && v.id == y.id) continue;
                    if (below_or_equal(u, x) && below_or_equal(v, y)) e.contains.insert(product_id(u.id, v.id));
                }
            }
            sum.subobjects.push_back(std::move(e));
        }
    }
    return sum;
}

} // namespace higgs_lab
