#pragma once

#include "higgs_lab/higgs_model.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace fixtures {

using namespace higgs_lab;

inline HiggsChainSpec chain(unsigned genus, std::vector<long> degrees,
                            std::set<std::pair<unsigned, unsigned>> arrows = {}, long degH = 1) {
    return HiggsChainSpec{KahlerData::curve(genus, degH), std::move(degrees), std::move(arrows)};
}

inline HiggsObjectModel chain_model(unsigned genus, std::vector<long> degrees,
                                    std::set<std::pair<unsigned, unsigned>> arrows = {}, const std::string& id = "E") {
    return realize(chain(genus, std::move(degrees), std::move(arrows)), id);
}

/// The same object as seen by the brute-force oracle.
inline oracle::Chain to_oracle(const HiggsChainSpec& spec) {
    oracle::Chain c;
    c.genus = static_cast<long>(*spec.ambient.genus);
    c.degH = *spec.ambient.curve_degH;
    c.degrees = spec.summand_degrees;
    for (auto [i, j] : spec.arrows) c.arrows.emplace_back(static_cast<int>(i) - 1, static_cast<int>(j) - 1);
    return c;
}

inline std::string twisted_id(const std::string& id) { return id + "(-1)"; }

/// Adds, for every declared entry S of a chain model, the subsheaf S(-p)
/// obtained by twisting down at one point. Its quotient E/S(-p) carries the
/// torsion S|_p of length rk S, and S itself is the saturation.
inline HiggsObjectModel with_planted_torsion(const HiggsObjectModel& base) {
    HiggsObjectModel m = base;
    const auto& kd = base.ambient;
    std::vector<SubobjectEntry> added;
    for (const auto& s : base.subobjects) {
        const long r = static_cast<long>(s.data.rank);
        SubobjectEntry t;
        t.id = twisted_id(s.id);
        t.data = s.data;
        t.data.degH -= r;
        t.data.chi -= HilbertPolynomial::constant(Rational(r));
        NumericalSheafData torsion;
        torsion.rank = 0;
        torsion.degH = Rational(r);
        torsion.chi = HilbertPolynomial::constant(Rational(r));
        torsion.torsion_free = false;
        t.quotient = difference_data(base.data, t.data, false);
        t.quotient_torsion_part = torsion;
        for (const auto& inner : s.contains) t.contains.insert(twisted_id(inner));
        added.push_back(std::move(t));
        (void)kd;
    }
    for (auto& s : m.subobjects) {
        s.contains.insert(twisted_id(s.id));
        for (const auto& inner : std::set<std::string>(s.contains)) {
            if (inner.find("(-1)") == std::string::npos) s.contains.insert(twisted_id(inner));
        }
    }
    for (auto& t : added) m.subobjects.push_back(std::move(t));
    m.family_complete = false;
    return m;
}

/// Uniform random chain spec: genus in [0, max_genus], m in [1, max_rank],
/// degrees in [-5, 5], each degree-feasible arrow with probability 1/2.
inline HiggsChainSpec random_chain(std::mt19937_64& rng, unsigned max_rank, unsigned max_genus) {
    std::uniform_int_distribution<unsigned> genus_d(0, max_genus), m_d(1, max_rank);
    std::uniform_int_distribution<long> deg_d(-5, 5);
    std::bernoulli_distribution coin(0.5);
    HiggsChainSpec spec;
    const unsigned g = genus_d(rng);
    spec.ambient = KahlerData::curve(g, 1);
    const unsigned m = m_d(rng);
    for (unsigned i = 0; i < m; ++i) spec.summand_degrees.push_back(deg_d(rng));
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= m; ++j) {
            if (spec.summand_degrees[i - 1] <= spec.summand_degrees[j - 1] + 2 * static_cast<long>(g) - 2 && coin(rng)) {
                spec.arrows.insert({i, j});
            }
        }
    }
    return spec;
}

/// Juxtaposes two chains on the same curve.
inline HiggsChainSpec concat(const HiggsChainSpec& a, const HiggsChainSpec& b) {
    HiggsChainSpec c = a;
    const unsigned shift = static_cast<unsigned>(a.summand_degrees.size());
    c.summand_degrees.insert(c.summand_degrees.end(), b.summand_degrees.begin(), b.summand_degrees.end());
    for (auto [i, j] : b.arrows) c.arrows.insert({i + shift, j + shift});
    return c;
}

} // namespace fixtures
