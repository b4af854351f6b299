#pragma once

#include "higgs_lab/higgs_model.hpp"
#include "higgs_lab/theorem_suite.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace higgs_lab {

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    unsigned max_rank = 4;
    unsigned max_genus = 2;
};

/// Genus in [0, max_genus], m in [1, max_rank], degrees in [-5, 5], degH = 1,
/// each degree-feasible arrow (i, j) kept with probability 1/2.
HiggsChainSpec random_chain_spec(std::mt19937_64& rng, unsigned max_rank, unsigned max_genus);

/// The specs drawn for a run, in seed order.
std::vector<HiggsChainSpec> fuzz_specs(const FuzzOptions& options);

struct FuzzRun {
    std::vector<HiggsChainSpec> specs;
    SuiteResult result;
};

/// Realizes each spec as "F<i>" and runs the single-object checks, then the
/// direct-sum check on the disjoint pairs (F0, F1), (F2, F3), ... that share
/// a genus.
FuzzRun run_fuzz(const FuzzOptions& options);

} // namespace higgs_lab
