#include "higgs_lab/fuzz.hpp"

namespace higgs_lab {

HiggsChainSpec random_chain_spec(std::mt19937_64& rng, unsigned max_rank, unsigned max_genus) {
    std::uniform_int_distribution<unsigned> genus_d(0, max_genus);
    std::uniform_int_distribution<unsigned> rank_d(1, std::max(1U, max_rank));
    std::uniform_int_distribution<long> degree_d(-5, 5);
    std::bernoulli_distribution keep(0.5);

    HiggsChainSpec spec;
    const unsigned g = genus_d(rng);
    spec.ambient = KahlerData::curve(g, 1);
    const unsigned m = rank_d(rng);
    for (unsigned i = 0; i < m; ++i) spec.summand_degrees.push_back(degree_d(rng));
    const long slack = 2 * static_cast<long>(g) - 2;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= m; ++j) {
            if (spec.summand_degrees[i - 1] > spec.summand_degrees[j - 1] + slack) continue;
            if (keep(rng)) spec.arrows.insert({i, j});
        }
    }
    return spec;
}

std::vector<HiggsChainSpec> fuzz_specs(const FuzzOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::vector<HiggsChainSpec> specs;
    specs.reserve(options.count);
    for (std::size_t i = 0; i < options.count; ++i) {
        specs.push_back(random_chain_spec(rng, options.max_rank, options.max_genus));
    }
    return specs;
}

FuzzRun run_fuzz(const FuzzOptions& options) {
    FuzzRun run;
    run.specs = fuzz_specs(options);
    std::vector<HiggsObjectModel> models;
    for (std::size_t i = 0; i < run.specs.size(); ++i) {
        models.push_back(realize(run.specs[i], "F" + std::to_string(i)));
        run.result.append(check_object(models.back()));
    }
    for (std::size_t i = 0; i + 1 < models.size(); i += 2) {
        if (models[i].ambient == models[i + 1].ambient) {
            run.result.records.push_back(check_direct_sum(models[i], models[i + 1]));
        }
    }
    return run;
}

} // namespace higgs_lab
