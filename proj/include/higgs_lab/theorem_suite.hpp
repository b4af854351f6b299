#pragma once

#include "higgs_lab/higgs_model.hpp"

#include <string>
#include <vector>

namespace higgs_lab {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus status);

struct CheckRecord {
    std::string check;
    std::string object;
    CheckStatus status = CheckStatus::Pass;
    /// Counterexample dump for failures, reason for skips.
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckRecord> records;

    std::size_t count(CheckStatus status) const;
    bool all_passed() const { return count(CheckStatus::Fail) == 0; }
    void append(const SuiteResult& other);
};

/// Names of the checks, in report order.
const std::vector<std::string>& check_names();

/// Every single-object check on `model`.
SuiteResult check_object(const HiggsObjectModel& model);

/// Direct-sum check on one pair with equal ambient data.
CheckRecord check_direct_sum(const HiggsObjectModel& a, const HiggsObjectModel& b);

/// Single-object checks on each model, then the direct-sum check on every
/// unordered pair sharing an ambient.
SuiteResult run_suite(const std::vector<HiggsObjectModel>& models);

} // namespace higgs_lab
