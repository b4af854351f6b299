#pragma once

#include "higgs_lab/filtrations.hpp"
#include "higgs_lab/model_io.hpp"
#include "higgs_lab/stability.hpp"
#include "higgs_lab/theorem_suite.hpp"

#include <optional>
#include <string>
#include <vector>

namespace higgs_lab {

enum class OutputFormat { Table, Json };

struct ObjectReport {
    const HiggsObjectModel* model = nullptr;
    StabilityVerdict gieseker;
    StabilityVerdict slope;
    StabilityVerdict by_quotients;
    std::optional<StabilityVerdict> tf_quotients;
    std::string tf_error;
};

struct TaskReport {
    Task task;
    std::optional<Filtration> filtration;
    std::string error;
};

struct AnalysisReport {
    std::vector<ObjectReport> objects;
    std::vector<TaskReport> tasks;
};

/// Classifies every object with every formulation and runs the file's tasks.
/// The report points into `file`.
AnalysisReport analyze(const ModelFile& file);

Json to_json(const StabilityVerdict& v);
Json to_json(const Filtration& f);

std::string render(const AnalysisReport& report, OutputFormat format);
std::string render(const HiggsObjectModel& model, const Filtration& f, OutputFormat format);
/// `meta` is copied into the JSON form and listed as a header in the table.
std::string render(const SuiteResult& result, const Json& meta, OutputFormat format);

} // namespace higgs_lab
