#pragma once

#include "higgs_lab/higgs_model.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace higgs_lab {

using Json = nlohmann::ordered_json;

/// Optional work item listed in a model file: "jh" or "hn" on one object.
struct Task {
    std::string command;
    std::string object;
};

struct ModelFile {
    KahlerData ambient;
    std::vector<HiggsObjectModel> objects;
    std::vector<Task> tasks;

    const HiggsObjectModel* find(const std::string& id) const;
};

/// Throws Error(ParseError) on malformed documents and Error(InvalidModel)
/// when an object fails validate(); chain objects may also raise
/// InvalidArrow or TooLarge.
ModelFile parse_model_file(const Json& doc);
ModelFile load_model_file(const std::string& path);

KahlerData parse_ambient(const Json& j);

/// Rationals as "num/den" strings, polynomials lowest degree first.
Json to_json(const Rational& r);
Json to_json(const HilbertPolynomial& p);
Json to_json(const KahlerData& kd);
Json to_json(const NumericalSheafData& s);
Json to_json(const HiggsObjectModel& m);

} // namespace higgs_lab
