#include "higgs_lab/report.hpp"

#include "higgs_lab/error.hpp"

#include <array>
#include <map>
#include <sstream>

namespace higgs_lab {

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

/// Left-aligned columns separated by two spaces, no trailing blanks.
std::string columns(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line = indent;
        for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 == r.size() ? r[i] : pad(r[i], width[i] + 2);
        os << line << '\n';
    }
    return os.str();
}

std::string verdict_text(const StabilityVerdict& v) {
    std::string s = to_string(v.cls);
    if (v.witness) {
        s += "  witness " + *v.witness + ": " + v.compared->witness.to_string() + " vs " +
             v.compared->reference.to_string();
    }
    return s;
}

std::string scope_note(const HiggsObjectModel& m) {
    return m.family_complete ? "declared family is complete"
                             : "verdicts quantify over the declared family only";
}

const HiggsObjectModel& model_or_throw(const ModelFile& file, const std::string& id) {
    const HiggsObjectModel* m = file.find(id);
    if (!m) throw Error(ErrorCode::UnknownId, "no object '" + id + "' in file");
    return *m;
}

} // namespace

AnalysisReport analyze(const ModelFile& file) {
    AnalysisReport r;
    for (const auto& m : file.objects) {
        ObjectReport o;
        o.model = &m;
        o.gieseker = gieseker_classify(m);
        o.slope = slope_classify(m);
        o.by_quotients = gieseker_classify_by_quotients(m);
        try {
            o.tf_quotients = gieseker_classify_tf_quotients(m);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IncompleteTorsionClosure) throw;
            o.tf_error = e.what();
        }
        r.objects.push_back(std::move(o));
    }
    for (const auto& t : file.tasks) {
        TaskReport tr;
        tr.task = t;
        const HiggsObjectModel& m = model_or_throw(file, t.object);
        try {
            tr.filtration = t.command == "jh" ? jordan_holder(m) : harder_narasimhan(m);
        } catch (const Error& e) {
            tr.error = e.what();
        }
        r.tasks.push_back(std::move(tr));
    }
    return r;
}

Json to_json(const StabilityVerdict& v) {
    Json j;
    j["notion"] = to_string(v.notion);
    j["class"] = to_string(v.cls);
    j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
    if (v.compared) {
        j["compared"] = Json{{"witness", to_json(v.compared->witness)}, {"reference", to_json(v.compared->reference)}};
    } else {
        j["compared"] = nullptr;
    }
    return j;
}

Json to_json(const Filtration& f) {
    Json j;
    j["kind"] = to_string(f.kind);
    Json steps = Json::array();
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const auto& q = f.quotients[i];
        steps.push_back(Json{{"id", f.steps[i]},
                             {"quotient", Json{{"rank", q.rank}, {"degH", to_json(q.degH)}, {"chi", to_json(q.chi)}}},
                             {"p", to_json(normalized_p(q))}});
    }
    j["steps"] = steps;
    return j;
}

std::string render(const AnalysisReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        Json objects = Json::array();
        for (const auto& o : report.objects) {
            const auto& m = *o.model;
            Json j;
            j["id"] = m.id;
            j["rank"] = m.data.rank;
            j["degH"] = to_json(m.data.degH);
            j["chi"] = to_json(m.data.chi);
            j["p"] = to_json(normalized_p(m.data));
            j["family_complete"] = m.family_complete;
            j["scope"] = scope_note(m);
            Json v;
            v["gieseker"] = to_json(o.gieseker);
            v["slope"] = to_json(o.slope);
            v["gieseker_by_quotients"] = to_json(o.by_quotients);
            v["gieseker_tf_quotients"] = o.tf_quotients ? to_json(*o.tf_quotients) : Json{{"error", o.tf_error}};
            j["verdicts"] = v;
            objects.push_back(std::move(j));
        }
        Json tasks = Json::array();
        for (const auto& t : report.tasks) {
            Json j{{"command", t.task.command}, {"object", t.task.object}};
            if (t.filtration) {
                j["filtration"] = to_json(*t.filtration);
            } else {
                j["error"] = t.error;
            }
            tasks.push_back(std::move(j));
        }
        return Json{{"objects", objects}, {"tasks", tasks}}.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& o : report.objects) {
        const auto& m = *o.model;
        os << "object " << m.id << "  rank " << m.data.rank << "  degH " << pretty_rational(m.data.degH) << "  chi "
           << m.data.chi.to_string() << "  p " << normalized_p(m.data).to_string() << '\n';
        os << "  scope: " << scope_note(m) << '\n';
        os << columns({{"Gieseker:", verdict_text(o.gieseker)},
                       {"Slope:", verdict_text(o.slope)},
                       {"Gieseker (quotients):", verdict_text(o.by_quotients)},
                       {"Gieseker (tf quotients):", o.tf_quotients ? verdict_text(*o.tf_quotients) : o.tf_error}},
                      "  ");
    }
    for (const auto& t : report.tasks) {
        os << "task " << t.task.command << " " << t.task.object << '\n';
        if (t.filtration) {
            std::string steps;
            for (const auto& id : t.filtration->steps) steps += (steps.empty() ? "" : " ") + id;
            os << "  steps: " << steps << '\n';
        } else {
            os << "  error: " << t.error << '\n';
        }
    }
    return os.str();
}

std::string render(const HiggsObjectModel& model, const Filtration& f, OutputFormat format) {
    if (format == OutputFormat::Json) {
        Json j = to_json(f);
        j["object"] = model.id;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << (f.kind == FiltrationKind::JordanHolder ? "Jordan-Hölder" : "Harder-Narasimhan") << " filtration of "
       << model.id << '\n';
    std::string chain;
    if (f.kind == FiltrationKind::HarderNarasimhan) {
        chain = "0";
        for (const auto& id : f.steps) chain += " < " + id;
    } else {
        for (const auto& id : f.steps) chain += id + " > ";
        chain += "0";
    }
    os << "  " << chain << '\n';
    std::vector<std::vector<std::string>> rows = {{"step", "quotient", "rank", "degH", "chi", "p"}};
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const auto& q = f.quotients[i];
        std::string name;
        if (f.kind == FiltrationKind::HarderNarasimhan) {
            name = f.steps[i] + "/" + (i == 0 ? std::string("0") : f.steps[i - 1]);
        } else {
            name = f.steps[i] + "/" + (i + 1 < f.steps.size() ? f.steps[i + 1] : std::string("0"));
        }
        rows.push_back({std::to_string(i + 1), name, std::to_string(q.rank), pretty_rational(q.degH),
                        q.chi.to_string(), normalized_p(q).to_string()});
    }
    os << columns(rows, "  ");
    return os.str();
}

std::string render(const SuiteResult& result, const Json& meta, OutputFormat format) {
    std::map<std::string, std::array<std::size_t, 3>> tally;
    for (const auto& name : check_names()) tally[name] = {0, 0, 0};
    for (const auto& r : result.records) ++tally[r.check][static_cast<std::size_t>(r.status)];

    if (format == OutputFormat::Json) {
        Json j = meta.is_object() ? meta : Json::object();
        Json summary = Json::object();
        for (const auto& name : check_names()) {
            const auto& t = tally[name];
            summary[name] = Json{{"pass", t[0]}, {"fail", t[1]}, {"skip", t[2]}};
        }
        Json failures = Json::array();
        for (const auto& r : result.records) {
            if (r.status == CheckStatus::Fail) {
                failures.push_back(Json{{"check", r.check}, {"object", r.object}, {"detail", r.detail}});
            }
        }
        j["summary"] = summary;
        j["failures"] = failures;
        j["passed"] = result.all_passed();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (meta.is_object()) {
        for (const auto& [k, v] : meta.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    std::vector<std::vector<std::string>> rows = {{"check", "pass", "fail", "skip"}};
    for (const auto& name : check_names()) {
        const auto& t = tally[name];
        rows.push_back({name, std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
    }
    os << columns(rows, "");
    bool header = false;
    for (const auto& r : result.records) {
        if (r.status != CheckStatus::Fail) continue;
        if (!header) os << "failures:\n";
        header = true;
        os << "  [" << r.check << "] " << r.object << ": " << r.detail << '\n';
    }
    os << "result: " << (result.all_passed() ? "PASS" : "FAIL") << " (" << result.records.size() << " checks, "
       << result.count(CheckStatus::Fail) << " failed, " << result.count(CheckStatus::Skip) << " skipped)\n";
    return os.str();
}

} // namespace higgs_lab
