#include "higgs_lab/cli.hpp"

#include "higgs_lab/error.hpp"
#include "higgs_lab/fuzz.hpp"
#include "higgs_lab/model_io.hpp"
#include "higgs_lab/report.hpp"

#include "CLI11.hpp"

namespace higgs_lab {

namespace {

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidModel:
        case ErrorCode::UnknownId:
        case ErrorCode::InvalidArrow:
        case ErrorCode::TooLarge:
        case ErrorCode::AmbientMismatch:
        case ErrorCode::MalformedPolynomial:
        case ErrorCode::ZeroRank: return true;
        default: return false;
    }
}

const HiggsObjectModel& object_or_throw(const ModelFile& file, const std::string& id) {
    const HiggsObjectModel* m = file.find(id);
    if (!m) throw Error(ErrorCode::UnknownId, "no object '" + id + "' in file");
    return *m;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact stability and filtrations for numerical Higgs-sheaf models", "higgs-lab"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    std::string file;
    std::string object;

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify every object in a model file");
    analyze_cmd->add_option("file", file, "Model file (JSON)")->required();

    auto* jh_cmd = app.add_subcommand("jh", "Jordan-Hölder filtration of one object");
    jh_cmd->add_option("file", file, "Model file (JSON)")->required();
    jh_cmd->add_option("--object", object, "Object id")->required();

    auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan filtration of one object");
    hn_cmd->add_option("file", file, "Model file (JSON)")->required();
    hn_cmd->add_option("--object", object, "Object id")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem suite on a model file");
    verify_cmd->add_option("file", file, "Model file (JSON)")->required();

    FuzzOptions fuzz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the theorem suite on random chain models");
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed")->capture_default_str();
    fuzz_cmd->add_option("--count", fuzz.count, "Number of models")->capture_default_str();
    fuzz_cmd->add_option("--max-rank", fuzz.max_rank, "Largest number of summands")
        ->check(CLI::Range(1U, 10U))
        ->capture_default_str();
    fuzz_cmd->add_option("--genus", fuzz.max_genus, "Largest genus")
        ->check(CLI::Range(0U, 20U))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    const OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Table;

    try {
        if (*analyze_cmd) {
            const ModelFile mf = load_model_file(file);
            out << render(analyze(mf), fmt);
            return kExitOk;
        }
        if (*jh_cmd || *hn_cmd) {
            const ModelFile mf = load_model_file(file);
            const HiggsObjectModel& m = object_or_throw(mf, object);
            const Filtration f = *jh_cmd ? jordan_holder(m) : harder_narasimhan(m);
            out << render(m, f, fmt);
            return kExitOk;
        }
        if (*verify_cmd) {
            const ModelFile mf = load_model_file(file);
            const SuiteResult r = run_suite(mf.objects);
            out << render(r, Json{{"file", file}, {"objects", mf.objects.size()}}, fmt);
            return r.all_passed() ? kExitOk : kExitCheckFailure;
        }
        if (*fuzz_cmd) {
            const FuzzRun run = run_fuzz(fuzz);
            const Json meta{{"seed", fuzz.seed},
                            {"count", fuzz.count},
                            {"max_rank", fuzz.max_rank},
                            {"genus", fuzz.max_genus}};
            out << render(run.result, meta, fmt);
            return run.result.all_passed() ? kExitOk : kExitCheckFailure;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.code()) ? kExitInputError : kExitCheckFailure;
    }
    return kExitInputError;
}

} // namespace higgs_lab
