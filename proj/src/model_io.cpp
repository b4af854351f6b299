#include "higgs_lab/model_io.hpp"

#include "higgs_lab/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace higgs_lab {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

Rational rational_of(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(where, e.what());
        }
    }
    parse_fail(where, "expected a rational as \"num/den\" or an integer");
}

long integer_of(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) parse_fail(where, "expected an integer");
    return j.get<long>();
}

unsigned unsigned_of(const Json& j, const std::string& where) {
    const long v = integer_of(j, where);
    if (v < 0) parse_fail(where, "expected a nonnegative integer");
    return static_cast<unsigned>(v);
}

bool bool_of(const Json& j, const char* key, bool fallback, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) parse_fail(where, std::string("\"") + key + "\" must be a boolean");
    return it->get<bool>();
}

HilbertPolynomial poly_of(const Json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of coefficients, lowest degree first");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_of(j[i], where + "[" + std::to_string(i) + "]"));
    return HilbertPolynomial(std::move(c));
}

SurfaceChernInput chern_of(const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    auto get = [&](const char* key) -> Rational {
        auto it = j.find(key);
        return it == j.end() ? Rational(0) : rational_of(*it, where + "." + key);
    };
    const bool has_classes = j.contains("c1sq") || j.contains("c2");
    if (has_classes) {
        SurfaceChernInput sc = SurfaceChernInput::from_classes(get("c1H"), get("c1c1X"), get("c1sq"), get("c2"));
        if (j.contains("ch2") && get("ch2") != sc.ch2) parse_fail(where, "ch2 disagrees with (c1sq - 2 c2) / 2");
        return sc;
    }
    SurfaceChernInput sc;
    sc.c1H = get("c1H");
    sc.ch2 = get("ch2");
    sc.c1c1X = get("c1c1X");
    return sc;
}

bool has_classes(const Json& j) { return j.is_object() && (j.contains("c1sq") || j.contains("c2")); }

NumericalSheafData sheaf_of(const Json& j, const KahlerData& kd, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected a sheaf object");
    const unsigned rank = unsigned_of(field(j, "rank", where), where + ".rank");
    NumericalSheafData s;
    if (j.contains("chi")) {
        s.rank = rank;
        s.degH = rational_of(field(j, "degH", where), where + ".degH");
        s.chi = poly_of(j["chi"], where + ".chi");
        s.torsion_free = rank > 0;
    } else if (j.contains("deg")) {
        if (kd.n != 1) parse_fail(where, "\"deg\" is only meaningful on a curve");
        s = chi_curve(kd, rank, integer_of(j["deg"], where + ".deg"));
    } else if (j.contains("chern")) {
        if (kd.n != 2) parse_fail(where, "\"chern\" is only meaningful on a surface");
        s = chi_surface(kd, rank, chern_of(j["chern"], where + ".chern"), kd.todd.at(0));
    } else {
        parse_fail(where, "a sheaf needs \"chi\" with \"degH\", \"deg\" (curve) or \"chern\" (surface)");
    }
    s.torsion_free = bool_of(j, "torsion_free", s.torsion_free, where);
    return s;
}

std::vector<unsigned> index_list(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) parse_fail(where, "an arrow is a pair [i, j]");
    return {unsigned_of(j[0], where), unsigned_of(j[1], where)};
}

HiggsObjectModel chain_of(const Json& j, const KahlerData& kd, const std::string& id, const std::string& where) {
    if (kd.n != 1 || !kd.genus || !kd.curve_degH) parse_fail(where, "chain objects live on a curve");
    HiggsChainSpec spec;
    spec.ambient = kd;
    const Json& d = field(j, "summand_degrees", where);
    if (!d.is_array() || d.empty()) parse_fail(where, "\"summand_degrees\" must be a nonempty array");
    for (std::size_t i = 0; i < d.size(); ++i) spec.summand_degrees.push_back(integer_of(d[i], where + ".summand_degrees"));
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) parse_fail(where, "\"arrows\" must be an array");
        for (const auto& a : j["arrows"]) {
            const auto ij = index_list(a, where + ".arrows");
            spec.arrows.insert({ij[0], ij[1]});
        }
    }
    return realize(spec, id);
}

HiggsObjectModel model_of(const Json& j, const KahlerData& kd, const std::string& id, const std::string& where) {
    HiggsObjectModel m;
    m.id = id;
    m.ambient = kd;
    const Json& sheaf = field(j, "sheaf", where);
    m.data = sheaf_of(sheaf, kd, where + ".sheaf");
    m.family_complete = bool_of(j, "family_complete", false, where);
    m.locally_free = bool_of(j, "locally_free", false, where);
    if (j.contains("chern")) {
        m.chern = chern_of(j["chern"], where + ".chern");
    } else if (sheaf.contains("chern") && has_classes(sheaf["chern"])) {
        m.chern = chern_of(sheaf["chern"], where + ".sheaf.chern");
    }
    if (j.contains("subobjects")) {
        const Json& subs = j["subobjects"];
        if (!subs.is_array()) parse_fail(where, "\"subobjects\" must be an array");
        for (std::size_t i = 0; i < subs.size(); ++i) {
            const std::string w = where + ".subobjects[" + std::to_string(i) + "]";
            const Json& s = subs[i];
            SubobjectEntry e;
            const Json& sid = field(s, "id", w);
            if (!sid.is_string()) parse_fail(w, "\"id\" must be a string");
            e.id = sid.get<std::string>();
            e.data = sheaf_of(field(s, "sheaf", w), kd, w + ".sheaf");
            if (s.contains("quotient")) {
                e.quotient = sheaf_of(s["quotient"], kd, w + ".quotient");
            } else {
                e.quotient = difference_data(m.data, e.data, !s.contains("quotient_torsion"));
            }
            if (s.contains("quotient_torsion")) {
                e.quotient_torsion_part = sheaf_of(s["quotient_torsion"], kd, w + ".quotient_torsion");
                e.quotient.torsion_free = false;
            }
            if (s.contains("contains")) {
                if (!s["contains"].is_array()) parse_fail(w, "\"contains\" must be an array of ids");
                for (const auto& c : s["contains"]) {
                    if (!c.is_string()) parse_fail(w, "\"contains\" must be an array of ids");
                    e.contains.insert(c.get<std::string>());
                }
            }
            m.subobjects.push_back(std::move(e));
        }
    }
    return m;
}

std::string violation_report(const std::string& id, const std::vector<Violation>& vs) {
    std::ostringstream os;
    os << "object '" << id << "' fails validation:";
    for (const auto& v : vs) os << "\n  [" << to_string(v.kind) << "] " << v.entry << ": " << v.message;
    return os.str();
}

} // namespace

const HiggsObjectModel* ModelFile::find(const std::string& id) const {
    for (const auto& m : objects) {
        if (m.id == id) return &m;
    }
    return nullptr;
}

KahlerData parse_ambient(const Json& j) {
    const std::string where = "ambient";
    const unsigned n = unsigned_of(field(j, "dimension", where), where + ".dimension");
    KahlerData kd;
    if (n == 1) {
        const long degH = integer_of(field(j, "degH", where), where + ".degH");
        if (degH <= 0) parse_fail(where, "degH must be positive");
        kd = KahlerData::curve(unsigned_of(field(j, "genus", where), where + ".genus"), degH);
    } else {
        const Rational hn = rational_of(field(j, "hn", where), where + ".hn");
        const Rational c1 = rational_of(field(j, "c1X_H", where), where + ".c1X_H");
        std::vector<Rational> todd;
        if (j.contains("todd")) {
            if (!j["todd"].is_array()) parse_fail(where, "\"todd\" must be an array");
            for (const auto& t : j["todd"]) todd.push_back(rational_of(t, where + ".todd"));
        }
        if (n == 2) {
            if (todd.empty()) parse_fail(where, "a surface needs \"todd\" (at least td2 = chi(O_X))");
            kd = KahlerData::surface(hn, c1, todd[0]);
            if (todd.size() > 1 && todd != kd.todd) parse_fail(where, "\"todd\" must be [td2, c1X_H/2, hn]");
        } else {
            kd = KahlerData::general(n, hn, c1, std::move(todd));
        }
    }
    const auto problems = kd.check();
    if (!problems.empty()) parse_fail(where, problems.front());
    return kd;
}

ModelFile parse_model_file(const Json& doc) {
    ModelFile file;
    file.ambient = parse_ambient(field(doc, "ambient", "file"));
    const Json& objects = field(doc, "objects", "file");
    if (!objects.is_array()) parse_fail("file", "\"objects\" must be an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const std::string where = "objects[" + std::to_string(i) + "]";
        const Json& o = objects[i];
        const Json& idj = field(o, "id", where);
        if (!idj.is_string() || idj.get<std::string>().empty()) parse_fail(where, "\"id\" must be a nonempty string");
        const std::string id = idj.get<std::string>();
        if (!seen.insert(id).second) parse_fail(where, "duplicate object id '" + id + "'");
        const KahlerData kd = o.contains("ambient") ? parse_ambient(o["ambient"]) : file.ambient;
        const Json& type = field(o, "type", where);
        HiggsObjectModel m;
        if (type == "chain") {
            m = chain_of(o, kd, id, where);
        } else if (type == "model") {
            m = model_of(o, kd, id, where);
        } else {
            parse_fail(where, "\"type\" must be \"chain\" or \"model\"");
        }
        const auto vs = validate(m);
        if (!vs.empty()) throw Error(ErrorCode::InvalidModel, violation_report(id, vs));
        file.objects.push_back(std::move(m));
    }
    if (doc.contains("tasks")) {
        if (!doc["tasks"].is_array()) parse_fail("file", "\"tasks\" must be an array");
        for (const auto& t : doc["tasks"]) {
            Task task;
            const Json& cmd = field(t, "command", "tasks");
            const Json& obj = field(t, "object", "tasks");
            if (!cmd.is_string() || !obj.is_string()) parse_fail("tasks", "command and object must be strings");
            task.command = cmd.get<std::string>();
            task.object = obj.get<std::string>();
            if (task.command != "jh" && task.command != "hn") parse_fail("tasks", "command must be \"jh\" or \"hn\"");
            if (!file.find(task.object)) throw Error(ErrorCode::UnknownId, "task refers to unknown object '" + task.object + "'");
            file.tasks.push_back(std::move(task));
        }
    }
    return file;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return parse_model_file(doc);
}

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const HilbertPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(format_rational(c));
    return a;
}

Json to_json(const KahlerData& kd) {
    Json j;
    j["dimension"] = kd.n;
    if (kd.n == 1 && kd.genus && kd.curve_degH) {
        j["genus"] = *kd.genus;
        j["degH"] = *kd.curve_degH;
        return j;
    }
    j["hn"] = to_json(kd.hn);
    j["c1X_H"] = to_json(kd.c1X_H);
    Json t = Json::array();
    for (const auto& x : kd.todd) t.push_back(to_json(x));
    j["todd"] = t;
    return j;
}

Json to_json(const NumericalSheafData& s) {
    Json j;
    j["rank"] = s.rank;
    j["degH"] = to_json(s.degH);
    j["chi"] = to_json(s.chi);
    j["torsion_free"] = s.torsion_free;
    return j;
}

Json to_json(const HiggsObjectModel& m) {
    Json j;
    j["type"] = "model";
    j["id"] = m.id;
    j["ambient"] = to_json(m.ambient);
    j["sheaf"] = to_json(m.data);
    j["family_complete"] = m.family_complete;
    j["locally_free"] = m.locally_free;
    if (m.chern) {
        j["chern"] = Json{{"c1H", to_json(m.chern->c1H)},
                          {"c1c1X", to_json(m.chern->c1c1X)},
                          {"c1sq", to_json(m.chern->c1sq)},
                          {"c2", to_json(m.chern->c2int)}};
    }
    Json subs = Json::array();
    for (const auto& e : m.subobjects) {
        Json s;
        s["id"] = e.id;
        s["sheaf"] = to_json(e.data);
        s["quotient"] = to_json(e.quotient);
        if (e.quotient_torsion_part) s["quotient_torsion"] = to_json(*e.quotient_torsion_part);
        Json c = Json::array();
        for (const auto& x : e.contains) c.push_back(x);
        s["contains"] = c;
        subs.push_back(std::move(s));
    }
    j["subobjects"] = subs;
    return j;
}

} // namespace higgs_lab
