// polyz: deficiency bounds and commensurator calculus for virtually
// poly-Z groups. Subcommands: analyze | bounds | comm | catalog.

#include <polyz/commensurator.hpp>
#include <polyz/defengine.hpp>
#include <polyz/report.hpp>
#include <polyz/textio.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using polyz::Json;

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitScreen = 4;

// Thrown for malformed input files (JSON syntax, missing/mistyped fields).
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(path + ": " + e.what());
    }
}

polyz::IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw schema_error("matrix: expected array of rows");
    std::size_t cols = 0;
    for (const Json& row : j) {
        if (!row.is_array()) throw schema_error("matrix: row is not an array");
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw schema_error("matrix: ragged rows");
    }
    if (cols == 0) throw schema_error("matrix: empty rows");
    polyz::IntMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Json& e = j[i][k];
            if (!e.is_number_integer()) throw schema_error("matrix: non-integer entry");
            m.at(i, k) = polyz::Int(static_cast<long>(e.get<long long>()));
        }
    return m;
}

polyz::GroupSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw schema_error("spec: missing string field 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "semidirect") {
            if (!j.contains("matrix")) throw schema_error("spec: semidirect needs 'matrix'");
            return polyz::GroupSpec::semidirect(matrix_from_json(j.at("matrix")));
        }
        if (kind == "theta3") {
            if (!j.contains("matrix") || !j.contains("m"))
                throw schema_error("spec: theta3 needs 'matrix' and 'm'");
            if (!j.at("m").is_number_integer()) throw schema_error("spec: 'm' must be integer");
            return polyz::GroupSpec::theta3(matrix_from_json(j.at("matrix")),
                                            polyz::Int(static_cast<long>(j.at("m").get<long long>())));
        }
        if (kind == "tower") {
            if (!j.contains("matrices") || !j.at("matrices").is_array())
                throw schema_error("spec: tower needs array 'matrices'");
            std::vector<polyz::IntMatrix> tower;
            for (const Json& m : j.at("matrices")) tower.push_back(matrix_from_json(m));
            return polyz::GroupSpec::from_tower(std::move(tower));
        }
        if (kind == "catalog") {
            if (!j.contains("name") || !j.at("name").is_string())
                throw schema_error("spec: catalog needs string 'name'");
            return polyz::GroupSpec::catalog(j.at("name").get<std::string>());
        }
        if (kind == "presentation") {
            if (!j.contains("presentation") || !j.at("presentation").is_object())
                throw schema_error("spec: presentation kind needs object 'presentation'");
            const Json& jp = j.at("presentation");
            if (!jp.contains("generators") || !jp.at("generators").is_array() ||
                !jp.contains("relators") || !jp.at("relators").is_array())
                throw schema_error("spec: presentation needs 'generators' and 'relators'");
            polyz::Presentation p;
            for (const Json& g : jp.at("generators")) {
                if (!g.is_string()) throw schema_error("spec: generator names must be strings");
                p.generators.push_back(g.get<std::string>());
            }
            for (const Json& r : jp.at("relators")) {
                if (!r.is_string()) throw schema_error("spec: relators must be strings");
                p.relators.push_back(polyz::parse_word(r.get<std::string>(), p.generators));
            }
            auto spec = polyz::GroupSpec::raw(std::move(p));
            if (j.contains("hirsch")) spec.hirsch_override = j.at("hirsch").get<std::size_t>();
            if (j.contains("orientable"))
                spec.orientable_override = j.at("orientable").get<bool>();
            return spec;
        }
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("spec: ") + e.what());
    }
    throw schema_error("spec: unknown kind '" + kind + "'");
}

std::string rat_str(const polyz::Rat& x) {
    return x.get_str();
}

polyz::Rat rat_from_str(const std::string& s) {
    try {
        polyz::Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw schema_error("triple: bad rational '" + s + "'");
    }
}

Json rat_matrix_to_json(const polyz::RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

polyz::RatMatrix rat_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw schema_error("triple: B must be array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw schema_error("triple: B has empty rows");
    polyz::RatMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw schema_error("triple: ragged B");
        for (std::size_t k = 0; k < cols; ++k) {
            const Json& e = j[i][k];
            if (!e.is_string()) throw schema_error("triple: B entries must be 'num/den' strings");
            m.at(i, k) = rat_from_str(e.get<std::string>());
        }
    }
    return m;
}

polyz::CommTriple triple_from_json(const Json& j) {
    try {
        polyz::CommTriple t;
        t.b = rat_matrix_from_json(j.at("B"));
        for (const Json& e : j.at("w")) {
            if (e.is_number_integer())
                t.w.push_back(polyz::Int(static_cast<long>(e.get<long long>())));
            else if (e.is_string()) {
                try {
                    t.w.push_back(polyz::Int(e.get<std::string>()));
                } catch (const std::invalid_argument&) {
                    throw schema_error("triple: bad integer '" + e.get<std::string>() + "'");
                }
            } else
                throw schema_error("triple: w entries must be integers");
        }
        long long k = j.at("k").get<long long>();
        if (k < 1) throw schema_error("triple: k must be >= 1");
        t.k = static_cast<unsigned long>(k);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("triple: ") + e.what());
    }
}

Json triple_to_json(const polyz::CommTriple& t) {
    Json j;
    j["B"] = rat_matrix_to_json(t.b);
    Json w = Json::array();
    for (const polyz::Int& x : t.w) w.push_back(x.get_str());
    j["w"] = std::move(w);
    j["k"] = t.k;
    return j;
}

struct GlobalFlags {
    bool no_catalog = false;
    bool no_timestamp = false;
    int indent = 2;
    std::string field;
};

void emit(const Json& j, int indent) {
    std::cout << j.dump(indent) << "\n";
}

int cmd_analyze(const std::string& path, const GlobalFlags& g) {
    Json j = load_json(path);
    polyz::GroupSpec spec = spec_from_json(j);
    polyz::AnalyzeOptions opts;
    opts.use_catalog = !g.no_catalog;
    opts.field = g.field;
    polyz::DefReport r = polyz::analyze(spec, opts);
    polyz::ReportOptions ro;
    ro.timestamp = !g.no_timestamp;
    ro.indent = g.indent;
    emit(polyz::report_to_json(r, ro), g.indent);
    return kExitOk;
}

int cmd_bounds(unsigned long n, unsigned long beta, bool class2, const GlobalFlags& g) {
    if (beta < 1 || beta > n) throw polyz::error("bounds: require 1 <= beta <= n");
    auto [lo, hi] = polyz::bounds_window(n, beta, class2);
    Json j;
    j["n"] = n;
    j["beta"] = beta;
    j["class2"] = class2;
    j["lo"] = lo.get_str();
    j["hi"] = hi.get_str();
    Json table = Json::array();
    polyz::Int used = 0;
    for (unsigned long k = 1;; ++k) {
        polyz::Int r = polyz::witt_rank(beta, k);
        if (used + r > n && k > 1) break;
        used += r;
        Json row;
        row["k"] = k;
        row["rank"] = r.get_str();
        table.push_back(std::move(row));
        if (used >= n) break;
    }
    j["witt_ranks"] = std::move(table);
    emit(j, g.indent);
    return kExitOk;
}

polyz::AmbientAction screened_action(const std::string& path) {
    Json j = load_json(path);
    polyz::GroupSpec spec = spec_from_json(j);
    if (spec.kind != polyz::GroupKind::SemidirectZnZ || spec.a.rows() != 3)
        throw polyz::error("comm: spec must be a 3x3 semidirect action");
    if (polyz::has_root_of_unity_eigenvalue(spec.a)) {
        std::cerr << "error: the action has a root-of-unity eigenvalue; the triple "
                     "calculus only covers actions with no root-of-unity eigenvalue\n";
        std::exit(kExitScreen);
    }
    return polyz::AmbientAction::validate(spec.a);
}

int cmd_comm_centralizer(const std::string& path, unsigned long k, const GlobalFlags& g) {
    polyz::AmbientAction act = screened_action(path);
    auto basis = polyz::centralizer_basis(act, k);
    Json j;
    j["k"] = k;
    j["dimension"] = basis.size();
    Json jb = Json::array();
    for (const polyz::RatMatrix& m : basis) jb.push_back(rat_matrix_to_json(m));
    j["basis"] = std::move(jb);
    emit(j, g.indent);
    return kExitOk;
}

int cmd_comm_validate(const std::string& path, const std::string& tpath, const GlobalFlags& g) {
    polyz::AmbientAction act = screened_action(path);
    polyz::CommTriple t = triple_from_json(load_json(tpath));
    polyz::validate_triple(act, t);
    Json j;
    j["valid"] = true;
    j["triple"] = triple_to_json(t);
    emit(j, g.indent);
    return kExitOk;
}

int cmd_comm_compose(const std::string& path, const std::string& t1path,
                     const std::string& t2path, const GlobalFlags& g) {
    polyz::AmbientAction act = screened_action(path);
    polyz::CommTriple t1 = triple_from_json(load_json(t1path));
    polyz::CommTriple t2 = triple_from_json(load_json(t2path));
    polyz::CommTriple out = polyz::triple_compose(act, t1, t2);
    Json j;
    j["result"] = triple_to_json(out);
    emit(j, g.indent);
    return kExitOk;
}

int cmd_comm_equiv(const std::string& path, const std::string& t1path,
                   const std::string& t2path, const GlobalFlags& g) {
    polyz::AmbientAction act = screened_action(path);
    polyz::CommTriple t1 = triple_from_json(load_json(t1path));
    polyz::CommTriple t2 = triple_from_json(load_json(t2path));
    Json j;
    j["equivalent"] = polyz::triple_equiv(act, t1, t2);
    emit(j, g.indent);
    return kExitOk;
}

int cmd_catalog(const GlobalFlags& g) {
    Json entries = Json::array();
    for (const polyz::CatalogEntry& e : polyz::catalog_entries()) {
        Json je;
        je["name"] = e.name;
        je["lo"] = e.lo;
        je["hi"] = e.hi;
        je["citation"] = e.citation;
        je["orientable"] = e.orientable;
        je["hirsch"] = e.hirsch;
        je["matrix_based"] = e.matrix_based;
        je["presentation"] = polyz::render_presentation(e.pres);
        entries.push_back(std::move(je));
    }
    Json j;
    j["count"] = entries.size();
    j["entries"] = std::move(entries);
    emit(j, g.indent);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deficiency bounds and commensurator calculus for virtually poly-Z groups"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_flag("--no-catalog", g.no_catalog, "disable curated exact values");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the generated_at field");
    app.add_option("--json-indent", g.indent, "JSON indent width")->check(CLI::Range(0, 8));
    app.add_option("--field", g.field, "restrict homological upper bounds to one field")
        ->check(CLI::IsMember({"q", "f2", "f3", "f5"}));

    std::string spec_path, triple1, triple2;
    unsigned long n = 0, beta = 0, comm_k = 1;
    bool class2 = false;

    CLI::App* an = app.add_subcommand("analyze", "analyze a group-spec file");
    an->add_option("file", spec_path, "group-spec JSON file")->required();

    CLI::App* bd = app.add_subcommand("bounds", "deficiency window for Hirsch length n");
    bd->add_option("n", n, "Hirsch length")->required();
    bd->add_option("beta", beta, "first Betti number")->required();
    bd->add_flag("--class2", class2, "use the nilpotency-class-2 lower bound");

    CLI::App* cm = app.add_subcommand("comm", "commensurator triple calculus");
    cm->require_subcommand(1);
    CLI::App* cz = cm->add_subcommand("centralizer", "basis of the centralizer of A^k");
    cz->add_option("file", spec_path, "group-spec JSON file")->required();
    cz->add_option("--k", comm_k, "power of the action");
    CLI::App* cv = cm->add_subcommand("validate-triple", "validate a triple file");
    cv->add_option("file", spec_path, "group-spec JSON file")->required();
    cv->add_option("triple", triple1, "triple JSON file")->required();
    CLI::App* cc = cm->add_subcommand("compose", "compose two triples");
    cc->add_option("file", spec_path, "group-spec JSON file")->required();
    cc->add_option("triple1", triple1, "first triple JSON file")->required();
    cc->add_option("triple2", triple2, "second triple JSON file")->required();
    CLI::App* ce = cm->add_subcommand("equiv", "test two triples for equivalence");
    ce->add_option("file", spec_path, "group-spec JSON file")->required();
    ce->add_option("triple1", triple1, "first triple JSON file")->required();
    ce->add_option("triple2", triple2, "second triple JSON file")->required();

    CLI::App* ct = app.add_subcommand("catalog", "list curated catalog entries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(spec_path, g);
        if (bd->parsed()) return cmd_bounds(n, beta, class2, g);
        if (cm->parsed()) {
            if (cz->parsed()) return cmd_comm_centralizer(spec_path, comm_k, g);
            if (cv->parsed()) return cmd_comm_validate(spec_path, triple1, g);
            if (cc->parsed()) return cmd_comm_compose(spec_path, triple1, triple2, g);
            if (ce->parsed()) return cmd_comm_equiv(spec_path, triple1, triple2, g);
        }
        if (ct->parsed()) return cmd_catalog(g);
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const polyz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
