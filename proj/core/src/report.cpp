#include "polyz/report.hpp"

#include <chrono>
#include <ctime>

namespace polyz {

namespace {

std::string utc_now_rfc3339() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <class T>
Json opt_json(const std::optional<T>& v) {
    if (v) return Json(*v);
    return Json(nullptr);
}

template <class T>
std::optional<T> opt_from(const Json& j, const char* key) {
    if (!j.contains(key)) throw error(std::string("report: missing field ") + key);
    const Json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

} // namespace

Json report_to_json(const DefReport& r, const ReportOptions& opts) {
    Json j;
    j["group"] = r.group_id;
    if (opts.timestamp) j["generated_at"] = utc_now_rfc3339();
    Json inv;
    inv["beta1_q"] = opt_json(r.beta_q);
    inv["beta1_f2"] = opt_json(r.beta_f2);
    inv["beta1_f3"] = opt_json(r.beta_f3);
    inv["beta1_f5"] = opt_json(r.beta_f5);
    inv["orientable"] = opt_json(r.orientable);
    inv["hirsch"] = opt_json(r.hirsch);
    j["invariants"] = std::move(inv);
    Json def;
    def["lo"] = opt_json(r.lo);
    def["hi"] = opt_json(r.hi);
    def["exact"] = r.exact;
    Json just = Json::array();
    for (const DefBound& b : r.bounds) {
        Json jb;
        jb["rule"] = b.rule;
        jb["direction"] = b.dir == BoundDir::Lower ? "lower" : "upper";
        jb["value"] = b.value;
        jb["citation"] = b.citation;
        jb["inputs"] = b.inputs;
        just.push_back(std::move(jb));
    }
    def["justifications"] = std::move(just);
    j["deficiency"] = std::move(def);
    return j;
}

DefReport report_from_json(const Json& j) {
    try {
        DefReport r;
        r.group_id = j.at("group").get<std::string>();
        const Json& inv = j.at("invariants");
        r.beta_q = opt_from<std::size_t>(inv, "beta1_q");
        r.beta_f2 = opt_from<std::size_t>(inv, "beta1_f2");
        r.beta_f3 = opt_from<std::size_t>(inv, "beta1_f3");
        r.beta_f5 = opt_from<std::size_t>(inv, "beta1_f5");
        r.orientable = opt_from<bool>(inv, "orientable");
        r.hirsch = opt_from<std::size_t>(inv, "hirsch");
        const Json& def = j.at("deficiency");
        r.lo = opt_from<long>(def, "lo");
        r.hi = opt_from<long>(def, "hi");
        r.exact = def.at("exact").get<bool>();
        for (const Json& jb : def.at("justifications")) {
            DefBound b;
            b.rule = jb.at("rule").get<std::string>();
            std::string dir = jb.at("direction").get<std::string>();
            if (dir == "lower")
                b.dir = BoundDir::Lower;
            else if (dir == "upper")
                b.dir = BoundDir::Upper;
            else
                throw error("report: bad direction " + dir);
            b.value = jb.at("value").get<long>();
            b.citation = jb.at("citation").get<std::string>();
            if (b.citation.empty()) throw error("report: empty citation");
            b.inputs = jb.at("inputs").get<std::string>();
            r.bounds.push_back(std::move(b));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("report: ") + e.what());
    }
}

std::string report_to_string(const DefReport& r, const ReportOptions& opts) {
    return report_to_json(r, opts).dump(opts.indent) + "\n";
}

} // namespace polyz
