#include "ncat/flow_data.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncat/error.hpp"

namespace ncat {

using nlohmann::json;

FlowData::FlowData(std::string name, std::size_t max_level, std::vector<CritPoint> base_points,
                   std::vector<ModuliSpace> moduli,
                   std::vector<std::vector<CritPoint>> critical_points)
    : name_(std::move(name)), max_level_(max_level), moduli_(std::move(moduli)) {
    if (critical_points.size() != moduli_.size())
        throw Error(ErrorCode::invalid_arguments, "flow data: critical point lists do not match moduli");

    auto add_point = [&](CritPoint p) {
        if (p.id.empty()) throw Error(ErrorCode::schema_error, "flow data: empty id");
        if (!point_index_.emplace(p.id, points_.size()).second)
            throw Error(ErrorCode::duplicate_id, "duplicate id \"" + p.id + "\"");
        points_.push_back(std::move(p));
    };
    for (auto& p : base_points) {
        p.level = 0;
        p.home.reset();
        p.component.clear();
        add_point(std::move(p));
    }
    for (std::size_t m = 0; m < moduli_.size(); ++m) {
        ModuliSpace& space = moduli_[m];
        if (space.level == 0 || space.level > max_level_)
            throw Error(ErrorCode::schema_error,
                        "moduli[" + std::to_string(m) + "]: level " + std::to_string(space.level) +
                            " outside 1.." + std::to_string(max_level_));
        space.critical_points.clear();
        for (auto& p : critical_points[m]) {
            p.level = space.level;
            p.home = m;
            space.critical_points.push_back(p.id);
            add_point(std::move(p));
        }
    }
    for (std::size_t m = 0; m < moduli_.size(); ++m) {
        const ModuliSpace& space = moduli_[m];
        const std::string where = "moduli[" + std::to_string(m) + "]";
        for (const std::string* end : {&space.source, &space.target}) {
            const CritPoint* p = find_point(*end);
            if (!p) throw Error(ErrorCode::unknown_id, where + ": unknown id \"" + *end + "\"");
            if (p->level + 1 != space.level)
                throw Error(ErrorCode::schema_error,
                            where + ": \"" + *end + "\" is a level-" + std::to_string(p->level) +
                                " point, a level-" + std::to_string(space.level) +
                                " space needs level-" + std::to_string(space.level - 1) + " endpoints");
        }
        if (space.source == space.target)
            throw Error(ErrorCode::schema_error,
                        where + ": diagonal spaces are synthesized and must not be listed");
        if (!moduli_index_.emplace(IdPair{space.source, space.target}, m).second)
            throw Error(ErrorCode::duplicate_id,
                        where + ": duplicate space M(" + space.source + "," + space.target + ")");
        if (space.boundary) {
            for (std::size_t s = 0; s < space.boundary->size(); ++s)
                for (const auto& [src, tgt] : (*space.boundary)[s])
                    for (const std::string* id : {&src, &tgt})
                        if (!find_point(*id))
                            throw Error(ErrorCode::unknown_id, where + ".boundary[" + std::to_string(s) +
                                                                   "]: unknown id \"" + *id + "\"");
        }
    }
}

const CritPoint* FlowData::find_point(std::string_view id) const {
    auto it = point_index_.find(id);
    return it == point_index_.end() ? nullptr : &points_[it->second];
}

const CritPoint& FlowData::point(std::string_view id) const {
    const CritPoint* p = find_point(id);
    if (!p) throw Error(ErrorCode::unknown_id, "unknown id \"" + std::string(id) + "\"");
    return *p;
}

std::optional<std::size_t> FlowData::find_moduli(std::string_view source,
                                                 std::string_view target) const {
    auto it = moduli_index_.find(IdPair{std::string(source), std::string(target)});
    if (it == moduli_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<const CritPoint*> FlowData::points_at(std::size_t level) const {
    std::vector<const CritPoint*> out;
    for (const auto& p : points_)
        if (p.level == level) out.push_back(&p);
    std::sort(out.begin(), out.end(), [](const CritPoint* a, const CritPoint* b) { return a->id < b->id; });
    return out;
}

std::vector<IdPair> FlowData::history(const CritPoint& p) const {
    std::vector<IdPair> out;
    const CritPoint* cur = &p;
    while (cur->home) {
        const ModuliSpace& m = moduli_[*cur->home];
        out.emplace_back(m.source, m.target);
        cur = &point(m.source);
    }
    return out;
}

ModuliKey FlowData::key_of(std::size_t moduli_index) const {
    const ModuliSpace& m = moduli_.at(moduli_index);
    ModuliKey key{Label::atom(m.source), Label::atom(m.target), {}};
    for (const auto& [s, t] : history(point(m.source)))
        key.history.emplace_back(Label::atom(s), Label::atom(t));
    return key;
}

// ---------------------------------------------------------------- parsing

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::schema_error, path + ": " + what);
}

const json& object_at(const json& j, const std::string& path,
                      std::initializer_list<std::string_view> required,
                      std::initializer_list<std::string_view> optional = {}) {
    if (!j.is_object()) schema(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        const bool known =
            std::find(required.begin(), required.end(), key) != required.end() ||
            std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) schema(path, "unknown field \"" + key + "\"");
    }
    for (std::string_view key : required)
        if (!j.contains(key)) schema(path, "missing field \"" + std::string(key) + "\"");
    return j;
}

std::string string_at(const json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    auto s = j.get<std::string>();
    if (s.empty()) schema(path, "empty string");
    return s;
}

std::uint64_t natural_at(const json& j, const std::string& path, std::uint64_t min = 0) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v < min) schema(path, "must be >= " + std::to_string(min));
        return v;
    }
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) < min) schema(path, "must be >= " + std::to_string(min));
    return static_cast<std::uint64_t>(v);
}

const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array");
    return j;
}

}  // namespace

FlowData parse_flow_data(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::schema_error, std::string("$: invalid JSON: ") + e.what());
    }
    object_at(doc, "$", {"name", "max_level", "base_points", "moduli"});
    const std::string name = string_at(doc["name"], "$.name");
    const auto max_level = natural_at(doc["max_level"], "$.max_level", 1);

    std::vector<CritPoint> base;
    const json& bp = array_at(doc["base_points"], "$.base_points");
    for (std::size_t i = 0; i < bp.size(); ++i) {
        const std::string path = "$.base_points[" + std::to_string(i) + "]";
        object_at(bp[i], path, {"id", "index"});
        CritPoint p;
        p.id = string_at(bp[i]["id"], path + ".id");
        p.index = static_cast<std::uint32_t>(natural_at(bp[i]["index"], path + ".index"));
        base.push_back(std::move(p));
    }

    std::vector<ModuliSpace> moduli;
    std::vector<std::vector<CritPoint>> crits;
    const json& mj = array_at(doc["moduli"], "$.moduli");
    for (std::size_t m = 0; m < mj.size(); ++m) {
        const std::string path = "$.moduli[" + std::to_string(m) + "]";
        const json& o = object_at(mj[m], path,
                                  {"level", "source", "target", "dim", "components", "critical_points"},
                                  {"boundary"});
        ModuliSpace space;
        space.level = natural_at(o["level"], path + ".level", 1);
        space.source = string_at(o["source"], path + ".source");
        space.target = string_at(o["target"], path + ".target");
        space.dim = static_cast<std::uint32_t>(natural_at(o["dim"], path + ".dim"));
        const json& comps = array_at(o["components"], path + ".components");
        for (std::size_t c = 0; c < comps.size(); ++c)
            space.components.push_back(string_at(comps[c], path + ".components[" + std::to_string(c) + "]"));
        if (o.contains("boundary")) {
            const json& strata = array_at(o["boundary"], path + ".boundary");
            std::vector<std::vector<IdPair>> boundary;
            for (std::size_t s = 0; s < strata.size(); ++s) {
                const std::string spath = path + ".boundary[" + std::to_string(s) + "]";
                const json& factors = array_at(strata[s], spath);
                if (factors.empty()) schema(spath, "empty stratum");
                std::vector<IdPair> chain;
                for (std::size_t f = 0; f < factors.size(); ++f) {
                    const std::string fpath = spath + "[" + std::to_string(f) + "]";
                    object_at(factors[f], fpath, {"source", "target"});
                    chain.emplace_back(string_at(factors[f]["source"], fpath + ".source"),
                                       string_at(factors[f]["target"], fpath + ".target"));
                }
                boundary.push_back(std::move(chain));
            }
            space.boundary = std::move(boundary);
        }
        std::vector<CritPoint> points;
        const json& cps = array_at(o["critical_points"], path + ".critical_points");
        for (std::size_t c = 0; c < cps.size(); ++c) {
            const std::string cpath = path + ".critical_points[" + std::to_string(c) + "]";
            object_at(cps[c], cpath, {"id", "index", "component"});
            CritPoint p;
            p.id = string_at(cps[c]["id"], cpath + ".id");
            p.index = static_cast<std::uint32_t>(natural_at(cps[c]["index"], cpath + ".index"));
            p.component = string_at(cps[c]["component"], cpath + ".component");
            points.push_back(std::move(p));
        }
        moduli.push_back(std::move(space));
        crits.push_back(std::move(points));
    }
    return FlowData(name, max_level, std::move(base), std::move(moduli), std::move(crits));
}

nlohmann::ordered_json to_json(const FlowData& fd) {
    using oj = nlohmann::ordered_json;
    oj doc;
    doc["name"] = fd.name();
    doc["max_level"] = fd.max_level();
    oj base = oj::array();
    for (const auto& p : fd.points())
        if (p.level == 0) base.push_back(oj{{"id", p.id}, {"index", p.index}});
    doc["base_points"] = std::move(base);
    oj moduli = oj::array();
    for (const auto& m : fd.moduli()) {
        oj o;
        o["level"] = m.level;
        o["source"] = m.source;
        o["target"] = m.target;
        o["dim"] = m.dim;
        o["components"] = m.components;
        if (m.boundary) {
            oj strata = oj::array();
            for (const auto& chain : *m.boundary) {
                oj factors = oj::array();
                for (const auto& [s, t] : chain) factors.push_back(oj{{"source", s}, {"target", t}});
                strata.push_back(std::move(factors));
            }
            o["boundary"] = std::move(strata);
        }
        oj cps = oj::array();
        for (const auto& id : m.critical_points) {
            const CritPoint& p = fd.point(id);
            cps.push_back(oj{{"id", p.id}, {"index", p.index}, {"component", p.component}});
        }
        o["critical_points"] = std::move(cps);
        moduli.push_back(std::move(o));
    }
    doc["moduli"] = std::move(moduli);
    return doc;
}

// ------------------------------------------------------------- validation

bool ValidationReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const ValidationItem& i) { return i.ok; });
}

std::size_t ValidationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const ValidationItem& i) { return !i.ok; }));
}

namespace {

std::string space_name(const std::string& s, const std::string& t) { return "M(" + s + "," + t + ")"; }

}  // namespace

ValidationReport validate_flow_data(const FlowData& fd) {
    ValidationReport report;
    auto add = [&](std::string check, std::string subject, bool ok, std::string detail) {
        report.items.push_back({std::move(check), std::move(subject), ok, std::move(detail)});
    };
    auto ind = [&](const std::string& id) { return static_cast<long long>(fd.point(id).index); };

    for (const ModuliSpace& m : fd.moduli()) {
        const std::string subject = space_name(m.source, m.target);
        const long long drop = ind(m.source) - ind(m.target);

        {
            std::ostringstream d;
            d << "Ind(" << m.source << ") - Ind(" << m.target << ") - 1 = " << drop - 1
              << ", declared " << m.dim;
            add("dimension-formula", subject, drop >= 1 && drop - 1 == static_cast<long long>(m.dim), d.str());
        }

        if (m.boundary) {
            for (std::size_t s = 0; s < m.boundary->size(); ++s) {
                const auto& chain = (*m.boundary)[s];
                const std::string where = subject + " stratum " + std::to_string(s);
                std::ostringstream d;
                bool linked = chain.front().first == m.source && chain.back().second == m.target;
                for (std::size_t f = 0; f + 1 < chain.size(); ++f)
                    linked = linked && chain[f].second == chain[f + 1].first;
                bool decreasing = true;
                d << ind(chain.front().first);
                for (const auto& [src, tgt] : chain) {
                    decreasing = decreasing && ind(src) > ind(tgt);
                    d << " > " << ind(tgt);
                }
                for (const auto& [src, tgt] : chain)
                    linked = linked && fd.point(src).level + 1 == m.level && fd.point(tgt).level + 1 == m.level;
                if (!linked) d << " (chain does not run " << m.source << " -> ... -> " << m.target << ")";
                add("boundary-chain", where, linked && decreasing, d.str());

                std::ostringstream dd;
                long long sum = 0;
                bool declared = true;
                for (const auto& [src, tgt] : chain) {
                    const auto f = fd.find_moduli(src, tgt);
                    if (!f) {
                        declared = false;
                        dd << space_name(src, tgt) << " undeclared; ";
                        continue;
                    }
                    sum += fd.moduli()[*f].dim;
                }
                const long long expect = static_cast<long long>(m.dim) - static_cast<long long>(chain.size() - 1);
                dd << "factor dims sum " << sum << ", expected dim - " << chain.size() - 1 << " = " << expect;
                add("boundary-dimension", where, declared && sum == expect, dd.str());
            }
        }

        {
            std::set<std::string> comps(m.components.begin(), m.components.end());
            bool ok = !m.components.empty() && comps.size() == m.components.size();
            std::ostringstream d;
            if (m.components.empty()) d << "no components declared; ";
            if (comps.size() != m.components.size()) d << "duplicate component names; ";
            for (const auto& id : m.critical_points) {
                const CritPoint& p = fd.point(id);
                if (!comps.count(p.component)) {
                    ok = false;
                    d << p.id << " in undeclared component \"" << p.component << "\"; ";
                }
            }
            if (ok) d << m.components.size() << " components, all references resolve";
            add("component-reference", subject, ok, d.str());
        }

        for (const auto& id : m.critical_points) {
            const CritPoint& p = fd.point(id);
            std::ostringstream d;
            d << "Ind(" << p.id << ")=" << p.index << " <= dim " << m.dim;
            add("index-bound", subject + " " + p.id, p.index <= m.dim, d.str());
        }

        if (m.level >= 2) {
            const CritPoint& s = fd.point(m.source);
            const CritPoint& t = fd.point(m.target);
            const bool ok = s.home == t.home && s.component == t.component;
            std::ostringstream d;
            d << m.source << " and " << m.target
              << (ok ? " share home space and component" : " lie on different spaces or components");
            add("same-home", subject, ok, d.str());
        }
    }
    return report;
}

std::string render_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& i : report.items)
        out << (i.ok ? "PASS " : "FAIL ") << i.check << ' ' << i.subject << ": " << i.detail << '\n';
    out << (report.passed() ? "result: PASS" : "result: FAIL") << " (" << report.items.size()
        << " checks, " << report.failures() << " failed)\n";
    return out.str();
}

nlohmann::ordered_json to_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["passed"] = report.passed();
    auto items = nlohmann::ordered_json::array();
    for (const auto& i : report.items)
        items.push_back({{"check", i.check}, {"subject", i.subject}, {"ok", i.ok}, {"detail", i.detail}});
    j["checks"] = std::move(items);
    return j;
}

}  // namespace ncat
