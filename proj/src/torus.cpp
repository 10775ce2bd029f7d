#include "ncat/torus.hpp"

namespace ncat {

namespace {

using oj = nlohmann::ordered_json;

struct Interval {
    const char* name;
    const char* max;  // (m(w,y)_i, m(y,z)_j)
    const char* min;  // (m(w,x)_i, m(x,z)_j)
};

// The four components of M(w,z), named after the suits that label them.
constexpr Interval kIntervals[] = {
    {"square", "wy_s.yz_d", "wx_d.xz_s"},
    {"triangle", "wy_d.yz_d", "wx_d.xz_d"},
    {"spade", "wy_d.yz_s", "wx_s.xz_d"},
    {"club", "wy_s.yz_s", "wx_s.xz_s"},
};

oj space(int level, const std::string& source, const std::string& target, int dim, oj components) {
    oj m;
    m["level"] = level;
    m["source"] = source;
    m["target"] = target;
    m["dim"] = dim;
    m["components"] = std::move(components);
    return m;
}

oj point(const std::string& id, int index, const std::string& component) {
    return oj{{"id", id}, {"index", index}, {"component", component}};
}

bool is_down(const XCell& a) { return a.level() == 2 && a.head.is_point() && a.head.inner().is_atom(); }

}  // namespace

oj torus_document() {
    oj doc;
    doc["name"] = "two-torus";
    doc["max_level"] = 2;
    doc["base_points"] = oj::array({oj{{"id", "w"}, {"index", 2}}, oj{{"id", "x"}, {"index", 1}},
                                    oj{{"id", "y"}, {"index", 1}}, oj{{"id", "z"}, {"index", 0}}});
    oj moduli = oj::array();
    for (const char* st : {"wx", "wy", "xz", "yz"}) {
        const std::string s(1, st[0]), t(1, st[1]);
        oj m = space(1, s, t, 0, oj::array({"d", "s"}));
        m["critical_points"] = oj::array({point(std::string(st) + "_d", 0, "d"),
                                          point(std::string(st) + "_s", 0, "s")});
        moduli.push_back(std::move(m));
    }
    {
        oj comps = oj::array();
        for (const auto& iv : kIntervals) comps.push_back(iv.name);
        oj m = space(1, "w", "z", 1, std::move(comps));
        m["boundary"] = oj::array({
            oj::array({oj{{"source", "w"}, {"target", "x"}}, oj{{"source", "x"}, {"target", "z"}}}),
            oj::array({oj{{"source", "w"}, {"target", "y"}}, oj{{"source", "y"}, {"target", "z"}}}),
        });
        oj cps = oj::array();
        for (const auto& iv : kIntervals) {
            cps.push_back(point(iv.max, 1, iv.name));
            cps.push_back(point(iv.min, 0, iv.name));
        }
        m["critical_points"] = std::move(cps);
        moduli.push_back(std::move(m));
    }
    for (const auto& iv : kIntervals) {
        oj m = space(2, iv.max, iv.min, 0, oj::array({iv.name}));
        m["critical_points"] = oj::array({point(std::string("m_") + iv.name, 0, iv.name)});
        moduli.push_back(std::move(m));
    }
    doc["moduli"] = std::move(moduli);
    return doc;
}

std::string torus_json() { return torus_document().dump(2) + "\n"; }

FlowData torus_flow_data() { return parse_flow_data(torus_json()); }

TorusOracle torus_expected() {
    TorusOracle o;
    o.x_sizes = {4, 16, 12};
    o.g_table = {
        {"w", WCell{2, {}}},
        {"x", WCell{1, {}}},
        {"y", WCell{1, {}}},
        {"z", WCell{0, {}}},
        {"m(w,x)", WCell{0, {{2, 1}}}},
        {"m(w,y)", WCell{0, {{2, 1}}}},
        {"m(x,z)", WCell{0, {{1, 0}}}},
        {"m(y,z)", WCell{0, {{1, 0}}}},
        {"(m(w,x),m(x,z))", WCell{0, {{2, 0}}}},
        {"(m(w,y),m(y,z))", WCell{1, {{2, 0}}}},
        {"down(w,x)", WCell{0, {{0, 0}, {2, 1}}}},
        {"down(w,y)", WCell{0, {{0, 0}, {2, 1}}}},
        {"down(x,z)", WCell{0, {{0, 0}, {1, 0}}}},
        {"down(y,z)", WCell{0, {{0, 0}, {1, 0}}}},
        {"suit", WCell{0, {{1, 0}, {2, 0}}}},
    };
    o.pairs_x1_p0 = 8;
    o.pairs_x2_p1 = 8;
    o.listed_pairs_x2_p0 = 4;
    return o;
}

std::string torus_class(const XCell& a) {
    auto level1 = [](const std::string& id) -> std::string {
        if (id.size() == 4 && id[2] == '_') return std::string("m(") + id[0] + "," + id[1] + ")";
        if (id.rfind("wx_", 0) == 0 && id.find(".xz_") != std::string::npos) return "(m(w,x),m(x,z))";
        if (id.rfind("wy_", 0) == 0 && id.find(".yz_") != std::string::npos) return "(m(w,y),m(y,z))";
        return "?";
    };
    switch (a.level()) {
        case 0: return a.head.is_atom() ? a.head.id() : "?";
        case 1: return a.head.is_atom() ? level1(a.head.id()) : "?";
        case 2:
            if (is_down(a)) {
                const std::string c = level1(a.head.inner().id());
                return c.rfind("m(", 0) == 0 ? "down" + c.substr(1) : "?";
            }
            if (a.head.is_atom() && a.head.id().rfind("m_", 0) == 0) return "suit";
            return "?";
        default: return "?";
    }
}

bool torus_listed_x2_p0(const XCell& c, const XCell& a) {
    if (!is_down(c) || !is_down(a)) return false;
    const std::string& cid = c.head.inner().id();  // q z _ i
    const std::string& aid = a.head.inner().id();  // w q _ i
    if (cid.size() != 4 || aid.size() != 4) return false;
    return aid[0] == 'w' && cid[1] == 'z' && aid[1] == cid[0] && aid[3] == cid[3];
}

}  // namespace ncat
