#include "ncat/morse.hpp"

#include <algorithm>
#include <set>

#include "ncat/error.hpp"

namespace ncat {

std::strong_ordering operator<=>(const XCell& a, const XCell& b) {
    if (auto c = a.spine.size() <=> b.spine.size(); c != 0) return c;
    if (auto c = a.head <=> b.head; c != 0) return c;
    for (std::size_t m = 0; m < a.spine.size(); ++m) {
        if (auto c = a.spine[m].first <=> b.spine[m].first; c != 0) return c;
        if (auto c = a.spine[m].second <=> b.spine[m].second; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

XCell x_normalize(const XCell& a) {
    XCell out;
    out.head = normalize(a.head);
    out.spine.reserve(a.spine.size());
    for (const auto& [s, t] : a.spine) out.spine.emplace_back(normalize(s), normalize(t));
    // Bottom-up: whatever sits over a diagonal space is that space's point.
    const std::size_t l = out.level();
    for (std::size_t k = 1; k <= l; ++k) {
        const LabelPair& below = out.spine[l - k];
        if (below.first != below.second) continue;
        Label pt = Label::point(below.first);
        if (k == l) {
            out.head = std::move(pt);
        } else {
            out.spine[l - 1 - k] = {pt, pt};
        }
    }
    return out;
}

std::string x_render(const XCell& a) {
    if (a.level() == 0) return a.head.render();
    std::string out = "(" + a.head.render() + ", M(";
    for (std::size_t m = 0; m < a.spine.size(); ++m) {
        if (m) out += " | ";
        out += a.spine[m].first.render() + "," + a.spine[m].second.render();
    }
    return out + "))";
}

XCell x_source(const XCell& a) {
    if (a.level() == 0) throw Error(ErrorCode::no_source, "x_source: level-0 cell has no boundary");
    return x_normalize(XCell{a.spine.front().first, {a.spine.begin() + 1, a.spine.end()}});
}

XCell x_target(const XCell& a) {
    if (a.level() == 0) throw Error(ErrorCode::no_source, "x_target: level-0 cell has no boundary");
    return x_normalize(XCell{a.spine.front().second, {a.spine.begin() + 1, a.spine.end()}});
}

XCell x_identity(const XCell& a) {
    XCell out;
    out.head = Label::point(a.head);
    out.spine.reserve(a.spine.size() + 1);
    out.spine.emplace_back(a.head, a.head);
    out.spine.insert(out.spine.end(), a.spine.begin(), a.spine.end());
    return x_normalize(out);
}

bool x_composable(std::size_t p, const XCell& a, const XCell& c) {
    const std::size_t l = a.level();
    if (c.level() != l || p >= l) return false;
    XCell s = c;
    XCell t = a;
    for (std::size_t i = p; i < l; ++i) {
        s = x_source(s);
        t = x_target(t);
    }
    return s == t;
}

XCell x_compose_raw(std::size_t p, const XCell& a, const XCell& c) {
    const std::size_t l = a.level();
    if (c.level() != l || p >= l)
        throw Error(ErrorCode::invalid_arguments, "x_compose: need equal levels and p < l");
    XCell out;
    out.head = Label::pairing({a.head, c.head});
    out.spine.reserve(l);
    for (std::size_t k = l; k-- > 0;) {
        const std::size_t m = l - 1 - k;
        if (k > p) {
            out.spine.emplace_back(Label::pairing({a.spine[m].first, c.spine[m].first}),
                                   Label::pairing({a.spine[m].second, c.spine[m].second}));
        } else if (k == p) {
            out.spine.emplace_back(a.spine[m].first, c.spine[m].second);
        } else {
            out.spine.push_back(a.spine[m]);
        }
    }
    return out;
}

XCell x_compose(std::size_t p, const XCell& a, const XCell& c) {
    if (a.level() != c.level() || p >= a.level())
        throw Error(ErrorCode::invalid_arguments, "x_compose: need equal levels and p < l");
    if (!x_composable(p, a, c))
        throw Error(ErrorCode::not_composable,
                    "x_compose: " + x_render(c) + " o_" + std::to_string(p) + " " + x_render(a));
    return x_normalize(x_compose_raw(p, a, c));
}

namespace {

struct Declared {
    XCell cell;
    bool zero_dim = false;  // the space the head lives on is 0-dimensional
};

std::vector<Declared> declared_cells(const FlowData& fd, std::size_t level) {
    std::vector<Declared> out;
    if (level > fd.max_level()) return out;
    for (const CritPoint* p : fd.points_at(level)) {
        XCell c;
        c.head = Label::atom(p->id);
        for (const auto& [s, t] : fd.history(*p)) c.spine.emplace_back(Label::atom(s), Label::atom(t));
        const bool zero = p->home && fd.moduli()[*p->home].dim == 0;
        out.push_back({x_normalize(c), zero});
    }
    if (level >= 2) {
        for (const Declared& below : declared_cells(fd, level - 1))
            if (below.zero_dim) out.push_back({x_identity(below.cell), true});
    }
    return out;
}

}  // namespace

std::vector<XCell> x_cells(const FlowData& fd, std::size_t level, bool closure) {
    std::set<XCell> cells;
    for (auto& d : declared_cells(fd, level)) cells.insert(std::move(d.cell));
    if (closure && level >= 1) {
        // Paths strictly decrease in index, so this reaches a fixed point.
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<XCell> current(cells.begin(), cells.end());
            for (std::size_t p = 0; p < level; ++p)
                for (const auto& [c, a] : x_composable_pairs(current, p))
                    grew = cells.insert(x_compose(p, a, c)).second || grew;
        }
    }
    return {cells.begin(), cells.end()};
}

std::vector<std::pair<XCell, XCell>> x_composable_pairs(const std::vector<XCell>& cells, std::size_t p) {
    std::vector<std::pair<XCell, XCell>> out;
    if (cells.empty()) return out;
    const std::size_t l = cells.front().level();
    if (p >= l) throw Error(ErrorCode::invalid_arguments, "x_composable_pairs: need p < l");
    std::vector<XCell> src(cells.size()), tgt(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        src[i] = cells[i];
        tgt[i] = cells[i];
        for (std::size_t k = p; k < l; ++k) {
            src[i] = x_source(src[i]);
            tgt[i] = x_target(tgt[i]);
        }
    }
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t a = 0; a < cells.size(); ++a)
            if (src[c] == tgt[a]) out.emplace_back(cells[c], cells[a]);
    return out;
}

std::vector<std::pair<XCell, XCell>> x_composable_pairs(const FlowData& fd, std::size_t level,
                                                        std::size_t p) {
    return x_composable_pairs(x_cells(fd, level), p);
}

XCell MorseCategory::identity(const XCell& a) const {
    if (a.level() >= max_level())
        throw Error(ErrorCode::invalid_arguments, "identity: level " + std::to_string(a.level()) +
                                                      " has no identity in an n=" +
                                                      std::to_string(max_level()) + " category");
    return x_identity(a);
}

}  // namespace ncat
