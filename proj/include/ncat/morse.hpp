#pragma once

// The almost strict Morse n-category X built from flow data.
//
// A level-l cell (a_l, M(a_{l-1}, b_{l-1}, f_{l-1[a_{l-2}..a_0; b_{l-2}..b_0]}))
// is stored as a head label a_l and a spine of (source, target) label pairs
// from level l-1 down to 0. Composition c o_p a pairs heads and the spine
// entries above p, glues at p and keeps the common history below p. All
// results are normalized: labels via normalize(), and every label living
// over a diagonal space M(u, u) is replaced by point(u), that space's only
// critical point.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncat/flow_data.hpp"
#include "ncat/label.hpp"

namespace ncat {

using LabelPair = std::pair<Label, Label>;  // (source, target)

struct XCell {
    Label head;
    std::vector<LabelPair> spine;  // spine[0] is level l-1

    std::size_t level() const { return spine.size(); }
    const LabelPair& at(std::size_t k) const { return spine[spine.size() - 1 - k]; }

    friend bool operator==(const XCell&, const XCell&) = default;
    friend std::strong_ordering operator<=>(const XCell& a, const XCell& b);
};

XCell x_normalize(const XCell& a);
std::string x_render(const XCell& a);

XCell x_source(const XCell& a);
XCell x_target(const XCell& a);
XCell x_identity(const XCell& a);
bool x_composable(std::size_t p, const XCell& a, const XCell& c);
// c o_p a before normalization.
XCell x_compose_raw(std::size_t p, const XCell& a, const XCell& c);
// c o_p a; throws Error(not_composable).
XCell x_compose(std::size_t p, const XCell& a, const XCell& c);

// The declared level-l cells of X: one per critical point of every level-l
// moduli space, plus, for l >= 2, the diagonal cell (a, M(a, a)) over every
// level-(l-1) cell a whose own space is zero dimensional. With `closure`, the
// set is closed under composition (composites over synthesized product
// spaces). Sorted, duplicate free; empty when l exceeds the data depth.
std::vector<XCell> x_cells(const FlowData& fd, std::size_t level, bool closure = false);

// All (c, a) with c o_p a defined, a and c drawn from `cells` in order.
std::vector<std::pair<XCell, XCell>> x_composable_pairs(const std::vector<XCell>& cells, std::size_t p);
std::vector<std::pair<XCell, XCell>> x_composable_pairs(const FlowData& fd, std::size_t level, std::size_t p);

class MorseCategory {
public:
    using Cell = XCell;

    explicit MorseCategory(FlowData fd) : fd_(std::move(fd)) {}

    const FlowData& flow_data() const { return fd_; }

    std::size_t max_level() const { return fd_.max_level(); }
    std::size_t level(const XCell& a) const { return a.level(); }
    XCell source(const XCell& a) const { return x_source(a); }
    XCell target(const XCell& a) const { return x_target(a); }
    XCell identity(const XCell& a) const;
    XCell compose(std::size_t p, const XCell& a, const XCell& c) const { return x_compose(p, a, c); }
    XCell normalize(const XCell& a) const { return x_normalize(a); }
    std::string render(const XCell& a) const { return x_render(a); }

    std::vector<XCell> cells(std::size_t level, bool closure = false) const {
        return x_cells(fd_, level, closure);
    }

private:
    FlowData fd_;
};

}  // namespace ncat
