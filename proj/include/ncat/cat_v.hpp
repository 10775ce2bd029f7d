#pragma once

// The category V of tuples (R^{i_l}, Hom(R^{i_{l-1}}, R^{j_{l-1}}), ...,
// Hom(R^{i_0}, R^{j_0})). Only dimensions are represented: the canonical
// isomorphisms R^{a+b} ~ R^a x R^b and R^0 x R^a ~ R^a act trivially on them,
// so every operation delegates to W and equality is equality of dimensions.

#include <cstddef>
#include <string>

#include "ncat/cat_w.hpp"

namespace ncat {

class VCell {
public:
    VCell() = default;

    const WCell& dims() const { return dims_; }
    std::size_t level() const { return dims_.level(); }

    friend bool operator==(const VCell&, const VCell&) = default;

private:
    explicit VCell(WCell dims) : dims_(std::move(dims)) {}
    friend VCell v_from_w(const WCell& q);

    WCell dims_;
};

// Validates through w_make; throws Error(constraint_violation).
VCell v_from_w(const WCell& q);
WCell v_to_w(const VCell& v);

VCell v_source(const VCell& v);
VCell v_target(const VCell& v);
VCell v_identity(const VCell& v);
VCell v_compose(std::size_t p, const VCell& q, const VCell& r);

// "R^2" at level 0, "(R^0, Hom(R^2,R^1))" above.
std::string v_render(const VCell& v);

class VCategory {
public:
    using Cell = VCell;

    explicit VCategory(std::size_t max_level) : w_(max_level) {}

    std::size_t max_level() const { return w_.max_level(); }
    std::size_t level(const VCell& a) const { return a.level(); }
    VCell source(const VCell& a) const { return v_source(a); }
    VCell target(const VCell& a) const { return v_target(a); }
    VCell identity(const VCell& a) const { return v_from_w(w_.identity(a.dims())); }
    VCell compose(std::size_t p, const VCell& a, const VCell& c) const { return v_compose(p, a, c); }
    VCell normalize(const VCell& a) const { return a; }
    std::string render(const VCell& a) const { return v_render(a); }

private:
    WCategory w_;
};

}  // namespace ncat
