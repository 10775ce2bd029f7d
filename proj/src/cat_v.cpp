#include "ncat/cat_v.hpp"

#include <sstream>

namespace ncat {

VCell v_from_w(const WCell& q) { return VCell(w_make(q.head, q.spine)); }

WCell v_to_w(const VCell& v) { return v.dims(); }

VCell v_source(const VCell& v) { return v_from_w(w_source(v.dims())); }

VCell v_target(const VCell& v) { return v_from_w(w_target(v.dims())); }

VCell v_identity(const VCell& v) { return v_from_w(w_identity(v.dims())); }

VCell v_compose(std::size_t p, const VCell& q, const VCell& r) {
    return v_from_w(w_compose(p, q.dims(), r.dims()));
}

std::string v_render(const VCell& v) {
    const WCell& d = v.dims();
    if (d.level() == 0) return "R^" + std::to_string(d.head);
    std::ostringstream out;
    out << "(R^" << d.head;
    for (const auto& pr : d.spine) out << ", Hom(R^" << pr.i << ",R^" << pr.j << ')';
    out << ')';
    return out.str();
}

}  // namespace ncat
