#pragma once

// The two-torus T^2 with f_0(x, y) = cos(2 pi x) + cos(2 pi y): critical
// points w (index 2), x and y (index 1), z (index 0). The four 0-dimensional
// spaces M(w,x), M(w,y), M(x,z), M(y,z) have components d and s; the
// 1-dimensional M(w,z) consists of four intervals, each running from a
// maximum (wy_i.yz_j, index 1) down to a minimum (wx_i'.xz_j', index 0).

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncat/cat_w.hpp"
#include "ncat/flow_data.hpp"
#include "ncat/morse.hpp"

namespace ncat {

nlohmann::ordered_json torus_document();
// The fixture as the flow-data file `ncat torus --emit` writes.
std::string torus_json();
FlowData torus_flow_data();

// Reference values for the torus, entered by hand rather than computed.
struct TorusOracle {
    std::array<std::size_t, 3> x_sizes;  // |X(0)|, |X(1)|, |X(2)|
    // Cell class -> expected G image.
    std::vector<std::pair<std::string, WCell>> g_table;
    std::size_t pairs_x1_p0;         // |X(1) x_0 X(1)|
    std::size_t pairs_x2_p1;         // |X(2) x_1 X(2)|
    std::size_t listed_pairs_x2_p0;  // pairs written out for X(2) x_0 X(2)
};

TorusOracle torus_expected();

// Class of a torus cell in the naming of the G table: "w", "m(w,x)",
// "(m(w,y),m(y,z))", "down(w,x)", "suit", ... ; "?" if unrecognized.
std::string torus_class(const XCell& a);

// Whether (c, a) is one of the written-out pairs of X(2) x_0 X(2): the
// diagonal cells over m(q,z)_i and m(w,q)_i with the same component i.
bool torus_listed_x2_p0(const XCell& c, const XCell& a);

}  // namespace ncat
