#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ncat/functors.hpp"
#include "ncat/torus.hpp"

using namespace ncat;

namespace {

std::string torus_f_listing() {
    const FlowData fd = torus_flow_data();
    const IndEnv env = IndEnv::from(fd);
    std::ostringstream out;
    for (std::size_t l = 0; l <= 2; ++l)
        for (const auto& c : x_cells(fd, l)) out << x_render(c) << " -> " << v_render(functor_f(c, env)) << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("torus pipeline reproduces the oracle") {
    const FlowData fd = parse_flow_data(torus_json());
    CHECK(validate_flow_data(fd).passed());
    const IndEnv env = IndEnv::from(fd);
    const TorusOracle o = torus_expected();
    const std::map<std::string, WCell> table(o.g_table.begin(), o.g_table.end());
    for (std::size_t l = 0; l <= 2; ++l) {
        const auto cells = x_cells(fd, l);
        CHECK(cells.size() == o.x_sizes[l]);
        for (const auto& c : cells) {
            const std::string cls = torus_class(c);
            INFO(x_render(c));
            REQUIRE(table.count(cls) == 1);
            CHECK(functor_g(c, env) == table.at(cls));
            CHECK(v_to_w(functor_f(c, env)) == functor_g(c, env));
        }
    }
    CHECK(x_composable_pairs(fd, 1, 0).size() == o.pairs_x1_p0);
    CHECK(x_composable_pairs(fd, 2, 1).size() == o.pairs_x2_p1);
}

TEST_CASE("G images by level") {
    const FlowData fd = torus_flow_data();
    const IndEnv env = IndEnv::from(fd);
    std::map<std::string, WCell> base;
    for (const auto& c : x_cells(fd, 0)) base[x_render(c)] = functor_g(c, env);
    CHECK(base.at("w") == WCell{2, {}});
    CHECK(base.at("x") == WCell{1, {}});
    CHECK(base.at("y") == WCell{1, {}});
    CHECK(base.at("z") == WCell{0, {}});

    std::set<std::string> level1, level2;
    for (const auto& c : x_cells(fd, 1)) level1.insert(w_render(functor_g(c, env)));
    for (const auto& c : x_cells(fd, 2)) level2.insert(w_render(functor_g(c, env)));
    CHECK(level1 == std::set<std::string>{"(0, [2 ; 1])", "(0, [1 ; 0])", "(0, [2 ; 0])", "(1, [2 ; 0])"});
    CHECK(level2 == std::set<std::string>{"(0, [0 2 ; 0 1])", "(0, [0 1 ; 0 0])", "(0, [1 2 ; 0 0])"});
}

TEST_CASE("F renderings match the golden listing") {
    CHECK(torus_f_listing() == read_file(std::string(NCAT_GOLDEN_DIR) + "/torus_f.txt"));
}
