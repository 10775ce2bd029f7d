#include <doctest.h>

#include "ncat/axioms.hpp"
#include "ncat/cat_v.hpp"
#include "ncat/cat_w.hpp"
#include "ncat/morse.hpp"
#include "ncat/torus.hpp"

using namespace ncat;

namespace {

CellsByLevel<WCell> w_cells(std::size_t n, std::uint32_t bound) {
    CellsByLevel<WCell> cells;
    for (std::size_t l = 0; l <= n; ++l) cells.push_back(w_enumerate(l, bound));
    return cells;
}

std::string failing(const Report& r) {
    std::string out;
    for (const auto& e : r.entries)
        if (!e.passed()) out += e.check + " l=" + std::to_string(e.level) + " " +
                                (e.witnesses.empty() ? "" : e.witnesses.front()) + "\n";
    return out;
}

bool has_failure(const Report& r, std::string_view check) {
    for (const auto& e : r.entries)
        if (e.check == check && e.failed > 0) return true;
    return false;
}

// W with a unit that is off by one in the head.
struct OffByOneW : WCategory {
    using WCategory::WCategory;
    WCell compose(std::size_t p, const WCell& a, const WCell& c) const {
        WCell out = w_compose(p, a, c);
        ++out.head;
        return out;
    }
};

// W whose composite forgets to glue: keeps the target of the first operand.
struct UngluedW : WCategory {
    using WCategory::WCategory;
    WCell compose(std::size_t p, const WCell& a, const WCell& c) const {
        WCell out = w_compose(p, a, c);
        out.spine[out.level() - 1 - p].j = a.at(p).j;
        return out;
    }
};

// W with a source map that ignores the level below.
struct BadGlobeW : WCategory {
    using WCategory::WCategory;
    WCell source(const WCell& a) const {
        WCell s = w_source(a);
        if (s.level() > 0) s.spine.front().j = s.spine.front().i;
        return s;
    }
};

}  // namespace

TEST_CASE("W passes on the exhaustive enumeration") {
    const auto cells = w_cells(3, 3);
    const WCategory w(3);
    const Report g = check_globularity(w, cells);
    CHECK(g.passed());
    const Report r = check_axioms(w, cells);
    INFO(failing(r));
    CHECK(r.passed());
    for (const char* name : {"id-st", "comp-st", "assoc", "unit", "binary-interchange", "nullary-interchange"}) {
        bool seen = false;
        for (const auto& e : r.entries) seen = seen || (e.check == name && e.checked > 0);
        CHECK_MESSAGE(seen, name);
    }
}

TEST_CASE("V passes by delegation") {
    const auto cells = w_cells(3, 2);
    CellsByLevel<VCell> v(cells.size());
    for (std::size_t l = 0; l < cells.size(); ++l)
        for (const auto& c : cells[l]) v[l].push_back(v_from_w(c));
    const VCategory cat(3);
    CHECK(check_globularity(cat, v).passed());
    CHECK(check_axioms(cat, v).passed());
}

TEST_CASE("X passes modulo normalization on the torus") {
    const MorseCategory x(torus_flow_data());
    CellsByLevel<XCell> cells;
    for (std::size_t l = 0; l <= 2; ++l) cells.push_back(x.cells(l, true));
    CHECK(check_globularity(x, cells).passed());
    const Report r = check_axioms(x, cells);
    INFO(failing(r));
    CHECK(r.passed());
}

TEST_CASE("broken instances are caught") {
    const auto cells = w_cells(2, 2);
    CHECK(has_failure(check_axioms(OffByOneW(2), cells), "unit"));
    const Report unglued = check_axioms(UngluedW(2), cells);
    CHECK(has_failure(unglued, "comp-st"));
    CHECK_FALSE(check_globularity(BadGlobeW(2), cells).passed());
}

TEST_CASE("serial and parallel reports agree") {
    const auto cells = w_cells(3, 2);
    AxiomOptions s, p;
    s.exec = Execution::serial;
    p.exec = Execution::parallel;
    CHECK(to_json(check_axioms(OffByOneW(3), cells, s)) == to_json(check_axioms(OffByOneW(3), cells, p)));
    CHECK(to_json(check_axioms(WCategory(3), cells, s)) == to_json(check_axioms(WCategory(3), cells, p)));
}

TEST_CASE("capped checks are seeded") {
    const auto cells = w_cells(3, 3);
    AxiomOptions opt;
    opt.max_checks = 25;
    opt.seed = 9;
    const Report a = check_axioms(WCategory(3), cells, opt);
    const Report b = check_axioms(WCategory(3), cells, opt);
    CHECK(to_json(a) == to_json(b));
    for (const auto& e : a.entries) CHECK(e.checked <= 25);
}

TEST_CASE("composable helper") {
    const WCategory w(2);
    CHECK(composable(w, 0, WCell{0, {{2, 1}}}, WCell{0, {{1, 0}}}));
    CHECK_FALSE(composable(w, 0, WCell{0, {{2, 1}}}, WCell{0, {{2, 1}}}));
    CHECK_THROWS(composable(w, 1, WCell{0, {{2, 1}}}, WCell{0, {{1, 0}}}));
}
