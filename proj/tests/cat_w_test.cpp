#include <doctest.h>

#include "ncat/cat_w.hpp"
#include "ncat/error.hpp"
#include "oracles.hpp"

using namespace ncat;

namespace {

WCell w(std::uint32_t head, std::vector<WPair> spine = {}) { return WCell{head, std::move(spine)}; }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::invalid_arguments;
}

}  // namespace

TEST_CASE("w_make accepts and rejects") {
    CHECK_NOTHROW(w_make(0, {{2, 1}}));
    CHECK_NOTHROW(w_make(0, {{2, 2}}));
    CHECK(code_of([] { w_make(1, {{2, 1}}); }) == ErrorCode::constraint_violation);
    CHECK(code_of([] { w_make(1, {{2, 2}}); }) == ErrorCode::constraint_violation);
    CHECK(code_of([] { w_make(0, {{1, 2}}); }) == ErrorCode::constraint_violation);

    auto v = w_check(w(1, {{2, 1}}));
    REQUIRE(v);
    CHECK(v->constraint == WConstraint::bound);
    CHECK(v->level == 0);
    v = w_check(w(0, {{1, 0}, {2, 2}}));
    REQUIRE(v);
    CHECK(v->constraint == WConstraint::degenerate);
}

TEST_CASE("w_check agrees with the flat definition") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 20000; ++n) {
        const std::size_t l = rng() % 4;
        WCell c;
        c.head = std::uint32_t(rng() % 4);
        for (std::size_t k = 0; k < l; ++k) c.spine.push_back({std::uint32_t(rng() % 4), std::uint32_t(rng() % 4)});
        CHECK(!w_check(c).has_value() == oracle::valid(c));
    }
}

TEST_CASE("source and target") {
    CHECK(w_source(w(1, {{2, 0}})) == w(2));
    CHECK(w_target(w(0, {{1, 0}, {2, 0}})) == w(0, {{2, 0}}));
    CHECK(w_source(w(0, {{2, 2}})) == w(2));
    CHECK(w_target(w(0, {{2, 2}})) == w(2));
    CHECK(code_of([] { w_source(w(3)); }) == ErrorCode::no_source);
    CHECK(code_of([] { w_target(w(3)); }) == ErrorCode::no_source);
}

TEST_CASE("identity") {
    CHECK(w_identity(w(2)) == w(0, {{2, 2}}));
    CHECK(w_identity(w(0, {{2, 1}})) == w(0, {{0, 0}, {2, 1}}));
    const WCell twice = w_identity(w_identity(w(2)));
    CHECK(twice == w(0, {{0, 0}, {2, 2}}));
    CHECK_NOTHROW(w_make(twice.head, twice.spine));
    CHECK(w_source(w_source(twice)) == w(2));
    CHECK(w_source(w_target(twice)) == w(2));

    CHECK(code_of([] { WCategory(2).identity(w(0, {{0, 0}, {2, 1}})); }) == ErrorCode::invalid_arguments);
}

TEST_CASE("composition examples") {
    CHECK(w_composable(0, w(0, {{2, 1}}), w(0, {{1, 0}})));
    CHECK_FALSE(w_composable(0, w(0, {{2, 1}}), w(0, {{2, 1}})));
    CHECK(w_compose(0, w(0, {{2, 1}}), w(0, {{1, 0}})) == w(0, {{2, 0}}));
    CHECK(w_compose(1, w(0, {{0, 0}, {2, 1}}), w(0, {{0, 0}, {2, 1}})) == w(0, {{0, 0}, {2, 1}}));
    CHECK(w_compose(0, w(0, {{0, 0}, {2, 1}}), w(0, {{0, 0}, {1, 0}})) == w(0, {{0, 0}, {2, 0}}));
    CHECK(code_of([] { w_compose(0, w(0, {{2, 1}}), w(0, {{2, 1}})); }) == ErrorCode::not_composable);
    CHECK(code_of([] { w_compose(1, w(0, {{2, 1}}), w(0, {{1, 0}})); }) == ErrorCode::invalid_arguments);
    CHECK(code_of([] { w_compose(0, w(0, {{2, 1}}), w(1)); }) == ErrorCode::invalid_arguments);
}

TEST_CASE("composition matches the componentwise formula") {
    for (std::size_t l = 1; l <= 3; ++l) {
        const auto cells = w_enumerate(l, 3);
        for (std::size_t p = 0; p < l; ++p)
            for (const auto& q : cells)
                for (const auto& r : cells) {
                    if (!w_composable(p, q, r)) continue;
                    const WCell got = w_compose(p, q, r);
                    REQUIRE(got == oracle::compose(p, q, r));
                    REQUIRE(oracle::valid(got));
                }
    }
}

TEST_CASE("enumeration") {
    CHECK(w_enumerate(0, 2) == std::vector<WCell>{w(0), w(1), w(2)});
    const auto one = w_enumerate(1, 2);
    CHECK(std::find(one.begin(), one.end(), w(0, {{2, 1}})) != one.end());
    CHECK(std::find(one.begin(), one.end(), w(0, {{2, 2}})) != one.end());
    CHECK(std::find(one.begin(), one.end(), w(1, {{2, 0}})) != one.end());
    CHECK(std::find(one.begin(), one.end(), w(1, {{2, 1}})) == one.end());
    for (const auto& c : w_enumerate(2, 2)) CHECK_NOTHROW(w_make(c.head, c.spine));

    for (std::size_t l = 0; l <= 3; ++l)
        for (std::uint32_t b = 0; b <= 3; ++b) CHECK(w_enumerate(l, b) == oracle::all_w(l, b));
}

TEST_CASE("enumeration is closed under source and target") {
    for (std::size_t l = 1; l <= 3; ++l) {
        const auto lower = w_enumerate(l - 1, 3);
        for (const auto& c : w_enumerate(l, 3)) {
            CHECK(std::binary_search(lower.begin(), lower.end(), w_source(c)));
            CHECK(std::binary_search(lower.begin(), lower.end(), w_target(c)));
        }
    }
}

TEST_CASE("random cells and partners") {
    Rng rng(5);
    for (int n = 0; n < 5000; ++n) {
        const std::size_t l = 1 + rng() % 4;
        const WCell q = w_random(l, 6, rng);
        REQUIRE(oracle::valid(q));
        const std::size_t p = rng() % l;
        const WCell r = w_random_partner(p, q, 6, rng);
        REQUIRE(oracle::valid(r));
        REQUIRE(w_composable(p, q, r));
        REQUIRE(oracle::valid(w_compose(p, q, r)));
    }
}

TEST_CASE("rendering") {
    CHECK(w_render(w(2)) == "2");
    CHECK(w_render(w(0, {{2, 1}})) == "(0, [2 ; 1])");
    CHECK(w_render(w(0, {{0, 0}, {2, 1}})) == "(0, [0 2 ; 0 1])");
}
