#include <doctest.h>

#include "ncat/kernels.hpp"
#include "ncat/random.hpp"

using namespace ncat;

TEST_CASE("tally serial and parallel agree") {
    for (std::size_t n : {0u, 1u, 7u, 1000u, 50000u}) {
        auto fails = [](std::size_t i) { return i % 13 == 5 || i % 101 == 0; };
        const Tally s = serial::tally(n, fails);
        const Tally p = parallel::tally(n, fails);
        CHECK(s == p);
        CHECK(s.first.size() <= kMaxWitnesses);
    }
}

TEST_CASE("filter_pairs serial and parallel agree") {
    auto keep = [](std::size_t i, std::size_t j) { return (i * 7 + j * 3) % 5 == 0; };
    for (std::size_t n : {0u, 3u, 64u, 300u}) CHECK(serial::filter_pairs(n, n + 1, keep) == parallel::filter_pairs(n, n + 1, keep));
}

TEST_CASE("seeded selection") {
    const auto a = choose_indices(100, 10, 4);
    CHECK(a == choose_indices(100, 10, 4));
    CHECK(a.size() == 10);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    CHECK(choose_indices(5, 10, 1).size() == 5);
}
