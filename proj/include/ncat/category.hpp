#pragma once

#include <concepts>
#include <cstddef>
#include <string>

#include "ncat/error.hpp"

namespace ncat {

// The contract every concrete (almost) strict n-category satisfies.
//   - source/target are defined on cells of level 1..n, identity on 0..n-1;
//   - compose(p, a, c) is c o_p a and requires s^{l-p}(c) = t^{l-p}(a);
//   - normalize picks the canonical-isomorphism representative and is
//     idempotent; strict instances return the cell unchanged.
// Two cells are equal in the category iff their normal forms are equal.
template <class C>
concept CategoryInstance =
    std::equality_comparable<typename C::Cell> &&
    requires(const C& cat, const typename C::Cell& a, std::size_t p) {
        { cat.max_level() } -> std::convertible_to<std::size_t>;
        { cat.level(a) } -> std::convertible_to<std::size_t>;
        { cat.source(a) } -> std::same_as<typename C::Cell>;
        { cat.target(a) } -> std::same_as<typename C::Cell>;
        { cat.identity(a) } -> std::same_as<typename C::Cell>;
        { cat.compose(p, a, a) } -> std::same_as<typename C::Cell>;
        { cat.normalize(a) } -> std::same_as<typename C::Cell>;
        { cat.render(a) } -> std::convertible_to<std::string>;
    };

template <CategoryInstance C>
typename C::Cell iterated_source(const C& cat, typename C::Cell a, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) a = cat.source(a);
    return a;
}

template <CategoryInstance C>
typename C::Cell iterated_target(const C& cat, typename C::Cell a, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) a = cat.target(a);
    return a;
}

// 1^k(a)
template <CategoryInstance C>
typename C::Cell identity_tower(const C& cat, typename C::Cell a, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) a = cat.identity(a);
    return a;
}

template <CategoryInstance C>
bool equivalent(const C& cat, const typename C::Cell& a, const typename C::Cell& b) {
    return cat.normalize(a) == cat.normalize(b);
}

// (c, a) in Y(l) x_p Y(l), i.e. c o_p a is defined.
template <CategoryInstance C>
bool composable(const C& cat, std::size_t p, const typename C::Cell& a,
                const typename C::Cell& c) {
    const std::size_t l = cat.level(a);
    if (cat.level(c) != l)
        throw Error(ErrorCode::invalid_arguments, "composable: cells of different levels");
    if (p >= l || l > cat.max_level())
        throw Error(ErrorCode::invalid_arguments,
                    "composable: need 0 <= p < l <= n, got p=" + std::to_string(p) +
                        " l=" + std::to_string(l));
    return equivalent(cat, iterated_source(cat, c, l - p), iterated_target(cat, a, l - p));
}

}  // namespace ncat
