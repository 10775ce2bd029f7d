#pragma once

// The category W: cells are tuples of nonnegative integers
//
//     (i_l, [i_{l-1} ... i_0 ; j_{l-1} ... j_0])
//
// with 0 <= j_k <= i_k and i_{k+1} < i_k - j_k (i_l for the top level).
// When i_k = j_k the entry above must be 0; this admits the identity cells
// 1(i_0) = (0, [i_0 ; i_0]) the literal inequalities would exclude.
// Composition adds componentwise above the gluing level.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncat/random.hpp"

namespace ncat {

struct WPair {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    friend auto operator<=>(const WPair&, const WPair&) = default;
};

// Level l = spine.size(); spine[0] is level l-1, spine.back() is level 0.
// A level-0 cell is a bare integer stored in head.
struct WCell {
    std::uint32_t head = 0;
    std::vector<WPair> spine;

    std::size_t level() const { return spine.size(); }
    // Pair at level k (0 <= k < level()).
    const WPair& at(std::size_t k) const { return spine[spine.size() - 1 - k]; }

    friend auto operator<=>(const WCell&, const WCell&) = default;
};

enum class WConstraint {
    order,       // j_k <= i_k
    bound,       // next < i_k - j_k
    degenerate,  // i_k = j_k forces next = 0
};

struct WViolation {
    std::size_t level = 0;  // the k whose pair (i_k, j_k) is violated
    WConstraint constraint = WConstraint::order;
    std::string message;
};

std::optional<WViolation> w_check(const WCell& cell);

// Validated construction; throws Error(constraint_violation).
WCell w_make(std::uint32_t head, std::vector<WPair> spine);

WCell w_source(const WCell& q);
WCell w_target(const WCell& q);
WCell w_identity(const WCell& q);

// r o_p q, defined when the spines agree below p and i_p(r) = j_p(q).
bool w_composable(std::size_t p, const WCell& q, const WCell& r);
WCell w_compose(std::size_t p, const WCell& q, const WCell& r);

// Every valid level-l cell with all entries <= bound, ascending.
std::vector<WCell> w_enumerate(std::size_t level, std::uint32_t bound);

// Random valid cell with entries <= bound.
WCell w_random(std::size_t level, std::uint32_t bound, Rng& rng);
// Random r with r o_p q defined; entries above the gluing level <= bound.
WCell w_random_partner(std::size_t p, const WCell& q, std::uint32_t bound, Rng& rng);

std::string w_render(const WCell& cell);

class WCategory {
public:
    using Cell = WCell;

    explicit WCategory(std::size_t max_level) : max_level_(max_level) {}

    std::size_t max_level() const { return max_level_; }
    std::size_t level(const WCell& a) const { return a.level(); }
    WCell source(const WCell& a) const { return w_source(a); }
    WCell target(const WCell& a) const { return w_target(a); }
    WCell identity(const WCell& a) const;
    WCell compose(std::size_t p, const WCell& a, const WCell& c) const { return w_compose(p, a, c); }
    WCell normalize(const WCell& a) const { return a; }
    std::string render(const WCell& a) const { return w_render(a); }

private:
    std::size_t max_level_;
};

}  // namespace ncat
