#include "ncat/cat_w.hpp"

#include <algorithm>
#include <sstream>

#include "ncat/error.hpp"

namespace ncat {

namespace {

// Largest value allowed directly above the pair (i, j), or nullopt when only
// 0 is allowed (degenerate pair).
std::optional<std::uint32_t> room_above(const WPair& pr) {
    if (pr.i == pr.j) return std::nullopt;
    return pr.i - pr.j - 1;
}

std::uint32_t pick_above(const WPair& below, std::uint32_t bound, Rng& rng) {
    const auto room = room_above(below);
    if (!room) return 0;
    return static_cast<std::uint32_t>(draw(rng, 0, std::min(*room, bound)));
}

// Grows a bottom-up list of pairs to `levels` pairs, then picks a head.
WCell grow(std::vector<WPair> bottom_up, std::size_t levels, std::uint32_t bound, Rng& rng) {
    while (bottom_up.size() < levels) {
        WPair next;
        next.i = bottom_up.empty() ? static_cast<std::uint32_t>(draw(rng, 0, bound))
                                   : pick_above(bottom_up.back(), bound, rng);
        next.j = static_cast<std::uint32_t>(draw(rng, 0, next.i));
        bottom_up.push_back(next);
    }
    WCell out;
    out.head = bottom_up.empty() ? static_cast<std::uint32_t>(draw(rng, 0, bound))
                                 : pick_above(bottom_up.back(), bound, rng);
    out.spine.assign(bottom_up.rbegin(), bottom_up.rend());
    return out;
}

void require_level(const WCell& q, const char* op) {
    if (q.level() == 0)
        throw Error(ErrorCode::no_source, std::string(op) + ": level-0 cell has no boundary");
}

}  // namespace

std::optional<WViolation> w_check(const WCell& cell) {
    const std::size_t l = cell.level();
    for (std::size_t k = 0; k < l; ++k) {
        const WPair& pr = cell.at(k);
        const std::uint32_t next = k + 1 < l ? cell.at(k + 1).i : cell.head;
        const std::string next_name = k + 1 < l ? "i_" + std::to_string(k + 1) : "head i_" + std::to_string(l);
        std::ostringstream msg;
        if (pr.j > pr.i) {
            msg << "level " << k << ": j_" << k << "=" << pr.j << " exceeds i_" << k << "=" << pr.i;
            return WViolation{k, WConstraint::order, msg.str()};
        }
        if (pr.i == pr.j) {
            if (next != 0) {
                msg << "level " << k << ": degenerate pair i_" << k << "=j_" << k << "=" << pr.i
                    << " requires " << next_name << "=0, got " << next;
                return WViolation{k, WConstraint::degenerate, msg.str()};
            }
        } else if (next >= pr.i - pr.j) {
            msg << "level " << k << ": " << next_name << "=" << next << " must be < i_" << k
                << " - j_" << k << " = " << (pr.i - pr.j);
            return WViolation{k, WConstraint::bound, msg.str()};
        }
    }
    return std::nullopt;
}

WCell w_make(std::uint32_t head, std::vector<WPair> spine) {
    WCell cell{head, std::move(spine)};
    if (auto v = w_check(cell)) throw Error(ErrorCode::constraint_violation, v->message);
    return cell;
}

WCell w_source(const WCell& q) {
    require_level(q, "w_source");
    return WCell{q.spine.front().i, {q.spine.begin() + 1, q.spine.end()}};
}

WCell w_target(const WCell& q) {
    require_level(q, "w_target");
    return WCell{q.spine.front().j, {q.spine.begin() + 1, q.spine.end()}};
}

WCell w_identity(const WCell& q) {
    WCell out;
    out.head = 0;
    out.spine.reserve(q.spine.size() + 1);
    out.spine.push_back({q.head, q.head});
    out.spine.insert(out.spine.end(), q.spine.begin(), q.spine.end());
    return out;
}

bool w_composable(std::size_t p, const WCell& q, const WCell& r) {
    const std::size_t l = q.level();
    if (r.level() != l || p >= l) return false;
    for (std::size_t k = 0; k < p; ++k)
        if (q.at(k) != r.at(k)) return false;
    return r.at(p).i == q.at(p).j;
}

WCell w_compose(std::size_t p, const WCell& q, const WCell& r) {
    const std::size_t l = q.level();
    if (r.level() != l || p >= l)
        throw Error(ErrorCode::invalid_arguments, "w_compose: need equal levels and p < l");
    if (!w_composable(p, q, r))
        throw Error(ErrorCode::not_composable,
                    "w_compose: " + w_render(r) + " o_" + std::to_string(p) + " " + w_render(q));
    WCell out = q;
    out.head = q.head + r.head;
    for (std::size_t k = p + 1; k < l; ++k) {
        WPair& dst = out.spine[l - 1 - k];
        dst.i += r.at(k).i;
        dst.j += r.at(k).j;
    }
    out.spine[l - 1 - p].j = r.at(p).j;
    return out;
}

std::vector<WCell> w_enumerate(std::size_t level, std::uint32_t bound) {
    std::vector<WCell> out;
    std::vector<WPair> bottom_up;
    auto heads = [&](const std::optional<std::uint32_t>& room) {
        const std::uint32_t hi = room ? std::min(*room, bound) : 0;
        for (std::uint32_t h = 0; h <= hi; ++h) {
            WCell c;
            c.head = h;
            c.spine.assign(bottom_up.rbegin(), bottom_up.rend());
            out.push_back(std::move(c));
        }
    };
    auto rec = [&](auto&& self) -> void {
        if (bottom_up.size() == level) {
            heads(bottom_up.empty() ? std::optional<std::uint32_t>(bound) : room_above(bottom_up.back()));
            return;
        }
        const std::uint32_t hi = bottom_up.empty()
                                     ? bound
                                     : std::min(room_above(bottom_up.back()).value_or(0), bound);
        for (std::uint32_t i = 0; i <= hi; ++i) {
            for (std::uint32_t j = 0; j <= i; ++j) {
                bottom_up.push_back({i, j});
                self(self);
                bottom_up.pop_back();
            }
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

WCell w_random(std::size_t level, std::uint32_t bound, Rng& rng) {
    return grow({}, level, bound, rng);
}

WCell w_random_partner(std::size_t p, const WCell& q, std::uint32_t bound, Rng& rng) {
    const std::size_t l = q.level();
    if (p >= l) throw Error(ErrorCode::invalid_arguments, "w_random_partner: need p < l");
    std::vector<WPair> bottom_up;
    for (std::size_t k = 0; k < p; ++k) bottom_up.push_back(q.at(k));
    WPair glue;
    glue.i = q.at(p).j;
    glue.j = static_cast<std::uint32_t>(draw(rng, 0, glue.i));
    bottom_up.push_back(glue);
    return grow(std::move(bottom_up), l, bound, rng);
}

std::string w_render(const WCell& cell) {
    if (cell.level() == 0) return std::to_string(cell.head);
    std::ostringstream out;
    out << '(' << cell.head << ", [";
    for (std::size_t m = 0; m < cell.spine.size(); ++m) out << (m ? " " : "") << cell.spine[m].i;
    out << " ;";
    for (const auto& pr : cell.spine) out << ' ' << pr.j;
    out << "])";
    return out.str();
}

WCell WCategory::identity(const WCell& a) const {
    if (a.level() >= max_level_)
        throw Error(ErrorCode::invalid_arguments, "identity: level " + std::to_string(a.level()) +
                                                      " has no identity in an n=" +
                                                      std::to_string(max_level_) + " category");
    return w_identity(a);
}

}  // namespace ncat
