#include "ncat/functors.hpp"

#include <functional>
#include <vector>

#include "ncat/error.hpp"

namespace ncat {

IndEnv IndEnv::from(const FlowData& fd) {
    IndEnv env;
    for (const auto& p : fd.points()) env.set(p.id, p.index);
    return env;
}

std::optional<std::uint32_t> IndEnv::find(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t ind(const Label& x, const IndEnv& env) {
    switch (x.kind()) {
        case Label::Kind::atom:
            if (auto v = env.find(x.id())) return *v;
            throw Error(ErrorCode::unknown_atom, "unknown atom \"" + x.id() + "\"");
        case Label::Kind::point: return 0;
        case Label::Kind::pairing: {
            std::uint32_t sum = 0;
            for (const Label& part : x.parts()) sum += ind(part, env);
            return sum;
        }
    }
    return 0;
}

namespace {

WCell index_profile(const XCell& a, const IndEnv& env) {
    WCell w;
    w.head = ind(a.head, env);
    for (const auto& [s, t] : a.spine) w.spine.push_back({ind(s, env), ind(t, env)});
    return w;
}

}  // namespace

WCell functor_g(const XCell& a, const IndEnv& env) {
    WCell w = index_profile(a, env);
    if (auto v = w_check(w))
        throw Error(ErrorCode::flow_data_inconsistent,
                    "G" + x_render(a) + " = " + w_render(w) + " violates W: " + v->message);
    return w;
}

VCell functor_f(const XCell& a, const IndEnv& env) {
    try {
        return v_from_w(functor_g(a, env));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::constraint_violation)
            throw Error(ErrorCode::flow_data_inconsistent, e.what());
        throw;
    }
}

Report check_functor_laws(const MorseCategory& x, const IndEnv& env, std::size_t max_level,
                          const FunctorCheckOptions& opt) {
    Report report;
    report.title = "functor laws";
    const std::size_t n = x.max_level();
    const std::size_t top = std::min(max_level, n);

    auto run = [&](CheckEntry e, std::size_t count, const std::function<bool(std::size_t)>& fails,
                   const std::function<std::string(std::size_t)>& witness) {
        const Tally t = tally(opt.exec, count, [&](std::size_t i) {
            try {
                return fails(i);
            } catch (...) {
                return true;
            }
        });
        e.checked = count;
        e.failed = t.failed;
        for (std::size_t i : t.first) e.witnesses.push_back(witness(i));
        report.entries.push_back(std::move(e));
    };

    std::size_t collapse_flags = 0;
    for (std::size_t l = 0; l <= top; ++l) {
        const std::vector<XCell> cells = x.cells(l, opt.closure);
        auto cell_witness = [&](std::size_t i) { return x_render(cells[i]); };

        run(make_entry("g-image", l), cells.size(), [&](std::size_t i) {
            functor_g(cells[i], env);
            return false;
        }, cell_witness);
        run(make_entry("f-g-agree", l), cells.size(), [&](std::size_t i) {
            return v_to_w(functor_f(cells[i], env)) != functor_g(cells[i], env);
        }, cell_witness);

        if (l >= 1) {
            run(make_entry("g-source", l), cells.size(), [&](std::size_t i) {
                return functor_g(x.source(cells[i]), env) != w_source(functor_g(cells[i], env));
            }, cell_witness);
            run(make_entry("g-target", l), cells.size(), [&](std::size_t i) {
                return functor_g(x.target(cells[i]), env) != w_target(functor_g(cells[i], env));
            }, cell_witness);
            run(make_entry("f-source", l), cells.size(), [&](std::size_t i) {
                return functor_f(x.source(cells[i]), env) != v_source(functor_f(cells[i], env));
            }, cell_witness);
            run(make_entry("f-target", l), cells.size(), [&](std::size_t i) {
                return functor_f(x.target(cells[i]), env) != v_target(functor_f(cells[i], env));
            }, cell_witness);
            // 0 <= Ind(a_l) < Ind(a_{l-1}) - Ind(b_{l-1}); degenerate cells carry index 0.
            run(make_entry("index-bound", l), cells.size(), [&](std::size_t i) {
                const XCell& a = cells[i];
                const std::uint32_t h = ind(a.head, env);
                const std::uint32_t s = ind(a.spine.front().first, env);
                const std::uint32_t t = ind(a.spine.front().second, env);
                if (a.spine.front().first == a.spine.front().second) return h != 0;
                return !(t < s && h < s - t);
            }, cell_witness);
        }
        if (l < n) {
            run(make_entry("g-identity", l), cells.size(), [&](std::size_t i) {
                return functor_g(x.identity(cells[i]), env) != w_identity(functor_g(cells[i], env));
            }, cell_witness);
            run(make_entry("f-identity", l), cells.size(), [&](std::size_t i) {
                return functor_f(x.identity(cells[i]), env) != v_identity(functor_f(cells[i], env));
            }, cell_witness);
        }
        for (std::size_t p = 0; p < l; ++p) {
            const auto pairs = x_composable_pairs(cells, p);
            auto pair_witness = [&](std::size_t i) {
                return x_render(pairs[i].first) + " o_" + std::to_string(p) + " " + x_render(pairs[i].second);
            };
            run(make_entry("g-compose", l, p), pairs.size(), [&](std::size_t i) {
                const auto& [c, a] = pairs[i];
                const WCell gc = functor_g(c, env);
                const WCell ga = functor_g(a, env);
                if (!w_composable(p, ga, gc)) return true;
                return functor_g(x.compose(p, a, c), env) != w_compose(p, ga, gc);
            }, pair_witness);
            run(make_entry("f-compose", l, p), pairs.size(), [&](std::size_t i) {
                const auto& [c, a] = pairs[i];
                return functor_f(x.compose(p, a, c), env) !=
                       v_compose(p, functor_f(a, env), functor_f(c, env));
            }, pair_witness);
            // Side condition of the diagonal collapse: normalization must not
            // change any index, otherwise G would depend on the representative.
            run(make_entry("diagonal-collapse", l, p), pairs.size(), [&](std::size_t i) {
                const auto& [c, a] = pairs[i];
                const XCell raw = x_compose_raw(p, a, c);
                return index_profile(raw, env) != index_profile(x_normalize(raw), env);
            }, pair_witness);
            collapse_flags += report.entries.back().failed;
        }
    }
    if (collapse_flags)
        report.notes.push_back("diagonal collapse changed the index of " + std::to_string(collapse_flags) +
                               " composite(s); G is not representative-independent on them");
    return report;
}

}  // namespace ncat
