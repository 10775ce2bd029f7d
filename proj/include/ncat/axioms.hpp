#pragma once

// Verification engine for the n-globular set identities and the strict
// n-category axioms (sources/targets of composites and identities,
// associativity, units, binary and nullary interchange), evaluated modulo the
// instance's normalizer over every admissible tuple drawn from a finite
// sample of cells.

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ncat/category.hpp"
#include "ncat/kernels.hpp"
#include "ncat/random.hpp"
#include "ncat/report.hpp"

namespace ncat {

// sample[l] holds the level-l cells under test.
template <class Cell>
using CellsByLevel = std::vector<std::vector<Cell>>;

struct AxiomOptions {
    Execution exec = Execution::parallel;
    std::uint64_t seed = 0;
    // Upper bound on tuples checked per entry; 0 checks every admissible tuple.
    std::size_t max_checks = 0;
};

namespace detail {

template <CategoryInstance C>
struct Boundaries {
    // src[i][k - 1] = normalize(s^k(cell i)), likewise tgt.
    std::vector<std::vector<typename C::Cell>> src, tgt;
};

template <CategoryInstance C>
Boundaries<C> boundaries(const C& cat, const std::vector<typename C::Cell>& cells,
                         std::size_t level) {
    Boundaries<C> b;
    b.src.resize(cells.size());
    b.tgt.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto s = cells[i];
        auto t = cells[i];
        for (std::size_t k = 1; k <= level; ++k) {
            s = cat.normalize(cat.source(s));
            t = cat.normalize(cat.target(t));
            b.src[i].push_back(s);
            b.tgt[i].push_back(t);
        }
    }
    return b;
}

inline std::uint64_t entry_seed(std::uint64_t seed, std::size_t axiom, std::size_t l,
                                std::size_t p, std::size_t q) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t v : {std::uint64_t(axiom), std::uint64_t(l), std::uint64_t(p),
                            std::uint64_t(q)}) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// Runs `fails` over the tuple list (or a seeded subset of it) and fills in
// the entry; `witness` renders a failing tuple.
template <class Tuple, class Fails, class Witness>
void run_entry(CheckEntry& entry, const std::vector<Tuple>& tuples, const AxiomOptions& opt,
               std::uint64_t seed, Fails&& fails, Witness&& witness) {
    std::vector<std::size_t> chosen;
    const bool subset = opt.max_checks != 0 && tuples.size() > opt.max_checks;
    if (subset) chosen = choose_indices(tuples.size(), opt.max_checks, seed);
    const std::size_t n = subset ? chosen.size() : tuples.size();
    auto at = [&](std::size_t i) -> const Tuple& { return tuples[subset ? chosen[i] : i]; };
    const Tally t = tally(opt.exec, n, [&](std::size_t i) {
        try {
            return fails(at(i));
        } catch (...) {
            return true;
        }
    });
    entry.checked = n;
    entry.failed = t.failed;
    for (std::size_t i : t.first) entry.witnesses.push_back(witness(at(i)));
}

}  // namespace detail

template <CategoryInstance C>
Report check_globularity(const C& cat, const CellsByLevel<typename C::Cell>& cells,
                         Execution exec = Execution::parallel) {
    Report report;
    report.title = "globularity";
    for (std::size_t l = 2; l < cells.size() && l <= cat.max_level(); ++l) {
        const auto& level_cells = cells[l];
        CheckEntry ss = make_entry("globular-ss", l);
        CheckEntry ts = make_entry("globular-ts", l);
        AxiomOptions opt;
        opt.exec = exec;
        auto render = [&](std::size_t i) { return cat.render(level_cells[i]); };
        std::vector<std::size_t> all(level_cells.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        detail::run_entry(ss, all, opt, 0, [&](std::size_t i) {
            const auto& x = level_cells[i];
            return !equivalent(cat, cat.source(cat.source(x)), cat.source(cat.target(x)));
        }, render);
        detail::run_entry(ts, all, opt, 0, [&](std::size_t i) {
            const auto& x = level_cells[i];
            return !equivalent(cat, cat.target(cat.source(x)), cat.target(cat.target(x)));
        }, render);
        report.entries.push_back(std::move(ss));
        report.entries.push_back(std::move(ts));
    }
    return report;
}

template <CategoryInstance C>
Report check_axioms(const C& cat, const CellsByLevel<typename C::Cell>& sample,
                    const AxiomOptions& opt = {}) {
    using Cell = typename C::Cell;
    Report report;
    report.title = "axioms";
    const std::size_t n = cat.max_level();
    const std::size_t top = std::min(n, sample.empty() ? 0 : sample.size() - 1);

    auto eq = [&](const Cell& a, const Cell& b) { return equivalent(cat, a, b); };
    auto show = [&](std::initializer_list<const Cell*> cells) {
        std::string out;
        for (const Cell* c : cells) {
            if (!out.empty()) out += " ; ";
            out += cat.render(*c);
        }
        return out;
    };

    enum : std::size_t { kCompSt, kIdSt, kAssoc, kUnit, kBinary, kNullary };

    for (std::size_t l = 0; l <= top; ++l) {
        const auto& cells = sample[l];

        // (b) s(1_A) = A = t(1_A)
        if (l < n) {
            CheckEntry e = make_entry("id-st", l);
            std::vector<std::size_t> all(cells.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            detail::run_entry(e, all, opt, detail::entry_seed(opt.seed, kIdSt, l, 0, 0),
                [&](std::size_t i) {
                    const Cell one = cat.identity(cells[i]);
                    return !(eq(cat.source(one), cells[i]) && eq(cat.target(one), cells[i]));
                },
                [&](std::size_t i) { return show({&cells[i]}); });
            report.entries.push_back(std::move(e));
        }
        if (l == 0) continue;

        const auto bnd = detail::boundaries(cat, cells, l);
        // pairs[p] lists (c, a) with c o_p a defined.
        std::vector<std::vector<IndexPair>> pairs(l);
        for (std::size_t p = 0; p < l; ++p) {
            const std::size_t k = l - p - 1;
            pairs[p] = filter_pairs(opt.exec, cells.size(), cells.size(),
                [&](std::size_t c, std::size_t a) { return bnd.src[c][k] == bnd.tgt[a][k]; });
        }
        auto is_pair = [&](std::size_t p, std::size_t c, std::size_t a) {
            return bnd.src[c][l - p - 1] == bnd.tgt[a][l - p - 1];
        };

        for (std::size_t p = 0; p < l; ++p) {
            const auto& pp = pairs[p];
            auto pair_witness = [&](const IndexPair& ca) {
                return show({&cells[ca.first], &cells[ca.second]});
            };

            // (a) sources and targets of composites
            {
                CheckEntry e = make_entry("comp-st", l, p);
                detail::run_entry(e, pp, opt, detail::entry_seed(opt.seed, kCompSt, l, p, 0),
                    [&](const IndexPair& ca) {
                        const Cell& c = cells[ca.first];
                        const Cell& a = cells[ca.second];
                        const Cell ca_comp = cat.compose(p, a, c);
                        if (p + 1 == l)
                            return !(eq(cat.source(ca_comp), cat.source(a)) &&
                                     eq(cat.target(ca_comp), cat.target(c)));
                        return !(eq(cat.source(ca_comp),
                                    cat.compose(p, cat.source(a), cat.source(c))) &&
                                 eq(cat.target(ca_comp),
                                    cat.compose(p, cat.target(a), cat.target(c))));
                    },
                    pair_witness);
                report.entries.push_back(std::move(e));
            }

            // (c) associativity: (E o C) o A = E o (C o A)
            {
                std::vector<std::vector<std::size_t>> after(cells.size());
                for (const auto& [c, a] : pp) after[c].push_back(a);
                std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
                for (const auto& [e_, c] : pp)
                    for (std::size_t a : after[c]) triples.emplace_back(e_, c, a);
                CheckEntry e = make_entry("assoc", l, p);
                detail::run_entry(e, triples, opt, detail::entry_seed(opt.seed, kAssoc, l, p, 0),
                    [&](const auto& eca) {
                        const auto& [ie, ic, ia] = eca;
                        const Cell& E = cells[ie];
                        const Cell& Cc = cells[ic];
                        const Cell& A = cells[ia];
                        return !eq(cat.compose(p, A, cat.compose(p, Cc, E)),
                                   cat.compose(p, cat.compose(p, A, Cc), E));
                    },
                    [&](const auto& eca) {
                        const auto& [ie, ic, ia] = eca;
                        return show({&cells[ie], &cells[ic], &cells[ia]});
                    });
                report.entries.push_back(std::move(e));
            }

            // (d) 1^{l-p}(t^{l-p} A) o_p A = A = A o_p 1^{l-p}(s^{l-p} A)
            {
                CheckEntry e = make_entry("unit", l, p);
                std::vector<std::size_t> all(cells.size());
                for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
                detail::run_entry(e, all, opt, detail::entry_seed(opt.seed, kUnit, l, p, 0),
                    [&](std::size_t i) {
                        const Cell& A = cells[i];
                        const Cell left = identity_tower(cat, bnd.tgt[i][l - p - 1], l - p);
                        const Cell right = identity_tower(cat, bnd.src[i][l - p - 1], l - p);
                        return !(eq(cat.compose(p, A, left), A) && eq(cat.compose(p, right, A), A));
                    },
                    [&](std::size_t i) { return show({&cells[i]}); });
                report.entries.push_back(std::move(e));
            }

            // (e) (H o_p E) o_q (C o_p A) = (H o_q C) o_p (E o_q A), q < p
            std::vector<std::vector<std::size_t>> above(cells.size());  // a -> c with c o_p a
            for (const auto& [c, a] : pp) above[a].push_back(c);
            for (std::size_t q = 0; q < p; ++q) {
                std::vector<std::array<std::size_t, 4>> quads;  // H, E, C, A
                for (const auto& [ie, ia] : pairs[q]) {
                    for (std::size_t ih : above[ie])
                        for (std::size_t ic : above[ia])
                            if (is_pair(q, ih, ic)) quads.push_back({ih, ie, ic, ia});
                }
                CheckEntry e = make_entry("binary-interchange", l, p, q);
                detail::run_entry(e, quads, opt, detail::entry_seed(opt.seed, kBinary, l, p, q),
                    [&](const std::array<std::size_t, 4>& heca) {
                        const Cell& H = cells[heca[0]];
                        const Cell& E = cells[heca[1]];
                        const Cell& Cc = cells[heca[2]];
                        const Cell& A = cells[heca[3]];
                        const Cell lhs = cat.compose(q, cat.compose(p, A, Cc), cat.compose(p, E, H));
                        const Cell rhs = cat.compose(p, cat.compose(q, A, E), cat.compose(q, Cc, H));
                        return !eq(lhs, rhs);
                    },
                    [&](const std::array<std::size_t, 4>& heca) {
                        return show({&cells[heca[0]], &cells[heca[1]], &cells[heca[2]],
                                     &cells[heca[3]]});
                    });
                report.entries.push_back(std::move(e));
            }

            // (f) 1_C o_p 1_A = 1_{C o_p A}
            if (l < n) {
                CheckEntry e = make_entry("nullary-interchange", l, p);
                detail::run_entry(e, pp, opt, detail::entry_seed(opt.seed, kNullary, l, p, 0),
                    [&](const IndexPair& ca) {
                        const Cell& c = cells[ca.first];
                        const Cell& a = cells[ca.second];
                        return !eq(cat.compose(p, cat.identity(a), cat.identity(c)),
                                   cat.identity(cat.compose(p, a, c)));
                    },
                    pair_witness);
                report.entries.push_back(std::move(e));
            }
        }
    }
    return report;
}

}  // namespace ncat
