#pragma once
// Reference implementations used only by the tests. They are written
// straight from the definitions, without sharing code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncat/cat_w.hpp"
#include "ncat/label.hpp"

namespace oracle {

// A W cell as the flat tuple (i_l, i_{l-1}, ..., i_0, j_{l-1}, ..., j_0).
struct Flat {
    std::vector<std::uint32_t> i;  // i[k] for k = 0..l
    std::vector<std::uint32_t> j;  // j[k] for k = 0..l-1
};

inline Flat flatten(const ncat::WCell& c) {
    Flat f;
    const std::size_t l = c.spine.size();
    f.i.resize(l + 1);
    f.j.resize(l);
    for (std::size_t k = 0; k < l; ++k) {
        f.i[k] = c.spine[l - 1 - k].i;
        f.j[k] = c.spine[l - 1 - k].j;
    }
    f.i[l] = c.head;
    return f;
}

inline ncat::WCell unflatten(const Flat& f) {
    ncat::WCell c;
    const std::size_t l = f.j.size();
    c.head = f.i[l];
    for (std::size_t k = l; k-- > 0;) c.spine.push_back({f.i[k], f.j[k]});
    return c;
}

// j_k <= i_k and i_{k+1} < i_k - j_k, except i_{k+1} = 0 when i_k = j_k.
inline bool valid(const Flat& f) {
    for (std::size_t k = 0; k < f.j.size(); ++k) {
        if (f.j[k] > f.i[k]) return false;
        const long gap = long(f.i[k]) - long(f.j[k]);
        if (gap == 0 ? f.i[k + 1] != 0 : long(f.i[k + 1]) >= gap) return false;
    }
    return true;
}

inline bool valid(const ncat::WCell& c) { return valid(flatten(c)); }

// Every tuple in [0, bound]^(2l+1) that is valid, in library order.
inline std::vector<ncat::WCell> all_w(std::size_t level, std::uint32_t bound) {
    std::vector<std::uint32_t> digits(2 * level + 1, 0);
    std::vector<ncat::WCell> out;
    while (true) {
        Flat f;
        f.i.assign(digits.begin(), digits.begin() + long(level) + 1);
        f.j.assign(digits.begin() + long(level) + 1, digits.end());
        if (valid(f)) out.push_back(unflatten(f));
        std::size_t d = 0;
        while (d < digits.size() && digits[d] == bound) digits[d++] = 0;
        if (d == digits.size()) break;
        ++digits[d];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// r o_p q by the componentwise formula: sum above p, (i_p(q), j_p(r)) at p,
// the common history below.
inline ncat::WCell compose(std::size_t p, const ncat::WCell& q, const ncat::WCell& r) {
    const Flat a = flatten(q), c = flatten(r);
    Flat out = a;
    const std::size_t l = a.j.size();
    for (std::size_t k = p + 1; k <= l; ++k) out.i[k] = a.i[k] + c.i[k];
    for (std::size_t k = p + 1; k < l; ++k) out.j[k] = a.j[k] + c.j[k];
    out.i[p] = a.i[p];
    out.j[p] = c.j[p];
    return unflatten(out);
}

// Rewrites a label one redex at a time, picking redexes in random order,
// until none is left. Redexes: a pairing inside a pairing, a point part of
// a pairing that has an atom part, a pairing of points only, two adjacent
// parts out of order.
class Rewriter {
public:
    explicit Rewriter(std::uint64_t seed) : rng_(seed) {}

    ncat::Label run(ncat::Label x) {
        while (true) {
            const std::size_t n = count(x);
            if (n == 0) return x;
            std::size_t k = rng_() % n;
            x = apply(x, k);
            ++steps_;
        }
    }
    std::size_t steps() const { return steps_; }

private:
    using L = ncat::Label;

    static bool all_points(const std::vector<L>& ps) {
        for (const L& p : ps)
            if (!p.is_point()) return false;
        return true;
    }
    // Points may only be dropped next to an atom: a pairing part could still
    // fuse into a point, and dropping beside it is not confluent.
    static bool droppable(const std::vector<L>& ps) {
        bool atom = false, point = false;
        for (const L& p : ps) {
            atom = atom || p.is_atom();
            point = point || p.is_point();
        }
        return atom && point;
    }
    // Redexes at the root of x.
    static std::size_t local(const L& x) {
        if (!x.is_pairing()) return 0;
        const auto& ps = x.parts();
        std::size_t n = 0;
        for (const L& p : ps) n += p.is_pairing();
        if (all_points(ps)) ++n;
        else if (droppable(ps))
            for (const L& p : ps) n += p.is_point();
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) n += ps[i + 1] < ps[i];
        return n;
    }
    static std::size_t count(const L& x) {
        std::size_t n = local(x);
        if (x.is_point() || x.is_pairing())
            for (const L& p : x.parts()) n += count(p);
        return n;
    }
    static L make(std::vector<L> ps) { return ps.size() == 1 ? ps.front() : L::pairing(std::move(ps)); }

    static L apply_local(const L& x, std::size_t k) {
        std::vector<L> ps = x.parts();
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (ps[i].is_pairing() && k-- == 0) {
                std::vector<L> inner = ps[i].parts();
                ps.erase(ps.begin() + long(i));
                ps.insert(ps.begin() + long(i), inner.begin(), inner.end());
                return make(std::move(ps));
            }
        if (all_points(ps)) {
            if (k-- == 0) {
                std::vector<L> contents;
                for (const L& p : ps) contents.push_back(p.inner());
                return L::point(make(std::move(contents)));
            }
        } else if (droppable(ps)) {
            for (std::size_t i = 0; i < ps.size(); ++i)
                if (ps[i].is_point() && k-- == 0) {
                    ps.erase(ps.begin() + long(i));
                    return make(std::move(ps));
                }
        }
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            if (ps[i + 1] < ps[i] && k-- == 0) {
                std::swap(ps[i], ps[i + 1]);
                return make(std::move(ps));
            }
        return x;
    }

    static L apply(const L& x, std::size_t k) {
        const std::size_t here = local(x);
        if (k < here) return apply_local(x, k);
        k -= here;
        std::vector<L> ps = x.parts();
        for (auto& p : ps) {
            const std::size_t n = count(p);
            if (k < n) {
                p = apply(p, k);
                return x.is_point() ? L::point(ps.front()) : L::pairing(std::move(ps));
            }
            k -= n;
        }
        return x;
    }

    std::mt19937_64 rng_;
    std::size_t steps_ = 0;
};

// Random label over the atoms a, b, c of bounded depth.
inline ncat::Label random_label(std::mt19937_64& rng, int depth) {
    const std::uint64_t r = rng() % (depth <= 0 ? 1 : 4);
    if (r == 0) return ncat::Label::atom(std::string(1, char('a' + rng() % 3)));
    if (r == 1) return ncat::Label::point(random_label(rng, depth - 1));
    std::vector<ncat::Label> parts;
    const std::size_t n = 2 + rng() % 2;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(random_label(rng, depth - 1));
    return ncat::Label::pairing(std::move(parts));
}

// Random flow data of depth 2 satisfying the index conditions by
// construction: every space has dim = drop - 1 and its critical points have
// index <= dim; level-2 spaces join points of one component of one space.
inline nlohmann::ordered_json random_flow_document(std::uint64_t seed) {
    using oj = nlohmann::ordered_json;
    std::mt19937_64 rng(seed);
    oj doc;
    doc["name"] = "random-" + std::to_string(seed);
    doc["max_level"] = 2;
    const std::size_t nbase = 2 + rng() % 3;
    std::vector<std::pair<std::string, std::uint32_t>> base;
    for (std::size_t k = 0; k < nbase; ++k) base.emplace_back("b" + std::to_string(k), std::uint32_t(rng() % 5));
    doc["base_points"] = oj::array();
    for (const auto& [id, ind] : base) doc["base_points"].push_back(oj{{"id", id}, {"index", ind}});

    struct Pt { std::string id; std::uint32_t index; std::string comp; };
    doc["moduli"] = oj::array();
    std::vector<std::vector<Pt>> level1;
    for (const auto& [a, ia] : base)
        for (const auto& [b, ib] : base) {
            if (ia <= ib || rng() % 4 == 0) continue;
            const std::uint32_t dim = ia - ib - 1;
            const std::size_t ncomp = 1 + rng() % 2;
            oj m{{"level", 1}, {"source", a}, {"target", b}, {"dim", dim}, {"components", oj::array()}};
            for (std::size_t c = 0; c < ncomp; ++c) m["components"].push_back("c" + std::to_string(c));
            std::vector<Pt> pts;
            const std::size_t npts = 1 + rng() % 3;
            for (std::size_t k = 0; k < npts; ++k)
                pts.push_back({a + b + "_" + std::to_string(k), std::uint32_t(rng() % (dim + 1)),
                               "c" + std::to_string(rng() % ncomp)});
            m["critical_points"] = oj::array();
            for (const auto& p : pts)
                m["critical_points"].push_back(oj{{"id", p.id}, {"index", p.index}, {"component", p.comp}});
            doc["moduli"].push_back(std::move(m));
            level1.push_back(std::move(pts));
        }
    for (const auto& pts : level1)
        for (const auto& u : pts)
            for (const auto& v : pts) {
                if (u.comp != v.comp || u.index <= v.index || rng() % 3 == 0) continue;
                const std::uint32_t dim = u.index - v.index - 1;
                oj m{{"level", 2}, {"source", u.id}, {"target", v.id}, {"dim", dim}, {"components", {"k"}}};
                m["critical_points"] = oj::array();
                const std::size_t npts = 1 + rng() % 2;
                for (std::size_t k = 0; k < npts; ++k)
                    m["critical_points"].push_back(oj{{"id", u.id + "~" + v.id + "_" + std::to_string(k)},
                                                      {"index", std::uint32_t(rng() % (dim + 1))},
                                                      {"component", "k"}});
                doc["moduli"].push_back(std::move(m));
            }
    return doc;
}

}  // namespace oracle
