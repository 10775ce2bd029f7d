#pragma once

// Names of critical points in the Morse n-category.
//
//   atom(id)          a critical point declared in the flow data
//   point(x)          the unique critical point of the singleton M(x, x)
//   pairing(a, b,...) a composite (broken) point of a product moduli space
//
// normalize() rewrites to the canonical-isomorphism representative:
//   1. nested pairings are flattened;
//   2. point(_) factors of a pairing with some non-point part are dropped;
//   3. a pairing of points only becomes point(pairing of their contents);
//   4. parts of a pairing are sorted (symmetry of products of moduli spaces);
// and, for labels living over a diagonal (singleton) space,
//   5. a pairing of identical parts collapses to that part.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ncat {

class Label {
public:
    enum class Kind : std::uint8_t { atom, point, pairing };

    Label() = default;

    static Label atom(std::string id);
    static Label point(Label of);
    // Requires at least two parts. No rewriting happens here.
    static Label pairing(std::vector<Label> parts);

    Kind kind() const { return kind_; }
    bool is_atom() const { return kind_ == Kind::atom; }
    bool is_point() const { return kind_ == Kind::point; }
    bool is_pairing() const { return kind_ == Kind::pairing; }

    const std::string& id() const { return id_; }
    // point: the single inner label; pairing: the parts.
    const std::vector<Label>& parts() const { return parts_; }
    const Label& inner() const { return parts_.front(); }

    std::string render() const;

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    Kind kind_ = Kind::atom;
    std::string id_;
    std::vector<Label> parts_;
};

Label normalize(const Label& x);
// Normal form of a label known to live over a diagonal space (rule 5).
Label normalize_over_singleton(const Label& x);

// Depth-first count of nodes; used to bound rewriting in tests.
std::size_t label_size(const Label& x);

}  // namespace ncat
