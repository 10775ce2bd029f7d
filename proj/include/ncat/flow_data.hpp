#pragma once

// Combinatorial certificate of an iterated family of Morse functions: the
// critical points of f_0 on the base manifold, and for every unparametrized
// moduli space M(x, y) of every level its dimension, connected components,
// boundary strata and the critical points of the Morse function chosen on it.
// No geometry is represented; admissibility of the chosen functions is taken
// on trust and only checked at the combinatorial level.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncat/label.hpp"

namespace ncat {

struct CritPoint {
    std::string id;
    std::uint32_t index = 0;
    std::size_t level = 0;
    std::optional<std::size_t> home;  // index into FlowData::moduli(); none for base points
    std::string component;            // empty for base points
};

using IdPair = std::pair<std::string, std::string>;  // (source, target)

struct ModuliSpace {
    std::size_t level = 1;
    std::string source;
    std::string target;
    std::uint32_t dim = 0;
    std::vector<std::string> components;
    // Each stratum is an ordered product M(x, y1) x M(y1, y2) x ... x M(yk, z).
    std::optional<std::vector<std::vector<IdPair>>> boundary;
    std::vector<std::string> critical_points;
};

// Which iterated moduli space a critical point function lives on: the
// (source, target) pair of its home space and the pairs below it, top-down.
struct ModuliKey {
    Label source;
    Label target;
    std::vector<std::pair<Label, Label>> history;
};

class FlowData {
public:
    // Checks referential integrity; throws Error(duplicate_id | unknown_id | schema_error).
    FlowData(std::string name, std::size_t max_level, std::vector<CritPoint> base_points,
             std::vector<ModuliSpace> moduli,
             std::vector<std::vector<CritPoint>> critical_points);

    const std::string& name() const { return name_; }
    std::size_t max_level() const { return max_level_; }
    const std::vector<CritPoint>& points() const { return points_; }
    const std::vector<ModuliSpace>& moduli() const { return moduli_; }

    const CritPoint* find_point(std::string_view id) const;
    const CritPoint& point(std::string_view id) const;  // throws unknown_id
    std::optional<std::size_t> find_moduli(std::string_view source, std::string_view target) const;

    // Points of one level sorted by id.
    std::vector<const CritPoint*> points_at(std::size_t level) const;

    ModuliKey key_of(std::size_t moduli_index) const;
    // Spine of the cell whose head is the given point, top-down.
    std::vector<IdPair> history(const CritPoint& p) const;

private:
    std::string name_;
    std::size_t max_level_ = 0;
    std::vector<CritPoint> points_;
    std::vector<ModuliSpace> moduli_;
    std::map<std::string, std::size_t, std::less<>> point_index_;
    std::map<IdPair, std::size_t> moduli_index_;
};

// Parses the flow-data JSON document; unknown fields are rejected.
// Throws Error(schema_error | unknown_id | duplicate_id) naming the JSON path.
FlowData parse_flow_data(std::string_view document);

nlohmann::ordered_json to_json(const FlowData& fd);

struct ValidationItem {
    std::string check;
    std::string subject;
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;

    bool passed() const;
    std::size_t failures() const;
};

// Dimension formula, boundary chains and strata dimensions, component
// references, index bounds and same-home conditions for every moduli space.
ValidationReport validate_flow_data(const FlowData& fd);

std::string render_text(const ValidationReport& report);
nlohmann::ordered_json to_json(const ValidationReport& report);

}  // namespace ncat
