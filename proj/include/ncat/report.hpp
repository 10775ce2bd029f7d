#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include <json.hpp>

namespace ncat {

// One verdict line: a named law checked over every admissible tuple at a
// given level (and composition depths p, q where they apply).
struct CheckEntry {
    std::string check;
    std::size_t level = 0;
    std::optional<std::size_t> p;
    std::optional<std::size_t> q;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> witnesses;

    bool passed() const { return failed == 0; }
};

inline CheckEntry make_entry(std::string check, std::size_t level,
                             std::optional<std::size_t> p = std::nullopt,
                             std::optional<std::size_t> q = std::nullopt) {
    CheckEntry e;
    e.check = std::move(check);
    e.level = level;
    e.p = p;
    e.q = q;
    return e;
}

struct Report {
    std::string title;
    std::vector<CheckEntry> entries;
    std::vector<std::string> notes;

    bool passed() const;
    std::size_t failures() const;
    void append(Report other);
};

// Axiom reports use the ids globular-ss, globular-ts, comp-st, id-st, assoc,
// unit, binary-interchange, nullary-interchange.
using AxiomReport = Report;

std::string render_text(const Report& report);
nlohmann::ordered_json to_json(const Report& report);

}  // namespace ncat
