#include "ncat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ncat {

bool Report::passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CheckEntry& e) { return e.passed(); });
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.failed;
    return n;
}

void Report::append(Report other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
    for (auto& n : other.notes) notes.push_back(std::move(n));
}

namespace {

std::string scope_of(const CheckEntry& e) {
    std::ostringstream out;
    out << "l=" << e.level;
    if (e.p) out << " p=" << *e.p;
    if (e.q) out << " q=" << *e.q;
    return out.str();
}

}  // namespace

std::string render_text(const Report& report) {
    std::ostringstream out;
    if (!report.title.empty()) out << report.title << '\n';
    for (const auto& e : report.entries) {
        out << "  " << std::left << std::setw(22) << e.check << std::setw(14)
            << scope_of(e) << "checked=" << std::setw(8) << e.checked
            << "failed=" << std::setw(6) << e.failed
            << (e.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& w : e.witnesses) out << "      witness: " << w << '\n';
    }
    for (const auto& n : report.notes) out << "  note: " << n << '\n';
    out << (report.passed() ? "result: PASS" : "result: FAIL") << '\n';
    return out.str();
}

nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["title"] = report.title;
    j["passed"] = report.passed();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json je;
        je["check"] = e.check;
        je["level"] = e.level;
        je["p"] = e.p ? nlohmann::ordered_json(*e.p) : nlohmann::ordered_json();
        je["q"] = e.q ? nlohmann::ordered_json(*e.q) : nlohmann::ordered_json();
        je["checked"] = e.checked;
        je["failed"] = e.failed;
        je["passed"] = e.passed();
        je["witnesses"] = e.witnesses;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["notes"] = report.notes;
    return j;
}

}  // namespace ncat
