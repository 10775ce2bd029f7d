#include "ncat/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncat/axioms.hpp"
#include "ncat/cat_v.hpp"
#include "ncat/cat_w.hpp"
#include "ncat/error.hpp"
#include "ncat/flow_data.hpp"
#include "ncat/functors.hpp"
#include "ncat/morse.hpp"
#include "ncat/torus.hpp"

namespace ncat::cli {

namespace {

using oj = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

oj envelope(const RunConfig& cfg) {
    oj j;
    j["schema"] = kSchemaVersion;
    j["command"] = cfg.command;
    return j;
}

void emit_json(std::ostream& out, const oj& j) { out << j.dump(2) << '\n'; }

FlowData load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_flow_data(buf.str());
}

template <class Cell>
CellsByLevel<Cell> subsample(CellsByLevel<Cell> cells, const RunConfig& cfg) {
    for (std::size_t l = 0; l < cells.size(); ++l) {
        if (cells[l].size() <= cfg.samples) continue;
        std::vector<Cell> kept;
        for (std::size_t i : choose_indices(cells[l].size(), cfg.samples, cfg.seed + l))
            kept.push_back(cells[l][i]);
        cells[l] = std::move(kept);
    }
    return cells;
}

template <CategoryInstance C>
int report_axioms(const C& cat, const CellsByLevel<typename C::Cell>& sample, const RunConfig& cfg,
                  oj header, std::ostream& out) {
    AxiomOptions opt;
    opt.exec = cfg.exec;
    opt.seed = cfg.seed;
    opt.max_checks = cfg.max_checks;
    Report report = check_globularity(cat, sample, cfg.exec);
    report.append(check_axioms(cat, sample, opt));
    report.title = "axioms (category " + cfg.category + ")";
    if (cfg.format == Format::json) {
        header["sample_sizes"] = oj::array();
        for (const auto& lvl : sample) header["sample_sizes"].push_back(lvl.size());
        header["report"] = to_json(report);
        emit_json(out, header);
    } else {
        out << "category " << cfg.category << "  level " << cfg.level;
        if (cfg.category != "x") out << "  bound " << cfg.bound;
        out << "  seed " << cfg.seed << "  samples " << cfg.samples << '\n';
        out << "sample sizes:";
        for (const auto& lvl : sample) out << ' ' << lvl.size();
        out << '\n' << render_text(report);
    }
    return report.passed() ? kExitPass : kExitFail;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    const FlowData fd = load(cfg.input);
    const ValidationReport report = validate_flow_data(fd);
    if (cfg.format == Format::json) {
        oj j = envelope(cfg);
        j["name"] = fd.name();
        j["report"] = to_json(report);
        emit_json(out, j);
    } else {
        out << "flow data \"" << fd.name() << "\" (n = " << fd.max_level() << ")\n" << render_text(report);
    }
    return report.passed() ? kExitPass : kExitFail;
}

// Parses and validates; on validation failure prints the failing checks.
bool load_valid(const RunConfig& cfg, std::ostream& out, std::ostream& err, FlowData& fd) {
    fd = load(cfg.input);
    const ValidationReport v = validate_flow_data(fd);
    if (v.passed()) return true;
    err << "flow data failed validation:\n";
    for (const auto& item : v.items)
        if (!item.ok) err << "  FAIL " << item.check << ' ' << item.subject << ": " << item.detail << '\n';
    if (cfg.format == Format::json) {
        oj j = envelope(cfg);
        j["validation"] = to_json(v);
        emit_json(out, j);
    }
    return false;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FlowData fd("", 1, {}, {}, {});
    if (!load_valid(cfg, out, err, fd)) return kExitFail;
    oj levels = oj::array();
    for (std::size_t l = 0; l <= cfg.level; ++l) {
        if (l > fd.max_level())
            err << "warning: level " << l << " exceeds data depth " << fd.max_level() << '\n';
        const auto cells = x_cells(fd, l, cfg.closure);
        if (cfg.format == Format::json) {
            oj lv;
            lv["level"] = l;
            lv["count"] = cells.size();
            lv["cells"] = oj::array();
            for (const auto& c : cells) lv["cells"].push_back(x_render(c));
            levels.push_back(std::move(lv));
        } else {
            out << "X(" << l << "): " << cells.size() << " cells\n";
            for (const auto& c : cells) out << "  " << x_render(c) << '\n';
        }
    }
    if (cfg.format == Format::json) {
        oj j = envelope(cfg);
        j["name"] = fd.name();
        j["closure"] = cfg.closure;
        j["levels"] = std::move(levels);
        emit_json(out, j);
    }
    return kExitPass;
}

int cmd_axioms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    oj header = envelope(cfg);
    header["category"] = cfg.category;
    header["level"] = cfg.level;
    header["seed"] = cfg.seed;
    header["samples"] = cfg.samples;
    if (cfg.category == "w" || cfg.category == "v") {
        header["bound"] = cfg.bound;
        CellsByLevel<WCell> cells;
        for (std::size_t l = 0; l <= cfg.level; ++l) cells.push_back(w_enumerate(l, cfg.bound));
        cells = subsample(std::move(cells), cfg);
        if (cfg.category == "w") return report_axioms(WCategory(cfg.level), cells, cfg, header, out);
        CellsByLevel<VCell> vcells(cells.size());
        for (std::size_t l = 0; l < cells.size(); ++l)
            for (const auto& c : cells[l]) vcells[l].push_back(v_from_w(c));
        return report_axioms(VCategory(cfg.level), vcells, cfg, header, out);
    }
    if (cfg.input.empty()) throw UsageError("axioms --category x needs a flow-data file");
    FlowData fd("", 1, {}, {}, {});
    if (!load_valid(cfg, out, err, fd)) return kExitFail;
    header["input"] = fd.name();
    const MorseCategory x(std::move(fd));
    CellsByLevel<XCell> cells;
    for (std::size_t l = 0; l <= std::min(cfg.level, x.max_level()); ++l) cells.push_back(x.cells(l, true));
    return report_axioms(x, subsample(std::move(cells), cfg), cfg, header, out);
}

int cmd_functor(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FlowData fd("", 1, {}, {}, {});
    if (!load_valid(cfg, out, err, fd)) return kExitFail;
    const MorseCategory x(std::move(fd));
    const IndEnv env = IndEnv::from(x.flow_data());
    const bool to_v = cfg.target == "f";
    oj images = oj::array();
    std::ostringstream text;
    for (std::size_t l = 0; l <= std::min(cfg.level, x.max_level()); ++l) {
        text << (to_v ? "F" : "G") << " on X(" << l << "):\n";
        for (const auto& c : x.cells(l, cfg.closure)) {
            std::string image;
            try {
                image = to_v ? v_render(functor_f(c, env)) : w_render(functor_g(c, env));
            } catch (const Error& e) {
                image = std::string("<") + std::string(to_string(e.code())) + ">";
            }
            text << "  " << x_render(c) << "  ->  " << image << '\n';
            images.push_back(oj{{"level", l}, {"cell", x_render(c)}, {"image", image}});
        }
    }
    FunctorCheckOptions opt;
    opt.exec = cfg.exec;
    Report report = check_functor_laws(x, env, cfg.level, opt);
    if (cfg.format == Format::json) {
        oj j = envelope(cfg);
        j["target"] = cfg.target;
        j["level"] = cfg.level;
        j["images"] = std::move(images);
        j["report"] = to_json(report);
        emit_json(out, j);
    } else {
        out << text.str() << render_text(report);
    }
    return report.passed() ? kExitPass : kExitFail;
}

int cmd_torus(const RunConfig& cfg, std::ostream& out) {
    if (cfg.emit) {
        out << torus_json();
        return kExitPass;
    }
    const FlowData fd = torus_flow_data();
    const IndEnv env = IndEnv::from(fd);
    const TorusOracle oracle = torus_expected();
    std::map<std::string, WCell> expected(oracle.g_table.begin(), oracle.g_table.end());

    bool ok = validate_flow_data(fd).passed();
    oj levels = oj::array();
    std::ostringstream text;
    for (std::size_t l = 0; l <= 2; ++l) {
        const auto cells = x_cells(fd, l);
        ok = ok && cells.size() == oracle.x_sizes[l];
        text << "|X(" << l << ")| = " << cells.size() << '\n';
        oj lv{{"level", l}, {"count", cells.size()}, {"cells", oj::array()}};
        for (const auto& c : cells) {
            const WCell g = functor_g(c, env);
            const auto it = expected.find(torus_class(c));
            const bool match = it != expected.end() && it->second == g;
            ok = ok && match;
            text << "  G" << x_render(c) << " = " << w_render(g) << (match ? "" : "   MISMATCH") << '\n';
            lv["cells"].push_back(oj{{"cell", x_render(c)}, {"class", torus_class(c)}, {"g", w_render(g)}, {"match", match}});
        }
        levels.push_back(std::move(lv));
    }
    const auto x10 = x_composable_pairs(fd, 1, 0);
    const auto x21 = x_composable_pairs(fd, 2, 1);
    const auto x20 = x_composable_pairs(fd, 2, 0);
    std::size_t listed = 0;
    for (const auto& [c, a] : x20) listed += torus_listed_x2_p0(c, a) ? 1 : 0;
    ok = ok && x10.size() == oracle.pairs_x1_p0 && x21.size() == oracle.pairs_x2_p1 &&
         listed == oracle.listed_pairs_x2_p0;
    text << "|X(1) x_0 X(1)| = " << x10.size() << '\n'
         << "|X(2) x_1 X(2)| = " << x21.size() << '\n'
         << "|X(2) x_0 X(2)| = " << x20.size() << " (written-out same-component pairs: " << listed
         << ", mixed-component pairs: " << x20.size() - listed << ")\n"
         << "oracle: " << (ok ? "PASS" : "FAIL") << '\n';
    if (cfg.format == Format::json) {
        oj j = envelope(cfg);
        j["levels"] = std::move(levels);
        j["pairs"] = {{"x1_p0", x10.size()}, {"x2_p1", x21.size()}, {"x2_p0", x20.size()},
                      {"x2_p0_same_component", listed}};
        j["passed"] = ok;
        emit_json(out, j);
    } else {
        out << text.str();
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string format = "text";
    bool serial = false;

    CLI::App app{"ncat: almost strict n-categories W, V and the Morse n-category X", "ncat"};
    app.require_subcommand(1);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--serial", serial, "Use the serial reference kernels");

    auto* validate = app.add_subcommand("validate", "Validate a flow-data file");
    validate->add_option("file", cfg.input, "Flow-data JSON")->required();

    auto* build = app.add_subcommand("build", "List the cells of X up to a level");
    build->add_option("file", cfg.input, "Flow-data JSON")->required();
    build->add_option("--level", cfg.level, "Highest level");
    build->add_flag("--closure", cfg.closure, "Close under composition");

    auto* axioms = app.add_subcommand("axioms", "Check globularity and the n-category axioms");
    axioms->add_option("file", cfg.input, "Flow-data JSON (category x)");
    axioms->add_option("--category", cfg.category, "Category")->required()->check(CLI::IsMember({"w", "v", "x"}));
    axioms->add_option("--level", cfg.level, "Highest level (n for w and v)");
    axioms->add_option("--seed", cfg.seed, "Sampling seed");
    axioms->add_option("--samples", cfg.samples, "Cells per level")->check(CLI::PositiveNumber);
    axioms->add_option("--bound", cfg.bound, "Entry bound for enumerated w/v cells");
    axioms->add_option("--max-checks", cfg.max_checks, "Tuples per axiom entry (0 = all)");

    auto* functor = app.add_subcommand("functor", "Apply G or F and check the functor laws");
    functor->add_option("file", cfg.input, "Flow-data JSON")->required();
    functor->add_option("--target", cfg.target, "g or f")->check(CLI::IsMember({"g", "f"}));
    functor->add_option("--level", cfg.level, "Highest level");
    functor->add_flag("--closure", cfg.closure, "Also list composites");

    auto* torus = app.add_subcommand("torus", "The two-torus example");
    torus->add_flag("--emit", cfg.emit, "Write the fixture as flow-data JSON");

    for (auto* sub : {validate, build, axioms, functor, torus}) sub->fallthrough();

    std::vector<std::string> argv_store{"ncat"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.format = format == "json" ? Format::json : Format::text;
    cfg.exec = serial ? Execution::serial : Execution::parallel;

    try {
        if (validate->parsed()) {
            cfg.command = "validate";
            return cmd_validate(cfg, out);
        }
        if (build->parsed()) {
            cfg.command = "build";
            return cmd_build(cfg, out, err);
        }
        if (axioms->parsed()) {
            cfg.command = "axioms";
            return cmd_axioms(cfg, out, err);
        }
        if (functor->parsed()) {
            cfg.command = "functor";
            return cmd_functor(cfg, out, err);
        }
        cfg.command = "torus";
        return cmd_torus(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace ncat::cli
