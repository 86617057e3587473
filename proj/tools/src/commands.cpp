#include "commands.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "schurlab/errors.hpp"
#include "schurlab/log.hpp"
#include "schurlab/presentation_dsl.hpp"

namespace schurlab::cli {

using nlohmann::ordered_json;

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

ordered_json to_json(const Subspace& s) {
    ordered_json basis = ordered_json::array();
    for (const auto& v : s.basis_vectors()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : v) row.push_back(to_string(x));
        basis.push_back(std::move(row));
    }
    return basis;
}

namespace {

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json brackets_json(const LieAlgebra& algebra) {
    ordered_json out = ordered_json::array();
    for (const auto& rule : algebra.rules()) {
        ordered_json rhs = ordered_json::array();
        for (const auto& [k, q] : rule.rhs.entries()) rhs.push_back({to_string(q), k + 1});
        out.push_back({{"lhs", {rule.i + 1, rule.j + 1}}, {"rhs", std::move(rhs)}});
    }
    return out;
}

ordered_json series_json(const SeriesReport& info) {
    return {{"n", info.n},
            {"m", info.derived_dim},
            {"c", info.nilpotency_class},
            {"d", info.min_generators},
            {"lower_central_series_dims", info.gamma_dims},
            {"center_dim", info.center_dim},
            {"central_complement_dim", info.central_complement_dim}};
}

// -------------------------------------------------------------- table output

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const ordered_json& obj) {
    for (const auto& v : obj) {
        const bool scalar_list = v.is_array() && (v.empty() || !v.front().is_structured());
        if (v.is_structured() && !scalar_list) return false;
    }
    return true;
}

// `lead` replaces `indent` on the first printed line (list item markers).
void print_table(std::ostream& out, const ordered_json& doc, const std::string& indent = "",
                 std::string lead = {}) {
    if (lead.empty()) lead = indent;
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    bool first = true;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& v = it.value();
        const std::string& pad = first ? lead : indent;
        first = false;
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            print_table(out, v, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << pad << it.key() << ":\n";
            for (const auto& item : v) {
                if (is_flat(item)) {
                    out << indent << "  -";
                    for (auto f = item.begin(); f != item.end(); ++f) out << " " << f.key() << "=" << scalar_text(f.value());
                    out << "\n";
                } else {
                    print_table(out, item, indent + "    ", indent + "  - ");
                }
            }
        } else {
            out << pad << std::left << std::setw(static_cast<int>(width) + 2) << it.key() << scalar_text(v) << "\n";
        }
    }
}

void emit(std::ostream& out, const ordered_json& doc, const std::string& format) {
    if (format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        print_table(out, doc);
    }
}

// ------------------------------------------------------------ algebra source

struct SourceOptions {
    std::string name;
    std::string file;
    std::vector<std::string> params;
    std::string format = "table";
    std::size_t word_cap = kDefaultWordCap;
};

struct LoadedAlgebra {
    LieAlgebra algebra;
    ordered_json identity;
};

std::map<std::string, Scalar> parse_params(const std::vector<std::string>& params) {
    std::map<std::string, Scalar> out;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--param expects KEY=VALUE, got '" + p + "'");
        out[p.substr(0, eq)] = parse_scalar(p.substr(eq + 1));
    }
    return out;
}

LoadedAlgebra load(const SourceOptions& opts) {
    if (opts.name.empty() == opts.file.empty()) throw InputError("give exactly one of --name or --file");
    LoadedAlgebra loaded;
    if (!opts.name.empty()) {
        CatalogEntry entry = catalog_entry(opts.name, parse_params(opts.params));
        loaded.algebra = std::move(entry.algebra);
        loaded.identity = {{"name", entry.name}, {"source", "catalog"}};
        if (!entry.parameters.empty()) {
            ordered_json params = ordered_json::object();
            for (const auto& [k, v] : entry.parameters) params[k] = to_string(v);
            loaded.identity["parameters"] = std::move(params);
        }
        return loaded;
    }
    std::ifstream in(opts.file, std::ios::binary);
    if (!in) throw InputError("cannot read '" + opts.file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    loaded.algebra = parse_presentation(text.str());
    loaded.identity = {{"name", loaded.algebra.name()},
                       {"source", "file"},
                       {"path", opts.file},
                       {"digest", fnv1a64(text.str())}};
    return loaded;
}

ordered_json document(const std::string& command, const ordered_json& identity) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"algebra", identity}};
}

void add_source_options(CLI::App* sub, SourceOptions& opts) {
    sub->add_option("--name", opts.name, "catalog name, e.g. L5_7, H1+A2, L6_22(1/2)");
    sub->add_option("--file", opts.file, "presentation file in the DSL")->check(CLI::ExistingFile);
    sub->add_option("--param", opts.params, "parameter KEY=VALUE (repeatable)");
    sub->add_option("--format", opts.format)->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--word-cap", opts.word_cap, "maximum free algebra dimension");
}

} // namespace

// ---------------------------------------------------------------- serializers

ordered_json to_json(const MultiplierReport& r) {
    return {{"n", r.n},
            {"m", r.m},
            {"c", r.c},
            {"d", r.d},
            {"dim_M", r.dim_M},
            {"dim_exterior_square", r.dim_exterior_square},
            {"dim_exterior_center", r.exterior_center.dim()},
            {"capable", r.capable},
            {"bound_e1", optional_json(r.bound_e1)},
            {"bound_e2", optional_json(r.bound_e2)},
            {"attains_e2", r.attains_e2}};
}

ordered_json to_json(const TheoremReport& r) {
    ordered_json witnesses = ordered_json::object();
    for (const auto& [k, v] : r.witnesses) witnesses[k] = v;
    ordered_json out = {{"id", r.id},
                        {"algebra", r.algebra},
                        {"statement", r.statement},
                        {"lhs", r.lhs},
                        {"relation", r.relation},
                        {"rhs", r.rhs},
                        {"holds", r.holds},
                        {"equality", r.equality},
                        {"witnesses", std::move(witnesses)}};
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

ordered_json to_json(const SweepReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"name", row.name},
                        {"n", row.n},
                        {"m", row.m},
                        {"c", row.c},
                        {"dim_M", row.dim_M},
                        {"bound_e2", optional_json(row.bound_e2)},
                        {"attains_e2", row.attains_e2}});
    return {{"max_dim", r.max_dim},
            {"instances", r.rows.size()},
            {"attainers", r.attainers},
            {"expected_attainers", r.expected_attainers},
            {"attainers_match", r.attainers_match},
            {"refined_bound_holds", r.refined_bound_holds},
            {"refined_bound_equality", r.refined_bound_equality},
            {"corank_two_never_attains", r.corank_two_never_attains},
            {"failures", r.failures},
            {"ok", r.ok()},
            {"summary", (r.ok() ? "consistent with the classification on " : "inconsistent on ") +
                            std::to_string(r.rows.size()) + " instances"},
            {"entries", std::move(rows)}};
}

TheoremRun run_theorem(const std::string& id, const std::vector<CatalogEntry>& entries) {
    TheoremRun run;
    run.id = id;
    auto record = [&](TheoremReport r, const std::string& name) {
        r.algebra = name;
        run.holds = run.holds && r.holds;
        run.reports.push_back(std::move(r));
    };

    if (id == "2.9") {
        std::vector<NamedAlgebra> named;
        for (const auto& e : entries) named.push_back({e.name, e.algebra});
        ScanReport scan = scan_no_extremal_dim3_derived(named);
        run.reports = std::move(scan.instances);
        run.informational = std::move(scan.informational);
        run.holds = scan.holds;
        run.skipped = entries.size() - run.reports.size() - run.informational.size();
        return run;
    }
    if (std::find(kTheoremIds.begin(), kTheoremIds.end(), id) == kTheoremIds.end())
        throw InputError("unknown theorem id '" + id + "'");

    for (const auto& e : entries) {
        const SeriesReport info = series(e.algebra);
        const bool abelian = info.derived_dim == 0;
        if (id == "2.1") {
            if (info.n == 0) {
                ++run.skipped;
                continue;
            }
            for (const auto& row : info.center.rows()) {
                TheoremReport r = check_central_ideal_inequality(e.algebra, Subspace::span(info.n, std::vector{row}));
                r.note = "K = span of center basis vector with pivot x" + std::to_string(row.leading() + 1);
                record(std::move(r), e.name);
            }
        } else if (id == "2.2") {
            if (info.n >= 4 && info.derived_dim + 2 == info.n) record(check_corank_two_bound(e.algebra), e.name);
            else ++run.skipped;
        } else if (id == "2.5") {
            if (!abelian) record(check_exterior_square_inequality(e.algebra), e.name);
            else ++run.skipped;
        } else if (id == "2.6") {
            if (info.nilpotency_class == 3) record(check_class_three_inequality(e.algebra), e.name);
            else ++run.skipped;
        } else if (id == "3.7") {
            if (info.nilpotency_class >= 3) record(check_refined_bound(e.algebra), e.name);
            else ++run.skipped;
        }
    }
    return run;
}

ordered_json to_json(const TheoremRun& run) {
    ordered_json reports = ordered_json::array();
    std::vector<std::string> equality;
    for (const auto& r : run.reports) {
        reports.push_back(to_json(r));
        if (r.equality && r.relation == "<=") equality.push_back(r.algebra);
    }
    ordered_json info = ordered_json::array();
    for (const auto& r : run.informational) info.push_back(to_json(r));
    ordered_json out = {{"id", run.id},
                        {"holds", run.holds},
                        {"instances", run.reports.size()},
                        {"skipped", run.skipped},
                        {"summary", (run.holds ? "consistent with the statement on " : "counterexample among ") +
                                        std::to_string(run.reports.size()) + " instances"}};
    if (!equality.empty()) out["equality_witnesses"] = equality;
    out["reports"] = std::move(reports);
    if (!run.informational.empty()) out["informational"] = std::move(info);
    return out;
}

// ----------------------------------------------------------------------- run

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur multipliers and bounds for nilpotent Lie algebras over Q", "schurlab"};
    app.require_subcommand(1);

    SourceOptions src;
    auto* info = app.add_subcommand("info", "structure invariants and brackets");
    auto* multiplier = app.add_subcommand("multiplier", "dim M(L), exterior square, exterior center");
    auto* capable = app.add_subcommand("capable", "capability through the exterior center");
    auto* bounds = app.add_subcommand("bounds", "bound_e1, bound_e2 and attainment");
    for (auto* sub : {info, multiplier, capable, bounds}) add_source_options(sub, src);

    std::size_t max_dim = 6;
    bool parallel = false;
    std::string format = "table";
    auto* sweep = app.add_subcommand("sweep", "classification sweep over the catalog");
    sweep->add_option("--max-dim", max_dim, "largest dimension (<= 8)");
    sweep->add_flag("--parallel", parallel, "evaluate entries concurrently");
    sweep->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    std::string theorem = "all";
    std::size_t check_dim = 6;
    auto* check = app.add_subcommand("check", "statement checks over the catalog");
    check->add_option("--theorem", theorem)->check(CLI::IsMember({"2.1", "2.2", "2.5", "2.6", "2.9", "3.7", "all"}));
    check->add_option("--max-dim", check_dim, "largest catalog dimension (<= 8)");
    check->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* list = app.add_subcommand("list", "catalog entries up to a dimension");
    list->add_option("--max-dim", max_dim);
    list->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (info->parsed()) {
            const auto loaded = load(src);
            auto doc = document("info", loaded.identity);
            doc["report"] = series_json(series(loaded.algebra));
            doc["brackets"] = brackets_json(loaded.algebra);
            if (src.format == "table") doc["presentation"] = serialize_presentation(loaded.algebra);
            emit(out, doc, src.format);
            return kOk;
        }
        if (multiplier->parsed() || capable->parsed() || bounds->parsed()) {
            const auto loaded = load(src);
            const MultiplierReport report = multiplier_report(loaded.algebra, src.word_cap);
            ordered_json body;
            std::string command;
            if (multiplier->parsed()) {
                command = "multiplier";
                body = to_json(report);
                body["exterior_center"] = to_json(report.exterior_center);
            } else if (capable->parsed()) {
                command = "capable";
                body = {{"capable", report.capable},
                        {"dim_exterior_center", report.exterior_center.dim()},
                        {"exterior_center", to_json(report.exterior_center)}};
            } else {
                command = "bounds";
                body = {{"n", report.n},
                        {"m", report.m},
                        {"c", report.c},
                        {"dim_M", report.dim_M},
                        {"bound_e1", optional_json(report.bound_e1)},
                        {"bound_e2", optional_json(report.bound_e2)},
                        {"attains_e2", report.attains_e2}};
                if (!report.bound_e2) body["note"] = "abelian algebra: the bounds need dim L^2 >= 1";
            }
            auto doc = document(command, loaded.identity);
            doc["report"] = std::move(body);
            emit(out, doc, src.format);
            return kOk;
        }
        if (sweep->parsed()) {
            if (max_dim > 8) throw InputError("--max-dim must be <= 8");
            const SweepReport report = classification_sweep(max_dim, parallel);
            ordered_json doc = {{"schema_version", kSchemaVersion}, {"command", "sweep"}};
            doc["report"] = to_json(report);
            emit(out, doc, format);
            return report.ok() ? kOk : kTheoremFailure;
        }
        if (check->parsed()) {
            if (check_dim > 8) throw InputError("--max-dim must be <= 8");
            const auto entries = enumerate(check_dim);
            std::vector<std::string> ids = theorem == "all" ? kTheoremIds : std::vector<std::string>{theorem};
            ordered_json doc = {{"schema_version", kSchemaVersion}, {"command", "check"}, {"max_dim", check_dim}};
            ordered_json theorems = ordered_json::array();
            bool all = true;
            for (const auto& id : ids) {
                log_info("checking " + id);
                const TheoremRun result = run_theorem(id, entries);
                all = all && result.holds;
                theorems.push_back(to_json(result));
            }
            doc["all_hold"] = all;
            doc["theorems"] = std::move(theorems);
            emit(out, doc, format);
            return all ? kOk : kTheoremFailure;
        }
        if (list->parsed()) {
            if (max_dim > 8) throw InputError("--max-dim must be <= 8");
            ordered_json names = ordered_json::array();
            for (const auto& e : enumerate(max_dim))
                names.push_back({{"name", e.name}, {"n", e.asserted.n}, {"m", e.asserted.m}, {"c", e.asserted.c}});
            ordered_json doc = {{"schema_version", kSchemaVersion}, {"command", "list"}, {"entries", names}};
            emit(out, doc, format);
            return kOk;
        }
    } catch (const ResourceLimit& e) {
        err << "schurlab: resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << "schurlab: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "schurlab: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace schurlab::cli
