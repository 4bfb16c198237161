#include "commands.hpp"

#include "lockfile.hpp"

#include <vendokit/depgraph.hpp>
#include <vendokit/error.hpp>
#include <vendokit/file_io.hpp>
#include <vendokit/registry.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>

namespace vendokit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Exit code for a failure met while fetching or validating registry content.
int exit_code_for(Errc code) {
    switch (code) {
    case Errc::UnknownModule: return exit_unknown_module;
    case Errc::WouldOverwrite: return exit_overwrite;
    case Errc::NotFound:
    case Errc::TransportError:
    case Errc::HashMismatch: return exit_fetch;
    case Errc::InvalidModuleFiles:
    case Errc::UnknownDependency:
    case Errc::DependencyCycle:
    case Errc::NoFrontmatter:
    case Errc::UnterminatedBlock:
    case Errc::MalformedAssignment:
    case Errc::MissingRequiredKey:
    case Errc::InvalidTier:
    case Errc::InvalidCategory:
    case Errc::InvalidModuleName:
    case Errc::InvalidDependency:
    case Errc::DuplicateKey:
    case Errc::MalformedVersion: return exit_validation;
    default: return exit_input;
    }
}

void report(std::ostream& err, const Error& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) {
        err << "  " << d << "\n";
    }
}

struct Registry {
    std::unique_ptr<Store> store;
    Manifest manifest;
};

/// Loads the manifest of the configured registry; any failure is exit 2.
std::optional<Registry> open_registry(const CliConfig& config, std::ostream& err) {
    if (config.registry_source.empty()) {
        err << "error: no registry; pass --registry, set VENDOKIT_REGISTRY or run inside a registry tree\n";
        return std::nullopt;
    }
    try {
        Registry r;
        r.store = open_store(config.registry_source);
        r.manifest = load_manifest(*r.store);
        return r;
    } catch (const Error& e) {
        err << "error: cannot load manifest from " << config.registry_source << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

/// Working-tree commands need a local registry root.
std::optional<fs::path> local_root(const CliConfig& config, std::ostream& err) {
    if (config.registry_source.empty()) {
        err << "error: no registry tree; pass --registry or run inside a registry tree\n";
        return std::nullopt;
    }
    if (is_remote_source(config.registry_source)) {
        err << "error: this command needs a local registry tree, not " << config.registry_source << "\n";
        return std::nullopt;
    }
    return fs::path(config.registry_source);
}

bool check_format(const CliConfig& config, std::initializer_list<OutputFormat> allowed,
                  std::ostream& err) {
    if (!config.format || std::find(allowed.begin(), allowed.end(), *config.format) != allowed.end()) {
        return true;
    }
    err << "error: --format not supported by this command\n";
    return false;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

std::string file_name_of(const ManifestEntry& e) {
    return fs::path(e.path).filename().string();
}

bool check_names(const Manifest& manifest, const std::vector<std::string>& names, std::ostream& err) {
    bool ok = true;
    for (const auto& n : names) {
        if (!manifest.contains(n)) {
            err << "error: unknown module '" << n << "'\n";
            ok = false;
        }
    }
    return ok;
}

std::optional<std::string> read_if_exists(const fs::path& path) {
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        return std::nullopt;
    }
    return read_file(path);
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) noexcept {
    if (text == "text") return OutputFormat::text;
    if (text == "markdown") return OutputFormat::markdown;
    if (text == "dot") return OutputFormat::dot;
    if (text == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string resolve_registry(const std::optional<std::string>& flag, const char* env_value,
                             const fs::path& cwd) {
    if (flag && !flag->empty()) {
        return *flag;
    }
    if (env_value && *env_value) {
        return env_value;
    }
    std::error_code ec;
    if (fs::is_regular_file(cwd / "manifest.json", ec)) {
        return cwd.string();
    }
    return {};
}

int cmd_list(const CliConfig& config, Streams io) {
    if (!check_format(config, {OutputFormat::text, OutputFormat::json}, io.err)) return exit_input;
    auto reg = open_registry(config, io.err);
    if (!reg) return exit_input;

    std::vector<const ManifestEntry*> entries;
    for (const auto& [name, e] : reg->manifest.modules) {
        entries.push_back(&e);
    }
    std::stable_sort(entries.begin(), entries.end(), [](const ManifestEntry* a, const ManifestEntry* b) {
        if (a->category != b->category) return a->category < b->category;
        if (a->tier != b->tier) return a->tier < b->tier;
        return a->name < b->name;
    });

    if (config.format == OutputFormat::json) {
        json rows = json::array();
        for (const auto* e : entries) {
            rows.push_back({{"name", e->name},
                            {"version", format_version(e->version)},
                            {"tier", to_string(e->tier)},
                            {"category", to_string(e->category)}});
        }
        io.out << rows.dump(2) << "\n";
        return exit_ok;
    }

    std::size_t name_width = 4;
    std::size_t version_width = 7;
    for (const auto* e : entries) {
        name_width = std::max(name_width, e->name.size());
        version_width = std::max(version_width, format_version(e->version).size());
    }
    std::optional<Category> current;
    for (const auto* e : entries) {
        if (current != e->category) {
            current = e->category;
            io.out << "[" << to_string(e->category) << "]\n";
        }
        io.out << "  " << std::left << std::setw(static_cast<int>(name_width)) << e->name << "  "
               << std::setw(static_cast<int>(version_width)) << format_version(e->version) << "  "
               << to_string(e->tier) << "\n";
    }
    io.out << entries.size() << (entries.size() == 1 ? " module" : " modules") << "\n";
    return exit_ok;
}

int cmd_info(const CliConfig& config, const std::string& name, Streams io) {
    if (!check_format(config, {OutputFormat::text, OutputFormat::json}, io.err)) return exit_input;
    auto reg = open_registry(config, io.err);
    if (!reg) return exit_input;
    const auto* e = reg->manifest.find(name);
    if (!e) {
        io.err << "error: unknown module '" << name << "'\n";
        return exit_unknown_module;
    }
    std::size_t transitive = 0;
    try {
        const auto graph = build_graph(reg->manifest);
        const std::vector<std::string> roots{name};
        transitive = closure(graph, roots).size() - 1;
    } catch (const Error& err) {
        report(io.err, err);
        return exit_validation;
    }

    if (config.format == OutputFormat::json) {
        const json doc{{"name", e->name},
                       {"version", format_version(e->version)},
                       {"tier", to_string(e->tier)},
                       {"category", to_string(e->category)},
                       {"deps", e->deps},
                       {"content_hash", e->content_hash},
                       {"path", e->path},
                       {"transitive_deps", transitive}};
        io.out << doc.dump(2) << "\n";
        return exit_ok;
    }
    io.out << "name: " << e->name << "\n"
           << "version: " << format_version(e->version) << "\n"
           << "tier: " << to_string(e->tier) << "\n"
           << "category: " << to_string(e->category) << "\n"
           << "deps: " << (e->deps.empty() ? std::string("(none)") : join(e->deps, ", ")) << "\n"
           << "content_hash: " << e->content_hash << "\n"
           << "path: " << e->path << "\n"
           << "transitive deps: " << transitive << "\n";
    return exit_ok;
}

int cmd_add(const CliConfig& config, const std::vector<std::string>& names, Streams io) {
    if (!check_format(config, {OutputFormat::text}, io.err)) return exit_input;
    if (names.empty()) {
        io.err << "error: add needs at least one module name\n";
        return exit_input;
    }
    auto reg = open_registry(config, io.err);
    if (!reg) return exit_input;
    if (!check_names(reg->manifest, names, io.err)) return exit_unknown_module;

    struct Planned {
        const ManifestEntry* entry;
        fs::path dest;
        std::string bytes;
        bool unchanged = false;
    };
    std::vector<Planned> plan;
    try {
        const auto graph = build_graph(reg->manifest);
        for (const auto& name : closure(graph, names)) {
            const auto* e = reg->manifest.find(name);
            plan.push_back({e, config.target_dir / file_name_of(*e), fetch_module(*reg->store, *e, config.profile)});
        }
    } catch (const Error& e) {
        report(io.err, e);
        return exit_code_for(e.code());
    }

    std::vector<std::string> conflicts;
    try {
        for (auto& p : plan) {
            if (const auto existing = read_if_exists(p.dest)) {
                p.unchanged = *existing == p.bytes;
                if (!p.unchanged) {
                    conflicts.push_back(p.dest.string());
                }
            }
        }
    } catch (const Error& e) {
        report(io.err, e);
        return exit_input;
    }
    if (!conflicts.empty() && !config.force) {
        io.err << "error: refusing to overwrite locally different files (use --force):\n";
        for (const auto& c : conflicts) {
            io.err << "  " << c << "\n";
        }
        return exit_overwrite;
    }

    std::size_t written = 0;
    try {
        fs::create_directories(config.target_dir);
        auto lock = LockFile::read(config.target_dir);
        for (const auto& p : plan) {
            if (p.unchanged) {
                io.out << "unchanged " << p.entry->name << " (" << p.dest.filename().string() << ")\n";
            } else {
                write_file(p.dest, p.bytes);
                ++written;
                io.out << "wrote " << p.entry->name << " " << format_version(p.entry->version) << " -> "
                       << p.dest.string() << "\n";
            }
            lock.modules[p.entry->name] = {p.entry->version, p.entry->content_hash};
        }
        lock.write(config.target_dir);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_input;
    }
    io.out << written << " written, " << plan.size() - written << " unchanged\n";
    return exit_ok;
}

int cmd_update(const CliConfig& config, const std::vector<std::string>& names, Streams io) {
    if (!check_format(config, {OutputFormat::text}, io.err)) return exit_input;
    auto reg = open_registry(config, io.err);
    if (!reg) return exit_input;
    if (!check_names(reg->manifest, names, io.err)) return exit_unknown_module;

    std::vector<std::string> candidates = names;
    if (candidates.empty()) {
        for (const auto& [name, e] : reg->manifest.modules) {
            std::error_code ec;
            if (fs::exists(config.target_dir / file_name_of(e), ec)) {
                candidates.push_back(name);
            }
        }
    }

    LockFile lock;
    try {
        lock = LockFile::read(config.target_dir);
    } catch (const Error& e) {
        report(io.err, e);
        return exit_input;
    }

    std::vector<std::string> updated, skipped, unchanged;
    std::vector<std::pair<const ManifestEntry*, std::string>> to_write;
    for (const auto& name : candidates) {
        const auto& entry = *reg->manifest.find(name);
        const auto dest = config.target_dir / file_name_of(entry);
        std::optional<std::string> local;
        try {
            local = read_if_exists(dest);
        } catch (const Error& e) {
            report(io.err, e);
            return exit_input;
        }
        if (!local) {
            io.err << "warning: " << name << " is not vendored in " << config.target_dir.string() << "\n";
            skipped.push_back(name);
            continue;
        }

        bool refetch = false;
        bool modified = false;
        std::optional<SemVer> local_version;
        try {
            local_version = read_metadata(*local, name, config.profile).version;
            switch (verify_local(*local, entry, config.profile)) {
            case LocalStatus::clean: break;
            case LocalStatus::version_drift:
                refetch = compare_versions(*local_version, entry.version) < 0;
                break;
            case LocalStatus::modified: {
                const auto it = lock.modules.find(name);
                const bool pristine = it != lock.modules.end() &&
                                      it->second.content_hash == content_hash(*local, config.profile);
                refetch = pristine;
                modified = !pristine;
                break;
            }
            }
        } catch (const Error&) {
            modified = true;
        }

        if (modified && !config.force) {
            io.err << "warning: " << name << " has local modifications; skipped (use --force)\n";
            skipped.push_back(name);
            continue;
        }
        if (!refetch && !modified) {
            unchanged.push_back(name);
            continue;
        }
        try {
            to_write.emplace_back(&entry, fetch_module(*reg->store, entry, config.profile));
        } catch (const Error& e) {
            report(io.err, e);
            return exit_code_for(e.code());
        }
        updated.push_back(name + " " + (local_version ? format_version(*local_version) : "?") + " -> " +
                          format_version(entry.version));
    }

    try {
        for (const auto& [entry, bytes] : to_write) {
            write_file(config.target_dir / file_name_of(*entry), bytes);
            lock.modules[entry->name] = {entry->version, entry->content_hash};
        }
        for (const auto& name : unchanged) {
            const auto& entry = *reg->manifest.find(name);
            lock.modules[name] = {entry.version, entry.content_hash};
        }
        if (!to_write.empty() || !unchanged.empty()) {
            lock.write(config.target_dir);
        }
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return exit_input;
    }

    io.out << "updated: " << (updated.empty() ? "(none)" : join(updated, ", ")) << "\n"
           << "skipped: " << (skipped.empty() ? "(none)" : join(skipped, ", ")) << "\n"
           << "unchanged: " << (unchanged.empty() ? "(none)" : join(unchanged, ", ")) << "\n";
    return exit_ok;
}

int cmd_bump(const CliConfig& config, VersionPart part, const std::vector<std::string>& names, Streams io) {
    if (!check_format(config, {OutputFormat::text}, io.err)) return exit_input;
    const auto root = local_root(config, io.err);
    if (!root) return exit_input;

    Manifest manifest;
    try {
        manifest = load_manifest(read_file(*root / "manifest.json"));
    } catch (const Error& e) {
        io.err << "error: cannot load manifest: " << e.what() << "\n";
        return exit_input;
    }
    if (!check_names(manifest, names, io.err)) return exit_unknown_module;
    const std::set<std::string> only(names.begin(), names.end());

    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& item : fs::directory_iterator(*root / "modules", ec)) {
        if (item.is_regular_file() && item.path().extension() == config.profile.extension) {
            files.push_back(item.path());
        }
    }
    if (ec) {
        io.err << "error: cannot read " << (*root / "modules").string() << ": " << ec.message() << "\n";
        return exit_input;
    }
    std::sort(files.begin(), files.end());

    struct Rewrite {
        fs::path path;
        std::string bytes;
        std::string line;
    };
    std::vector<Rewrite> rewrites;
    std::vector<std::string> problems;
    std::vector<std::string> notes;
    for (const auto& file : files) {
        const auto name = file.stem().string();
        if (!only.empty() && !only.contains(name)) continue;
        try {
            const auto source = read_file(file);
            const auto meta = read_metadata(source, name, config.profile);
            const auto* entry = manifest.find(name);
            if (!entry) {
                notes.push_back(name + ": not in manifest; run `manifest` first");
                continue;
            }
            if (content_hash(source, config.profile) == entry->content_hash) {
                continue;
            }
            if (compare_versions(meta.version, entry->version) > 0) {
                notes.push_back(name + ": already bumped to " + format_version(meta.version));
                continue;
            }
            const auto next = bump_version(meta.version, part);
            rewrites.push_back({file, replace_version(source, next, config.profile),
                                name + ": " + format_version(meta.version) + " -> " + format_version(next)});
        } catch (const Error& e) {
            problems.push_back("modules/" + file.filename().string() + ": " + e.what());
        }
    }
    if (!problems.empty()) {
        io.err << "error: " << problems.size() << " module file(s) failed validation\n";
        for (const auto& p : problems) io.err << "  " << p << "\n";
        return exit_validation;
    }
    try {
        for (const auto& r : rewrites) {
            write_file(r.path, r.bytes);
            io.out << r.line << "\n";
        }
    } catch (const Error& e) {
        report(io.err, e);
        return exit_input;
    }
    for (const auto& n : notes) io.err << "note: " << n << "\n";
    io.out << rewrites.size() << (rewrites.size() == 1 ? " module" : " modules") << " bumped\n";
    return exit_ok;
}

int cmd_manifest(const CliConfig& config, Streams io) {
    if (!check_format(config, {OutputFormat::text}, io.err)) return exit_input;
    const auto root = local_root(config, io.err);
    if (!root) return exit_input;
    try {
        const auto manifest = build_manifest(*root, config.profile);
        write_file(*root / "manifest.json", serialize_manifest(manifest));
        io.out << manifest.modules.size() << (manifest.modules.size() == 1 ? " module" : " modules")
               << " written to " << (*root / "manifest.json").string() << "\n";
        return exit_ok;
    } catch (const Error& e) {
        report(io.err, e);
        const int code = exit_code_for(e.code());
        return code == exit_fetch ? exit_input : code;
    }
}

int cmd_depgraph(const CliConfig& config, Streams io) {
    if (!check_format(config, {OutputFormat::dot}, io.err)) return exit_input;
    auto reg = open_registry(config, io.err);
    if (!reg) return exit_input;
    try {
        io.out << to_dot(build_graph(reg->manifest), &reg->manifest);
        return exit_ok;
    } catch (const Error& e) {
        report(io.err, e);
        return exit_validation;
    }
}

int cmd_audit(const CliConfig& config, const std::vector<std::string>& files, Streams io) {
    if (!check_format(config, {OutputFormat::text, OutputFormat::json}, io.err)) return exit_input;
    if (files.empty()) {
        io.err << "error: audit needs at least one file\n";
        return exit_input;
    }
    std::optional<StdlibIndex> stdlib;
    try {
        stdlib = StdlibIndex::load(config.stdlib_index);
    } catch (const Error& e) {
        io.err << "error: cannot load stdlib index '" << config.stdlib_index << "': " << e.what() << "\n";
        return exit_input;
    }
    Manifest manifest;
    if (!config.registry_source.empty()) {
        auto reg = open_registry(config, io.err);
        if (!reg) return exit_input;
        manifest = std::move(reg->manifest);
    }

    bool all_pass = true;
    json results = json::array();
    for (const auto& file : files) {
        std::string source;
        try {
            source = read_file(file);
        } catch (const Error& e) {
            report(io.err, e);
            return exit_input;
        }
        const auto findings = classify(scan_imports(source), *stdlib, manifest);
        const auto rep = audit_report(findings);
        all_pass = all_pass && rep.pass;

        if (config.format == OutputFormat::json) {
            json offending = json::array();
            for (const auto& f : rep.offending) {
                offending.push_back({{"line", f.line_number}, {"root", f.root_name}, {"statement", f.statement}});
            }
            results.push_back({{"file", file},
                               {"pass", rep.pass},
                               {"counts",
                                {{"stdlib", rep.count(ImportClass::stdlib)},
                                 {"registry", rep.count(ImportClass::registry)},
                                 {"local", rep.count(ImportClass::local)},
                                 {"third_party", rep.count(ImportClass::third_party)}}},
                               {"offending", std::move(offending)}});
            continue;
        }
        io.out << file << ": " << (rep.pass ? "PASS" : "FAIL") << " (stdlib=" << rep.count(ImportClass::stdlib)
               << " registry=" << rep.count(ImportClass::registry) << " local=" << rep.count(ImportClass::local)
               << " third_party=" << rep.count(ImportClass::third_party) << ")\n";
        for (const auto& f : rep.offending) {
            io.out << "  " << file << ":" << f.line_number << ": third-party import '" << f.root_name
                   << "': " << f.statement << "\n";
        }
    }
    if (config.format == OutputFormat::json) {
        io.out << json{{"pass", all_pass}, {"stdlib_index", stdlib->label()}, {"files", std::move(results)}}.dump(2)
               << "\n";
    }
    return all_pass ? exit_ok : exit_audit;
}

int cmd_benchreport(const CliConfig& config, const fs::path& results_path, Streams io) {
    if (!check_format(config, {OutputFormat::text, OutputFormat::markdown}, io.err)) return exit_input;
    try {
        const auto loaded = load_results(read_file(results_path));
        for (const auto& s : loaded.skipped) {
            io.err << "warning: skipped '" << s << "' (no zerodep/reference role)\n";
        }
        const auto pairing = pair_records(loaded.records);
        for (const auto& w : pairing.warnings) {
            io.err << "warning: " << w << "\n";
        }
        const auto verdicts = module_verdicts(pairing.pairs);
        io.out << render_report(verdicts, config.format == OutputFormat::markdown ? ReportFormat::markdown
                                                                                   : ReportFormat::text);
        return exit_ok;
    } catch (const Error& e) {
        report(io.err, e);
        return exit_input;
    }
}

int cmd_benchrun(const CliConfig& config, const std::string& subject_cmd, const std::string& reference_cmd,
                 const Calibration& calibration, const std::string& group, Streams io) {
    if (!check_format(config, {OutputFormat::json, OutputFormat::text, OutputFormat::markdown}, io.err)) {
        return exit_input;
    }
    try {
        const auto run = run_paired(subject_cmd, reference_cmd, calibration, group);
        const auto verdict = classify_ratio(run.paired.ratio);
        io.err << "subject " << run.subject.rounds << " rounds, reference " << run.reference.rounds
               << " rounds, ratio " << run.paired.ratio << " (" << to_string(verdict) << ")\n";
        if (!config.format || config.format == OutputFormat::json) {
            io.out << run.results_document;
        } else {
            const std::vector<PairedResult> pairs{run.paired};
            io.out << render_report(module_verdicts(pairs), config.format == OutputFormat::markdown
                                                                ? ReportFormat::markdown
                                                                : ReportFormat::text);
        }
        return exit_ok;
    } catch (const Error& e) {
        report(io.err, e);
        return exit_input;
    }
}

int run(int argc, const char* const* argv, Streams io) {
    CLI::App app{"Vendor single-file modules from a registry.", "vendokit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vendokit 0.1.0");

    std::optional<std::string> registry_flag;
    std::string target_dir = ".";
    std::string stdlib_index = std::string(StdlibIndex::default_label);
    std::string format_text;
    bool force = false;
    app.add_option("--registry", registry_flag, "Registry path or http(s) base URL")->option_text("SRC");
    app.add_option("--target", target_dir, "Directory for vendored copies")->option_text("DIR");
    app.add_option("--stdlib-index", stdlib_index, "Bundled index label or path to an index file");
    app.add_option("--format", format_text, "text, markdown, dot or json")
        ->check(CLI::IsMember({"text", "markdown", "dot", "json"}));
    app.add_flag("--force", force, "Overwrite locally modified files");
    app.fallthrough();

    std::string name;
    std::vector<std::string> names;
    std::vector<std::string> files;
    std::string results_path;
    std::string subject_cmd;
    std::string reference_cmd;
    std::string group = "command/run";
    Calibration calibration;
    bool minor = false;
    bool major = false;

    auto* list = app.add_subcommand("list", "List modules by category and tier");
    auto* info = app.add_subcommand("info", "Show manifest fields of one module");
    info->add_option("name", name)->required();
    auto* add = app.add_subcommand("add", "Vendor modules and their dependencies");
    add->add_option("names", names)->required();
    auto* update = app.add_subcommand("update", "Refresh vendored copies");
    update->add_option("names", names);
    auto* bump = app.add_subcommand("bump", "Bump versions of changed modules");
    bump->add_option("names", names);
    auto* minor_flag = bump->add_flag("--minor", minor, "Bump the minor component");
    bump->add_flag("--major", major, "Bump the major component")->excludes(minor_flag);
    auto* manifest = app.add_subcommand("manifest", "Regenerate manifest.json");
    auto* depgraph = app.add_subcommand("dep-graph", "Print the dependency graph as DOT");
    auto* audit = app.add_subcommand("audit", "Check files for third-party imports");
    audit->add_option("files", files)->required();
    auto* benchreport = app.add_subcommand("bench-report", "Classify a benchmark results document");
    benchreport->add_option("results", results_path)->required();
    auto* benchrun = app.add_subcommand("bench-run", "Time two commands against each other");
    benchrun->add_option("subject", subject_cmd, "Subject command")->required();
    benchrun->add_option("reference", reference_cmd, "Reference command")->required();
    benchrun->add_option("--min-rounds", calibration.min_rounds)->check(CLI::PositiveNumber);
    benchrun->add_option("--target-seconds", calibration.target_seconds)->check(CLI::NonNegativeNumber);
    benchrun->add_option("--timeout", calibration.timeout_seconds, "Wall-clock cap per side, seconds")
        ->check(CLI::PositiveNumber);
    benchrun->add_option("--group", group);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, io.out, io.err);
        return exit_input;
    }

    CliConfig config;
    config.target_dir = target_dir;
    config.stdlib_index = stdlib_index;
    config.force = force;
    if (!format_text.empty()) {
        config.format = parse_format(format_text);
    }
    std::error_code ec;
    const auto cwd = std::filesystem::current_path(ec);
    config.registry_source = resolve_registry(registry_flag, std::getenv("VENDOKIT_REGISTRY"), cwd);

    try {
        if (list->parsed()) return cmd_list(config, io);
        if (info->parsed()) return cmd_info(config, name, io);
        if (add->parsed()) return cmd_add(config, names, io);
        if (update->parsed()) return cmd_update(config, names, io);
        if (bump->parsed()) {
            const auto part = major ? VersionPart::major : minor ? VersionPart::minor : VersionPart::patch;
            return cmd_bump(config, part, names, io);
        }
        if (manifest->parsed()) return cmd_manifest(config, io);
        if (depgraph->parsed()) return cmd_depgraph(config, io);
        if (audit->parsed()) return cmd_audit(config, files, io);
        if (benchreport->parsed()) return cmd_benchreport(config, results_path, io);
        if (benchrun->parsed()) return cmd_benchrun(config, subject_cmd, reference_cmd, calibration, group, io);
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
    }
    return exit_input;
}

}  // namespace vendokit::cli
