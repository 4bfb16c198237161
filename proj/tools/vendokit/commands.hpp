#pragma once

#include <vendokit/audit.hpp>
#include <vendokit/bench.hpp>
#include <vendokit/frontmatter.hpp>
#include <vendokit/semver.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vendokit::cli {

/// Process exit codes. The mapping is part of the tool's contract.
enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,           // environment or input error
    exit_unknown_module = 3,
    exit_overwrite = 4,       // add refused to overwrite local changes
    exit_fetch = 5,           // fetch or integrity failure
    exit_validation = 6,      // registry validation failure
    exit_audit = 7,           // audit found third-party imports
};

enum class OutputFormat { text, markdown, dot, json };

std::optional<OutputFormat> parse_format(std::string_view text) noexcept;

struct CliConfig {
    std::string registry_source;  // local path or http(s) base URL; may be empty
    std::filesystem::path target_dir = ".";
    std::string stdlib_index = std::string(StdlibIndex::default_label);
    bool force = false;
    std::optional<OutputFormat> format;
    Profile profile;
};

/// `--registry` flag, then the VENDOKIT_REGISTRY variable, then `./manifest.json`
/// in `cwd` (working-tree mode). Empty when none applies.
std::string resolve_registry(const std::optional<std::string>& flag, const char* env_value,
                             const std::filesystem::path& cwd);

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

int cmd_list(const CliConfig& config, Streams io);
int cmd_info(const CliConfig& config, const std::string& name, Streams io);
int cmd_add(const CliConfig& config, const std::vector<std::string>& names, Streams io);
int cmd_update(const CliConfig& config, const std::vector<std::string>& names, Streams io);
int cmd_bump(const CliConfig& config, VersionPart part, const std::vector<std::string>& names, Streams io);
int cmd_manifest(const CliConfig& config, Streams io);
int cmd_depgraph(const CliConfig& config, Streams io);
int cmd_audit(const CliConfig& config, const std::vector<std::string>& files, Streams io);
int cmd_benchreport(const CliConfig& config, const std::filesystem::path& results_path, Streams io);
int cmd_benchrun(const CliConfig& config, const std::string& subject_cmd, const std::string& reference_cmd,
                 const Calibration& calibration, const std::string& group, Streams io);

/// Parses the command line and dispatches; returns the exit code.
int run(int argc, const char* const* argv, Streams io);

}  // namespace vendokit::cli
