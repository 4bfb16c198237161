#pragma once

#include <vendokit/manifest.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vendokit {

enum class ImportClass { stdlib, registry, local, third_party };

std::string_view to_string(ImportClass c) noexcept;

struct ImportFinding {
    std::size_t line_number = 0;  // 1-based
    std::string statement;        // verbatim source line
    std::string root_name;        // first dotted component, or "." for relative imports
    std::optional<ImportClass> classification;
};

/// Set of top-level standard-library module names for one language version.
class StdlibIndex {
public:
    StdlibIndex(std::string label, std::set<std::string> names);

    /// One name per line; `#` starts a comment. Throws Error(Io) when no name is found.
    static StdlibIndex parse(std::string label, std::string_view text);

    /// A bundled index by label, e.g. "python3.12".
    static std::optional<StdlibIndex> bundled(std::string_view label);

    /// Bundled label when one matches, otherwise a path to an index file.
    static StdlibIndex load(std::string_view label_or_path);

    static std::vector<std::string> bundled_labels();
    static constexpr std::string_view default_label = "python3.12";

    const std::string& label() const noexcept { return _label; }
    const std::set<std::string>& names() const noexcept { return _names; }
    bool contains(std::string_view name) const { return _names.contains(std::string(name)); }

private:
    std::string _label;
    std::set<std::string> _names;
};

/// Line-based import scan. Lines inside triple-quoted strings are skipped.
/// Never fails, whatever the input bytes.
std::vector<ImportFinding> scan_imports(std::string_view source);

/// Precedence: relative import > stdlib > registry module > third party.
std::vector<ImportFinding> classify(std::vector<ImportFinding> findings, const StdlibIndex& stdlib,
                                    const Manifest& manifest);

struct AuditReport {
    std::array<std::size_t, 4> counts{};  // indexed by ImportClass
    std::vector<ImportFinding> offending;
    bool pass = true;

    std::size_t count(ImportClass c) const noexcept { return counts[static_cast<std::size_t>(c)]; }
};

/// Throws std::invalid_argument for an unclassified finding.
AuditReport audit_report(const std::vector<ImportFinding>& findings);

}  // namespace vendokit
