#pragma once

#include <vendokit/semver.hpp>
#include <vendokit/taxonomy.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vendokit {

inline constexpr int manifest_schema_version = 1;

struct ManifestEntry {
    std::string name;
    SemVer version;
    std::string content_hash;  // 64 lowercase hex characters
    std::vector<std::string> deps;
    Tier tier = Tier::simple;
    Category category = Category::network;
    std::string path;  // relative to the registry root, e.g. "modules/sse.py"

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Registry index. Entries are keyed and serialized in lexicographic name order.
struct Manifest {
    int schema_version = manifest_schema_version;
    std::map<std::string, ManifestEntry> modules;

    const ManifestEntry* find(std::string_view name) const {
        const auto it = modules.find(std::string(name));
        return it == modules.end() ? nullptr : &it->second;
    }
    bool contains(std::string_view name) const { return find(name) != nullptr; }

    friend bool operator==(const Manifest&, const Manifest&) = default;
};

bool is_content_hash(std::string_view text) noexcept;

/// Canonical document: sorted keys, two-space indent, LF endings, trailing newline.
std::string serialize_manifest(const Manifest& manifest);

/// Parses and re-validates a manifest document.
/// Throws Error(MalformedManifest) or Error(UnsupportedSchemaVersion).
Manifest load_manifest(std::string_view document);

}  // namespace vendokit
