#pragma once

#include <vendokit/semver.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace vendokit::cli {

/// What `add`/`update` last wrote into a target directory. Lets `update`
/// tell an untouched-but-outdated copy from a locally edited one.
struct LockRecord {
    SemVer version;
    std::string content_hash;
};

struct LockFile {
    static constexpr const char* file_name = ".vendokit-lock.json";

    std::map<std::string, LockRecord> modules;

    /// Missing file yields an empty lock; a malformed one throws Error(Io).
    static LockFile read(const std::filesystem::path& target_dir);
    void write(const std::filesystem::path& target_dir) const;
};

}  // namespace vendokit::cli
