#pragma once

#include <vendokit/frontmatter.hpp>
#include <vendokit/manifest.hpp>

#include <chrono>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace vendokit {

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of the file after CRLF -> LF normalization and with the version
/// value replaced by `@VERSION@`. Invariant under version bumps and
/// line-ending convention, sensitive to every other byte.
std::string content_hash(std::string_view source, const Profile& profile = {});

/// Scans `<root>/modules/*<ext>` and builds a validated manifest.
///
/// Per-file failures are collected into one Error(InvalidModuleFiles) whose
/// details carry `<path>: <message>` lines. Undeclared dependencies raise
/// Error(UnknownDependency); cycles raise Error(DependencyCycle).
Manifest build_manifest(const std::filesystem::path& registry_root, const Profile& profile = {});

/// Transient-failure retry contract for remote stores.
struct RetryPolicy {
    int retries = 2;
    std::chrono::milliseconds delay{500};
    std::chrono::seconds timeout{30};
};

/// Read-only access to a registry laid out as `manifest.json` plus module
/// files under their manifest paths.
class Store {
public:
    virtual ~Store() = default;

    /// Returns the bytes at `relative_path`.
    /// Throws Error(NotFound) or Error(TransportError).
    virtual std::string read(std::string_view relative_path) const = 0;

    virtual std::string describe() const = 0;
};

class LocalStore final : public Store {
public:
    explicit LocalStore(std::filesystem::path root) : _root(std::move(root)) {}

    std::string read(std::string_view relative_path) const override;
    std::string describe() const override { return _root.string(); }
    const std::filesystem::path& root() const noexcept { return _root; }

private:
    std::filesystem::path _root;
};

/// HTTP(S) mirror of the local layout under a base URL. Connection failures
/// and 5xx answers are retried; 4xx answers never are.
class HttpStore final : public Store {
public:
    explicit HttpStore(std::string base_url, RetryPolicy policy = {});

    std::string read(std::string_view relative_path) const override;
    std::string describe() const override { return _base_url; }

private:
    std::string _base_url;
    std::string _scheme_host_port;
    std::string _base_path;
    RetryPolicy _policy;
};

bool is_remote_source(std::string_view source) noexcept;

/// `http://` and `https://` sources become an HttpStore, anything else a LocalStore.
std::unique_ptr<Store> open_store(std::string_view source, RetryPolicy policy = {});

Manifest load_manifest(const Store& store);

/// Reads `entry.path` and checks it against `entry.content_hash` and `entry.version`.
/// Throws Error(HashMismatch) when the bytes disagree with the manifest.
std::string fetch_module(const Store& store, const ManifestEntry& entry, const Profile& profile = {});

enum class LocalStatus { clean, modified, version_drift };

std::string_view to_string(LocalStatus status) noexcept;

/// Compares a vendored copy with its manifest entry.
LocalStatus verify_local(std::string_view file, const ManifestEntry& entry, const Profile& profile = {});

}  // namespace vendokit
