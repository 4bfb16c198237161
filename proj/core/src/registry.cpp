#include <vendokit/registry.hpp>

#include <vendokit/depgraph.hpp>
#include <vendokit/error.hpp>
#include <vendokit/file_io.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <array>

namespace vendokit {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view version_placeholder = "@VERSION@";

std::string normalize_line_endings(std::string_view source) {
    std::string out;
    out.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i] == '\r' && i + 1 < source.size() && source[i + 1] == '\n') {
            continue;
        }
        out += source[i];
    }
    return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw Error(Errc::Io, "SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0x0f];
    }
    return out;
}

std::string content_hash(std::string_view source, const Profile& profile) {
    auto normalized = normalize_line_endings(source);
    const auto span = locate_version_value(normalized, profile);
    normalized.replace(span.offset, span.length, version_placeholder);
    return sha256_hex(normalized);
}

Manifest build_manifest(const fs::path& registry_root, const Profile& profile) {
    const auto modules_dir = registry_root / "modules";
    std::error_code ec;
    if (!fs::is_directory(modules_dir, ec)) {
        throw Error(Errc::NotFound, "registry has no modules directory: " + modules_dir.string());
    }

    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(modules_dir)) {
        if (item.is_regular_file() && item.path().extension() == profile.extension) {
            files.push_back(item.path());
        }
    }
    std::sort(files.begin(), files.end());

    Manifest manifest;
    std::vector<std::string> problems;
    for (const auto& file : files) {
        const auto rel = "modules/" + file.filename().string();
        try {
            const auto source = read_file(file);
            const auto meta = read_metadata(source, file.stem().string(), profile);
            ManifestEntry e;
            e.name = meta.name;
            e.version = meta.version;
            e.content_hash = content_hash(source, profile);
            e.deps = meta.deps;
            e.tier = meta.tier;
            e.category = meta.category;
            e.path = rel;
            manifest.modules.emplace(e.name, std::move(e));
        } catch (const Error& err) {
            problems.push_back(rel + ": " + err.what());
        }
    }
    if (!problems.empty()) {
        std::string message = std::to_string(problems.size()) + " module file(s) failed validation";
        throw Error(Errc::InvalidModuleFiles, message, std::move(problems));
    }

    std::vector<std::string> unknown;
    for (const auto& [name, e] : manifest.modules) {
        for (const auto& dep : e.deps) {
            if (!manifest.contains(dep)) {
                unknown.push_back(name + " -> " + dep);
            }
        }
    }
    if (!unknown.empty()) {
        const auto message = "undeclared dependency: " + unknown.front();
        throw Error(Errc::UnknownDependency, message, std::move(unknown));
    }

    build_graph(manifest);  // acyclicity
    return manifest;
}

std::string LocalStore::read(std::string_view relative_path) const {
    return read_file(_root / fs::path(std::string(relative_path)));
}

bool is_remote_source(std::string_view source) noexcept {
    return source.starts_with("http://") || source.starts_with("https://");
}

std::unique_ptr<Store> open_store(std::string_view source, RetryPolicy policy) {
    if (is_remote_source(source)) {
        return std::make_unique<HttpStore>(std::string(source), policy);
    }
    return std::make_unique<LocalStore>(fs::path(std::string(source)));
}

Manifest load_manifest(const Store& store) {
    return load_manifest(store.read("manifest.json"));
}

std::string fetch_module(const Store& store, const ManifestEntry& entry, const Profile& profile) {
    auto bytes = store.read(entry.path);
    std::string actual;
    try {
        actual = content_hash(bytes, profile);
    } catch (const Error& err) {
        throw Error(Errc::HashMismatch, "fetched " + entry.path + " is not a valid module (" +
                                            err.what() + ")");
    }
    if (actual != entry.content_hash) {
        throw Error(Errc::HashMismatch, "content hash mismatch for " + entry.path + ": manifest " +
                                            entry.content_hash + ", fetched " + actual);
    }
    // The hash masks the version value, so check it separately.
    const auto span = locate_version_value(bytes, profile);
    const auto version_text = std::string_view(bytes).substr(span.offset, span.length);
    if (version_text != format_version(entry.version)) {
        throw Error(Errc::HashMismatch, "version mismatch for " + entry.path + ": manifest " +
                                            format_version(entry.version) + ", fetched " +
                                            std::string(version_text));
    }
    return bytes;
}

std::string_view to_string(LocalStatus status) noexcept {
    switch (status) {
    case LocalStatus::clean: return "clean";
    case LocalStatus::modified: return "modified";
    case LocalStatus::version_drift: return "version_drift";
    }
    return "modified";
}

LocalStatus verify_local(std::string_view file, const ManifestEntry& entry, const Profile& profile) {
    if (content_hash(file, profile) != entry.content_hash) {
        return LocalStatus::modified;
    }
    const auto local = read_metadata(file, entry.name, profile);
    if (local.version != entry.version) {
        return LocalStatus::version_drift;
    }
    return LocalStatus::clean;
}

}  // namespace vendokit
