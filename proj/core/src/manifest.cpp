#include <vendokit/manifest.hpp>

#include <vendokit/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>

namespace vendokit {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw Error(Errc::MalformedManifest, "malformed manifest: " + why);
}

const json& require(const json& object, const char* key, const std::string& where) {
    const auto it = object.find(key);
    if (it == object.end()) {
        malformed(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& object, const char* key, const std::string& where) {
    const auto& v = require(object, key, where);
    if (!v.is_string()) {
        malformed(where + ": field '" + std::string(key) + "' must be a string");
    }
    return v.get<std::string>();
}

bool is_safe_relative_path(std::string_view path) {
    if (path.empty() || path.front() == '/' || path.find('\\') != std::string_view::npos) {
        return false;
    }
    std::size_t start = 0;
    while (start <= path.size()) {
        auto slash = path.find('/', start);
        if (slash == std::string_view::npos) {
            slash = path.size();
        }
        const auto part = path.substr(start, slash - start);
        if (part.empty() || part == "." || part == "..") {
            return false;
        }
        start = slash + 1;
    }
    return true;
}

ManifestEntry parse_entry(const std::string& name, const json& obj) {
    const std::string where = "module '" + name + "'";
    if (!obj.is_object()) {
        malformed(where + ": entry must be an object");
    }
    if (!is_module_identifier(name)) {
        malformed("invalid module name '" + name + "'");
    }
    ManifestEntry e;
    e.name = name;
    try {
        e.version = parse_version(require_string(obj, "version", where));
    } catch (const Error& err) {
        if (err.code() != Errc::MalformedVersion) {
            throw;
        }
        malformed(where + ": " + err.what());
    }
    e.content_hash = require_string(obj, "content_hash", where);
    if (!is_content_hash(e.content_hash)) {
        malformed(where + ": content_hash must be 64 lowercase hex characters");
    }
    const auto& deps = require(obj, "deps", where);
    if (!deps.is_array()) {
        malformed(where + ": field 'deps' must be an array");
    }
    std::set<std::string> seen;
    for (const auto& d : deps) {
        if (!d.is_string() || !is_module_identifier(d.get<std::string>())) {
            malformed(where + ": deps must be module identifiers");
        }
        auto dep = d.get<std::string>();
        if (dep == name || !seen.insert(dep).second) {
            malformed(where + ": dependency '" + dep + "' is repeated or self-referential");
        }
        e.deps.push_back(std::move(dep));
    }
    const auto tier = parse_tier(require_string(obj, "tier", where));
    if (!tier) {
        malformed(where + ": invalid tier");
    }
    e.tier = *tier;
    const auto category = parse_category(require_string(obj, "category", where));
    if (!category) {
        malformed(where + ": invalid category");
    }
    e.category = *category;
    e.path = require_string(obj, "path", where);
    if (!is_safe_relative_path(e.path)) {
        malformed(where + ": path must be a relative path without '.' or '..' segments");
    }
    return e;
}

}  // namespace

bool is_content_hash(std::string_view text) noexcept {
    return text.size() == 64 && std::all_of(text.begin(), text.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
           });
}

std::string serialize_manifest(const Manifest& manifest) {
    json modules = json::object();
    for (const auto& [name, e] : manifest.modules) {
        modules[name] = json{
            {"category", to_string(e.category)},
            {"content_hash", e.content_hash},
            {"deps", e.deps},
            {"path", e.path},
            {"tier", to_string(e.tier)},
            {"version", format_version(e.version)},
        };
    }
    const json doc{{"modules", std::move(modules)}, {"schema_version", manifest.schema_version}};
    return doc.dump(2) + "\n";
}

Manifest load_manifest(std::string_view document) {
    // nlohmann keeps the last of duplicate keys; track keys per open object instead.
    std::vector<std::set<std::string>> open_objects;
    std::string duplicate;
    const json::parser_callback_t track_keys = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start: open_objects.emplace_back(); break;
        case json::parse_event_t::object_end: open_objects.pop_back(); break;
        case json::parse_event_t::key:
            if (!open_objects.empty() && !open_objects.back().insert(parsed.get<std::string>()).second &&
                duplicate.empty()) {
                duplicate = parsed.get<std::string>();
            }
            break;
        default: break;
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(document.begin(), document.end(), track_keys);
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    if (!duplicate.empty()) {
        malformed("duplicate key '" + duplicate + "'");
    }
    if (!doc.is_object()) {
        malformed("document must be an object");
    }
    const auto& schema = require(doc, "schema_version", "document");
    if (!schema.is_number_integer()) {
        malformed("schema_version must be an integer");
    }
    if (schema.get<long long>() != manifest_schema_version) {
        throw Error(Errc::UnsupportedSchemaVersion,
                    "unsupported manifest schema_version " + std::to_string(schema.get<long long>()));
    }
    const auto& modules = require(doc, "modules", "document");
    if (!modules.is_object()) {
        malformed("'modules' must be an object");
    }

    Manifest manifest;
    for (const auto& [name, obj] : modules.items()) {
        manifest.modules.emplace(name, parse_entry(name, obj));
    }
    for (const auto& [name, e] : manifest.modules) {
        for (const auto& dep : e.deps) {
            if (!manifest.contains(dep)) {
                malformed("module '" + name + "' depends on unknown module '" + dep + "'");
            }
        }
    }
    return manifest;
}

}  // namespace vendokit
