#include "lockfile.hpp"

#include <vendokit/error.hpp>
#include <vendokit/file_io.hpp>
#include <vendokit/manifest.hpp>

#include <json.hpp>

namespace vendokit::cli {

using nlohmann::json;

LockFile LockFile::read(const std::filesystem::path& target_dir) {
    LockFile lock;
    const auto path = target_dir / file_name;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        return lock;
    }
    try {
        const auto doc = json::parse(read_file(path));
        for (const auto& [name, rec] : doc.at("modules").items()) {
            LockRecord r;
            r.version = parse_version(rec.at("version").get<std::string>());
            r.content_hash = rec.at("content_hash").get<std::string>();
            if (!is_content_hash(r.content_hash)) {
                throw Error(Errc::Io, "bad content hash for " + name);
            }
            lock.modules.emplace(name, std::move(r));
        }
    } catch (const std::exception& e) {
        throw Error(Errc::Io, "unreadable lock file " + path.string() + ": " + e.what());
    }
    return lock;
}

void LockFile::write(const std::filesystem::path& target_dir) const {
    json modules_json = json::object();
    for (const auto& [name, r] : modules) {
        modules_json[name] = {{"content_hash", r.content_hash}, {"version", format_version(r.version)}};
    }
    const json doc{{"modules", std::move(modules_json)}, {"schema_version", 1}};
    write_file(target_dir / file_name, doc.dump(2) + "\n");
}

}  // namespace vendokit::cli
