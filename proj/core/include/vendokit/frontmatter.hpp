#pragma once

#include <vendokit/semver.hpp>
#include <vendokit/taxonomy.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vendokit {

/// Describes the comment syntax of managed files.
///
/// The metadata block is delimited by `<prefix> /// zerodep` and
/// `<prefix> ///`, each on a line of its own.
struct Profile {
    std::string comment_prefix = "#";
    std::string extension = ".py";

    std::string open_sentinel() const { return comment_prefix + " /// zerodep"; }
    std::string close_sentinel() const { return comment_prefix + " ///"; }
};

struct FrontmatterBlock {
    std::size_t start_line = 0;  // 0-based, the opening sentinel
    std::size_t end_line = 0;    // 0-based, inclusive, the closing sentinel
    std::vector<std::string> raw_lines;
};

struct ModuleMetadata {
    std::string name;
    SemVer version;
    std::vector<std::string> deps;
    Tier tier = Tier::simple;
    Category category = Category::network;
    /// Unrecognized keys with their raw value text, in source order.
    std::vector<std::pair<std::string, std::string>> extra;

    friend bool operator==(const ModuleMetadata&, const ModuleMetadata&) = default;
};

/// Byte range of the version value (between its quotes) within a source text.
struct TextSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Finds the first metadata block. Only blank lines and comment lines
/// (including a shebang) may precede it.
///
/// Throws Error(NoFrontmatter) or Error(UnterminatedBlock).
FrontmatterBlock extract_block(std::string_view source, const Profile& profile = {});

/// Parses the `key = value` assignments of a block into typed metadata.
/// `module_name` comes from the file name, never from the block.
ModuleMetadata parse_metadata(const FrontmatterBlock& block, std::string_view module_name,
                              const Profile& profile = {});

/// extract_block followed by parse_metadata.
ModuleMetadata read_metadata(std::string_view source, std::string_view module_name,
                             const Profile& profile = {});

/// Locates the quoted value of the `version` assignment.
/// Throws Error(MissingRequiredKey) when the block has no version key.
TextSpan locate_version_value(std::string_view source, const Profile& profile = {});

/// Rewrites the version value in place; every other byte is preserved.
std::string replace_version(std::string_view source, const SemVer& new_version,
                            const Profile& profile = {});

/// Emits a canonical block (sentinels included) for `meta`. Extra keys are
/// written back with their raw value text.
std::vector<std::string> render_block(const ModuleMetadata& meta, const Profile& profile = {});

}  // namespace vendokit
