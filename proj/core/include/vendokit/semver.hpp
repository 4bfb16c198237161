#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vendokit {

/// A SemVer 2.0.0 version.
///
/// `operator==` is structural and includes build metadata, so it is the
/// right tool for round-trip checks. Precedence (which ignores build
/// metadata) is `compare_versions`.
struct SemVer {
    std::uint64_t major = 0;
    std::uint64_t minor = 0;
    std::uint64_t patch = 0;
    std::vector<std::string> prerelease;
    std::vector<std::string> build;

    bool is_prerelease() const noexcept { return !prerelease.empty(); }

    friend bool operator==(const SemVer&, const SemVer&) = default;
};

enum class VersionPart { major, minor, patch };

/// Parses `MAJOR.MINOR.PATCH[-pre][+build]`. Throws Error(MalformedVersion).
SemVer parse_version(std::string_view text);

/// SemVer 2.0.0 precedence. Build metadata never participates.
std::strong_ordering compare_versions(const SemVer& a, const SemVer& b) noexcept;

/// Increments `part`, zeroes the lower components and drops prerelease and build.
SemVer bump_version(const SemVer& v, VersionPart part);

std::string format_version(const SemVer& v);

std::string_view to_string(VersionPart part) noexcept;

}  // namespace vendokit
