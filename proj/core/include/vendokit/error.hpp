#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vendokit {

enum class Errc {
    // semver
    MalformedVersion,
    // frontmatter
    NoFrontmatter,
    UnterminatedBlock,
    MalformedAssignment,
    MissingRequiredKey,
    InvalidTier,
    InvalidCategory,
    InvalidModuleName,
    InvalidDependency,
    DuplicateKey,
    // registry
    InvalidModuleFiles,
    UnknownDependency,
    MalformedManifest,
    UnsupportedSchemaVersion,
    NotFound,
    TransportError,
    HashMismatch,
    // depgraph
    DependencyCycle,
    UnknownModule,
    // benchcompare
    MalformedResults,
    EmptyResults,
    DuplicateRole,
    NonPositiveRatio,
    EmptyModule,
    EmptySamples,
    NonPositiveSample,
    CommandFailed,
    Timeout,
    // cli
    WouldOverwrite,
    Io,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library.
///
/// `details` carries structured context where one message is not enough:
/// the cycle path for DependencyCycle, per-file messages for
/// InvalidModuleFiles, the offending names for UnknownDependency.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::vector<std::string> details = {})
        : std::runtime_error(message), _code(code), _details(std::move(details)) {}

    Errc code() const noexcept { return _code; }
    const std::vector<std::string>& details() const noexcept { return _details; }

private:
    Errc _code;
    std::vector<std::string> _details;
};

}  // namespace vendokit
