#include <vendokit/error.hpp>

namespace vendokit {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::MalformedVersion: return "MalformedVersion";
    case Errc::NoFrontmatter: return "NoFrontmatter";
    case Errc::UnterminatedBlock: return "UnterminatedBlock";
    case Errc::MalformedAssignment: return "MalformedAssignment";
    case Errc::MissingRequiredKey: return "MissingRequiredKey";
    case Errc::InvalidTier: return "InvalidTier";
    case Errc::InvalidCategory: return "InvalidCategory";
    case Errc::InvalidModuleName: return "InvalidModuleName";
    case Errc::InvalidDependency: return "InvalidDependency";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::InvalidModuleFiles: return "InvalidModuleFiles";
    case Errc::UnknownDependency: return "UnknownDependency";
    case Errc::MalformedManifest: return "MalformedManifest";
    case Errc::UnsupportedSchemaVersion: return "UnsupportedSchemaVersion";
    case Errc::NotFound: return "NotFound";
    case Errc::TransportError: return "TransportError";
    case Errc::HashMismatch: return "HashMismatch";
    case Errc::DependencyCycle: return "DependencyCycle";
    case Errc::UnknownModule: return "UnknownModule";
    case Errc::MalformedResults: return "MalformedResults";
    case Errc::EmptyResults: return "EmptyResults";
    case Errc::DuplicateRole: return "DuplicateRole";
    case Errc::NonPositiveRatio: return "NonPositiveRatio";
    case Errc::EmptyModule: return "EmptyModule";
    case Errc::EmptySamples: return "EmptySamples";
    case Errc::NonPositiveSample: return "NonPositiveSample";
    case Errc::CommandFailed: return "CommandFailed";
    case Errc::Timeout: return "Timeout";
    case Errc::WouldOverwrite: return "WouldOverwrite";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace vendokit
