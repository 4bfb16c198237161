#include <vendokit/semver.hpp>

#include <vendokit/error.hpp>

#include <algorithm>
#include <charconv>
#include <limits>

namespace vendokit {

namespace {

bool is_ident_char(char c) noexcept {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-';
}

bool all_digits(std::string_view s) noexcept {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
    throw Error(Errc::MalformedVersion,
                "malformed version '" + std::string(text) + "': " + std::string(why));
}

std::uint64_t parse_numeric(std::string_view whole, std::string_view field, std::string_view what) {
    if (field.empty()) {
        malformed(whole, "missing " + std::string(what) + " component");
    }
    if (!all_digits(field)) {
        malformed(whole, std::string(what) + " component is not a non-negative integer");
    }
    if (field.size() > 1 && field.front() == '0') {
        malformed(whole, "leading zero in " + std::string(what) + " component");
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        malformed(whole, std::string(what) + " component out of range");
    }
    return value;
}

std::vector<std::string> parse_identifiers(std::string_view whole, std::string_view part,
                                           bool numeric_rule) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto dot = part.find('.', start);
        const auto ident = part.substr(start, dot == std::string_view::npos ? part.size() - start
                                                                             : dot - start);
        if (ident.empty()) {
            malformed(whole, "empty identifier");
        }
        if (!std::all_of(ident.begin(), ident.end(), is_ident_char)) {
            malformed(whole, "identifier '" + std::string(ident) + "' has invalid characters");
        }
        if (numeric_rule && all_digits(ident) && ident.size() > 1 && ident.front() == '0') {
            malformed(whole, "numeric prerelease identifier with leading zero");
        }
        out.emplace_back(ident);
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    return out;
}

std::strong_ordering compare_identifier(const std::string& a, const std::string& b) noexcept {
    const bool an = all_digits(a);
    const bool bn = all_digits(b);
    if (an && bn) {
        // No leading zeros, so length orders first; this also survives overflow.
        if (a.size() != b.size()) {
            return a.size() <=> b.size();
        }
        return a.compare(b) <=> 0;
    }
    if (an != bn) {
        return an ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.compare(b) <=> 0;
}

}  // namespace

SemVer parse_version(std::string_view text) {
    if (text.empty()) {
        malformed(text, "empty string");
    }
    std::string_view rest = text;
    std::string_view build_part;
    std::string_view pre_part;
    bool has_build = false;
    bool has_pre = false;

    if (const auto plus = rest.find('+'); plus != std::string_view::npos) {
        build_part = rest.substr(plus + 1);
        rest = rest.substr(0, plus);
        has_build = true;
    }
    if (const auto dash = rest.find('-'); dash != std::string_view::npos) {
        pre_part = rest.substr(dash + 1);
        rest = rest.substr(0, dash);
        has_pre = true;
    }

    SemVer v;
    const auto d1 = rest.find('.');
    if (d1 == std::string_view::npos) {
        malformed(text, "expected MAJOR.MINOR.PATCH");
    }
    const auto d2 = rest.find('.', d1 + 1);
    if (d2 == std::string_view::npos) {
        malformed(text, "expected MAJOR.MINOR.PATCH");
    }
    if (rest.find('.', d2 + 1) != std::string_view::npos) {
        malformed(text, "too many numeric components");
    }
    v.major = parse_numeric(text, rest.substr(0, d1), "major");
    v.minor = parse_numeric(text, rest.substr(d1 + 1, d2 - d1 - 1), "minor");
    v.patch = parse_numeric(text, rest.substr(d2 + 1), "patch");
    if (has_pre) {
        v.prerelease = parse_identifiers(text, pre_part, true);
    }
    if (has_build) {
        v.build = parse_identifiers(text, build_part, false);
    }
    return v;
}

std::strong_ordering compare_versions(const SemVer& a, const SemVer& b) noexcept {
    if (auto c = a.major <=> b.major; c != 0) return c;
    if (auto c = a.minor <=> b.minor; c != 0) return c;
    if (auto c = a.patch <=> b.patch; c != 0) return c;

    if (a.prerelease.empty() || b.prerelease.empty()) {
        // A release outranks any of its prereleases.
        return a.prerelease.empty() <=> b.prerelease.empty();
    }
    const auto n = std::min(a.prerelease.size(), b.prerelease.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare_identifier(a.prerelease[i], b.prerelease[i]); c != 0) {
            return c;
        }
    }
    return a.prerelease.size() <=> b.prerelease.size();
}

SemVer bump_version(const SemVer& v, VersionPart part) {
    SemVer out;
    out.major = v.major;
    out.minor = v.minor;
    out.patch = v.patch;
    switch (part) {
    case VersionPart::major:
        ++out.major;
        out.minor = 0;
        out.patch = 0;
        break;
    case VersionPart::minor:
        ++out.minor;
        out.patch = 0;
        break;
    case VersionPart::patch:
        ++out.patch;
        break;
    }
    return out;
}

std::string format_version(const SemVer& v) {
    std::string out = std::to_string(v.major) + '.' + std::to_string(v.minor) + '.' +
                      std::to_string(v.patch);
    auto append = [&out](char sep, const std::vector<std::string>& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out += i == 0 ? sep : '.';
            out += ids[i];
        }
    };
    append('-', v.prerelease);
    append('+', v.build);
    return out;
}

std::string_view to_string(VersionPart part) noexcept {
    switch (part) {
    case VersionPart::major: return "major";
    case VersionPart::minor: return "minor";
    case VersionPart::patch: return "patch";
    }
    return "patch";
}

}  // namespace vendokit
