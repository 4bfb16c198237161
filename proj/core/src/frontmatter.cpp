#include <vendokit/frontmatter.hpp>

#include <vendokit/error.hpp>

#include "text_lines.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <variant>

namespace vendokit {

namespace {

struct BlockLocation {
    std::vector<detail::LineRef> lines;
    std::size_t start = 0;
    std::size_t end = 0;
};

bool is_blank(std::string_view s) noexcept {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\f'; });
}

std::string_view ltrim(std::string_view s) noexcept {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

BlockLocation locate_block(std::string_view source, const Profile& profile) {
    BlockLocation loc;
    loc.lines = detail::split_lines(source);
    const auto open = profile.open_sentinel();
    const auto close = profile.close_sentinel();

    std::optional<std::size_t> start;
    for (std::size_t i = 0; i < loc.lines.size(); ++i) {
        auto text = loc.lines[i].text;
        if (i == 0 && text.starts_with("\xEF\xBB\xBF")) {
            text.remove_prefix(3);
        }
        if (text == open) {
            start = i;
            break;
        }
        if (is_blank(text) || ltrim(text).starts_with(profile.comment_prefix) ||
            (i == 0 && text.starts_with("#!"))) {
            continue;
        }
        throw Error(Errc::NoFrontmatter, "no '" + open + "' block before line " +
                                             std::to_string(i + 1));
    }
    if (!start) {
        throw Error(Errc::NoFrontmatter, "no '" + open + "' block found");
    }
    for (std::size_t i = *start + 1; i < loc.lines.size(); ++i) {
        const auto text = loc.lines[i].text;
        if (text == close) {
            loc.start = *start;
            loc.end = i;
            return loc;
        }
        if (!text.starts_with(profile.comment_prefix)) {
            break;
        }
    }
    throw Error(Errc::UnterminatedBlock,
                "block opened on line " + std::to_string(*start + 1) + " is never closed");
}

using Value = std::variant<std::string, std::vector<std::string>>;

struct Assignment {
    std::string key;
    Value value;
    std::string raw_value;
    std::size_t value_offset = 0;  // within the interior content
    std::size_t value_length = 0;
};

class AssignmentParser {
public:
    explicit AssignmentParser(std::string_view text) : _text(text) {}

    Assignment parse() {
        Assignment a;
        skip_ws();
        const auto key_begin = _pos;
        while (_pos < _text.size() && is_key_char(_text[_pos])) {
            ++_pos;
        }
        if (_pos == key_begin) {
            fail("expected a key");
        }
        a.key = std::string(_text.substr(key_begin, _pos - key_begin));
        skip_ws();
        if (!consume('=')) {
            fail("expected '=' after key '" + a.key + "'");
        }
        skip_ws();
        const auto value_begin = _pos;
        if (peek() == '"') {
            a.value = parse_string();
        } else if (peek() == '[') {
            a.value = parse_array();
        } else {
            fail("value must be a quoted string or an array of strings");
        }
        a.value_offset = value_begin;
        a.value_length = _pos - value_begin;
        a.raw_value = std::string(_text.substr(value_begin, _pos - value_begin));
        skip_ws();
        if (_pos < _text.size() && _text[_pos] != '#') {
            fail("unexpected text after value");
        }
        return a;
    }

private:
    static bool is_key_char(char c) noexcept {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '-';
    }

    char peek() const noexcept { return _pos < _text.size() ? _text[_pos] : '\0'; }

    bool consume(char c) noexcept {
        if (peek() == c && _pos < _text.size()) {
            ++_pos;
            return true;
        }
        return false;
    }

    void skip_ws() noexcept {
        while (_pos < _text.size() && (_text[_pos] == ' ' || _text[_pos] == '\t')) {
            ++_pos;
        }
    }

    std::string parse_string() {
        consume('"');
        std::string out;
        while (_pos < _text.size()) {
            const char c = _text[_pos++];
            if (c == '"') {
                return out;
            }
            if (c != '\\') {
                out += c;
                continue;
            }
            if (_pos >= _text.size()) {
                break;
            }
            switch (const char e = _text[_pos++]; e) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: fail(std::string("unsupported escape '\\") + e + "'");
            }
        }
        fail("unterminated string");
    }

    std::vector<std::string> parse_array() {
        consume('[');
        std::vector<std::string> out;
        skip_ws();
        if (consume(']')) {
            return out;
        }
        while (true) {
            skip_ws();
            if (peek() != '"') {
                fail("array items must be quoted strings");
            }
            out.push_back(parse_string());
            skip_ws();
            if (consume(']')) {
                return out;
            }
            if (!consume(',')) {
                fail("expected ',' or ']' in array");
            }
            skip_ws();
            if (consume(']')) {
                return out;  // trailing comma
            }
        }
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::MalformedAssignment, why);
    }

    std::string_view _text;
    std::size_t _pos = 0;
};

struct ParsedLine {
    std::size_t line_index = 0;  // index into the block's lines
    std::size_t content_offset = 0;  // offset of the interior content within the line
    Assignment assignment;
};

/// Parses every interior line; comment-only and blank interior lines are skipped.
std::vector<ParsedLine> parse_interior(const std::vector<std::string_view>& lines,
                                       const Profile& profile) {
    std::vector<ParsedLine> out;
    std::set<std::string> seen;
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const auto line = lines[i];
        if (!line.starts_with(profile.comment_prefix)) {
            throw Error(Errc::MalformedAssignment,
                        "interior line " + std::to_string(i) + " lacks the comment prefix");
        }
        const auto content = line.substr(profile.comment_prefix.size());
        const auto trimmed = ltrim(content);
        if (trimmed.empty() || trimmed.front() == '#' || is_blank(trimmed)) {
            continue;
        }
        ParsedLine parsed;
        parsed.line_index = i;
        parsed.content_offset = profile.comment_prefix.size();
        try {
            parsed.assignment = AssignmentParser(content).parse();
        } catch (const Error& e) {
            throw Error(Errc::MalformedAssignment,
                        "malformed assignment '" + std::string(trimmed) + "': " + e.what());
        }
        if (!seen.insert(parsed.assignment.key).second) {
            throw Error(Errc::DuplicateKey, "duplicate key '" + parsed.assignment.key + "'");
        }
        out.push_back(std::move(parsed));
    }
    return out;
}

const std::string& expect_string(const Assignment& a) {
    if (const auto* s = std::get_if<std::string>(&a.value)) {
        return *s;
    }
    throw Error(Errc::MalformedAssignment, "key '" + a.key + "' expects a string value");
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

FrontmatterBlock extract_block(std::string_view source, const Profile& profile) {
    const auto loc = locate_block(source, profile);
    FrontmatterBlock block;
    block.start_line = loc.start;
    block.end_line = loc.end;
    for (std::size_t i = loc.start; i <= loc.end; ++i) {
        block.raw_lines.emplace_back(loc.lines[i].text);
    }
    return block;
}

ModuleMetadata parse_metadata(const FrontmatterBlock& block, std::string_view module_name,
                              const Profile& profile) {
    if (!is_module_identifier(module_name)) {
        throw Error(Errc::InvalidModuleName, "invalid module name '" + std::string(module_name) + "'");
    }
    if (block.raw_lines.size() < 2 || block.raw_lines.front() != profile.open_sentinel() ||
        block.raw_lines.back() != profile.close_sentinel()) {
        throw Error(Errc::MalformedAssignment, "block is not delimited by the sentinels");
    }
    std::vector<std::string_view> lines(block.raw_lines.begin(), block.raw_lines.end());

    ModuleMetadata meta;
    meta.name = std::string(module_name);
    bool has_version = false;
    bool has_tier = false;
    bool has_category = false;

    for (const auto& parsed : parse_interior(lines, profile)) {
        const auto& a = parsed.assignment;
        if (a.key == "version") {
            meta.version = parse_version(expect_string(a));
            has_version = true;
        } else if (a.key == "tier") {
            const auto& text = expect_string(a);
            auto tier = parse_tier(text);
            if (!tier) {
                throw Error(Errc::InvalidTier, "invalid tier '" + text + "'");
            }
            meta.tier = *tier;
            has_tier = true;
        } else if (a.key == "category") {
            const auto& text = expect_string(a);
            auto category = parse_category(text);
            if (!category) {
                throw Error(Errc::InvalidCategory, "invalid category '" + text + "'");
            }
            meta.category = *category;
            has_category = true;
        } else if (a.key == "deps") {
            const auto* deps = std::get_if<std::vector<std::string>>(&a.value);
            if (!deps) {
                throw Error(Errc::MalformedAssignment, "key 'deps' expects an array of strings");
            }
            std::set<std::string_view> seen;
            for (const auto& dep : *deps) {
                if (!is_module_identifier(dep)) {
                    throw Error(Errc::InvalidDependency, "invalid dependency name '" + dep + "'");
                }
                if (dep == module_name) {
                    throw Error(Errc::InvalidDependency,
                                "module '" + meta.name + "' depends on itself");
                }
                if (!seen.insert(dep).second) {
                    throw Error(Errc::InvalidDependency, "duplicate dependency '" + dep + "'");
                }
            }
            meta.deps = *deps;
        } else {
            meta.extra.emplace_back(a.key, a.raw_value);
        }
    }

    if (!has_version) throw Error(Errc::MissingRequiredKey, "missing required key 'version'");
    if (!has_tier) throw Error(Errc::MissingRequiredKey, "missing required key 'tier'");
    if (!has_category) throw Error(Errc::MissingRequiredKey, "missing required key 'category'");
    return meta;
}

ModuleMetadata read_metadata(std::string_view source, std::string_view module_name,
                             const Profile& profile) {
    return parse_metadata(extract_block(source, profile), module_name, profile);
}

TextSpan locate_version_value(std::string_view source, const Profile& profile) {
    const auto loc = locate_block(source, profile);
    std::vector<std::string_view> lines;
    for (std::size_t i = loc.start; i <= loc.end; ++i) {
        lines.push_back(loc.lines[i].text);
    }
    for (const auto& parsed : parse_interior(lines, profile)) {
        const auto& a = parsed.assignment;
        if (a.key != "version") {
            continue;
        }
        expect_string(a);
        const auto& line = loc.lines[loc.start + parsed.line_index];
        // Skip the opening and closing quote of the raw value.
        return TextSpan{line.offset + parsed.content_offset + a.value_offset + 1,
                        a.value_length - 2};
    }
    throw Error(Errc::MissingRequiredKey, "missing required key 'version'");
}

std::string replace_version(std::string_view source, const SemVer& new_version,
                            const Profile& profile) {
    const auto span = locate_version_value(source, profile);
    std::string out;
    out.reserve(source.size() + 8);
    out.append(source.substr(0, span.offset));
    out.append(format_version(new_version));
    out.append(source.substr(span.offset + span.length));
    return out;
}

std::vector<std::string> render_block(const ModuleMetadata& meta, const Profile& profile) {
    const auto& p = profile.comment_prefix;
    std::vector<std::string> lines;
    lines.push_back(profile.open_sentinel());
    lines.push_back(p + " version = " + quote(format_version(meta.version)));
    if (!meta.deps.empty()) {
        std::string deps = p + " deps = [";
        for (std::size_t i = 0; i < meta.deps.size(); ++i) {
            if (i > 0) {
                deps += ", ";
            }
            deps += quote(meta.deps[i]);
        }
        deps += "]";
        lines.push_back(std::move(deps));
    }
    lines.push_back(p + " tier = " + quote(to_string(meta.tier)));
    lines.push_back(p + " category = " + quote(to_string(meta.category)));
    for (const auto& [key, raw] : meta.extra) {
        lines.push_back(p + " " + key + " = " + raw);
    }
    lines.push_back(profile.close_sentinel());
    return lines;
}

}  // namespace vendokit
