#include <vendokit/audit.hpp>

#include <vendokit/error.hpp>
#include <vendokit/file_io.hpp>

#include "bundled_stdlib.hpp"
#include "text_lines.hpp"

#include <stdexcept>

namespace vendokit {

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || (s.front() >= '0' && s.front() <= '9')) {
        return false;
    }
    for (char c : s) {
        const auto u = static_cast<unsigned char>(c);
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '_' || u >= 0x80;
        if (!ok) return false;
    }
    return true;
}

/// Root component of a dotted path, or empty when the path is not well formed.
std::string root_of(std::string_view dotted) {
    const auto root = dotted.substr(0, dotted.find('.'));
    std::size_t start = 0;
    while (start <= dotted.size()) {
        auto dot = dotted.find('.', start);
        if (dot == std::string_view::npos) dot = dotted.size();
        if (!is_identifier(dotted.substr(start, dot - start))) {
            return {};
        }
        start = dot + 1;
    }
    return std::string(root);
}

bool starts_with_keyword(std::string_view s, std::string_view kw) noexcept {
    return s.size() > kw.size() && s.starts_with(kw) && is_space(s[kw.size()]);
}

std::string_view next_token(std::string_view& s) noexcept {
    s = trim(s);
    std::size_t n = 0;
    while (n < s.size() && !is_space(s[n])) ++n;
    auto tok = s.substr(0, n);
    s.remove_prefix(n);
    return tok;
}

/// Root names imported by one simple statement.
std::vector<std::string> roots_of_statement(std::string_view stmt) {
    std::vector<std::string> roots;
    stmt = trim(stmt);
    if (starts_with_keyword(stmt, "import")) {
        auto rest = stmt.substr(6);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            if (comma == std::string_view::npos) comma = rest.size();
            auto item = rest.substr(start, comma - start);
            const auto path = next_token(item);
            if (auto root = root_of(path); !root.empty()) {
                roots.push_back(std::move(root));
            }
            start = comma + 1;
        }
    } else if (starts_with_keyword(stmt, "from")) {
        auto rest = stmt.substr(4);
        const auto module = next_token(rest);
        if (next_token(rest) != "import" || module.empty()) {
            return roots;
        }
        if (module.front() == '.') {
            roots.emplace_back(".");
        } else if (auto root = root_of(module); !root.empty()) {
            roots.push_back(std::move(root));
        }
    }
    return roots;
}

/// Index just past a single-quoted string starting at `i`, or npos if it does not close.
std::size_t skip_short_string(std::string_view line, std::size_t i) noexcept {
    const char q = line[i];
    for (std::size_t j = i + 1; j < line.size(); ++j) {
        if (line[j] == '\\') {
            ++j;
        } else if (line[j] == q) {
            return j + 1;
        }
    }
    return std::string_view::npos;
}

struct LineScan {
    std::vector<std::string_view> statements;  // code segments split on ';'
    std::string_view open_triple;                 // non-empty when the line ends inside one
};

/// Walks one line from `pos`, outside of any string.
LineScan scan_code(std::string_view line, std::size_t pos) {
    LineScan out;
    std::size_t seg_start = pos;
    std::size_t i = pos;
    auto close_segment = [&](std::size_t end) {
        out.statements.push_back(line.substr(seg_start, end - seg_start));
    };
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') {
            break;
        }
        if (c == ';') {
            close_segment(i);
            seg_start = ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            const auto delim = c == '"' ? std::string_view("\"\"\"") : std::string_view("'''");
            if (line.substr(i, 3) == delim) {
                const auto close = line.find(delim, i + 3);
                if (close == std::string_view::npos) {
                    close_segment(i);
                    out.open_triple = delim;
                    return out;
                }
                i = close + 3;
                continue;
            }
            const auto end = skip_short_string(line, i);
            if (end == std::string_view::npos) {
                break;
            }
            i = end;
            continue;
        }
        ++i;
    }
    close_segment(std::min(i, line.size()));
    return out;
}

}  // namespace

std::string_view to_string(ImportClass c) noexcept {
    switch (c) {
    case ImportClass::stdlib: return "stdlib";
    case ImportClass::registry: return "registry";
    case ImportClass::local: return "local";
    case ImportClass::third_party: return "third_party";
    }
    return "third_party";
}

StdlibIndex::StdlibIndex(std::string label, std::set<std::string> names)
    : _label(std::move(label)), _names(std::move(names)) {
    if (_names.empty()) {
        throw Error(Errc::Io, "stdlib index '" + _label + "' is empty");
    }
}

StdlibIndex StdlibIndex::parse(std::string label, std::string_view text) {
    std::set<std::string> names;
    for (const auto& line : detail::split_lines(text)) {
        auto name = trim(line.text.substr(0, line.text.find('#')));
        if (!name.empty()) {
            names.emplace(name);
        }
    }
    return StdlibIndex(std::move(label), std::move(names));
}

std::optional<StdlibIndex> StdlibIndex::bundled(std::string_view label) {
    for (const auto& idx : detail::bundled_stdlib_indexes()) {
        if (idx.label == label) {
            return parse(std::string(label), idx.text);
        }
    }
    return std::nullopt;
}

StdlibIndex StdlibIndex::load(std::string_view label_or_path) {
    if (auto idx = bundled(label_or_path)) {
        return std::move(*idx);
    }
    const std::filesystem::path path{std::string(label_or_path)};
    return parse(path.stem().string(), read_file(path));
}

std::vector<std::string> StdlibIndex::bundled_labels() {
    std::vector<std::string> labels;
    for (const auto& idx : detail::bundled_stdlib_indexes()) {
        labels.emplace_back(idx.label);
    }
    return labels;
}

std::vector<ImportFinding> scan_imports(std::string_view source) {
    std::vector<ImportFinding> findings;
    std::string_view open_triple;
    const auto lines = detail::split_lines(source);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto line = lines[n].text;
        std::size_t pos = 0;
        const bool inside_string = !open_triple.empty();
        if (inside_string) {
            const auto close = line.find(open_triple);
            if (close == std::string_view::npos) {
                continue;
            }
            pos = close + 3;
            open_triple = {};
        }
        auto scan = scan_code(line, pos);
        open_triple = scan.open_triple;
        if (inside_string) {
            continue;
        }
        for (const auto stmt : scan.statements) {
            for (auto& root : roots_of_statement(stmt)) {
                findings.push_back({n + 1, std::string(line), std::move(root), std::nullopt});
            }
        }
    }
    return findings;
}

std::vector<ImportFinding> classify(std::vector<ImportFinding> findings, const StdlibIndex& stdlib,
                                    const Manifest& manifest) {
    for (auto& f : findings) {
        if (f.root_name == ".") {
            f.classification = ImportClass::local;
        } else if (stdlib.contains(f.root_name)) {
            f.classification = ImportClass::stdlib;
        } else if (manifest.contains(f.root_name)) {
            f.classification = ImportClass::registry;
        } else {
            f.classification = ImportClass::third_party;
        }
    }
    return findings;
}

AuditReport audit_report(const std::vector<ImportFinding>& findings) {
    AuditReport report;
    for (const auto& f : findings) {
        if (!f.classification) {
            throw std::invalid_argument("audit_report: finding on line " +
                                        std::to_string(f.line_number) + " is unclassified");
        }
        ++report.counts[static_cast<std::size_t>(*f.classification)];
        if (*f.classification == ImportClass::third_party) {
            report.offending.push_back(f);
        }
    }
    report.pass = report.offending.empty();
    return report;
}

}  // namespace vendokit
