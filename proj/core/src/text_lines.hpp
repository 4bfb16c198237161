#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace vendokit::detail {

struct LineRef {
    std::size_t offset = 0;  // byte offset of the line start in the source
    std::string_view text;   // without the terminating LF or CRLF
};

/// Splits on LF; a CR directly before the LF is not part of the line text.
inline std::vector<LineRef> split_lines(std::string_view source) {
    std::vector<LineRef> lines;
    std::size_t pos = 0;
    while (pos < source.size()) {
        auto nl = source.find('\n', pos);
        const bool last = nl == std::string_view::npos;
        if (last) {
            nl = source.size();
        }
        auto text = source.substr(pos, nl - pos);
        if (!last && !text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
        lines.push_back({pos, text});
        pos = last ? source.size() : nl + 1;
    }
    return lines;
}

}  // namespace vendokit::detail
