#pragma once

#include <span>
#include <string_view>

namespace vendokit::detail {

struct BundledIndex {
    std::string_view label;
    std::string_view text;
};

/// Stdlib name lists compiled in from core/data/stdlib/*.txt.
std::span<const BundledIndex> bundled_stdlib_indexes() noexcept;

}  // namespace vendokit::detail
