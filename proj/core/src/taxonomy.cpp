#include <vendokit/taxonomy.hpp>

#include <algorithm>

namespace vendokit {

std::string_view to_string(Tier tier) noexcept {
    switch (tier) {
    case Tier::simple: return "simple";
    case Tier::medium: return "medium";
    case Tier::subsystem: return "subsystem";
    }
    return "simple";
}

std::string_view to_string(Category category) noexcept {
    switch (category) {
    case Category::network: return "network";
    case Category::protocol: return "protocol";
    case Category::serialization: return "serialization";
    case Category::validation: return "validation";
    case Category::text: return "text";
    case Category::config: return "config";
    case Category::terminal: return "terminal";
    case Category::crypto: return "crypto";
    case Category::image: return "image";
    case Category::process: return "process";
    case Category::storage: return "storage";
    case Category::devtools: return "devtools";
    }
    return "network";
}

std::optional<Tier> parse_tier(std::string_view text) noexcept {
    for (auto t : all_tiers) {
        if (to_string(t) == text) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<Category> parse_category(std::string_view text) noexcept {
    for (auto c : all_categories) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

bool is_module_identifier(std::string_view name) noexcept {
    if (name.empty() || name.front() < 'a' || name.front() > 'z') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

}  // namespace vendokit
