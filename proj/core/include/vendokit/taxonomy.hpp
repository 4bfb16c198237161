#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace vendokit {

/// Complexity class of a module.
enum class Tier { simple, medium, subsystem };

/// Functional area of a module.
enum class Category {
    network,
    protocol,
    serialization,
    validation,
    text,
    config,
    terminal,
    crypto,
    image,
    process,
    storage,
    devtools,
};

inline constexpr std::array<Tier, 3> all_tiers{Tier::simple, Tier::medium, Tier::subsystem};

inline constexpr std::array<Category, 12> all_categories{
    Category::network, Category::protocol, Category::serialization, Category::validation,
    Category::text,    Category::config,   Category::terminal,      Category::crypto,
    Category::image,   Category::process,  Category::storage,       Category::devtools,
};

std::string_view to_string(Tier tier) noexcept;
std::string_view to_string(Category category) noexcept;

std::optional<Tier> parse_tier(std::string_view text) noexcept;
std::optional<Category> parse_category(std::string_view text) noexcept;

/// Lowercase letter followed by lowercase letters, digits or underscores.
bool is_module_identifier(std::string_view name) noexcept;

}  // namespace vendokit
