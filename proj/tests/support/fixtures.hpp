#pragma once

#include <vendokit/bench.hpp>
#include <vendokit/taxonomy.hpp>

#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fixtures {

/// The example frontmatter block for the `sse` module, LF endings.
inline constexpr std::string_view sse_block =
    "# /// zerodep\n"
    "# version = \"0.3.1\"\n"
    "# deps = [\"httpclient\"]\n"
    "# tier = \"subsystem\"\n"
    "# category = \"serialization\"\n"
    "# ///\n";

/// sse_block followed by a short module body.
std::string sse_module();

/// A module file assembled by plain string concatenation.
std::string module_text(std::string_view version, const std::vector<std::string>& deps, std::string_view tier,
                        std::string_view category, std::string_view body = "pass\n");

struct InventoryRow {
    std::string name;
    vendokit::Tier tier;
    vendokit::Category category;
};

/// The 44-module inventory (name, tier, category).
const std::vector<InventoryRow>& module_inventory();

struct ParityRow {
    std::string id;         // unique module id in the results fixture
    std::string reference;  // reference library label
    double low;             // reported ratio range
    double high;
    vendokit::OpVerdict verdict;  // expected verdict
    double midpoint() const { return (low + high) / 2.0; }
};

/// 36 modules, each with one reported ratio range and one verdict.
const std::vector<ParityRow>& parity_rows();

/// Results document: one `<id>/representative` group per parity row at its
/// midpoint ratio, plus the two sparse_search operations.
std::string parity_results_document();

/// Ratios used for the mixed sparse_search module.
inline constexpr double sparse_search_query_ratio = 115.0;
inline constexpr double sparse_search_index_ratio = 0.3;

/// Removes its directory on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return _path; }
    std::filesystem::path operator/(std::string_view rel) const { return _path / rel; }

private:
    std::filesystem::path _path;
};

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

/// A random valid module: name, file text. Body lines avoid the frontmatter sentinels.
struct RandomModule {
    std::string name;
    std::string version;
    std::string text;
};
RandomModule random_module(std::mt19937_64& rng);
std::string random_version(std::mt19937_64& rng);

}  // namespace fixtures
