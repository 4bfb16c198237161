#include "fixtures.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace fixtures {

namespace fs = std::filesystem;
using vendokit::Category;
using vendokit::OpVerdict;
using vendokit::Tier;

std::string sse_module() {
    return std::string(sse_block) +
           "\"\"\"Server-sent events over httpclient.\"\"\"\n"
           "import httpclient\n"
           "\n"
           "def parse(line):\n"
           "    return line.split(\":\", 1)\n";
}

std::string module_text(std::string_view version, const std::vector<std::string>& deps, std::string_view tier,
                        std::string_view category, std::string_view body) {
    std::string out = "# /// zerodep\n# version = \"" + std::string(version) + "\"\n";
    if (!deps.empty()) {
        out += "# deps = [";
        for (std::size_t i = 0; i < deps.size(); ++i) {
            out += (i ? ", \"" : "\"") + deps[i] + "\"";
        }
        out += "]\n";
    }
    out += "# tier = \"" + std::string(tier) + "\"\n";
    out += "# category = \"" + std::string(category) + "\"\n# ///\n";
    out += body;
    return out;
}

const std::vector<InventoryRow>& module_inventory() {
    static const std::vector<InventoryRow> rows = {
        {"httpclient", Tier::subsystem, Category::network},
        {"httpserver", Tier::subsystem, Category::network},
        {"sse", Tier::subsystem, Category::network},
        {"useragent", Tier::simple, Category::network},
        {"websocket", Tier::medium, Category::network},
        {"a2a", Tier::subsystem, Category::protocol},
        {"acp", Tier::subsystem, Category::protocol},
        {"cdp", Tier::medium, Category::protocol},
        {"jsonrpc", Tier::medium, Category::protocol},
        {"llmstxt", Tier::simple, Category::protocol},
        {"skills", Tier::medium, Category::protocol},
        {"frontmatter", Tier::medium, Category::serialization},
        {"jsonc", Tier::simple, Category::serialization},
        {"multipart", Tier::medium, Category::serialization},
        {"protobuf", Tier::subsystem, Category::serialization},
        {"toon", Tier::simple, Category::serialization},
        {"xml", Tier::medium, Category::serialization},
        {"yaml", Tier::subsystem, Category::serialization},
        {"jsonschema", Tier::medium, Category::validation},
        {"semver", Tier::simple, Category::validation},
        {"validate", Tier::medium, Category::validation},
        {"markdown", Tier::medium, Category::text},
        {"readability", Tier::medium, Category::text},
        {"soup", Tier::medium, Category::text},
        {"sparse_search", Tier::medium, Category::text},
        {"synctex", Tier::simple, Category::text},
        {"config", Tier::subsystem, Category::config},
        {"dotenv", Tier::simple, Category::config},
        {"ansi", Tier::simple, Category::terminal},
        {"prompt", Tier::simple, Category::terminal},
        {"tabulate", Tier::medium, Category::terminal},
        {"aes", Tier::medium, Category::crypto},
        {"png", Tier::medium, Category::image},
        {"qr", Tier::simple, Category::image},
        {"filelock", Tier::simple, Category::process},
        {"retry", Tier::simple, Category::process},
        {"runner", Tier::subsystem, Category::process},
        {"cache", Tier::subsystem, Category::storage},
        {"persistdict", Tier::medium, Category::storage},
        {"depdetect", Tier::medium, Category::devtools},
        {"diff", Tier::simple, Category::devtools},
        {"scheduler", Tier::subsystem, Category::devtools},
        {"structlog", Tier::medium, Category::devtools},
        {"vcs", Tier::subsystem, Category::devtools},
    };
    return rows;
}

const std::vector<ParityRow>& parity_rows() {
    // Single values are encoded as a degenerate range; "~1.0x" as 1.0,
    // "<0.003x" as the range (0, 0.003).
    static const std::vector<ParityRow> rows = {
        {"yaml", "PyYAML", 6, 7, OpVerdict::faster},
        {"jsonc", "commentjson", 75, 115, OpVerdict::faster},
        {"jsonrpc", "jsonrpcserver", 10, 14, OpVerdict::faster},
        {"httpclient_sync", "httpx (sync)", 18, 32, OpVerdict::faster},
        {"httpclient_async", "httpx (async)", 20, 26, OpVerdict::faster},
        {"httpserver", "flask", 1.2, 1.4, OpVerdict::faster},
        {"retry", "tenacity", 37, 37, OpVerdict::faster},
        {"tabulate", "tabulate", 3, 4.5, OpVerdict::faster},
        {"soup", "beautifulsoup4", 2.1, 3.3, OpVerdict::faster},
        {"markdown", "mistune", 1.6, 2.0, OpVerdict::faster},
        {"diff", "unidiff", 2.0, 2.0, OpVerdict::faster},
        {"scheduler", "croniter", 5, 10, OpVerdict::faster},
        {"multipart", "python-multipart", 1.4, 4.0, OpVerdict::faster},
        {"readability", "readability-lxml", 1.4, 2.5, OpVerdict::faster},
        {"config", "python-decouple", 1.9, 4.7, OpVerdict::faster},
        {"useragent", "ua-generator", 2.0, 2.6, OpVerdict::faster},
        {"structlog", "structlog", 1.2, 1.8, OpVerdict::faster},
        {"jsonschema", "allof-merge", 1.9, 9.7, OpVerdict::faster},
        {"aes_openssl", "PyCryptodome", 1.5, 8.0, OpVerdict::faster},
        {"dotenv", "python-dotenv", 1.0, 1.0, OpVerdict::parity},
        {"frontmatter", "python-frontmatter", 1.0, 1.0, OpVerdict::parity},
        {"qr", "qrcode", 0.8, 1.3, OpVerdict::parity},
        {"semver", "packaging", 1.1, 1.1, OpVerdict::parity},
        {"cache", "cachetools", 1.1, 1.3, OpVerdict::parity},
        {"toon", "toon-format", 1.1, 1.4, OpVerdict::parity},
        {"websocket", "websockets", 1.2, 2.8, OpVerdict::parity},
        {"xml", "xmltodict", 1.1, 1.6, OpVerdict::parity},
        {"runner", "subprocess", 1.0, 1.0, OpVerdict::parity},
        {"a2a_ser", "a2a-protocol", 1.2, 1.2, OpVerdict::parity},
        {"sse", "httpx-sse", 0.7, 0.7, OpVerdict::parity},
        {"validate", "pydantic", 0.14, 0.27, OpVerdict::slower},
        {"persistdict", "shelve", 0.2, 0.5, OpVerdict::slower},
        {"acp_ser", "acp (ref)", 0.15, 0.32, OpVerdict::slower},
        {"aes_pure", "PyCryptodome", 0.0, 0.003, OpVerdict::slower},
        {"png", "Pillow", 0.02, 0.14, OpVerdict::slower},
        {"protobuf", "google-protobuf", 0.01, 0.16, OpVerdict::slower},
    };
    return rows;
}

namespace {

nlohmann::json bench_entry(const std::string& group, const std::string& name, double mean,
                           const std::string& reference) {
    return {{"group", group},
            {"name", name},
            {"extra_info", {{"reference", reference}}},
            {"stats", {{"mean", mean}, {"stddev", 0.0}, {"rounds", 5}, {"ops", 1.0 / mean}}}};
}

void add_pair(nlohmann::json& benchmarks, const std::string& group, double ratio, const std::string& reference) {
    constexpr double subject_mean = 1e-3;
    benchmarks.push_back(bench_entry(group, "test_zerodep", subject_mean, reference));
    benchmarks.push_back(bench_entry(group, "test_reference", subject_mean * ratio, reference));
}

}  // namespace

std::string parity_results_document() {
    nlohmann::json benchmarks = nlohmann::json::array();
    for (const auto& row : parity_rows()) {
        add_pair(benchmarks, row.id + "/representative", row.midpoint(), row.reference);
    }
    add_pair(benchmarks, "sparse_search/query", sparse_search_query_ratio, "rank-bm25");
    add_pair(benchmarks, "sparse_search/index", sparse_search_index_ratio, "rank-bm25");
    return nlohmann::json{{"benchmarks", benchmarks}}.dump(2) + "\n";
}

TempDir::TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    for (int attempt = 0; attempt < 100; ++attempt) {
        const auto candidate = fs::temp_directory_path() /
                               ("vendokit-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) +
                                "-" + std::to_string(rd() % 100000));
        if (fs::create_directory(candidate)) {
            _path = candidate;
            return;
        }
    }
    throw std::runtime_error("cannot create temporary directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(_path, ec);
}

void write_text(const fs::path& path, std::string_view text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string random_version(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(0, 20);
    std::string v = std::to_string(small(rng)) + "." + std::to_string(small(rng)) + "." + std::to_string(small(rng));
    if (rng() % 4 == 0) v += rng() % 2 ? "-rc." + std::to_string(small(rng)) : "-alpha";
    if (rng() % 5 == 0) v += "+build" + std::to_string(small(rng));
    return v;
}

RandomModule random_module(std::mt19937_64& rng) {
    static constexpr std::string_view tiers[] = {"simple", "medium", "subsystem"};
    static constexpr std::string_view categories[] = {"network", "protocol", "serialization", "validation",
                                                      "text",    "config",   "terminal",      "crypto",
                                                      "image",   "process",  "storage",       "devtools"};
    static constexpr std::string_view words[] = {"import json", "x = 1", "def f(a):", "    return a * 2",
                                                 "# comment", "", "s = \"text # not a comment\"",
                                                 "class K:", "    pass", "print(f(3))"};
    RandomModule m;
    m.name = "mod" + std::to_string(rng() % 1000);
    m.version = random_version(rng);
    std::vector<std::string> deps;
    const auto ndeps = rng() % 3;
    for (std::size_t i = 0; i < ndeps; ++i) deps.push_back("dep" + std::to_string(i));
    std::string body;
    const auto nlines = 1 + rng() % 12;
    for (std::size_t i = 0; i < nlines; ++i) {
        body += std::string(words[rng() % std::size(words)]) + "\n";
    }
    m.text = module_text(m.version, deps, tiers[rng() % 3], categories[rng() % 12], body);
    if (rng() % 3 == 0) {
        m.text += "extra = '" + std::to_string(rng()) + "'\n";
    }
    return m;
}

}  // namespace fixtures
