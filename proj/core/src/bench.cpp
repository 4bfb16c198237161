#include <vendokit/bench.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace vendokit {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw Error(Errc::MalformedResults, "malformed results: " + why);
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) {
        malformed(where + ": stats." + key + " must be a number");
    }
    const auto v = it->get<double>();
    if (!std::isfinite(v)) {
        malformed(where + ": stats." + key + " must be finite");
    }
    return v;
}

std::string module_of(const std::string& group) {
    return group.substr(0, group.find('/'));
}

std::string format_ratio(double r) {
    char buf[32];
    if (r >= 100.0) {
        std::snprintf(buf, sizeof buf, "%.0f", r);
    } else {
        std::snprintf(buf, sizeof buf, "%.3g", r);
    }
    return buf;
}

std::string ratio_range(const ModuleVerdict& v) {
    if (v.min_ratio == v.max_ratio) {
        return format_ratio(v.min_ratio) + "x";
    }
    return format_ratio(v.min_ratio) + "-" + format_ratio(v.max_ratio) + "x";
}

std::string verdict_cell(const ModuleVerdict& v) {
    std::string out(to_string(v.verdict));
    if (v.verdict != ModuleClass::mixed) {
        return out;
    }
    static constexpr const char* letters[] = {"F", "P", "S"};
    std::string dist;
    for (std::size_t i = 0; i < 3; ++i) {
        if (v.counts[i] == 0) continue;
        if (!dist.empty()) dist += ',';
        dist += std::string(letters[i]) + ":" + std::to_string(v.counts[i]);
    }
    return out + "{" + dist + "}";
}

}  // namespace

std::string_view to_string(Role role) noexcept {
    return role == Role::subject ? "subject" : "reference";
}

std::string_view to_string(OpVerdict verdict) noexcept {
    switch (verdict) {
    case OpVerdict::faster: return "Faster";
    case OpVerdict::parity: return "Parity";
    case OpVerdict::slower: return "Slower";
    }
    return "Parity";
}

std::string_view to_string(ModuleClass verdict) noexcept {
    switch (verdict) {
    case ModuleClass::faster: return "Faster";
    case ModuleClass::parity: return "Parity";
    case ModuleClass::slower: return "Slower";
    case ModuleClass::mixed: return "Mixed";
    }
    return "Mixed";
}

LoadedResults load_results(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    if (!doc.is_object() || !doc.contains("benchmarks") || !doc["benchmarks"].is_array()) {
        malformed("expected an object with a 'benchmarks' array");
    }
    const auto& benchmarks = doc["benchmarks"];
    if (benchmarks.empty()) {
        throw Error(Errc::EmptyResults, "results document has no benchmarks");
    }

    LoadedResults out;
    for (std::size_t i = 0; i < benchmarks.size(); ++i) {
        const auto& b = benchmarks[i];
        const std::string where = "benchmarks[" + std::to_string(i) + "]";
        if (!b.is_object()) {
            malformed(where + " must be an object");
        }
        if (!b.contains("name") || !b["name"].is_string()) {
            malformed(where + ": 'name' must be a string");
        }
        if (!b.contains("group") || !b["group"].is_string() || b["group"].get<std::string>().empty()) {
            malformed(where + ": 'group' must be a non-empty string");
        }
        if (!b.contains("stats") || !b["stats"].is_object()) {
            malformed(where + ": 'stats' must be an object");
        }

        BenchmarkRecord r;
        r.name = b["name"].get<std::string>();
        r.group = b["group"].get<std::string>();
        r.module = module_of(r.group);
        if (r.module.empty()) {
            malformed(where + ": group has an empty module prefix");
        }

        const auto& stats = b["stats"];
        r.stats.mean = require_number(stats, "mean", where);
        r.stats.stddev = require_number(stats, "stddev", where);
        if (r.stats.mean <= 0.0) {
            malformed(where + ": stats.mean must be positive");
        }
        if (r.stats.stddev < 0.0) {
            malformed(where + ": stats.stddev must not be negative");
        }
        if (!stats.contains("rounds") || !stats["rounds"].is_number_integer() ||
            stats["rounds"].get<long long>() < 1) {
            malformed(where + ": stats.rounds must be a positive integer");
        }
        r.stats.rounds = static_cast<std::size_t>(stats["rounds"].get<long long>());
        r.stats.ops_per_second = 1.0 / r.stats.mean;

        if (b.contains("extra_info") && b["extra_info"].is_object()) {
            const auto& extra = b["extra_info"];
            if (extra.contains("reference") && extra["reference"].is_string()) {
                r.reference_label = extra["reference"].get<std::string>();
            }
        }

        if (b.contains("role") && !b["role"].is_null()) {
            const auto role = b["role"].is_string() ? b["role"].get<std::string>() : std::string();
            if (role == "subject") {
                r.role = Role::subject;
            } else if (role == "reference") {
                r.role = Role::reference;
            } else {
                malformed(where + ": role must be \"subject\" or \"reference\"");
            }
        } else {
            const bool subject = r.name.find("zerodep") != std::string::npos;
            const bool reference = r.name.find("reference") != std::string::npos;
            if (subject == reference) {
                out.skipped.push_back(r.name);
                continue;
            }
            r.role = subject ? Role::subject : Role::reference;
        }
        out.records.push_back(std::move(r));
    }
    return out;
}

std::string write_results(std::span<const BenchmarkRecord> records) {
    json benchmarks = json::array();
    for (const auto& r : records) {
        json entry{
            {"group", r.group},
            {"name", r.name},
            {"role", to_string(r.role)},
            {"stats",
             {{"mean", r.stats.mean},
              {"stddev", r.stats.stddev},
              {"rounds", r.stats.rounds},
              {"ops", r.stats.ops_per_second}}},
        };
        if (!r.reference_label.empty()) {
            entry["extra_info"] = {{"reference", r.reference_label}};
        }
        benchmarks.push_back(std::move(entry));
    }
    return json{{"benchmarks", std::move(benchmarks)}}.dump(2) + "\n";
}

Pairing pair_records(std::span<const BenchmarkRecord> records) {
    struct Slots {
        const BenchmarkRecord* subject = nullptr;
        const BenchmarkRecord* reference = nullptr;
    };
    std::map<std::string, Slots> groups;
    for (const auto& r : records) {
        auto& slots = groups[r.group];
        auto& slot = r.role == Role::subject ? slots.subject : slots.reference;
        if (slot) {
            throw Error(Errc::DuplicateRole, "group '" + r.group + "' has more than one " +
                                                 std::string(to_string(r.role)) + " record");
        }
        slot = &r;
    }

    Pairing out;
    for (const auto& [group, slots] : groups) {
        if (!slots.subject || !slots.reference) {
            out.warnings.push_back("group '" + group + "' has no " +
                                   (slots.subject ? "reference" : "subject") + " record; excluded");
            continue;
        }
        PairedResult p;
        p.group = group;
        p.module = slots.subject->module;
        p.reference_label = slots.reference->reference_label;
        p.t_ref = slots.reference->stats.mean;
        p.t_subject = slots.subject->stats.mean;
        p.ratio = p.t_ref / p.t_subject;
        out.pairs.push_back(std::move(p));
    }
    return out;
}

OpVerdict classify_ratio(double ratio) {
    if (!(ratio > 0.0)) {
        throw Error(Errc::NonPositiveRatio, "speed ratio must be positive, got " + std::to_string(ratio));
    }
    if (ratio > parity_upper_bound) {
        return OpVerdict::faster;
    }
    if (ratio < parity_lower_bound) {
        return OpVerdict::slower;
    }
    return OpVerdict::parity;
}

ModuleVerdict module_verdict(std::span<const PairedResult> pairs) {
    if (pairs.empty()) {
        throw Error(Errc::EmptyModule, "module has no paired operations");
    }
    ModuleVerdict v;
    v.module = pairs.front().module;
    v.min_ratio = pairs.front().ratio;
    v.max_ratio = pairs.front().ratio;
    for (const auto& p : pairs) {
        ++v.counts[static_cast<std::size_t>(classify_ratio(p.ratio))];
        v.min_ratio = std::min(v.min_ratio, p.ratio);
        v.max_ratio = std::max(v.max_ratio, p.ratio);
        if (v.reference_label.empty()) {
            v.reference_label = p.reference_label;
        }
    }
    const auto classes = std::count_if(v.counts.begin(), v.counts.end(), [](auto c) { return c > 0; });
    if (classes > 1) {
        v.verdict = ModuleClass::mixed;
    } else {
        const auto only = std::find_if(v.counts.begin(), v.counts.end(), [](auto c) { return c > 0; });
        v.verdict = static_cast<ModuleClass>(only - v.counts.begin());
    }
    return v;
}

std::vector<ModuleVerdict> module_verdicts(std::span<const PairedResult> pairs) {
    std::map<std::string, std::vector<PairedResult>> by_module;
    for (const auto& p : pairs) {
        by_module[p.module].push_back(p);
    }
    std::vector<ModuleVerdict> out;
    for (const auto& [module, ps] : by_module) {
        out.push_back(module_verdict(ps));
    }
    return out;
}

std::string render_report(std::span<const ModuleVerdict> verdicts, ReportFormat format) {
    std::vector<const ModuleVerdict*> rows;
    for (const auto& v : verdicts) {
        rows.push_back(&v);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ModuleVerdict* a, const ModuleVerdict* b) {
        if (a->verdict != b->verdict) return a->verdict < b->verdict;
        return a->module < b->module;
    });

    std::array<std::size_t, 4> totals{};
    std::vector<std::array<std::string, 4>> cells;
    for (const auto* v : rows) {
        ++totals[static_cast<std::size_t>(v->verdict)];
        cells.push_back({v->module, v->reference_label.empty() ? "-" : v->reference_label,
                         ratio_range(*v), verdict_cell(*v)});
    }
    const std::array<std::string, 4> header{"module", "reference", "ratio", "verdict"};

    std::ostringstream out;
    if (format == ReportFormat::markdown) {
        auto row = [&out](const std::array<std::string, 4>& c) {
            out << "| " << c[0] << " | " << c[1] << " | " << c[2] << " | " << c[3] << " |\n";
        };
        row(header);
        out << "|---|---|---|---|\n";
        for (const auto& c : cells) row(c);
        out << "\n";
    } else {
        std::array<std::size_t, 4> width{};
        for (std::size_t i = 0; i < 4; ++i) {
            width[i] = header[i].size();
            for (const auto& c : cells) width[i] = std::max(width[i], c[i].size());
        }
        auto row = [&](const std::array<std::string, 4>& c) {
            std::string line;
            for (std::size_t i = 0; i < 4; ++i) {
                line += c[i];
                if (i + 1 < 4) line += std::string(width[i] - c[i].size() + 2, ' ');
            }
            out << line << "\n";
        };
        row(header);
        row({std::string(width[0], '-'), std::string(width[1], '-'), std::string(width[2], '-'),
             std::string(width[3], '-')});
        for (const auto& c : cells) row(c);
    }
    out << "faster=" << totals[0] << " parity=" << totals[1] << " slower=" << totals[2]
        << " mixed=" << totals[3] << "\n";
    return out.str();
}

SampleStats summarize_samples(std::span<const double> samples) {
    if (samples.empty()) {
        throw Error(Errc::EmptySamples, "no samples to summarize");
    }
    double sum = 0.0;
    for (double s : samples) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw Error(Errc::NonPositiveSample, "samples must be positive and finite");
        }
        sum += s;
    }
    const auto n = samples.size();
    SampleStats stats;
    stats.rounds = n;
    stats.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double squares = 0.0;
        for (double s : samples) {
            const double d = s - stats.mean;
            squares += d * d;
        }
        stats.stddev = std::sqrt(squares / static_cast<double>(n - 1));
    }
    stats.ops_per_second = 1.0 / stats.mean;
    return stats;
}

}  // namespace vendokit
