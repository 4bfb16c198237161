#pragma once

#include <vendokit/error.hpp>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vendokit {

enum class Role { subject, reference };

/// Classification of one operation's speed ratio.
enum class OpVerdict { faster, parity, slower };

/// Classification of a module: unanimous op verdicts, otherwise mixed.
enum class ModuleClass { faster, parity, slower, mixed };

std::string_view to_string(Role role) noexcept;
std::string_view to_string(OpVerdict verdict) noexcept;
std::string_view to_string(ModuleClass verdict) noexcept;

inline constexpr double parity_lower_bound = 0.5;
inline constexpr double parity_upper_bound = 2.0;

struct SampleStats {
    double mean = 0.0;    // seconds per operation
    double stddev = 0.0;  // seconds, n-1 denominator
    std::size_t rounds = 0;
    double ops_per_second = 0.0;
};

struct BenchmarkRecord {
    std::string group;  // "<module>/<operation>"
    std::string name;
    Role role = Role::subject;
    SampleStats stats;
    std::string module;           // group prefix before the first '/'
    std::string reference_label;  // `extra_info.reference` when present
};

struct LoadedResults {
    std::vector<BenchmarkRecord> records;
    std::vector<std::string> skipped;  // names without a recognizable role
};

/// Parses a results document:
///
///     {"benchmarks":[{"group":"yaml/load","name":"test_zerodep",
///                     "role":"subject",            // optional
///                     "extra_info":{"reference":"PyYAML"},  // optional
///                     "stats":{"mean":0.001,"stddev":0.0,"rounds":5,"ops":1000}}]}
///
/// The role comes from `role` when given, otherwise from a `zerodep` or
/// `reference` token in the name. Throws Error(MalformedResults) or
/// Error(EmptyResults).
LoadedResults load_results(std::string_view document);

/// Serializes records in the load_results schema.
std::string write_results(std::span<const BenchmarkRecord> records);

struct PairedResult {
    std::string group;
    std::string module;
    std::string reference_label;
    double t_ref = 0.0;
    double t_subject = 0.0;
    double ratio = 0.0;  // t_ref / t_subject; > 1 means the subject is faster
};

struct Pairing {
    std::vector<PairedResult> pairs;     // in group order
    std::vector<std::string> warnings;   // unpaired groups
};

/// Matches one subject with one reference per group.
/// Throws Error(DuplicateRole) when a group has two records of one role.
Pairing pair_records(std::span<const BenchmarkRecord> records);

/// Faster above 2.0, Slower below 0.5, Parity on the closed interval between.
/// Throws Error(NonPositiveRatio) for r <= 0 or NaN.
OpVerdict classify_ratio(double ratio);

struct ModuleVerdict {
    std::string module;
    std::string reference_label;
    ModuleClass verdict = ModuleClass::parity;
    std::array<std::size_t, 3> counts{};  // indexed by OpVerdict
    double min_ratio = 0.0;
    double max_ratio = 0.0;

    std::size_t count(OpVerdict v) const noexcept { return counts[static_cast<std::size_t>(v)]; }
};

/// Aggregates the pairs of one module. Throws Error(EmptyModule).
ModuleVerdict module_verdict(std::span<const PairedResult> pairs);

/// Groups pairs by module (lexicographic) and aggregates each group.
std::vector<ModuleVerdict> module_verdicts(std::span<const PairedResult> pairs);

enum class ReportFormat { text, markdown };

/// Table grouped Faster, Parity, Slower, Mixed and sorted by module within a
/// group, followed by a `faster=<a> parity=<b> slower=<c> mixed=<d>` footer.
std::string render_report(std::span<const ModuleVerdict> verdicts,
                          ReportFormat format = ReportFormat::text);

/// Throws Error(EmptySamples) or Error(NonPositiveSample).
SampleStats summarize_samples(std::span<const double> samples);

struct Calibration {
    std::size_t min_rounds = 5;
    double target_seconds = 1.0;    // accumulated measured time per side
    double timeout_seconds = 120.0; // wall cap per side, warmup included
};

struct PairedRun {
    SampleStats subject;
    SampleStats reference;
    PairedResult paired;
    std::string results_document;
};

/// A command exited with a non-zero status (or was killed by a signal,
/// reported as 128 + signal number).
class CommandFailedError : public Error {
public:
    CommandFailedError(Role side, int status, const std::string& command);

    Role side() const noexcept { return _side; }
    int status() const noexcept { return _status; }

private:
    Role _side;
    int _status;
};

/// Times two shell commands against each other. Each gets one discarded
/// warmup, then rounds alternate subject, reference, subject, ... until both
/// sides reached `min_rounds` and `target_seconds` of measured time.
/// Timing wraps the whole invocation, process spawn included.
///
/// Throws CommandFailedError or Error(Timeout).
PairedRun run_paired(const std::string& subject_cmd, const std::string& reference_cmd,
                     const Calibration& calibration = {}, const std::string& group = "command/run");

}  // namespace vendokit
