#include <vendokit/audit.hpp>
#include <vendokit/bench.hpp>
#include <vendokit/depgraph.hpp>
#include <vendokit/frontmatter.hpp>
#include <vendokit/registry.hpp>
#include <vendokit/semver.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>

using namespace vendokit;

namespace {

std::string module_source(std::size_t body_lines) {
    std::string s = "# /// zerodep\n# version = \"0.3.1\"\n# deps = [\"httpclient\"]\n"
                    "# tier = \"subsystem\"\n# category = \"network\"\n# ///\n"
                    "\"\"\"Module docs.\nimport not_real\n\"\"\"\n";
    for (std::size_t i = 0; i < body_lines; ++i) {
        switch (i % 4) {
        case 0: s += "import json, os.path as p\n"; break;
        case 1: s += "def f" + std::to_string(i) + "(x):\n"; break;
        case 2: s += "    return x + 1  # note\n"; break;
        default: s += "from .local import thing\n"; break;
        }
    }
    return s;
}

void BM_ParseVersion(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_version("12.4.170-rc.3.alpha+build.77"));
    }
}
BENCHMARK(BM_ParseVersion);

void BM_ReadMetadata(benchmark::State& state) {
    const auto src = module_source(40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(read_metadata(src, "sse"));
    }
}
BENCHMARK(BM_ReadMetadata);

void BM_ContentHash(benchmark::State& state) {
    const auto src = module_source(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(content_hash(src));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ContentHash)->Arg(100)->Arg(2500);

void BM_ScanImports(benchmark::State& state) {
    const auto src = module_source(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_imports(src));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ScanImports)->Arg(100)->Arg(2500);

void BM_Closure(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::set<std::string> nodes;
    std::vector<DepGraph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        nodes.insert("m" + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j) {
            if (rng() % 8 == 0) edges.emplace_back("m" + std::to_string(i), "m" + std::to_string(j));
        }
    }
    const auto graph = DepGraph::build(nodes, edges);
    const std::vector<std::string> roots{"m" + std::to_string(n - 1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(graph, roots));
    }
}
BENCHMARK(BM_Closure)->Arg(44)->Arg(500);

void BM_ClassifyAndReport(benchmark::State& state) {
    std::vector<PairedResult> pairs;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> log_ratio(-4.0, 5.0);
    for (int m = 0; m < 44; ++m) {
        for (int op = 0; op < 3; ++op) {
            PairedResult p;
            p.module = "mod" + std::to_string(m);
            p.group = p.module + "/op" + std::to_string(op);
            p.t_subject = 1e-3;
            p.ratio = std::exp(log_ratio(rng));
            p.t_ref = p.t_subject * p.ratio;
            pairs.push_back(p);
        }
    }
    for (auto _ : state) {
        const auto verdicts = module_verdicts(pairs);
        benchmark::DoNotOptimize(render_report(verdicts));
    }
}
BENCHMARK(BM_ClassifyAndReport);

void BM_SummarizeSamples(benchmark::State& state) {
    std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> value(1e-4, 1e-2);
    for (auto& x : xs) x = value(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(summarize_samples(xs));
    }
}
BENCHMARK(BM_SummarizeSamples)->Arg(5)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
