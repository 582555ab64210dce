#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "stowage/algorithms.hpp"
#include "stowage/model.hpp"
#include "stowage/trace.hpp"

namespace stowage {

// One benchmark row, mirroring the Initial / 5 / 10 / Best table layout.
struct BenchRow {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    Duration initial = 0;
    Duration after5 = 0;
    Duration after10 = 0;
    Duration best = 0;
    double wall_ms = 0.0;
};

struct BenchFailure {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string message;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<BenchFailure> failures;
};

struct BenchOptions {
    std::vector<std::string> algorithms{kAlgorithmTags.begin(), kAlgorithmTags.end()};
    std::vector<std::uint64_t> seeds{1};
    std::int64_t iterations = -1;  // -1 keeps each algorithm's default
    ParamMap params;
    int threads = 0;  // 0: hardware concurrency (capped by STOWAGE_THREADS)
};

inline bool row_is_monotone(const BenchRow& r) {
    return r.best <= r.after10 && r.after10 <= r.after5 && r.after5 <= r.initial;
}

// Runs every (instance, algorithm, seed) combination. Rows keep input order
// regardless of scheduling; failed rows are recorded and skipped.
inline BenchReport run_bench(const std::vector<Instance>& instances, const BenchOptions& options) {
    struct Task {
        const Instance* instance;
        std::string algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const std::string& algo : options.algorithms)
        for (const Instance& inst : instances)
            for (std::uint64_t seed : options.seeds) tasks.push_back({&inst, algo, seed});

    struct Slot {
        bool ok = false;
        BenchRow row;
        std::string error;
    };
    std::vector<Slot> slots(tasks.size());

    int threads = options.threads;
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
        if (const char* env = std::getenv("STOWAGE_THREADS")) {
            const int cap = std::atoi(env);
            if (cap >= 1 && cap < threads) threads = cap;
        }
    }
    if (threads > static_cast<int>(tasks.size())) threads = static_cast<int>(tasks.size());
    if (threads < 1) threads = 1;

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            Slot& slot = slots[i];
            try {
                RunTrace trace =
                    run_algorithm(task.algorithm, *task.instance, options.params,
                                  options.iterations, task.seed);
                slot.row = {task.instance->name(), task.algorithm,   task.seed,
                            trace.initial_value(), trace.value_at(5), trace.value_at(10),
                            trace.best_value,      trace.wall_seconds * 1000.0};
                slot.ok = true;
            } catch (const std::exception& e) {
                slot.error = e.what();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    BenchReport report;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (slots[i].ok)
            report.rows.push_back(std::move(slots[i].row));
        else
            report.failures.push_back(
                {tasks[i].instance->name(), tasks[i].algorithm, tasks[i].seed, slots[i].error});
    }
    return report;
}

// Canonical machine output. Timing is the one nondeterministic column; drop
// it when byte-stable output matters.
inline std::string bench_csv(const BenchReport& report, bool include_timing = true) {
    std::string out = "instance,algorithm,seed,initial,iter5,iter10,best";
    if (include_timing) out += ",wall_ms";
    out += '\n';
    char buf[64];
    for (const BenchRow& r : report.rows) {
        out += r.instance + ',' + r.algorithm + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.initial) + ',' + std::to_string(r.after5) + ',' +
               std::to_string(r.after10) + ',' + std::to_string(r.best);
        if (include_timing) {
            std::snprintf(buf, sizeof(buf), ",%.1f", r.wall_ms);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

// Aligned text table, one block per algorithm, instances as rows.
inline std::string bench_table(const BenchReport& report) {
    std::string out;
    char line[256];
    std::string current;
    for (const BenchRow& r : report.rows) {
        if (r.algorithm != current) {
            current = r.algorithm;
            if (!out.empty()) out += '\n';
            out += "Results of " + current + "\n";
            std::snprintf(line, sizeof(line), "%-10s %6s %14s %12s %13s %13s\n", "instance",
                          "seed", "initial", "5 iters", "10 iters", "best");
            out += line;
        }
        std::snprintf(line, sizeof(line), "%-10s %6llu %14lld %12lld %13lld %13lld\n",
                      r.instance.c_str(), static_cast<unsigned long long>(r.seed),
                      static_cast<long long>(r.initial), static_cast<long long>(r.after5),
                      static_cast<long long>(r.after10), static_cast<long long>(r.best));
        out += line;
    }
    return out;
}

}  // namespace stowage
