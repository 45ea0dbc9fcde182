#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "padiclab/int_matrix.hpp"
#include "padiclab/reports.hpp"

namespace padiclab {

// Sweep parameters.  For the conjecture sweep, `trials` counts per (p, r, n)
// combination; for the planted theorem sweep it is the total, with primes
// cycled round-robin.
struct ExperimentConfig {
    std::vector<std::uint64_t> ps;
    std::vector<std::size_t> rs;
    std::vector<std::size_t> ns;
    std::size_t trials = 1;
    std::uint64_t seed = 0xE15E;
};

// A trial whose bound was violated, with the sampled inputs regenerated from
// the recorded substream seed so the finding can be replayed independently.
struct ViolationDump {
    std::uint64_t trial = 0;
    IntMatrix u, v;
};

struct SweepResult {
    std::vector<TrialRecord> records;
    std::size_t violations = 0;
    std::size_t tight = 0;
    std::size_t inapplicable = 0;
    std::vector<ViolationDump> dumps;
};

// Worker count from PADICLAB_THREADS (0/unset/1 = sequential).
int env_thread_count();

// Runs fn(0..count-1), possibly across threads.  Each index must be an
// independent unit of work; results land wherever fn writes them, so output
// order is the caller's index order regardless of scheduling.
void parallel_run(std::size_t count, const std::function<void(std::size_t)>& fn);

// Digit-1 rank vs conjectured bound over the (ps x rs x ns) grid.
SweepResult run_conjecture_sweep(const ExperimentConfig& cfg);

// Planted-factor matrices with known ranks, testing the rem/quo rank bounds.
SweepResult run_theorem1_sweep(const ExperimentConfig& cfg);

}  // namespace padiclab
