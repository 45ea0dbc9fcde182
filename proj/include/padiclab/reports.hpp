#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace padiclab {

// Structured outcome of one claim check.  `holds` is meaningful only when
// `applicable` is true; inapplicable checks are observational.
struct VerificationReport {
    std::string claim;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> computed;
    bool applicable = true;
    bool holds = false;
    std::string notes;
};

// One sampled experiment trial.  Fields not produced by a given sweep stay
// empty and serialize as empty CSV cells / omitted JSON keys.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;  // substream seed; replaying it regenerates the trial
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::optional<std::size_t> r;
    std::optional<std::size_t> r0;
    std::optional<std::size_t> rank_rem;
    std::optional<std::size_t> rank_quo;
    std::optional<std::size_t> rank_digit1;
    std::optional<mpq_class> bound_rem;
    std::optional<mpq_class> bound_quo;
    std::optional<mpz_class> bound_conj;
    std::optional<bool> applicable;
    std::optional<bool> holds;
    std::optional<bool> tight;
    std::uint64_t wall_time_ms = 0;
};

// Fixed CSV schema shared by every sweep.
std::string trial_csv_header();
std::string trial_csv_row(const TrialRecord& t);

// JSON object texts (single line each).
std::string trial_json(const TrialRecord& t);
std::string report_json(const VerificationReport& r);

// Human-readable one-liner for stderr diagnostics.
std::string report_brief(const VerificationReport& r);

}  // namespace padiclab
