#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fdcmss/decay.hpp"

// Brute-force decayed-count oracle plus the evaluation metrics. The oracle
// keeps one raw accumulator per distinct item and normalizes at query time,
// rebasing automatically when exponential raw weights approach overflow so
// it can track arbitrarily long streams.

namespace fdcmss {

class ExactDecayedCounts {
public:
    explicit ExactDecayedCounts(DecaySpec decay) : decay_(decay) {}

    void process(std::uint32_t item, double t);

    double normalized_count(std::uint32_t item, double t) const;
    double normalized_total(double t) const;

    // Items with normalized count > phi * normalized total at time t.
    std::vector<std::pair<std::uint32_t, double>> frequent(double phi,
                                                           double t) const;

    const std::unordered_map<std::uint32_t, double>& raw_counts() const {
        return counts_;
    }
    double raw_total() const { return total_; }
    std::size_t distinct() const { return counts_.size(); }
    const DecaySpec& decay() const { return decay_; }

private:
    void rebase(double new_landmark);

    DecaySpec decay_;
    std::unordered_map<std::uint32_t, double> counts_;
    double total_ = 0.0;
};

struct MetricsReport {
    double recall = 0.0;
    double precision = 0.0;
    double mean_abs_err = 0.0;
    double max_abs_err = 0.0;
    double p96_abs_err = 0.0;
    double updates_per_ms = 0.0;
    bool recall_vacuous = false;  // truth was empty; recall reported as 1
};

// recall = |reported ∩ truth| / |truth|, precision = |reported ∩ truth| /
// |reported|; error statistics over the per-distinct-item absolute errors
// (the 96th percentile sits at 1-based index ceil(0.96 M) of the ascending
// sort). Conventions: empty truth -> recall 1 (flagged); empty reported ->
// precision 1.
MetricsReport compute_metrics(const std::vector<std::uint32_t>& reported,
                              const std::vector<std::uint32_t>& truth,
                              std::vector<double> abs_errors,
                              double elapsed_ms, std::size_t n_updates);

inline constexpr const char* kCsvHeader =
    "algo,n,phi,rho,sketch_kb,seed,recall,precision,mae,maxae,p96ae,upd_per_ms";

std::string csv_row(const std::string& algo, std::size_t n, double phi,
                    double rho, double sketch_kb, std::uint64_t seed,
                    const MetricsReport& report);

}  // namespace fdcmss
