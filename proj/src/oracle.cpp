#include "fdcmss/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fdcmss {

void ExactDecayedCounts::rebase(double new_landmark) {
    const double factor = decay_.rebase_factor(new_landmark);
    total_ *= factor;
    for (auto& [item, count] : counts_) count *= factor;
    decay_.set_landmark(new_landmark);
}

void ExactDecayedCounts::process(std::uint32_t item, double t) {
    double x = decay_.raw_weight(t);
    if (x > kRebaseThreshold && decay_.kind() == DecayKind::ExponentialLambda) {
        rebase(t);
        x = decay_.raw_weight(t);
    }
    counts_[item] += x;
    total_ += x;
}

double ExactDecayedCounts::normalized_count(std::uint32_t item, double t) const {
    const auto it = counts_.find(item);
    if (it == counts_.end()) return 0.0;
    return it->second / decay_.raw_weight(t);
}

double ExactDecayedCounts::normalized_total(double t) const {
    return total_ / decay_.raw_weight(t);
}

std::vector<std::pair<std::uint32_t, double>> ExactDecayedCounts::frequent(
    double phi, double t) const {
    const double g = decay_.raw_weight(t);
    const double raw_threshold = phi * total_;
    std::vector<std::pair<std::uint32_t, double>> result;
    for (const auto& [item, count] : counts_) {
        if (count > raw_threshold) result.emplace_back(item, count / g);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return result;
}

MetricsReport compute_metrics(const std::vector<std::uint32_t>& reported,
                              const std::vector<std::uint32_t>& truth,
                              std::vector<double> abs_errors,
                              double elapsed_ms, std::size_t n_updates) {
    MetricsReport report;

    std::vector<std::uint32_t> truth_sorted = truth;
    std::sort(truth_sorted.begin(), truth_sorted.end());
    std::size_t hits = 0;
    for (std::uint32_t item : reported) {
        if (std::binary_search(truth_sorted.begin(), truth_sorted.end(), item))
            ++hits;
    }
    if (truth.empty()) {
        report.recall = 1.0;
        report.recall_vacuous = true;
    } else {
        report.recall = static_cast<double>(hits) / static_cast<double>(truth.size());
    }
    report.precision = reported.empty()
                           ? 1.0
                           : static_cast<double>(hits) /
                                 static_cast<double>(reported.size());

    if (!abs_errors.empty()) {
        std::sort(abs_errors.begin(), abs_errors.end());
        const std::size_t m = abs_errors.size();
        double sum = 0.0;
        for (double e : abs_errors) sum += e;
        report.mean_abs_err = sum / static_cast<double>(m);
        report.max_abs_err = abs_errors.back();
        const auto idx = static_cast<std::size_t>(
            std::ceil(0.96 * static_cast<double>(m)));
        report.p96_abs_err = abs_errors[idx == 0 ? 0 : idx - 1];
    }

    report.updates_per_ms =
        elapsed_ms > 0.0 ? static_cast<double>(n_updates) / elapsed_ms : 0.0;
    return report;
}

std::string csv_row(const std::string& algo, std::size_t n, double phi,
                    double rho, double sketch_kb, std::uint64_t seed,
                    const MetricsReport& report) {
    char buf[384];
    std::snprintf(buf, sizeof buf,
                  "%s,%zu,%.6g,%.6g,%.6g,%llu,%.6g,%.6g,%.9g,%.9g,%.9g,%.6g",
                  algo.c_str(), n, phi, rho, sketch_kb,
                  static_cast<unsigned long long>(seed), report.recall,
                  report.precision, report.mean_abs_err, report.max_abs_err,
                  report.p96_abs_err, report.updates_per_ms);
    return buf;
}

}  // namespace fdcmss
