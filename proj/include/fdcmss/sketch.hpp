#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "fdcmss/decay.hpp"
#include "fdcmss/space_saving.hpp"

// FDCMSS: a d x w grid of two-counter Space Saving summaries, updated
// Count-Min style through d seeded hash functions, accumulating forward
// decayed weights. Queries report the items whose estimated normalized
// decayed count exceeds phi times the total decayed count.

namespace fdcmss {

// Two 4-byte items plus two 8-byte counts per cell.
inline constexpr std::size_t kFdcmssBytesPerCell = 24;

struct SketchParams {
    double epsilon;
    double delta;
    double phi;
    double t_init;
    DecaySpec decay;
};

struct FrequentItem {
    std::uint32_t item;
    double estimate;  // normalized decayed count

    friend bool operator==(const FrequentItem&, const FrequentItem&) = default;
};

// d = ceil(ln 1/delta)
std::size_t rows_for_delta(double delta);
// w = ceil(e / (2 epsilon))
std::size_t cols_for_epsilon(double epsilon);

// Unceiled ln(1/delta) * e/(2 epsilon): the cell count used by the
// theoretical space comparison and the sizing curves.
double theoretical_cells_fdcmss(double epsilon, double delta);

// Lower bound on the probability that a frequent item surfaces as a
// majority candidate in at least one row: 1 - (1/(2 phi w))^d. Vacuous
// (<= 0) when 2 phi w <= 1.
double success_probability(double phi, double w, double d);

class FdcmssSketch {
public:
    // Maps (row, item) to a column in [0, w).
    using RowHasher = std::function<std::uint32_t(std::size_t, std::uint32_t)>;

    // Dimensions from (epsilon, delta) per the initialization procedure.
    FdcmssSketch(const SketchParams& params, std::uint64_t master_seed);

    // Explicit dimensions (byte-budget runs, goldens, snapshots).
    FdcmssSketch(std::size_t d, std::size_t w, double phi, DecaySpec decay,
                 std::uint64_t master_seed);

    // Replaces the seeded hash family; test seam for fixtures with pinned
    // item-to-column mappings.
    void set_row_hasher(RowHasher hasher) { hasher_ = std::move(hasher); }

    // Feeds one stream occurrence. Triggers an automatic exact rebase first
    // when the exponential raw weight approaches overflow.
    void process(std::uint32_t item, double t);

    // Frequent item candidates at query time t, sorted by estimate
    // descending (ties by item id). Every monitored counter above the raw
    // threshold phi*count is screened with a point estimate.
    std::vector<FrequentItem> query(double t) const;

    // min over rows of the cell-level estimate, normalized by g(t - L).
    double point_estimate(std::uint32_t item, double t) const;

    // Exact landmark shift: scales count and every cell by
    // lambda^(new_landmark - L). Exponential decay only.
    void rebase(double new_landmark);

    std::size_t rows() const { return d_; }
    std::size_t cols() const { return w_; }
    double total_count() const { return count_; }
    double landmark() const { return decay_.landmark(); }
    double phi() const { return phi_; }
    const DecaySpec& decay() const { return decay_; }
    std::size_t bytes() const { return d_ * w_ * kFdcmssBytesPerCell; }

    const SpaceSavingSummary& cell(std::size_t row, std::size_t col) const {
        return cells_[row * w_ + col];
    }
    std::uint32_t column_of(std::size_t row, std::uint32_t item) const {
        return hasher_(row, item);
    }

    // --- fixture / snapshot support -------------------------------------
    void inject_counter(std::size_t row, std::size_t col, std::size_t slot,
                        std::uint32_t item, double count) {
        cells_[row * w_ + col].restore(slot, item, count);
    }
    void set_total_count(double count) { count_ = count; }

    // Versioned little-endian snapshot: "FDC1", d, w, landmark, count, then
    // cells row-major as (item:4B, count:8B) x 2. Hash seeds, phi and the
    // decay function are not part of the snapshot and must be re-supplied.
    void serialize(std::ostream& out) const;
    static FdcmssSketch deserialize(std::istream& in, double phi,
                                    DecaySpec decay, std::uint64_t master_seed);

private:
    void validate_params(const SketchParams& params);
    RowHasher make_seeded_hasher(std::uint64_t master_seed);

    std::size_t d_;
    std::size_t w_;
    double phi_;
    DecaySpec decay_;
    double count_ = 0.0;
    std::vector<SpaceSavingSummary> cells_;
    RowHasher hasher_;
    std::vector<std::uint64_t> seeds_;
};

}  // namespace fdcmss
