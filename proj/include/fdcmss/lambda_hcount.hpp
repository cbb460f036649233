#pragma once

#include <cstdint>
#include <list>
#include <unordered_map>
#include <vector>

// Lambda-HCount baseline: an r x m grid of (density, last-update-time)
// entries aged lazily under backward exponential decay, plus a bounded
// insertion-ordered queue F of frequent-item candidates. Timestamps must be
// non-decreasing; backward decay does not tolerate out-of-order arrivals.

namespace fdcmss {

// One 8-byte density plus one 8-byte timestamp per cell.
inline constexpr std::size_t kLambdaHCountBytesPerCell = 16;

struct LhSizing {
    std::size_t r;   // rows / hash functions: ceil(ln(-M / ln p))
    std::size_t m;   // columns: ceil(cells / r)
    double cells;    // ceil(e (1-lambda) ln(-M / ln p) / epsilon^2)
};

LhSizing lh_sizing(double lambda, double distinct_items, double success_prob,
                   double epsilon);

struct LhParams {
    double lambda;    // fading factor, in (0, 1)
    double support;   // support threshold s
    double epsilon;   // error bound, < support
};

class LambdaHCount {
public:
    LambdaHCount(std::size_t r, std::size_t m, const LhParams& params,
                 std::uint64_t master_seed);

    // Ages and increments the r mapped entries, then refreshes the candidate
    // queue when the minimum density clears (s - epsilon)/(1 - lambda).
    void update(std::uint32_t item, double t);

    // Candidates whose lazily aged minimum density exceeds
    // support * (aged total decayed count), with their estimates.
    std::vector<std::pair<std::uint32_t, double>> query(double t) const;

    // min over rows of the aged density for an arbitrary item.
    double point_estimate(std::uint32_t item, double t) const;

    // Aged global decayed count of the whole stream.
    double total_decayed(double t) const;

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return m_; }
    std::size_t queue_capacity() const { return queue_capacity_; }
    std::size_t queue_size() const { return queue_.size(); }
    std::size_t bytes() const { return r_ * m_ * kLambdaHCountBytesPerCell; }

private:
    struct Entry {
        double density = 0.0;
        double last_update = 0.0;
    };
    struct Candidate {
        std::uint32_t item;
        double estimate;
        double time;
    };

    std::size_t column_of(std::size_t row, std::uint32_t item) const;

    std::size_t r_;
    std::size_t m_;
    LhParams params_;
    double admit_threshold_;
    std::size_t queue_capacity_;
    std::vector<Entry> grid_;
    std::vector<std::uint64_t> seeds_;
    std::list<Candidate> queue_;  // head = oldest, tail = most recent
    std::unordered_map<std::uint32_t, std::list<Candidate>::iterator> index_;
    double total_ = 0.0;          // aged global decayed count
    double total_time_ = 0.0;
    double last_time_ = 0.0;
    bool any_update_ = false;
};

}  // namespace fdcmss
