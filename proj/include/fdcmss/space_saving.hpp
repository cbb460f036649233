#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

// Space Saving summary with real-valued weighted increments. A fixed set of
// k counters monitors items; when all counters are occupied and a new item
// arrives, the minimum counter inherits the new item and is incremented by
// its weight. Estimates therefore never underestimate. Used with k = 2
// inside sketch cells and generic k elsewhere.

namespace fdcmss {

struct Counter {
    std::uint32_t item = 0;
    double count = 0.0;
    bool occupied = false;
};

class SpaceSavingSummary {
public:
    explicit SpaceSavingSummary(std::size_t k) : counters_(k) {
        if (k < 2) throw std::invalid_argument("summary needs at least 2 counters");
    }

    // Offers weight w of `item`. Ties for the minimum counter evict the
    // lower item id, so replays are deterministic.
    void update(std::uint32_t item, double w) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("update weight must be positive and finite");
        offered_total_ += w;
        Counter* victim = nullptr;  // free counter, or the minimum one
        for (Counter& c : counters_) {
            if (c.occupied && c.item == item) {
                c.count += w;
                return;
            }
            if (!c.occupied) {
                if (victim == nullptr || victim->occupied) victim = &c;
            } else if (victim == nullptr ||
                       (victim->occupied &&
                        (c.count < victim->count ||
                         (c.count == victim->count && c.item < victim->item)))) {
                victim = &c;
            }
        }
        victim->item = item;
        victim->count += w;
        victim->occupied = true;
    }

    // Minimum count, treating unoccupied counters as 0.
    double min_count() const {
        double m = 0.0;
        bool all_occupied = true;
        bool first = true;
        for (const Counter& c : counters_) {
            if (!c.occupied) { all_occupied = false; break; }
            if (first || c.count < m) m = c.count;
            first = false;
        }
        return all_occupied ? m : 0.0;
    }

    // Occupied counter with maximum count; ties prefer the lower item id.
    std::optional<Counter> max_counter() const {
        std::optional<Counter> best;
        for (const Counter& c : counters_) {
            if (!c.occupied) continue;
            if (!best || c.count > best->count ||
                (c.count == best->count && c.item < best->item)) {
                best = c;
            }
        }
        return best;
    }

    // Stored count if monitored, otherwise min_count() (the tightest upper
    // bound available for an unmonitored item).
    double estimate(std::uint32_t item) const {
        for (const Counter& c : counters_) {
            if (c.occupied && c.item == item) return c.count;
        }
        return min_count();
    }

    double offered_total() const { return offered_total_; }
    std::span<const Counter> counters() const { return counters_; }

    // Rebase support: scales every count and the offered total.
    void scale(double factor) {
        offered_total_ *= factor;
        for (Counter& c : counters_) {
            if (!c.occupied) continue;
            c.count *= factor;
            if (c.count == 0.0) c = Counter{};  // underflowed to nothing
        }
    }

    // Snapshot restore / test fixture injection.
    void restore(std::size_t slot, std::uint32_t item, double count) {
        Counter& c = counters_.at(slot);
        if (count > 0.0) {
            offered_total_ += count - (c.occupied ? c.count : 0.0);
            c = Counter{item, count, true};
        } else {
            if (c.occupied) offered_total_ -= c.count;
            c = Counter{};
        }
    }

private:
    std::vector<Counter> counters_;
    double offered_total_ = 0.0;
};

}  // namespace fdcmss
