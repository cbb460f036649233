#include "fdcmss/lambda_hcount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fdcmss/hash.hpp"

namespace fdcmss {

LhSizing lh_sizing(double lambda, double distinct_items, double success_prob,
                   double epsilon) {
    if (!(lambda > 0.0 && lambda < 1.0) ||
        !(success_prob > 0.0 && success_prob < 1.0) || !(epsilon > 0.0) ||
        !(distinct_items >= 1.0))
        throw std::invalid_argument("degenerate lambda-hcount sizing arguments");
    const double log_term = std::log(-distinct_items / std::log(success_prob));
    if (!(log_term > 0.0))
        throw std::invalid_argument("degenerate lambda-hcount sizing arguments");
    const double cells = std::ceil(std::exp(1.0) * (1.0 - lambda) * log_term /
                                   (epsilon * epsilon));
    const auto r = static_cast<std::size_t>(std::ceil(log_term));
    const auto m = static_cast<std::size_t>(std::ceil(cells / static_cast<double>(r)));
    return {r, m, cells};
}

LambdaHCount::LambdaHCount(std::size_t r, std::size_t m, const LhParams& params,
                           std::uint64_t master_seed)
    : r_(r), m_(m), params_(params), grid_(r * m) {
    if (r < 1 || m < 1)
        throw std::invalid_argument("grid needs at least one row and column");
    if (!(params.lambda > 0.0 && params.lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0, 1)");
    if (!(params.epsilon > 0.0 && params.epsilon < params.support))
        throw std::invalid_argument("epsilon must lie in (0, support)");
    admit_threshold_ = (params.support - params.epsilon) / (1.0 - params.lambda);
    queue_capacity_ = static_cast<std::size_t>(
        std::ceil(static_cast<double>(r) / (params.support - params.epsilon)));
    seeds_.resize(r);
    std::uint64_t state = master_seed;
    for (auto& s : seeds_) s = splitmix64(state);
}

std::size_t LambdaHCount::column_of(std::size_t row, std::uint32_t item) const {
    return reduce_range(fnv1a64_u32(item, seeds_[row]),
                        static_cast<std::uint32_t>(m_));
}

void LambdaHCount::update(std::uint32_t item, double t) {
    if (any_update_ && t < last_time_)
        throw std::domain_error("backward decay requires non-decreasing timestamps");
    last_time_ = t;
    any_update_ = true;

    double f_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < r_; ++k) {
        Entry& e = grid_[k * m_ + column_of(k, item)];
        e.density = e.density * std::pow(params_.lambda, t - e.last_update) + 1.0;
        e.last_update = t;
        f_min = std::min(f_min, e.density);
    }

    total_ = total_ * std::pow(params_.lambda, t - total_time_) + 1.0;
    total_time_ = t;

    if (f_min > admit_threshold_) {
        if (auto it = index_.find(item); it != index_.end()) {
            queue_.erase(it->second);
            index_.erase(it);
        } else if (queue_.size() >= queue_capacity_) {
            index_.erase(queue_.front().item);
            queue_.pop_front();
        }
        queue_.push_back({item, f_min, t});
        index_.emplace(item, std::prev(queue_.end()));
    }
}

double LambdaHCount::point_estimate(std::uint32_t item, double t) const {
    double answer = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < r_; ++k) {
        const Entry& e = grid_[k * m_ + column_of(k, item)];
        answer = std::min(answer,
                          e.density * std::pow(params_.lambda, t - e.last_update));
    }
    return answer;
}

double LambdaHCount::total_decayed(double t) const {
    return total_ * std::pow(params_.lambda, t - total_time_);
}

std::vector<std::pair<std::uint32_t, double>> LambdaHCount::query(double t) const {
    const double threshold = params_.support * total_decayed(t);
    std::vector<std::pair<std::uint32_t, double>> result;
    for (const Candidate& c : queue_) {
        const double estimate = point_estimate(c.item, t);
        if (estimate > threshold) result.emplace_back(c.item, estimate);
    }
    return result;
}

}  // namespace fdcmss
