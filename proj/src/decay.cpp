#include "fdcmss/decay.hpp"

#include <cmath>

namespace fdcmss {

double DecaySpec::raw_weight(double t) const {
    if (t < landmark_)
        throw std::domain_error("timestamp precedes the landmark time");
    const double n = t - landmark_;
    double g;
    if (kind_ == DecayKind::ExponentialLambda) {
        // (1/lambda)^n computed in the log domain
        g = std::exp(-n * std::log(param_));
    } else {
        g = std::pow(n, param_);
    }
    if (!std::isfinite(g))
        throw std::overflow_error("raw decayed weight overflowed");
    return g;
}

double DecaySpec::normalized_weight(double t_i, double t) const {
    if (t_i > t)
        throw std::domain_error("item timestamp is later than the query time");
    if (kind_ == DecayKind::ExponentialLambda) {
        // g(t_i-L)/g(t-L) telescopes to lambda^(t - t_i); this form cannot
        // overflow and coincides with backward exponential decay.
        return std::pow(param_, t - t_i);
    }
    return raw_weight(t_i) / raw_weight(t);
}

double DecaySpec::rebase_factor(double new_landmark) const {
    if (kind_ != DecayKind::ExponentialLambda)
        throw std::logic_error("rebase is exact only for exponential decay");
    if (new_landmark < landmark_)
        throw std::domain_error("rebase target precedes the current landmark");
    return std::pow(param_, new_landmark - landmark_);
}

}  // namespace fdcmss
