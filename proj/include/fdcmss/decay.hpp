#pragma once

#include <stdexcept>

// Forward decay functions over a landmark time L. The weight of an item with
// timestamp t_i, measured at time t, is g(t_i - L) / g(t - L) for a positive
// monotone non-decreasing g. Two families are supported:
//
//   exponential: g(n) = (1/lambda)^n, 0 < lambda < 1
//   polynomial:  g(n) = n^beta, beta > 0
//
// Raw (unnormalized) weights are what the sketches accumulate; normalization
// happens at query time. Exponential raw weights grow without bound, so an
// exact landmark shift (rebase) is provided: multiplying every stored raw
// weight by lambda^(L' - L) and moving the landmark to L' leaves every
// normalized quantity unchanged.

namespace fdcmss {

enum class DecayKind { ExponentialLambda, Polynomial };

// Raw weights above this trigger an automatic rebase in the sketch.
inline constexpr double kRebaseThreshold = 1e300;

class DecaySpec {
public:
    static DecaySpec exponential(double lambda, double landmark) {
        if (!(lambda > 0.0 && lambda < 1.0))
            throw std::invalid_argument("exponential decay requires 0 < lambda < 1");
        return DecaySpec(DecayKind::ExponentialLambda, lambda, landmark);
    }

    static DecaySpec polynomial(double beta, double landmark) {
        if (!(beta > 0.0))
            throw std::invalid_argument("polynomial decay requires beta > 0");
        return DecaySpec(DecayKind::Polynomial, beta, landmark);
    }

    DecayKind kind() const { return kind_; }
    double landmark() const { return landmark_; }

    // lambda for exponential decay, beta for polynomial decay.
    double param() const { return param_; }

    // g(t - L), unnormalized.
    double raw_weight(double t) const;

    // g(t_i - L) / g(t - L), in [0, 1].
    double normalized_weight(double t_i, double t) const;

    // lambda^(new_landmark - landmark); exponential decay only.
    double rebase_factor(double new_landmark) const;

    // Moves the landmark forward (after the caller has scaled stored state
    // by rebase_factor).
    void set_landmark(double new_landmark) { landmark_ = new_landmark; }

private:
    DecaySpec(DecayKind kind, double param, double landmark)
        : kind_(kind), param_(param), landmark_(landmark) {}

    DecayKind kind_;
    double param_;
    double landmark_;
};

}  // namespace fdcmss
