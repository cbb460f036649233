#include "fdcmss/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "fdcmss/hash.hpp"

namespace fdcmss {

std::size_t rows_for_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    return static_cast<std::size_t>(std::ceil(std::log(1.0 / delta)));
}

std::size_t cols_for_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    return static_cast<std::size_t>(std::ceil(std::exp(1.0) / (2.0 * epsilon)));
}

double theoretical_cells_fdcmss(double epsilon, double delta) {
    if (!(delta > 0.0 && delta < 1.0) || !(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon and delta must lie in (0, 1)");
    return std::log(1.0 / delta) * std::exp(1.0) / (2.0 * epsilon);
}

double success_probability(double phi, double w, double d) {
    return 1.0 - std::pow(1.0 / (2.0 * phi * w), d);
}

void FdcmssSketch::validate_params(const SketchParams& params) {
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0) ||
        !(params.delta > 0.0 && params.delta < 1.0) ||
        !(params.phi > 0.0 && params.phi < 1.0))
        throw std::invalid_argument("epsilon, delta and phi must lie in (0, 1)");
    if (!(params.epsilon < params.phi))
        throw std::invalid_argument("epsilon must be smaller than phi");
}

FdcmssSketch::RowHasher FdcmssSketch::make_seeded_hasher(std::uint64_t master_seed) {
    seeds_.resize(d_);
    std::uint64_t state = master_seed;
    for (auto& s : seeds_) s = splitmix64(state);
    const auto w = static_cast<std::uint32_t>(w_);
    // captures the seeds by value so moved-from sketches stay valid
    return [seeds = seeds_, w](std::size_t row, std::uint32_t item) {
        return reduce_range(xxhash64_u32(item, seeds[row]), w);
    };
}

FdcmssSketch::FdcmssSketch(const SketchParams& params, std::uint64_t master_seed)
    : d_((validate_params(params), rows_for_delta(params.delta))),
      w_(cols_for_epsilon(params.epsilon)),
      phi_(params.phi),
      decay_(params.decay),
      cells_(d_ * w_, SpaceSavingSummary(2)) {
    decay_.set_landmark(params.t_init);
    hasher_ = make_seeded_hasher(master_seed);
}

FdcmssSketch::FdcmssSketch(std::size_t d, std::size_t w, double phi,
                           DecaySpec decay, std::uint64_t master_seed)
    : d_(d), w_(w), phi_(phi), decay_(decay),
      cells_(d * w, SpaceSavingSummary(2)) {
    if (d < 1 || w < 1)
        throw std::invalid_argument("sketch needs at least one row and column");
    hasher_ = make_seeded_hasher(master_seed);
}

void FdcmssSketch::process(std::uint32_t item, double t) {
    double x = decay_.raw_weight(t);
    if (x > kRebaseThreshold &&
        decay_.kind() == DecayKind::ExponentialLambda) {
        rebase(t);
        x = decay_.raw_weight(t);
    }
    count_ += x;
    for (std::size_t i = 0; i < d_; ++i) {
        cells_[i * w_ + hasher_(i, item)].update(item, x);
    }
}

std::vector<FrequentItem> FdcmssSketch::query(double t) const {
    const double g = decay_.raw_weight(t);
    const double raw_threshold = phi_ * count_;
    const double norm_threshold = raw_threshold / g;
    std::unordered_map<std::uint32_t, double> found;
    for (const SpaceSavingSummary& cell : cells_) {
        for (const Counter& c : cell.counters()) {
            if (!c.occupied || !(c.count > raw_threshold)) continue;
            if (found.contains(c.item)) continue;
            const double p = point_estimate(c.item, t);
            if (p > norm_threshold) found.emplace(c.item, p);
        }
    }
    std::vector<FrequentItem> result;
    result.reserve(found.size());
    for (const auto& [item, est] : found) result.push_back({item, est});
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return a.estimate != b.estimate ? a.estimate > b.estimate
                                        : a.item < b.item;
    });
    return result;
}

double FdcmssSketch::point_estimate(std::uint32_t item, double t) const {
    double answer = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d_; ++i) {
        const SpaceSavingSummary& cell = cells_[i * w_ + hasher_(i, item)];
        answer = std::min(answer, cell.estimate(item));
    }
    return answer / decay_.raw_weight(t);
}

void FdcmssSketch::rebase(double new_landmark) {
    const double factor = decay_.rebase_factor(new_landmark);
    count_ *= factor;
    for (SpaceSavingSummary& cell : cells_) cell.scale(factor);
    decay_.set_landmark(new_landmark);
}

namespace {

constexpr char kMagic[4] = {'F', 'D', 'C', '1'};

template <typename T>
void put(std::ostream& out, T value) {
    // little-endian host assumed; all supported targets are
    out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T get(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof value);
    if (!in) throw std::runtime_error("truncated sketch snapshot");
    return value;
}

}  // namespace

void FdcmssSketch::serialize(std::ostream& out) const {
    out.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(d_));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(w_));
    put<double>(out, decay_.landmark());
    put<double>(out, count_);
    for (const SpaceSavingSummary& cell : cells_) {
        for (const Counter& c : cell.counters()) {
            put<std::uint32_t>(out, c.occupied ? c.item : 0u);
            put<double>(out, c.occupied ? c.count : 0.0);
        }
    }
}

FdcmssSketch FdcmssSketch::deserialize(std::istream& in, double phi,
                                       DecaySpec decay,
                                       std::uint64_t master_seed) {
    char magic[4];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("not an FDC1 sketch snapshot");
    const auto d = get<std::uint32_t>(in);
    const auto w = get<std::uint32_t>(in);
    const double landmark = get<double>(in);
    const double count = get<double>(in);
    decay.set_landmark(landmark);
    FdcmssSketch sketch(d, w, phi, decay, master_seed);
    sketch.count_ = count;
    for (SpaceSavingSummary& cell : sketch.cells_) {
        for (std::size_t slot = 0; slot < 2; ++slot) {
            const auto item = get<std::uint32_t>(in);
            const double c = get<double>(in);
            cell.restore(slot, item, c);
        }
    }
    return sketch;
}

}  // namespace fdcmss
