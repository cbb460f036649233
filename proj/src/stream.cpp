#include "fdcmss/stream.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "fdcmss/hash.hpp"

namespace fdcmss {

ZipfGenerator::ZipfGenerator(const ZipfSpec& spec) : rng_state_(spec.seed) {
    if (spec.universe < 1)
        throw std::invalid_argument("universe must contain at least one item");
    if (spec.rho < 0.0) throw std::invalid_argument("skew must be non-negative");
    cdf_.resize(spec.universe);
    double acc = 0.0;
    for (std::uint32_t i = 0; i < spec.universe; ++i) {
        acc += std::pow(static_cast<double>(i) + 1.0, -spec.rho);
        cdf_[i] = acc;
    }
    for (double& c : cdf_) c /= acc;
    cdf_.back() = 1.0;
}

std::uint32_t ZipfGenerator::next() {
    // top 53 bits -> uniform double in [0, 1); avoids the implementation-
    // defined behavior of the standard distributions
    const double u =
        static_cast<double>(splitmix64(rng_state_) >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint32_t>(it - cdf_.begin()) + 1;
}

std::vector<std::uint32_t> zipf_stream(const ZipfSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("stream length must be >= 1");
    ZipfGenerator gen(spec);
    std::vector<std::uint32_t> items(spec.n);
    for (auto& item : items) item = gen.next();
    return items;
}

ParseError::ParseError(const std::string& message, std::size_t line_no)
    : std::runtime_error(message + " at line " + std::to_string(line_no)),
      line(line_no) {}

std::vector<std::uint32_t> read_items(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint32_t> items;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::uint64_t value = 0;
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
                const char ch = line[pos];
                if (ch < '0' || ch > '9' || value > 0xffffffffULL)
                    throw ParseError("invalid item token '" +
                                         line.substr(start, pos - start + 1) + "'",
                                     line_no);
                value = value * 10 + static_cast<std::uint64_t>(ch - '0');
                ++pos;
            }
            if (value > 0xffffffffULL)
                throw ParseError("item exceeds 32 bits", line_no);
            items.push_back(static_cast<std::uint32_t>(value));
        }
    }
    return items;
}

void write_items(const std::string& path, std::span<const std::uint32_t> items) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (std::uint32_t item : items) out << item << '\n';
}

DatasetStats dataset_stats(std::span<const std::uint32_t> items) {
    if (items.empty()) throw std::invalid_argument("empty dataset");
    DatasetStats stats;
    stats.count = items.size();
    stats.min = *std::min_element(items.begin(), items.end());
    stats.max = *std::max_element(items.begin(), items.end());
    stats.distinct =
        std::unordered_set<std::uint32_t>(items.begin(), items.end()).size();

    const double n = static_cast<double>(items.size());
    double sum = 0.0;
    for (std::uint32_t x : items) sum += x;
    stats.mean = sum / n;

    double m2 = 0.0, m3 = 0.0;
    for (std::uint32_t x : items) {
        const double dx = static_cast<double>(x) - stats.mean;
        m2 += dx * dx;
        m3 += dx * dx * dx;
    }
    m2 /= n;
    m3 /= n;
    stats.stddev = std::sqrt(m2);
    stats.skewness = m2 > 0.0 ? m3 / (m2 * stats.stddev) : 0.0;

    std::vector<std::uint32_t> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1
                       ? static_cast<double>(sorted[mid])
                       : (static_cast<double>(sorted[mid - 1]) +
                          static_cast<double>(sorted[mid])) / 2.0;
    return stats;
}

}  // namespace fdcmss
