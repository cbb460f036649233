#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Stream sources for the benchmark: a seeded Zipf generator and a reader for
// whitespace-separated integer files. Timestamps are implicit: the i-th item
// of a stream has timestamp i (1-based position).

namespace fdcmss {

struct ZipfSpec {
    std::size_t n = 0;          // stream length
    double rho = 1.0;           // skew, >= 0 (0 = uniform)
    std::uint32_t universe = 1; // items drawn from [1, universe]
    std::uint64_t seed = 0;
};

class ZipfGenerator {
public:
    explicit ZipfGenerator(const ZipfSpec& spec);
    std::uint32_t next();
    const std::vector<double>& cdf() const { return cdf_; }

private:
    std::vector<double> cdf_;
    std::uint64_t rng_state_;
};

// The full stream; identical spec (including seed) gives identical bytes.
std::vector<std::uint32_t> zipf_stream(const ZipfSpec& spec);

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line);
    std::size_t line;
};

// Whitespace/newline-separated non-negative integers, flattened in file
// order. Malformed tokens raise ParseError with the offending line number.
std::vector<std::uint32_t> read_items(const std::string& path);

void write_items(const std::string& path, std::span<const std::uint32_t> items);

struct DatasetStats {
    std::size_t count = 0;
    std::size_t distinct = 0;
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;    // population form
    double skewness = 0.0;  // E[(x - mu)^3] / sigma^3
};

DatasetStats dataset_stats(std::span<const std::uint32_t> items);

}  // namespace fdcmss
