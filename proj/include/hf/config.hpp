#pragma once

#include <cstddef>
#include <cstdint>

namespace hf {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kVerifyPrime = 1000003;

/// Resource ceilings.  Exceeding one raises resource_limit; the fuzzer
/// reports such cases per-case instead of aborting the run.
struct EngineLimits {
    int max_truncation = 96;            // ceiling for Koszul stripe bound
    int max_koszul_vars = 16;
    int max_form_retries = 8;
    int series_depth_ceiling = 512;     // pivot recursion depth
    long long series_node_ceiling = 4'000'000;
    int fit_window_ceiling = 256;       // largest n for Hilbert-Samuel values
    std::size_t bigint_bits = std::size_t(1) << 23;
};

}  // namespace hf
