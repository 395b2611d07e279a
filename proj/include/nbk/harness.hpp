#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbk/io.hpp"

namespace nbk {

struct BatteryOptions {
    /// Run the exact oracle checks when the original graph has at most this
    /// many vertices; 0 disables them.
    std::size_t oracle_max_n = 14;
    bool run_constructor = true;
};

/// Kernelizes (g, k_nb) and checks every invariant the pipeline promises:
/// the reduced-structure audit, the kernel bound, per-step rule equivalence
/// and end-to-end agreement with the oracle, lifting, the cover conditions,
/// charge conservation and per-path safety. Violations set `failed`.
RunReport run_battery(const std::string& id, const Graph& g, std::int64_t k_nb, const BatteryOptions& opt = {});

struct FuzzSummary {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<RunReport> failed;
};

/// `count` seeded random instances with 1 <= n <= max_n, spread over
/// `threads` workers. Deterministic for a fixed seed.
FuzzSummary fuzz(std::size_t count, std::size_t max_n, std::uint64_t seed, const BatteryOptions& opt = {},
                 unsigned threads = 1);

}  // namespace nbk
