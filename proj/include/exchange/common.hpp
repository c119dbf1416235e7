#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace exchange {

// Internal units: hbar = 1, default particle mass 1 (trap units). Physical
// scalings, if any, are applied at I/O boundaries only.
inline constexpr double kHbar = 1.0;
inline constexpr double kPlanck = 2.0 * 3.14159265358979323846 * kHbar;
inline constexpr double kPi = 3.14159265358979323846;

/// Configuration / input errors (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failures: mask intrusion, divergence, zero-norm projections
/// (CLI exit code 3).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thread budget for data-parallel loops. EXCHANGE_LAB_THREADS overrides
/// any value set programmatically (CI convenience).
int thread_budget();
void set_thread_budget(int n);

/// Runs fn(begin..end) split across the thread budget. Each index is touched
/// by exactly one worker, so writes to per-index slots are race-free and the
/// result is deterministic.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

std::string library_version();

}  // namespace exchange
