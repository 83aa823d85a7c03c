#ifndef MLBSIM_MATRIX_HPP
#define MLBSIM_MATRIX_HPP

#include "mlbsim/simulation.hpp"

#include <vector>

namespace mlbsim
{

/// Cartesian product of algorithms x densities x seeds over a base config.
/// Seeds are shared across algorithms so comparisons are paired.
struct MatrixSpec
{
    ScenarioConfig base;
    std::vector<Algorithm> algorithms;
    std::vector<int> ueCounts;
    std::vector<uint64_t> seeds;
    int threads = 0;  ///< 0 = hardware concurrency
};

struct MatrixRunResult
{
    Algorithm algorithm = Algorithm::None;
    int ueCount = 0;
    uint64_t seed = 0;
    KpiRecord kpi;
};

/// Seed-aggregated cell of the matrix (mean and sample stddev).
struct MatrixAggregate
{
    Algorithm algorithm = Algorithm::None;
    int ueCount = 0;
    int runCount = 0;
    double meanThroughputMbps = 0.0;
    double stdThroughputMbps = 0.0;
    double meanLossRatio = 0.0;
    double stdLossRatio = 0.0;
    double meanHoCount = 0.0;
    double stdHoCount = 0.0;
};

struct MatrixResult
{
    std::vector<MatrixRunResult> runs;        ///< ordered by (algorithm, ueCount, seed) index
    std::vector<MatrixAggregate> aggregates;  ///< ordered by (algorithm, ueCount)

    const MatrixAggregate* FindAggregate(Algorithm a, int ueCount) const;
};

/// Runs the whole matrix. Runs share nothing and may execute on a thread
/// pool; results are ordered by matrix index either way.
/// Throws std::invalid_argument when a list is empty.
MatrixResult RunMatrix(const MatrixSpec& spec);

} // namespace mlbsim

#endif // MLBSIM_MATRIX_HPP
