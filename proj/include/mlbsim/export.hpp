#ifndef MLBSIM_EXPORT_HPP
#define MLBSIM_EXPORT_HPP

#include "mlbsim/matrix.hpp"

#include <iosfwd>
#include <string>

namespace mlbsim
{

/// Writes a matrix of runs as CSV: one row per run plus one aggregate row
/// per (algorithm, density) cell flagged aggregate=true. Aggregate rows
/// carry seed-averaged means and sample stddevs; the seed column is empty.
void WriteMatrixCsv(std::ostream& os, const MatrixResult& result, const std::string& scenarioName);

/// Rows parsed back from a matrix CSV (see WriteMatrixCsv).
struct MatrixCsvRow
{
    std::string scenario;
    std::string algorithm;
    int ueCount = 0;
    bool aggregate = false;
    double throughputMbps = 0.0;
    double lossRatio = 0.0;
    double hoCount = 0.0;
};

std::vector<MatrixCsvRow> ReadMatrixCsv(std::istream& is);

/// Renders the aggregate rows of a matrix CSV as three grouped bar charts
/// (throughput, loss ratio, handover count vs UE density, one bar series per
/// algorithm). Returns the written file paths.
/// Throws std::runtime_error naming the path when a file cannot be written.
std::vector<std::string> WriteSvgCharts(const std::vector<MatrixCsvRow>& rows,
                                        const std::string& outputDir);

} // namespace mlbsim

#endif // MLBSIM_EXPORT_HPP
