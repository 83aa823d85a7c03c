#include "mlbsim/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mlbsim
{

namespace
{

std::string Fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::vector<std::string> SplitCsvLine(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
    {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',')
    {
        fields.emplace_back();
    }
    return fields;
}

} // namespace

void WriteMatrixCsv(std::ostream& os, const MatrixResult& result, const std::string& scenarioName)
{
    os << "scenario,algorithm,ue_count,seed,throughput_mbps,loss_ratio,ho_count,"
          "aggregate,throughput_std,loss_ratio_std,ho_count_std\n";
    for (const MatrixRunResult& r : result.runs)
    {
        os << scenarioName << ',' << ToString(r.algorithm) << ',' << r.ueCount << ',' << r.seed
           << ',' << Fmt(r.kpi.globalThroughputMbps) << ',' << Fmt(r.kpi.lossRatio) << ','
           << r.kpi.hoCount << ",false,,,\n";
    }
    for (const MatrixAggregate& a : result.aggregates)
    {
        os << scenarioName << ',' << ToString(a.algorithm) << ',' << a.ueCount << ','
           << ',' << Fmt(a.meanThroughputMbps) << ',' << Fmt(a.meanLossRatio) << ','
           << Fmt(a.meanHoCount) << ",true," << Fmt(a.stdThroughputMbps) << ','
           << Fmt(a.stdLossRatio) << ',' << Fmt(a.stdHoCount) << '\n';
    }
}

std::vector<MatrixCsvRow> ReadMatrixCsv(std::istream& is)
{
    std::vector<MatrixCsvRow> rows;
    std::string line;
    if (!std::getline(is, line))
    {
        throw std::runtime_error("matrix csv: empty input");
    }
    while (std::getline(is, line))
    {
        if (line.empty())
        {
            continue;
        }
        std::vector<std::string> f = SplitCsvLine(line);
        if (f.size() < 8)
        {
            throw std::runtime_error("matrix csv: malformed row '" + line + "'");
        }
        MatrixCsvRow row;
        row.scenario = f[0];
        row.algorithm = f[1];
        row.ueCount = std::stoi(f[2]);
        row.throughputMbps = std::stod(f[4]);
        row.lossRatio = std::stod(f[5]);
        row.hoCount = std::stod(f[6]);
        row.aggregate = f[7] == "true";
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace
{

struct ChartSeries
{
    std::string label;
    std::vector<double> values;  // aligned with the density axis
};

struct ChartData
{
    std::vector<int> densities;
    std::vector<ChartSeries> series;
};

ChartData CollectChart(const std::vector<MatrixCsvRow>& rows, double MatrixCsvRow::*metric)
{
    // Prefer aggregate rows; fall back to averaging run rows.
    bool hasAggregates = false;
    for (const MatrixCsvRow& r : rows)
    {
        if (r.aggregate)
        {
            hasAggregates = true;
            break;
        }
    }

    std::set<int> densitySet;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, int>, std::pair<double, int>> cells;
    for (const MatrixCsvRow& r : rows)
    {
        if (r.aggregate != hasAggregates)
        {
            continue;
        }
        densitySet.insert(r.ueCount);
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
        {
            algorithms.push_back(r.algorithm);
        }
        auto& cell = cells[{r.algorithm, r.ueCount}];
        cell.first += r.*metric;
        cell.second += 1;
    }

    ChartData data;
    data.densities.assign(densitySet.begin(), densitySet.end());
    for (const std::string& alg : algorithms)
    {
        ChartSeries s;
        s.label = alg;
        for (int d : data.densities)
        {
            auto it = cells.find({alg, d});
            s.values.push_back(it == cells.end() || it->second.second == 0
                                   ? 0.0
                                   : it->second.first / it->second.second);
        }
        data.series.push_back(std::move(s));
    }
    return data;
}

const char* kPalette[] = {"#4878cf", "#e24a33", "#77ab43", "#988ed5", "#ccb974", "#64b5cd"};

void RenderBarChart(std::ostream& os, const ChartData& data, const std::string& title,
                    const std::string& yLabel)
{
    const double width = 640.0;
    const double height = 400.0;
    const double left = 80.0;
    const double right = 24.0;
    const double top = 40.0;
    const double bottom = 56.0;
    const double plotW = width - left - right;
    const double plotH = height - top - bottom;

    double maxV = 0.0;
    for (const ChartSeries& s : data.series)
    {
        for (double v : s.values)
        {
            maxV = std::max(maxV, v);
        }
    }
    if (maxV <= 0.0)
    {
        maxV = 1.0;
    }
    maxV *= 1.12;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"15\" font-weight=\"bold\">"
       << title << "</text>\n";

    // Gridlines and y labels.
    for (int g = 0; g <= 5; ++g)
    {
        double v = maxV * g / 5.0;
        double y = top + plotH - plotH * g / 5.0;
        os << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plotW << "\" y2=\""
           << y << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << Fmt(v)
           << "</text>\n";
    }
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
       << top + plotH << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top + plotH << "\" x2=\"" << left + plotW
       << "\" y2=\"" << top + plotH << "\" stroke=\"black\"/>\n";
    os << "<text x=\"18\" y=\"" << top + plotH / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
          "transform=\"rotate(-90 18 "
       << top + plotH / 2 << ")\">" << yLabel << "</text>\n";
    os << "<text x=\"" << left + plotW / 2 << "\" y=\"" << height - 14
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">UE density"
          "</text>\n";

    const size_t groups = data.densities.size();
    const size_t seriesCount = data.series.size();
    const double groupW = plotW / std::max<size_t>(groups, 1);
    const double barW = groupW / (seriesCount + 1.5);

    for (size_t g = 0; g < groups; ++g)
    {
        double gx = left + groupW * g;
        os << "<text x=\"" << gx + groupW / 2 << "\" y=\"" << top + plotH + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
           << data.densities[g] << "</text>\n";
        for (size_t s = 0; s < seriesCount; ++s)
        {
            double v = data.series[s].values[g];
            double barH = plotH * v / maxV;
            double x = gx + groupW / 2 + (static_cast<double>(s) - seriesCount / 2.0) * barW;
            os << "<rect x=\"" << x << "\" y=\"" << top + plotH - barH << "\" width=\""
               << barW * 0.9 << "\" height=\"" << barH << "\" fill=\""
               << kPalette[s % 6] << "\"/>\n";
        }
    }

    // Legend.
    double lx = left + 10;
    double ly = top + 8;
    for (size_t s = 0; s < seriesCount; ++s)
    {
        os << "<rect x=\"" << lx << "\" y=\"" << ly + s * 18 << "\" width=\"12\" height=\"12\" "
           << "fill=\"" << kPalette[s % 6] << "\"/>\n";
        os << "<text x=\"" << lx + 18 << "\" y=\"" << ly + s * 18 + 10
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << data.series[s].label
           << "</text>\n";
    }
    os << "</svg>\n";
}

void WriteChartFile(const std::string& path, const ChartData& data, const std::string& title,
                    const std::string& yLabel)
{
    std::ofstream out(path);
    if (!out)
    {
        throw std::runtime_error("cannot write chart file '" + path + "'");
    }
    RenderBarChart(out, data, title, yLabel);
}

} // namespace

std::vector<std::string> WriteSvgCharts(const std::vector<MatrixCsvRow>& rows,
                                        const std::string& outputDir)
{
    if (rows.empty())
    {
        throw std::runtime_error("svg charts: no rows to plot");
    }
    std::vector<std::string> written;

    std::string p1 = outputDir + "/throughput_vs_density.svg";
    WriteChartFile(p1, CollectChart(rows, &MatrixCsvRow::throughputMbps),
                   "Global downlink throughput", "throughput (Mbps)");
    written.push_back(p1);

    std::string p2 = outputDir + "/loss_ratio_vs_density.svg";
    WriteChartFile(p2, CollectChart(rows, &MatrixCsvRow::lossRatio), "Relative loss ratio",
                   "loss ratio");
    written.push_back(p2);

    std::string p3 = outputDir + "/ho_count_vs_density.svg";
    WriteChartFile(p3, CollectChart(rows, &MatrixCsvRow::hoCount), "Successful handovers",
                   "handover count");
    written.push_back(p3);

    return written;
}

} // namespace mlbsim
