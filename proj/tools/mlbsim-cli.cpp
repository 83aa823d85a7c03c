#include "mlbsim/export.hpp"
#include "mlbsim/matrix.hpp"
#include "mlbsim/simulation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace mlbsim;

namespace
{

std::ofstream OpenOutput(const fs::path& path)
{
    std::ofstream out(path);
    if (!out)
    {
        throw std::runtime_error("cannot write output file '" + path.string() + "'");
    }
    return out;
}

std::vector<Algorithm> ParseAlgorithms(const std::vector<std::string>& names)
{
    std::vector<Algorithm> algorithms;
    for (const std::string& n : names)
    {
        algorithms.push_back(AlgorithmFromString(n));
    }
    return algorithms;
}

int CmdRun(const std::string& configPath,
           const std::string& algorithm,
           const std::string& betaVariant,
           int ues,
           long long seed,
           double duration,
           const std::string& outDir,
           bool algorithmSet,
           bool betaSet,
           bool uesSet,
           bool seedSet,
           bool durationSet)
{
    ScenarioConfig config;
    if (!configPath.empty())
    {
        config = LoadConfigFile(configPath);
    }
    if (algorithmSet)
    {
        config.algorithm = AlgorithmFromString(algorithm);
    }
    if (betaSet)
    {
        config.betaVariant = BetaVariantFromString(betaVariant);
    }
    if (uesSet)
    {
        config.ueCount = ues;
    }
    if (seedSet)
    {
        config.seed = static_cast<uint64_t>(seed);
    }
    if (durationSet)
    {
        config.durationS = duration;
    }
    config.Validate();

    fs::create_directories(outDir);
    std::ofstream kpiCsv = OpenOutput(fs::path(outDir) / "kpi.csv");
    std::ofstream handoversCsv = OpenOutput(fs::path(outDir) / "handovers.csv");
    std::ofstream mlbCsv = OpenOutput(fs::path(outDir) / "mlb_decisions.csv");
    std::ofstream loadCsv = OpenOutput(fs::path(outDir) / "sector_load.csv");

    RunSinks sinks;
    sinks.kpiCsv = &kpiCsv;
    sinks.handoversCsv = &handoversCsv;
    sinks.mlbDecisionsCsv = &mlbCsv;
    sinks.sectorLoadCsv = &loadCsv;

    KpiRecord kpi = Run(config, sinks);

    std::cout << "scenario " << config.name << ": algorithm=" << ToString(config.algorithm)
              << " ues=" << config.ueCount << " seed=" << config.seed << "\n"
              << "  throughput      " << kpi.globalThroughputMbps << " Mbps\n"
              << "  loss ratio      " << kpi.lossRatio << "\n"
              << "  handovers       " << kpi.hoCount << "\n"
              << "  control msgs    " << kpi.controlMessageCount << "\n"
              << "  outputs in      " << outDir << "\n";
    return 0;
}

int CmdMatrix(const std::string& configPath,
              const std::vector<std::string>& algorithmNames,
              std::vector<int> ueCounts,
              std::vector<long long> seeds,
              const std::string& betaVariant,
              double duration,
              int threads,
              const std::string& outDir,
              bool betaSet,
              bool durationSet)
{
    MatrixSpec spec;
    if (!configPath.empty())
    {
        spec.base = LoadConfigFile(configPath);
    }
    if (betaSet)
    {
        spec.base.betaVariant = BetaVariantFromString(betaVariant);
    }
    if (durationSet)
    {
        spec.base.durationS = duration;
    }
    spec.algorithms = ParseAlgorithms(algorithmNames);
    spec.ueCounts = std::move(ueCounts);
    for (long long s : seeds)
    {
        spec.seeds.push_back(static_cast<uint64_t>(s));
    }
    spec.threads = threads;

    MatrixResult result = RunMatrix(spec);

    fs::create_directories(outDir);
    fs::path csvPath = fs::path(outDir) / "matrix.csv";
    std::ofstream csv = OpenOutput(csvPath);
    WriteMatrixCsv(csv, result, spec.base.name);

    std::cout << "matrix: " << result.runs.size() << " runs -> " << csvPath.string() << "\n";
    std::cout << "algorithm  ues  mean_tput_mbps  mean_loss  mean_ho\n";
    for (const MatrixAggregate& a : result.aggregates)
    {
        std::ostringstream line;
        line << ToString(a.algorithm);
        std::cout << line.str() << std::string(11 - line.str().size(), ' ') << a.ueCount << "   "
                  << a.meanThroughputMbps << "   " << a.meanLossRatio << "   " << a.meanHoCount
                  << "\n";
    }
    return 0;
}

int CmdPlot(const std::string& inputPath, const std::string& outDir)
{
    std::ifstream in(inputPath);
    if (!in)
    {
        throw std::runtime_error("cannot open matrix csv '" + inputPath + "'");
    }
    std::vector<MatrixCsvRow> rows = ReadMatrixCsv(in);
    fs::create_directories(outDir);
    for (const std::string& path : WriteSvgCharts(rows, outDir))
    {
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"LTE downlink mobility load balancing simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run one scenario and export its logs");
    std::string runConfig;
    std::string runAlgorithm = "none";
    std::string runBeta = "literal";
    int runUes = 37;
    long long runSeed = 1;
    double runDuration = 100.0;
    std::string runOut = "out";
    run->add_option("--config", runConfig, "JSON scenario config file");
    auto* optAlg = run->add_option("--algorithm", runAlgorithm, "none|mlb1|mlb2");
    auto* optBeta = run->add_option("--beta-variant", runBeta, "literal|continuous");
    auto* optUes = run->add_option("--ues", runUes, "number of UEs");
    auto* optSeed = run->add_option("--seed", runSeed, "master seed");
    auto* optDur = run->add_option("--duration", runDuration, "simulated seconds");
    run->add_option("--out", runOut, "output directory");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Run an algorithms x densities x seeds matrix");
    std::string matConfig;
    std::vector<std::string> matAlgorithms = {"none", "mlb1", "mlb2"};
    std::vector<int> matUes = {37, 56, 75};
    std::vector<long long> matSeeds = {1, 2, 3, 4, 5};
    std::string matBeta = "literal";
    double matDuration = 100.0;
    int matThreads = 0;
    std::string matOut = "out";
    matrix->add_option("--config", matConfig, "JSON scenario config file");
    matrix->add_option("--algorithms", matAlgorithms, "algorithms to compare")->delimiter(',');
    matrix->add_option("--ue-counts", matUes, "UE densities")->delimiter(',');
    matrix->add_option("--seeds", matSeeds, "paired seeds")->delimiter(',');
    auto* optMatBeta = matrix->add_option("--beta-variant", matBeta, "literal|continuous");
    auto* optMatDur = matrix->add_option("--duration", matDuration, "simulated seconds per run");
    matrix->add_option("--threads", matThreads, "worker threads (0 = hardware)");
    matrix->add_option("--out", matOut, "output directory");

    // plot
    auto* plot = app.add_subcommand("plot", "Render SVG charts from a matrix CSV");
    std::string plotInput;
    std::string plotOut = "out";
    plot->add_option("--input", plotInput, "matrix.csv produced by the matrix subcommand")
        ->required();
    plot->add_option("--out", plotOut, "output directory");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            return CmdRun(runConfig, runAlgorithm, runBeta, runUes, runSeed, runDuration, runOut,
                          optAlg->count() > 0, optBeta->count() > 0, optUes->count() > 0,
                          optSeed->count() > 0, optDur->count() > 0);
        }
        if (matrix->parsed())
        {
            return CmdMatrix(matConfig, matAlgorithms, matUes, matSeeds, matBeta, matDuration,
                             matThreads, matOut, optMatBeta->count() > 0, optMatDur->count() > 0);
        }
        if (plot->parsed())
        {
            return CmdPlot(plotInput, plotOut);
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
