#include "mlbsim/matrix.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mlbsim
{

const MatrixAggregate* MatrixResult::FindAggregate(Algorithm a, int ueCount) const
{
    for (const MatrixAggregate& agg : aggregates)
    {
        if (agg.algorithm == a && agg.ueCount == ueCount)
        {
            return &agg;
        }
    }
    return nullptr;
}

namespace
{

double Mean(const std::vector<double>& xs)
{
    double sum = 0.0;
    for (double x : xs)
    {
        sum += x;
    }
    return xs.empty() ? 0.0 : sum / xs.size();
}

double SampleStddev(const std::vector<double>& xs, double mean)
{
    if (xs.size() < 2)
    {
        return 0.0;
    }
    double ss = 0.0;
    for (double x : xs)
    {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / (xs.size() - 1));
}

} // namespace

MatrixResult RunMatrix(const MatrixSpec& spec)
{
    if (spec.algorithms.empty() || spec.ueCounts.empty() || spec.seeds.empty())
    {
        throw std::invalid_argument("matrix: algorithms, ue_counts and seeds must be nonempty");
    }

    std::vector<ScenarioConfig> configs;
    for (Algorithm a : spec.algorithms)
    {
        for (int ues : spec.ueCounts)
        {
            for (uint64_t seed : spec.seeds)
            {
                ScenarioConfig c = spec.base;
                c.algorithm = a;
                c.ueCount = ues;
                c.seed = seed;
                c.Validate();
                configs.push_back(std::move(c));
            }
        }
    }

    MatrixResult result;
    result.runs.resize(configs.size());

    unsigned threadCount = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                            : std::max(1u, std::thread::hardware_concurrency());
    threadCount = std::min<unsigned>(threadCount, configs.size());

    std::atomic<size_t> nextIndex{0};
    std::vector<std::string> workerErrors(threadCount);
    auto worker = [&](unsigned workerId) {
        for (;;)
        {
            size_t i = nextIndex.fetch_add(1);
            if (i >= configs.size())
            {
                return;
            }
            try
            {
                MatrixRunResult& r = result.runs[i];
                r.algorithm = configs[i].algorithm;
                r.ueCount = configs[i].ueCount;
                r.seed = configs[i].seed;
                r.kpi = Run(configs[i]);
            }
            catch (const std::exception& e)
            {
                workerErrors[workerId] = e.what();
                return;
            }
        }
    };

    if (threadCount <= 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(threadCount);
        for (unsigned w = 0; w < threadCount; ++w)
        {
            pool.emplace_back(worker, w);
        }
        for (std::thread& t : pool)
        {
            t.join();
        }
    }
    for (const std::string& err : workerErrors)
    {
        if (!err.empty())
        {
            throw std::runtime_error("matrix run failed: " + err);
        }
    }

    for (Algorithm a : spec.algorithms)
    {
        for (int ues : spec.ueCounts)
        {
            std::vector<double> throughput;
            std::vector<double> loss;
            std::vector<double> ho;
            for (const MatrixRunResult& r : result.runs)
            {
                if (r.algorithm == a && r.ueCount == ues)
                {
                    throughput.push_back(r.kpi.globalThroughputMbps);
                    loss.push_back(r.kpi.lossRatio);
                    ho.push_back(static_cast<double>(r.kpi.hoCount));
                }
            }
            MatrixAggregate agg;
            agg.algorithm = a;
            agg.ueCount = ues;
            agg.runCount = static_cast<int>(throughput.size());
            agg.meanThroughputMbps = Mean(throughput);
            agg.stdThroughputMbps = SampleStddev(throughput, agg.meanThroughputMbps);
            agg.meanLossRatio = Mean(loss);
            agg.stdLossRatio = SampleStddev(loss, agg.meanLossRatio);
            agg.meanHoCount = Mean(ho);
            agg.stdHoCount = SampleStddev(ho, agg.meanHoCount);
            result.aggregates.push_back(agg);
        }
    }
    return result;
}

} // namespace mlbsim
