#include "rcft/cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace rcft::cli {

std::vector<ExperimentLog> run_batch(const NetworkConfig& base, const ProtocolParams& params,
                                     std::span<const Protocol> protocols,
                                     std::span<const std::uint64_t> seeds, std::size_t threads) {
  struct Job {
    Protocol protocol;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (Protocol p : protocols)
    for (std::uint64_t s : seeds) jobs.push_back({p, s});

  std::vector<ExperimentLog> logs(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        NetworkConfig config = base;
        config.seed = jobs[i].seed;
        logs[i] = run_experiment(config, jobs[i].protocol, params);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t n = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return logs;
}

std::vector<ExperimentLog> select(std::span<const ExperimentLog> logs, Protocol protocol) {
  std::vector<ExperimentLog> out;
  for (const auto& log : logs)
    if (log.protocol == protocol) out.push_back(log);
  return out;
}

}  // namespace rcft::cli
