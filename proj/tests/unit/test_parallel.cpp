#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "rmlab/erasure.hpp"
#include "rmlab/error_patterns.hpp"
#include "rmlab/parallel.hpp"
#include "rmlab/spectrum.hpp"

using namespace rmlab;

namespace {

struct Snapshot {
  std::vector<std::uint64_t> weights;
  std::uint64_t erasure = 0;
  std::uint64_t span = 0;
  std::uint64_t bsc = 0;
  std::uint64_t bsc_ml = 0;
  std::uint64_t reduction_checked = 0;
  std::uint64_t reduction_violations = 0;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot run_all() {
  Snapshot s;
  s.weights = enumerate_weights(5, 2).counts;
  s.erasure = mc_erasure_success(RmCode(5, 3), CorruptionModel::iid(0.15), 2000, 11).successes;
  s.span = mc_span_success(6, 2, 26, 500, 12).successes;
  s.bsc = mc_bsc_success(RmCode(5, 1), CorruptionModel::uniform(8), 500, 13).successes;
  s.bsc_ml = mc_bsc_success(RmCode(4, 1), CorruptionModel::iid(0.2), 500, 14, BscMethod::FullMl).successes;
  const auto rep = check_erasures_to_errors(3, 1, 3);
  s.reduction_checked = rep.checked;
  s.reduction_violations = rep.violations;
  return s;
}

class ThreadsEnv {
 public:
  explicit ThreadsEnv(const char* value) {
    if (const char* old = std::getenv("RMLAB_THREADS")) saved_ = old;
    setenv("RMLAB_THREADS", value, 1);
  }
  ~ThreadsEnv() {
    if (saved_.empty()) {
      unsetenv("RMLAB_THREADS");
    } else {
      setenv("RMLAB_THREADS", saved_.c_str(), 1);
    }
  }

 private:
  std::string saved_;
};

}  // namespace

TEST(Parallel, WorkerCountFollowsEnvironment) {
  {
    ThreadsEnv env("3");
    EXPECT_EQ(worker_count(), 3u);
  }
  {
    ThreadsEnv env("junk");
    EXPECT_GE(worker_count(), 1u);
  }
}

TEST(Parallel, ChunksCoverRangeInOrder) {
  ThreadsEnv env("4");
  const auto parts = parallel_map_chunks<std::pair<std::uint64_t, std::uint64_t>>(
      10, [](std::uint64_t b, std::uint64_t e) { return std::make_pair(b, e); });
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts.front().first, 0u);
  EXPECT_EQ(parts.back().second, 10u);
  for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_EQ(parts[i - 1].second, parts[i].first);
  EXPECT_EQ(parallel_sum(1000, [](std::uint64_t b, std::uint64_t e) { return e - b; }), 1000u);
}

TEST(Parallel, ExceptionsPropagate) {
  ThreadsEnv env("4");
  EXPECT_THROW(parallel_sum(100,
                            [](std::uint64_t b, std::uint64_t) -> std::uint64_t {
                              if (b > 0) throw std::runtime_error("worker failed");
                              return 0;
                            }),
               std::runtime_error);
}

TEST(Parallel, ResultsIndependentOfWorkerCount) {
  Snapshot one;
  {
    ThreadsEnv env("1");
    one = run_all();
  }
  for (const char* workers : {"2", "3", "7"}) {
    ThreadsEnv env(workers);
    EXPECT_EQ(run_all(), one) << "RMLAB_THREADS=" << workers;
  }
}
