#pragma once

// Small timing harness: runs each registered case a few times and reports
// the best and median wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace bench {

inline void run(const std::string& name, const std::function<void()>& body, int reps = 5) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    times.push_back(dt.count());
  }
  std::sort(times.begin(), times.end());
  std::printf("%-40s best %10.3f ms   median %10.3f ms\n", name.c_str(), times.front(),
              times[times.size() / 2]);
  std::fflush(stdout);
}

}  // namespace bench
