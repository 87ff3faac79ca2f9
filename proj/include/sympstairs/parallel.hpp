#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace sympstairs {

/// Applies f to every element on a pool of std::async workers; the result
/// vector keeps input order. Exceptions propagate from the first failing chunk.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F f, std::size_t workers = 0)
    -> std::vector<decltype(f(in.front()))> {
  using Out = decltype(f(in.front()));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(in.size(), 1));
  std::vector<Out> out(in.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < in.size(); i += workers) out[i] = f(in[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace sympstairs
