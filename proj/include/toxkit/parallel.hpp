// Copyright 2026 The toxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOXKIT_PARALLEL_HPP
#define TOXKIT_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toxkit {

/// Number of threads a `jobs` argument resolves to: 0 means all cores,
/// anything else is taken literally (minimum 1).
inline int resolve_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs <= 0) return omp_get_max_threads();
  return jobs;
#else
  (void)jobs;
  return 1;
#endif
}

/// Runs f(i) for i in [0, n). With jobs != 1 and OpenMP available the
/// iterations run in parallel; f must be safe to call concurrently and
/// results must be written to disjoint slots so that the outcome is
/// identical to the serial order.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  const int threads = resolve_jobs(jobs);
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace toxkit

#endif  // TOXKIT_PARALLEL_HPP
