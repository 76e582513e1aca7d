// Copyright 2026 The photongate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <future>

namespace photongate::experiments {

template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  const int width = std::max(1, threads);
  for (int start = 0; start < n; start += width) {
    const int stop = std::min(n, start + width);
    if (width == 1) {
      out.push_back(fn(start));
      continue;
    }
    std::vector<std::future<T>> jobs;
    for (int i = start; i < stop; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
    for (auto& j : jobs) out.push_back(j.get());
  }
  return out;
}

}  // namespace photongate::experiments
