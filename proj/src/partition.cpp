// Copyright 2026 The refcurves Authors
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

#include "refcurves/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace refcurves {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
  if (!parts_.empty()) {
    conjugate_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++conjugate_[c];
  }
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> table;
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::lock_guard lock(mutex);
  auto it = table.find(n);
  if (it == table.end()) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    it = table.emplace(n, std::move(out)).first;
  }
  return it->second;
}

}  // namespace refcurves
