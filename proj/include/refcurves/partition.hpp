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

#ifndef REFCURVES_PARTITION_HPP
#define REFCURVES_PARTITION_HPP

#include <compare>
#include <vector>

namespace refcurves {

// Integer partition; rows are parts, cell (r, c) has 0 <= c < parts[r].
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int rows() const { return static_cast<int>(parts_.size()); }

  // Boxes to the right of (r, c) in its row.
  int arm(int r, int c) const { return parts_[r] - c - 1; }
  // Boxes below (r, c) in its column.
  int leg(int r, int c) const { return conjugate_[c] - r - 1; }

  const std::vector<int>& conjugate() const { return conjugate_; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> conjugate_;
  int size_ = 0;
};

// All partitions of n, largest first part first (reverse lexicographic).
const std::vector<Partition>& partitions_of(int n);

}  // namespace refcurves

#endif  // REFCURVES_PARTITION_HPP
