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

#include "refcurves/hilb.hpp"

#include <algorithm>
#include <stdexcept>

namespace refcurves {

FixedPointStream::FixedPointStream(int charts, int n) : n_(n) {
  if (charts < 1 || n < 0) throw std::invalid_argument("need charts >= 1 and n >= 0");
  sizes_.assign(static_cast<std::size_t>(charts), 0);
  sizes_[0] = n;
  index_.assign(sizes_.size(), 0);
}

// Reverse-lexicographic successor of the composition sizes_.
bool FixedPointStream::advance_composition() {
  const int k = static_cast<int>(sizes_.size());
  int i = k - 2;
  while (i >= 0 && sizes_[i] == 0) --i;
  if (i < 0) return false;
  int tail = 0;
  for (int j = i + 1; j < k; ++j) {
    tail += sizes_[j];
    sizes_[j] = 0;
  }
  --sizes_[i];
  sizes_[i + 1] = tail + 1;
  return true;
}

bool FixedPointStream::next(HilbFixedPoint& out) {
  if (done_) return false;
  if (started_) {
    // Odometer over the partition choices of the current composition.
    std::size_t j = index_.size();
    while (j > 0) {
      --j;
      if (++index_[j] < partitions_of(sizes_[j]).size()) break;
      index_[j] = 0;
      if (j == 0) {
        if (!advance_composition()) {
          done_ = true;
          return false;
        }
        break;
      }
    }
  }
  started_ = true;
  out.n = n_;
  out.partitions.resize(sizes_.size());
  for (std::size_t j = 0; j < sizes_.size(); ++j)
    out.partitions[j] = partitions_of(sizes_[j])[index_[j]];
  return true;
}

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurfaceModel& s, int n) {
  std::vector<HilbFixedPoint> out;
  FixedPointStream stream(s.euler(), n);
  HilbFixedPoint fp;
  while (stream.next(fp)) out.push_back(fp);
  return out;
}

std::size_t count_fixed_points(int charts, int n) {
  std::size_t total = 0;
  FixedPointStream stream(charts, n);
  HilbFixedPoint fp;
  while (stream.next(fp)) ++total;
  return total;
}

void append_tangent_weights(const Chart& chart, const Partition& lambda, std::vector<Weight>& out) {
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.parts()[r]; ++c) {
      const std::int64_t a = lambda.arm(r, c);
      const std::int64_t l = lambda.leg(r, c);
      out.push_back((l + 1) * chart.v - a * chart.w);
      out.push_back(-l * chart.v + (a + 1) * chart.w);
    }
}

void append_taut_weights(const Chart& chart, const Weight& mu, const Partition& lambda,
                         std::vector<Weight>& out) {
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.parts()[r]; ++c)
      out.push_back(mu - std::int64_t{r} * chart.v - std::int64_t{c} * chart.w);
}

std::vector<Weight> tangent_character(const ToricSurfaceModel& s, const HilbFixedPoint& fp) {
  if (fp.partitions.size() != s.charts.size())
    throw std::invalid_argument("fixed point does not match the surface");
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(2 * fp.n));
  for (std::size_t i = 0; i < s.charts.size(); ++i)
    append_tangent_weights(s.charts[i], fp.partitions[i], out);
  return out;
}

std::vector<Weight> taut_character(const ToricSurfaceModel& s, const EquivLineBundle& L,
                                   const HilbFixedPoint& fp) {
  if (fp.partitions.size() != s.charts.size() || L.characters.size() != s.charts.size())
    throw std::invalid_argument("fixed point does not match the surface");
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(fp.n));
  for (std::size_t i = 0; i < s.charts.size(); ++i)
    append_taut_weights(s.charts[i], L.characters[i], fp.partitions[i], out);
  return out;
}

int bb_index(const ToricSurfaceModel& s, const HilbFixedPoint& fp, const Weight& covector) {
  int index = 0;
  for (const auto& w : tangent_character(s, fp)) {
    const std::int64_t p = w.a * covector.a + w.b * covector.b;
    if (p == 0) throw std::invalid_argument("covector vanishes on a tangent weight");
    if (p < 0) ++index;
  }
  return index;
}

Laurent chi_y_bb(const ToricSurfaceModel& s, int n) {
  const auto fps = enumerate_fixed_points(s, n);
  // Tangent weights of S^[n] have entries bounded by n times the chart
  // weights, so a steep enough covector is generic.
  std::int64_t bound = 1;
  for (const auto& fp : fps)
    for (const auto& w : tangent_character(s, fp))
      bound = std::max({bound, w.a < 0 ? -w.a : w.a, w.b < 0 ? -w.b : w.b});
  const Weight covector{1, 2 * bound + 1};
  Laurent sum;
  for (const auto& fp : fps) sum += Laurent::monomial(1, 2 * bb_index(s, fp, covector) - 2 * n);
  return sum;
}

}  // namespace refcurves
