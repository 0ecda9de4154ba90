// Copyright 2026 The admitsim Authors
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

#ifndef ADMITSIM_SIGNAL_HPP_
#define ADMITSIM_SIGNAL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "admitsim/geometry.hpp"

namespace admitsim {

/// Moving-average filter over the most recent `window` samples. During
/// warm-up the output is the mean of however many samples have arrived,
/// not a zero-padded mean.
template <typename T>
class MovingAverage {
 public:
  explicit MovingAverage(int window) : window_(window) {
    if (window_ < 1) window_ = 1;
    buffer_.reserve(static_cast<size_t>(window_));
  }

  T step(const T& sample) {
    if (static_cast<int>(buffer_.size()) < window_) {
      buffer_.push_back(sample);
    } else {
      buffer_[next_] = sample;
      next_ = (next_ + 1) % static_cast<size_t>(window_);
    }
    // Recompute the sum each step; drift-free and cheap at these sizes.
    T sum{};
    for (const T& s : buffer_) sum += s;
    return sum / static_cast<double>(buffer_.size());
  }

  void reset() {
    buffer_.clear();
    next_ = 0;
  }

  int window() const { return window_; }
  int samples_seen() const { return static_cast<int>(buffer_.size()); }

 private:
  int window_;
  std::vector<T> buffer_;
  size_t next_ = 0;
};

/// Static offsets removed from the force reading: sensor offset, known
/// gripper weight, gravity direction.
struct BiasModel {
  Vec3 ft_offset{};                // N, expressed in the base frame
  double gripper_mass = 1.0;       // kg
  Vec3 gravity{0.0, 0.0, -9.81};   // m/s^2
  // |gravity| outside [9.0, 10.5] is rejected unless explicitly allowed.
  bool allow_nonstandard_gravity = false;

  void validate() const;
};

/// Removes the sensor offset and the known gripper weight from a
/// base-frame force reading, leaving the net force from unknown payloads
/// (and any contact).
Vec3 compensate(const Vec3& raw_ft_base, const BiasModel& bias);

/// Zero-mean Gaussian sensor noise, reproducible per (seed, tick).
/// Sampling is counter-based: the same seed and tick always produce the
/// same pair of vectors, independent of call order.
struct NoiseModel {
  double ft_sigma = 0.0;     // N, per axis
  double accel_sigma = 0.0;  // m/s^2, per axis
  std::uint64_t seed = 0;

  void validate() const;
};

/// Returns (ft_noise, accel_noise) for the given tick.
std::pair<Vec3, Vec3> sample_noise(const NoiseModel& model, std::uint64_t tick);

}  // namespace admitsim

#endif  // ADMITSIM_SIGNAL_HPP_
