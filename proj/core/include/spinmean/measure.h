// Copyright 2026 The spinmean Authors
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

#ifndef SPINMEAN_MEASURE_H
#define SPINMEAN_MEASURE_H

#include <array>
#include <cstdint>
#include <span>

#include "spinmean/qcore.h"
#include "spinmean/superpose.h"

/// Simulated projective spin measurements along x, y and z, frequency
/// estimation of the mean triple, and an end-to-end experiment that pushes
/// the estimates through the superposition rule.
namespace spinmean {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

char axis_name(Axis axis);

struct ShotRecord {
    Axis axis;
    std::uint64_t shots;
    /// Number of +1/2 outcomes.
    std::uint64_t ups;
};

struct EstimatedMeans {
    /// Per-axis frequency estimates. Each component is in [-1/2, 1/2], but the
    /// vector may lie outside the Bloch ball.
    Vec3 means;
    /// sqrt(p(1-p)/N) per axis, in x, y, z order.
    std::array<double, 3> standard_error;
    std::uint64_t shots_per_axis;
};

/// Counter-based generator used for shot simulation.
///
/// Stream key:  k = mix(seed + G * (1 + 4 * stream + axis))
/// Draw i:      u_i = (mix(k + G * (i + 1)) >> 11) * 2^-53
/// where G = 0x9E3779B97F4A7C15 and mix is the SplitMix64 finalizer. A shot
/// is +1/2 when u_i < p. Results depend only on (seed, stream, axis, i).
class ShotStream {
   public:
    ShotStream(std::uint64_t seed, std::uint64_t stream, Axis axis);

    /// Uniform double in [0, 1) for draw index i.
    double uniform(std::uint64_t i) const;

    /// Number of draws among the first n with uniform(i) < p.
    std::uint64_t count_below(double p, std::uint64_t n) const;

   private:
    std::uint64_t key_;
};

/// Draws shots_per_axis Bernoulli(1/2 + m_k) outcomes per axis. The stream
/// index separates independent preparations sharing a seed.
///
/// Throws ValidationError when shots_per_axis == 0.
std::array<ShotRecord, 3> simulate_shots(
    const MeanSpinVector &true_means, std::uint64_t shots_per_axis, std::uint64_t seed, std::uint64_t stream = 0);

/// Needs exactly one record per axis, in any order (MissingAxis otherwise).
/// Throws ValidationError for records with zero shots or ups > shots.
EstimatedMeans estimate_means(std::span<const ShotRecord> records);

/// Radial projection m / (2|m|) onto the Bloch sphere. Throws ZeroVector when
/// |m| <= 1e-12.
MeanSpinVector project_to_pure(const Vec3 &m);

struct ExperimentReport {
    EstimatedMeans estimated_a;
    EstimatedMeans estimated_b;
    MeanSpinVector projected_a;
    MeanSpinVector projected_b;
    /// superpose_checked on the projected estimates.
    CheckedSuperposition measured;
    /// superpose_checked on the true inputs.
    CheckedSuperposition noiseless;
    /// Sup-norm distance between the measured and noiseless output means.
    double deviation;
};

/// Prepares a on stream 0 and b on stream 1 of the same seed.
ExperimentReport end_to_end_experiment(
    const MeanSpinVector &a_true,
    const MeanSpinVector &b_true,
    const SigmaTriple &sig,
    std::uint64_t shots_per_axis,
    std::uint64_t seed);

}  // namespace spinmean

#endif
