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

#include "spinmean/measure.h"

#include <algorithm>
#include <cmath>

namespace spinmean {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double component(const MeanSpinVector &m, Axis axis) {
    switch (axis) {
        case Axis::x:
            return m.sx();
        case Axis::y:
            return m.sy();
        case Axis::z:
            return m.sz();
    }
    return 0;
}

}  // namespace

char axis_name(Axis axis) {
    return "xyz"[static_cast<int>(axis)];
}

ShotStream::ShotStream(std::uint64_t seed, std::uint64_t stream, Axis axis)
    : key_(mix64(seed + kGolden * (1 + 4 * stream + static_cast<std::uint64_t>(axis)))) {
}

double ShotStream::uniform(std::uint64_t i) const {
    return static_cast<double>(mix64(key_ + kGolden * (i + 1)) >> 11) * 0x1.0p-53;
}

std::uint64_t ShotStream::count_below(double p, std::uint64_t n) const {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        count += uniform(i) < p;
    }
    return count;
}

std::array<ShotRecord, 3> simulate_shots(
    const MeanSpinVector &true_means, std::uint64_t shots_per_axis, std::uint64_t seed, std::uint64_t stream) {
    if (shots_per_axis == 0) {
        throw Error(ErrorCode::ValidationError, "shots per axis must be at least 1");
    }
    std::array<ShotRecord, 3> records{};
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        double p = 0.5 + component(true_means, axis);
        ShotStream rng(seed, stream, axis);
        records[static_cast<int>(axis)] = {axis, shots_per_axis, rng.count_below(p, shots_per_axis)};
    }
    return records;
}

EstimatedMeans estimate_means(std::span<const ShotRecord> records) {
    std::array<const ShotRecord *, 3> by_axis{};
    for (const ShotRecord &r : records) {
        auto &slot = by_axis[static_cast<int>(r.axis)];
        if (slot != nullptr) {
            throw Error(ErrorCode::MissingAxis, std::string("duplicate record for axis ") + axis_name(r.axis));
        }
        if (r.shots == 0 || r.ups > r.shots) {
            throw Error(ErrorCode::ValidationError, "shot record needs shots >= 1 and ups <= shots");
        }
        slot = &r;
    }
    EstimatedMeans est{};
    std::array<double, 3> means{};
    est.shots_per_axis = 0;
    for (int k = 0; k < 3; ++k) {
        if (by_axis[k] == nullptr) {
            throw Error(ErrorCode::MissingAxis, std::string("no record for axis ") + "xyz"[k]);
        }
        const ShotRecord &r = *by_axis[k];
        double p = static_cast<double>(r.ups) / static_cast<double>(r.shots);
        means[k] = p - 0.5;
        est.standard_error[k] = std::sqrt(p * (1 - p) / static_cast<double>(r.shots));
        est.shots_per_axis = (k == 0) ? r.shots : std::min(est.shots_per_axis, r.shots);
    }
    est.means = {means[0], means[1], means[2]};
    return est;
}

MeanSpinVector project_to_pure(const Vec3 &m) {
    if (!std::isfinite(m.x) || !std::isfinite(m.y) || !std::isfinite(m.z)) {
        throw Error(ErrorCode::ValidationError, "project_to_pure: non-finite component");
    }
    double r = m.norm();
    if (r <= 1e-12) {
        throw Error(ErrorCode::ZeroVector, "maximally mixed estimate has no nearest pure state");
    }
    double scale = 0.5 / r;
    return MeanSpinVector(m.x * scale, m.y * scale, m.z * scale);
}

ExperimentReport end_to_end_experiment(
    const MeanSpinVector &a_true,
    const MeanSpinVector &b_true,
    const SigmaTriple &sig,
    std::uint64_t shots_per_axis,
    std::uint64_t seed) {
    // Validates the preparation before spending any shots.
    CheckedSuperposition noiseless = superpose_checked(a_true, b_true, sig);

    auto records_a = simulate_shots(a_true, shots_per_axis, seed, 0);
    auto records_b = simulate_shots(b_true, shots_per_axis, seed, 1);
    EstimatedMeans est_a = estimate_means(records_a);
    EstimatedMeans est_b = estimate_means(records_b);
    MeanSpinVector proj_a = project_to_pure(est_a.means);
    MeanSpinVector proj_b = project_to_pure(est_b.means);

    CheckedSuperposition measured = superpose_checked(proj_a, proj_b, sig);
    double deviation = measured.result.means_out.vec().sup_distance(noiseless.result.means_out.vec());
    return {est_a, est_b, proj_a, proj_b, measured, noiseless, deviation};
}

}  // namespace spinmean
