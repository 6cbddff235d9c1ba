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

#include "spinmean/represent.h"

#include <cmath>

namespace spinmean {

namespace {

constexpr double kSouthPole = 1e-12;

}  // namespace

MeanSpinVector means_from_probabilities(const ProbabilityTriple &p) {
    return MeanSpinVector(p.p1() - 0.5, p.p2() - 0.5, p.p3() - 0.5);
}

ProbabilityTriple probabilities_from_means(const MeanSpinVector &m) {
    return ProbabilityTriple(0.5 + m.sx(), 0.5 + m.sy(), 0.5 + m.sz());
}

DensityMatrix2 density_from_means(const MeanSpinVector &m) {
    return DensityMatrix2(0.5 + m.sz(), 0.5 - m.sz(), Complex(m.sx(), -m.sy()));
}

DensityMatrix2 density_from_probabilities(const ProbabilityTriple &p) {
    return DensityMatrix2(p.p3(), 1 - p.p3(), Complex(p.p1() - 0.5, -(p.p2() - 0.5)));
}

MeanSpinVector means_from_density(const DensityMatrix2 &rho) {
    Complex plus = rho.r10();
    return MeanSpinVector(plus.real(), plus.imag(), 0.5 * (rho.r00() - rho.r11()));
}

MeanSpinVector means_from_state(const Spinor &s) {
    double n2 = s.norm2();
    if (n2 <= tol::kZeroNorm2) {
        throw Error(ErrorCode::ZeroSpinor, "cannot take mean spin of a zero spinor");
    }
    // <s_+> = conj(up) * down
    Complex plus = std::conj(s.up()) * s.down() / n2;
    double sz = 0.5 * (std::norm(s.up()) - std::norm(s.down())) / n2;
    return MeanSpinVector(plus.real(), plus.imag(), sz);
}

Spinor state_from_means(const MeanSpinVector &m, double alpha) {
    if (!std::isfinite(alpha)) {
        throw Error(ErrorCode::ValidationError, "gauge phase must be finite");
    }
    if (!m.is_pure()) {
        throw Error(ErrorCode::NotPure, "state_from_means requires |m|^2 = 1/4 (pure state)");
    }
    Complex gauge = std::polar(1.0, alpha);
    double up2 = 0.5 + m.sz();
    if (up2 < kSouthPole) {
        return Spinor(0, gauge);
    }
    double up = std::sqrt(up2);
    Complex down = Complex(m.sx(), m.sy()) / up;
    double inv_norm = 1 / std::sqrt(up2 + std::norm(down));
    return Spinor(gauge * (up * inv_norm), gauge * (down * inv_norm));
}

}  // namespace spinmean
