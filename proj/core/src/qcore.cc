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

#include "spinmean/qcore.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinmean {

namespace {

void require_finite(std::initializer_list<double> values, const char *what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::ValidationError, std::string(what) + ": non-finite component");
        }
    }
}

std::string triple_str(double a, double b, double c) {
    std::ostringstream out;
    out.precision(17);
    out << "(" << a << ", " << b << ", " << c << ")";
    return out.str();
}

}  // namespace

double Vec3::norm() const {
    return std::sqrt(norm2());
}

double Vec3::sup_distance(const Vec3 &other) const {
    return std::max({std::abs(x - other.x), std::abs(y - other.y), std::abs(z - other.z)});
}

MeanSpinVector::MeanSpinVector(double sx, double sy, double sz) : sx_(sx), sy_(sy), sz_(sz) {
    require_finite({sx, sy, sz}, "MeanSpinVector");
    if (norm2() > 0.25 + tol::kConstruction) {
        throw Error(
            ErrorCode::ConstraintViolation,
            "mean spin vector " + triple_str(sx, sy, sz) + " lies outside the Bloch ball");
    }
}

bool MeanSpinVector::is_pure(double tolerance) const {
    return std::abs(norm2() - 0.25) <= tolerance;
}

ProbabilityTriple::ProbabilityTriple(double p1, double p2, double p3) : p1_(p1), p2_(p2), p3_(p3) {
    require_finite({p1, p2, p3}, "ProbabilityTriple");
    for (double p : {p1, p2, p3}) {
        if (p < 0 || p > 1) {
            throw Error(
                ErrorCode::ConstraintViolation, "probability triple " + triple_str(p1, p2, p3) + " leaves [0,1]");
        }
    }
    double d1 = p1 - 0.5;
    double d2 = p2 - 0.5;
    double d3 = p3 - 0.5;
    if (d1 * d1 + d2 * d2 + d3 * d3 > 0.25 + tol::kConstruction) {
        throw Error(
            ErrorCode::ConstraintViolation,
            "probability triple " + triple_str(p1, p2, p3) + " violates the Bloch-ball restriction");
    }
}

SigmaTriple::SigmaTriple(double sig1, double sig2, double sig3) : sig1_(sig1), sig2_(sig2), sig3_(sig3) {
    require_finite({sig1, sig2, sig3}, "SigmaTriple");
    if (std::abs(sig1 * sig1 + sig2 * sig2 + sig3 * sig3 - 0.25) > tol::kPurity) {
        throw Error(
            ErrorCode::NotNormalized,
            "sigma triple " + triple_str(sig1, sig2, sig3) + " is not on the sphere |sigma| = 1/2");
    }
}

Spinor::Spinor(Complex up, Complex down) : up_(up), down_(down) {
    require_finite({up.real(), up.imag(), down.real(), down.imag()}, "Spinor");
}

bool Spinor::is_normalized() const {
    return std::abs(norm2() - 1) <= tol::kConstruction;
}

Spinor Spinor::normalized() const {
    double n2 = norm2();
    if (n2 <= tol::kZeroNorm2) {
        throw Error(ErrorCode::ZeroSpinor, "spinor has zero norm");
    }
    double inv = 1 / std::sqrt(n2);
    return Spinor(up_ * inv, down_ * inv);
}

DensityMatrix2::DensityMatrix2(double r00, double r11, Complex r01) : r00_(r00), r11_(r11), r01_(r01) {
    if (!std::isfinite(r00) || !std::isfinite(r11) || !std::isfinite(r01.real()) || !std::isfinite(r01.imag())) {
        throw Error(ErrorCode::ValidationError, "DensityMatrix2: non-finite entry");
    }
    if (std::abs(trace() - 1) > tol::kConstruction) {
        throw Error(ErrorCode::InvalidDensity, "density matrix trace differs from 1");
    }
    if (determinant() < -tol::kConstruction) {
        throw Error(ErrorCode::InvalidDensity, "density matrix is not positive semidefinite");
    }
}

Complex DensityMatrix2::entry(int row, int col) const {
    if (row == 0 && col == 0) {
        return r00_;
    }
    if (row == 1 && col == 1) {
        return r11_;
    }
    if (row == 0 && col == 1) {
        return r01_;
    }
    if (row == 1 && col == 0) {
        return r10();
    }
    throw std::out_of_range("DensityMatrix2::entry index out of range");
}

DensityMatrix2 density_from_spinor(const Spinor &s) {
    double n2 = s.norm2();
    if (n2 <= tol::kZeroNorm2) {
        throw Error(ErrorCode::ZeroSpinor, "cannot form a projector from a zero spinor");
    }
    // Diagonal from the raw amplitudes keeps the trace at 1 to rounding.
    double up2 = std::norm(s.up()) / n2;
    double down2 = std::norm(s.down()) / n2;
    return DensityMatrix2(up2, down2, s.up() * std::conj(s.down()) / n2);
}

double purity(const DensityMatrix2 &rho) {
    return rho.r00() * rho.r00() + rho.r11() * rho.r11() + 2 * std::norm(rho.r01());
}

}  // namespace spinmean
