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

#include "spinmean/superpose.h"

#include <cmath>
#include <sstream>

#include "spinmean/represent.h"

namespace spinmean {

namespace {

constexpr double kSigmaPole = 1e-12;

void require_superposable(const MeanSpinVector &m, const char *name) {
    if (!m.is_pure()) {
        throw Error(ErrorCode::NotPure, std::string("state ") + name + " is not pure");
    }
    if (0.5 + m.sz() < kPoleMargin) {
        throw Error(
            ErrorCode::PoleError,
            std::string("state ") + name + " is within the pole margin of sz = -1/2");
    }
}

/// Terms shared by T and the closed-form means.
struct Geometry {
    double up_a2;  // 1/2 + sz
    double up_b2;  // 1/2 + Sz
    double up_ab;  // sqrt((1/2+sz)(1/2+Sz))
    double overlap;  // the bracket in T
};

Geometry geometry(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    require_superposable(a, "a");
    require_superposable(b, "b");
    Geometry g{};
    g.up_a2 = 0.5 + a.sz();
    g.up_b2 = 0.5 + b.sz();
    g.up_ab = std::sqrt(g.up_a2 * g.up_b2);
    g.overlap = sig.sig1() * (b.sx() * a.sx() + b.sy() * a.sy() + g.up_a2 * g.up_b2) +
                sig.sig2() * (a.sy() * b.sx() - a.sx() * b.sy());
    return g;
}

double t_from(const Geometry &g) {
    return 1 + 2 * g.overlap / g.up_ab;
}

void require_nondegenerate(double t) {
    if (!(t >= kDegenerateT)) {
        throw Error(ErrorCode::DegenerateSuperposition, "superposition cancels completely (T < 1e-12)");
    }
}

}  // namespace

Coefficients fix_coefficient_gauge(Complex c1, Complex c2) {
    double r = std::abs(c1);
    if (r == 0) {
        return {c1, c2};
    }
    Complex phase = std::conj(c1) / r;
    return {Complex(r, 0), c2 * phase};
}

SigmaTriple sigma_from_coefficients(Complex c1, Complex c2) {
    if (!std::isfinite(c1.real()) || !std::isfinite(c1.imag()) || !std::isfinite(c2.real()) ||
        !std::isfinite(c2.imag())) {
        throw Error(ErrorCode::ValidationError, "coefficients must be finite");
    }
    if (std::abs(std::norm(c1) + std::norm(c2) - 1) > tol::kCrossCheck) {
        throw Error(ErrorCode::NotNormalized, "|c1|^2 + |c2|^2 must equal 1");
    }
    if (std::abs(c1.imag()) > tol::kCrossCheck || c1.real() < -tol::kCrossCheck) {
        throw Error(ErrorCode::NonzeroC1Phase, "c1 must be real and non-negative; apply fix_coefficient_gauge first");
    }
    double c1_real = c1.real();
    Complex product = c1_real * c2;
    return SigmaTriple(product.real(), product.imag(), c1_real * c1_real - 0.5);
}

Coefficients coefficients_from_sigma(const SigmaTriple &sig) {
    double c1_squared = 0.5 + sig.sig3();
    if (c1_squared < kSigmaPole) {
        return {Complex(0, 0), Complex(1, 0)};
    }
    double c1 = std::sqrt(c1_squared);
    return {Complex(c1, 0), Complex(sig.sig1(), sig.sig2()) / c1};
}

double normalization_t(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    return t_from(geometry(a, b, sig));
}

SuperpositionResult superpose_closed(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    Geometry g = geometry(a, b, sig);
    double t = t_from(g);
    require_nondegenerate(t);

    double s1 = sig.sig1();
    double s2 = sig.sig2();
    double weight_a = 0.5 + sig.sig3();
    double weight_b = 0.5 - sig.sig3();
    double b_over_a = std::sqrt(g.up_b2 / g.up_a2);
    double a_over_b = std::sqrt(g.up_a2 / g.up_b2);

    double x = a.sx() * weight_a + b.sx() * weight_b + b_over_a * (s1 * a.sx() + s2 * a.sy()) +
               a_over_b * (s1 * b.sx() - s2 * b.sy());
    double y = a.sy() * weight_a + b.sy() * weight_b + b_over_a * (s1 * a.sy() - s2 * a.sx()) +
               a_over_b * (s2 * b.sx() + s1 * b.sy());
    // |c1 a1 + c2 b1|^2 / T - 1/2 with the constant 1/2 cancelled analytically:
    //   |c1 a1 + c2 b1|^2 = (1/2+S3)(1/2+sz) + (1/2-S3)(1/2+Sz) + 2 sqrt(..) S1
    // and T/2 = 1/2 + overlap / sqrt(..).
    double z = weight_a * a.sz() + weight_b * b.sz() + 2 * g.up_ab * s1 - g.overlap / g.up_ab;

    Vec3 out{x / t, y / t, z / t};
    // Superposing pure states gives a pure state. Near the pole margin the
    // inputs carry only ~1e-16 / (1/2 + sz) relative precision, which can push
    // the triple just outside the ball; pull such excursions back onto the
    // sphere. Points inside the ball are returned untouched.
    double r2 = out.norm2();
    if (r2 > 0.25 + tol::kConstruction) {
        double scale = 0.5 / std::sqrt(r2);
        out = {out.x * scale, out.y * scale, out.z * scale};
    }
    return {MeanSpinVector(out.x, out.y, out.z), t, SuperposeMethod::closed_form};
}

SuperpositionResult superpose_oracle(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    require_superposable(a, "a");
    require_superposable(b, "b");
    Spinor chi_a = state_from_means(a, 0);
    Spinor chi_b = state_from_means(b, 0);
    Coefficients c = coefficients_from_sigma(sig);
    Spinor chi(c.c1 * chi_a.up() + c.c2 * chi_b.up(), c.c1 * chi_a.down() + c.c2 * chi_b.down());
    double t = chi.norm2();
    require_nondegenerate(t);
    return {means_from_state(chi), t, SuperposeMethod::oracle};
}

CheckedSuperposition superpose_checked(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    SuperpositionResult closed = superpose_closed(a, b, sig);
    SuperpositionResult oracle = superpose_oracle(a, b, sig);
    double means_dev = closed.means_out.vec().sup_distance(oracle.means_out.vec());
    double t_dev = std::abs(closed.normalization_t - oracle.normalization_t);
    if (!(means_dev <= kCheckedMeansTolerance) || !(t_dev <= kCheckedTTolerance)) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "closed form and oracle disagree (means " << means_dev << ", T " << t_dev << ")";
        throw Error(ErrorCode::CrossCheckMismatch, msg.str());
    }
    return {closed, means_dev, t_dev};
}

}  // namespace spinmean
