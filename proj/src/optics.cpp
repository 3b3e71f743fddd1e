// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#include "flox/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace flox::optics {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

ProbeSpec ProbeSpec::from_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("ProbeSpec: alpha must lie in [0, 1]");
    return ProbeSpec{alpha, std::sqrt(1.0 - alpha * alpha)};
}

bool ProbeSpec::valid(double tol) const {
    return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tol;
}

ModeUnitary beamsplitter_matrix(const std::string& mode1, const std::string& mode2) {
    if (mode1 == mode2)
        throw std::invalid_argument("beamsplitter_matrix: duplicate target mode '" + mode1 + "'");
    Matrix m(2, 2);
    m(0, 0) = kInvSqrt2;
    m(0, 1) = Complex(0.0, kInvSqrt2);
    m(1, 0) = Complex(0.0, kInvSqrt2);
    m(1, 1) = kInvSqrt2;
    return ModeUnitary(std::move(m), {mode1, mode2});
}

ModeUnitary phase_matrix(const std::string& mode, double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("phase_matrix: phi must be finite");
    Matrix m(1, 1);
    m(0, 0) = std::polar(1.0, phi);
    return ModeUnitary(std::move(m), {mode});
}

StateVector probe_state(const ProbeSpec& spec, const std::string& mode, const RegistryPtr& registry) {
    if (!spec.valid())
        throw std::invalid_argument("probe_state: |alpha|^2 + |beta|^2 must equal 1");
    const StateVector vac = vacuum(registry);
    StateVector out = spec.beta * vac + spec.alpha * create(vac, mode);
    return out;
}

} // namespace flox::optics
