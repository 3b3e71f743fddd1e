// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "flox/fock.hpp"

namespace flox::optics {

/// Local source emitting beta|0> + alpha|1> in a single mode.
struct ProbeSpec {
    Complex alpha; // one-particle amplitude
    Complex beta;  // vacuum amplitude

    /// beta = +sqrt(1 - alpha^2) for real alpha in [0, 1].
    static ProbeSpec from_alpha(double alpha);

    bool valid(double tol = kUnitaryTolerance) const;
};

/// 50:50 beam splitter on (mode1, mode2): transmitted amplitude 1/sqrt2 into
/// the same slot, reflected amplitude i/sqrt2 into the other. The one
/// convention used by every splitter in this project; interference offsets
/// quoted in the docs depend on it.
ModeUnitary beamsplitter_matrix(const std::string& mode1, const std::string& mode2);

/// diag(e^{i phi}) on a single mode.
ModeUnitary phase_matrix(const std::string& mode, double phi);

/// beta|vacuum> + alpha|one fermion in `mode`>.
StateVector probe_state(const ProbeSpec& spec, const std::string& mode, const RegistryPtr& registry);

} // namespace flox::optics
