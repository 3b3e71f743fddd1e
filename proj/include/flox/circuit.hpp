// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flox/fock.hpp"
#include "flox/optics.hpp"

namespace flox {

struct Source {
    std::string mode;
    std::optional<optics::ProbeSpec> probe; // nullopt = single fermion

    bool is_fermion() const { return !probe.has_value(); }
};

struct BeamSplitter {
    std::string mode1, mode2;
};

struct PhaseShift {
    std::string mode;
    double phi;
};

/// Reroutes the mode's amplitude content into a fresh, never-monitored loss
/// mode (added to the simulation registry during lowering).
struct Block {
    std::string mode;
};

struct Detector {
    std::string mode;
    std::string label;
};

using CircuitElement = std::variant<Source, BeamSplitter, PhaseShift, Block, Detector>;

/// Experiment description: a registry plus elements applied in list order.
/// Valid circuits list all sources first, then unitary-stage elements
/// (splitters, phases, blocks), then detectors.
struct Circuit {
    RegistryPtr registry;
    std::vector<CircuitElement> elements;

    std::vector<Source> sources() const;
    std::vector<Detector> detectors() const;
    std::optional<Detector> detector(const std::string& label) const;
    std::size_t unitary_element_count() const;
};

struct Violation {
    int element_index; // -1 for circuit-level problems
    std::string message;
};

/// All violations, not just the first. An empty result means the circuit is
/// simulatable.
std::vector<Violation> validate(const Circuit& circuit);

/// Map detector label -> occupancy (0 or 1).
using DetectionPattern = std::map<std::string, int>;

inline constexpr std::size_t kAllElements = std::numeric_limits<std::size_t>::max();

/// Exact final state. Sources compose as an operator product in element order
/// (first listed = leftmost factor). `max_unitary_elements` truncates the
/// unitary stage after that many elements, giving access to intermediate
/// ("tap point") states.
StateVector simulate(const Circuit& circuit, std::size_t max_unitary_elements = kAllElements);

/// Born-rule distribution over occupancy patterns of the given detectors,
/// marginalizing all unmonitored modes. Probabilities sum to the state's
/// squared norm.
std::map<DetectionPattern, double> outcome_distribution(const StateVector& state,
                                                        const std::vector<Detector>& detectors);

struct CollapseResult {
    double probability = 0.0;
    std::optional<StateVector> state; // engaged iff probability > 0
};

/// Projects onto the subspace where each constrained detector mode holds the
/// given occupancy; returns the branch weight and the normalized projection.
CollapseResult conditional_collapse(const StateVector& state,
                                    const std::vector<std::pair<Detector, int>>& constraints);

} // namespace flox
