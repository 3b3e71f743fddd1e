// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flox/circuit.hpp"

namespace flox::experiments {

using optics::ProbeSpec;

/// Post-selection categories over the detector labels E1, E2 (South) and
/// V1, V2 (North). Classification is total and mutually exclusive; the same
/// pattern may classify differently per experiment (a one-South/one-North
/// coincidence is the Fig.1 signal but a Fig.2 single-Victor event).
enum class EventClass {
    NorthSouthCoincidence,
    BothSouth,
    BothNorth,
    DoubleV1V2WithOneEveClick,
    SingleVictorClick,
    VacuumAtMonitored,
    Other,
};

constexpr EventClass kAllEventClasses[] = {
    EventClass::NorthSouthCoincidence,  EventClass::BothSouth,
    EventClass::BothNorth,              EventClass::DoubleV1V2WithOneEveClick,
    EventClass::SingleVictorClick,      EventClass::VacuumAtMonitored,
    EventClass::Other,
};

const char* to_string(EventClass c);

enum class ExperimentKind { Fig1, Fig2 };

enum class EveCondition { E1, E2 };

enum class BlockBranch { None, C, D, Both };

/// Two-source interferometer: fermions in a and b, splitters (a,c) and (b,d),
/// phase phi on b, recombining splitter on (a,b). Detector numbering: E1 sits
/// on the South output where branch b transmits (slot b), E2 where branch a
/// transmits (slot a); V1 and V2 monitor c and d.
Circuit build_fig1(double phi);

/// Fig.1 plus probe sources q1, q2 (beta|0> + alpha|1>) merged with the North
/// branches: splitters (c,q1) and (d,q2). V1 and V2 monitor the c and d output
/// slots; the q1, q2 slots are unmonitored loss ports.
Circuit build_fig2(double phi, const ProbeSpec& probe);

/// Pattern must assign every detector of the experiment (E1,E2,V1,V2).
EventClass classify(const DetectionPattern& pattern, ExperimentKind kind);

std::map<EventClass, double> class_probabilities(const Circuit& circuit, ExperimentKind kind);

double class_probability(const Circuit& circuit, ExperimentKind kind, EventClass cls);

/// Joint probability of the Fig.2 target event: the conditioned Eve port
/// clicks (the other stays silent) and both V1 and V2 click; loss ports are
/// marginalized.
double double_v1v2_probability(const Circuit& circuit, EveCondition condition);

/// P(exactly one Victor click and exactly one Eve click, either port); the
/// phi-independent null statistic.
double single_victor_one_eve_probability(const Circuit& circuit);

struct SweepRow {
    double phi = 0.0;
    std::map<EventClass, double> probs;
    double target_double = 0.0; // double_v1v2_probability at the sweep's condition
    std::optional<std::map<EventClass, long long>> counts;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    EveCondition condition = EveCondition::E1;
    long long shots = 0;   // 0 = exact probabilities only
    std::uint64_t seed = 0;
};

/// Exact Fig.2 statistics over the grid; with shots > 0 each row also carries
/// sampled class counts (row i uses the stream seeded splitmix64(seed + i)).
SweepResult coincidence_curve(const ProbeSpec& probe, const std::vector<double>& phi_grid,
                              EveCondition condition, long long shots = 0, std::uint64_t seed = 0);

/// Uniform grid start + i*(end-start)/steps, i = 0..steps-1 (end exclusive).
std::vector<double> phi_grid(double start, double end, int steps);

/// Multinomial draw from the exact class distribution; counts sum to shots and
/// are reproducible for a fixed seed.
std::map<EventClass, long long> sample_events(const Circuit& circuit, ExperimentKind kind,
                                              long long shots, std::uint64_t seed);

/// Inserts Block elements on the chosen North branches immediately before the
/// last beam splitter touching them (i.e. before Victor's merge splitters).
Circuit blocked_variant(const Circuit& circuit, BlockBranch branch);

} // namespace flox::experiments
