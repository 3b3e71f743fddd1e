// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#include "flox/experiments.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace flox::experiments {

const char* to_string(EventClass c) {
    switch (c) {
        case EventClass::NorthSouthCoincidence: return "north_south_coincidence";
        case EventClass::BothSouth: return "both_south";
        case EventClass::BothNorth: return "both_north";
        case EventClass::DoubleV1V2WithOneEveClick: return "double_v1v2_with_one_eve_click";
        case EventClass::SingleVictorClick: return "single_victor_click";
        case EventClass::VacuumAtMonitored: return "vacuum_at_monitored";
        case EventClass::Other: return "other";
    }
    return "other";
}

Circuit build_fig1(double phi) {
    Circuit c;
    c.registry = make_registry({"a", "b", "c", "d"});
    c.elements = {
        Source{"a", std::nullopt},
        Source{"b", std::nullopt},
        BeamSplitter{"a", "c"},
        BeamSplitter{"b", "d"},
        PhaseShift{"b", phi},
        BeamSplitter{"a", "b"},
        Detector{"b", "E1"},
        Detector{"a", "E2"},
        Detector{"c", "V1"},
        Detector{"d", "V2"},
    };
    return c;
}

Circuit build_fig2(double phi, const ProbeSpec& probe) {
    if (!probe.valid()) throw std::invalid_argument("build_fig2: invalid probe spec");
    Circuit c;
    c.registry = make_registry({"a", "b", "c", "d", "q1", "q2"});
    c.elements = {
        Source{"a", std::nullopt},
        Source{"b", std::nullopt},
        Source{"q1", probe},
        Source{"q2", probe},
        BeamSplitter{"a", "c"},
        BeamSplitter{"b", "d"},
        PhaseShift{"b", phi},
        BeamSplitter{"a", "b"},
        BeamSplitter{"c", "q1"},
        BeamSplitter{"d", "q2"},
        Detector{"b", "E1"},
        Detector{"a", "E2"},
        Detector{"c", "V1"},
        Detector{"d", "V2"},
    };
    return c;
}

namespace {

int pattern_value(const DetectionPattern& p, const char* label) {
    auto it = p.find(label);
    if (it == p.end())
        throw std::invalid_argument(std::string("classify: pattern is missing detector '") + label + "'");
    return it->second;
}

} // namespace

EventClass classify(const DetectionPattern& pattern, ExperimentKind kind) {
    const int ne = pattern_value(pattern, "E1") + pattern_value(pattern, "E2");
    const int nv = pattern_value(pattern, "V1") + pattern_value(pattern, "V2");
    if (ne == 0 && nv == 0) return EventClass::VacuumAtMonitored;
    if (ne == 2 && nv == 0) return EventClass::BothSouth;
    if (ne == 0 && nv == 2) return EventClass::BothNorth;
    if (kind == ExperimentKind::Fig1) {
        if (ne == 1 && nv == 1) return EventClass::NorthSouthCoincidence;
        return EventClass::Other;
    }
    if (ne == 1 && nv == 2) return EventClass::DoubleV1V2WithOneEveClick;
    if (ne == 1 && nv == 1) return EventClass::SingleVictorClick;
    return EventClass::Other;
}

std::map<EventClass, double> class_probabilities(const Circuit& circuit, ExperimentKind kind) {
    const StateVector state = simulate(circuit);
    const auto dist = outcome_distribution(state, circuit.detectors());
    std::map<EventClass, double> out;
    for (EventClass c : kAllEventClasses) out[c] = 0.0;
    for (const auto& [pattern, p] : dist) out[classify(pattern, kind)] += p;
    return out;
}

double class_probability(const Circuit& circuit, ExperimentKind kind, EventClass cls) {
    return class_probabilities(circuit, kind).at(cls);
}

namespace {

std::pair<Detector, int> constraint(const Circuit& c, const std::string& label, int occ) {
    auto det = c.detector(label);
    if (!det) throw std::invalid_argument("circuit has no detector labeled '" + label + "'");
    return {*det, occ};
}

} // namespace

double double_v1v2_probability(const Circuit& circuit, EveCondition condition) {
    const StateVector state = simulate(circuit);
    const char* clicked = condition == EveCondition::E1 ? "E1" : "E2";
    const char* silent = condition == EveCondition::E1 ? "E2" : "E1";
    return conditional_collapse(state, {constraint(circuit, clicked, 1),
                                        constraint(circuit, silent, 0),
                                        constraint(circuit, "V1", 1),
                                        constraint(circuit, "V2", 1)})
        .probability;
}

double single_victor_one_eve_probability(const Circuit& circuit) {
    const StateVector state = simulate(circuit);
    const auto dist = outcome_distribution(state, circuit.detectors());
    double p = 0.0;
    for (const auto& [pattern, prob] : dist) {
        const int ne = pattern.at("E1") + pattern.at("E2");
        const int nv = pattern.at("V1") + pattern.at("V2");
        if (ne == 1 && nv == 1) p += prob;
    }
    return p;
}

std::vector<double> phi_grid(double start, double end, int steps) {
    if (steps < 1) throw std::invalid_argument("phi_grid: steps must be >= 1");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i) grid[i] = start + (end - start) * i / steps;
    return grid;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1); fully specified, unlike std::uniform_real_distribution.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::map<EventClass, long long> sample_classes(const std::map<EventClass, double>& probs,
                                               long long shots, std::uint64_t seed) {
    std::map<EventClass, long long> counts;
    for (EventClass c : kAllEventClasses) counts[c] = 0;
    std::mt19937_64 rng(seed);
    for (long long s = 0; s < shots; ++s) {
        const double u = next_uniform(rng);
        double cdf = 0.0;
        EventClass chosen = EventClass::Other;
        for (EventClass c : kAllEventClasses) {
            cdf += probs.at(c);
            if (u < cdf) {
                chosen = c;
                break;
            }
        }
        ++counts[chosen];
    }
    return counts;
}

} // namespace

std::map<EventClass, long long> sample_events(const Circuit& circuit, ExperimentKind kind,
                                              long long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample_events: shots must be >= 1");
    return sample_classes(class_probabilities(circuit, kind), shots, seed);
}

SweepResult coincidence_curve(const ProbeSpec& probe, const std::vector<double>& phi_grid,
                              EveCondition condition, long long shots, std::uint64_t seed) {
    if (phi_grid.empty()) throw std::invalid_argument("coincidence_curve: empty phi grid");
    if (!probe.valid()) throw std::invalid_argument("coincidence_curve: invalid probe spec");
    SweepResult result;
    result.condition = condition;
    result.shots = shots;
    result.seed = seed;
    result.rows.reserve(phi_grid.size());
    for (std::size_t i = 0; i < phi_grid.size(); ++i) {
        const Circuit c = build_fig2(phi_grid[i], probe);
        SweepRow row;
        row.phi = phi_grid[i];
        row.probs = class_probabilities(c, ExperimentKind::Fig2);
        row.target_double = double_v1v2_probability(c, condition);
        if (shots > 0)
            row.counts = sample_classes(row.probs, shots, splitmix64(seed + static_cast<std::uint64_t>(i)));
        result.rows.push_back(std::move(row));
    }
    return result;
}

Circuit blocked_variant(const Circuit& circuit, BlockBranch branch) {
    if (branch == BlockBranch::None) return circuit;
    std::vector<std::string> modes;
    if (branch == BlockBranch::C || branch == BlockBranch::Both) modes.push_back("c");
    if (branch == BlockBranch::D || branch == BlockBranch::Both) modes.push_back("d");

    Circuit out = circuit;
    for (const auto& m : modes) {
        if (!out.registry || !out.registry->contains(m))
            throw std::invalid_argument("blocked_variant: circuit has no mode '" + m + "'");
        std::ptrdiff_t last_bs = -1;
        for (std::size_t i = 0; i < out.elements.size(); ++i) {
            if (const auto* bs = std::get_if<BeamSplitter>(&out.elements[i]))
                if (bs->mode1 == m || bs->mode2 == m) last_bs = static_cast<std::ptrdiff_t>(i);
        }
        if (last_bs < 0)
            throw std::invalid_argument("blocked_variant: no beam splitter acts on '" + m + "'");
        out.elements.insert(out.elements.begin() + last_bs, Block{m});
    }
    return out;
}

} // namespace flox::experiments
