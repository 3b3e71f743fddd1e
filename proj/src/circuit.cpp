// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#include "flox/circuit.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace flox {

std::vector<Source> Circuit::sources() const {
    std::vector<Source> out;
    for (const auto& e : elements)
        if (const auto* s = std::get_if<Source>(&e)) out.push_back(*s);
    return out;
}

std::vector<Detector> Circuit::detectors() const {
    std::vector<Detector> out;
    for (const auto& e : elements)
        if (const auto* d = std::get_if<Detector>(&e)) out.push_back(*d);
    return out;
}

std::optional<Detector> Circuit::detector(const std::string& label) const {
    for (const auto& d : detectors())
        if (d.label == label) return d;
    return std::nullopt;
}

std::size_t Circuit::unitary_element_count() const {
    std::size_t n = 0;
    for (const auto& e : elements)
        if (std::holds_alternative<BeamSplitter>(e) || std::holds_alternative<PhaseShift>(e) ||
            std::holds_alternative<Block>(e))
            ++n;
    return n;
}

namespace {

enum class Stage { Sources, Unitaries, Detectors };

struct Validator {
    const Circuit& c;
    std::vector<Violation> out;

    void mode_exists(int idx, const std::string& m) {
        if (!c.registry || !c.registry->contains(m))
            out.push_back({idx, "unknown mode '" + m + "'"});
    }
};

} // namespace

std::vector<Violation> validate(const Circuit& circuit) {
    Validator v{circuit, {}};
    if (!circuit.registry) {
        v.out.push_back({-1, "circuit has no registry"});
        return v.out;
    }
    Stage stage = Stage::Sources;
    std::unordered_set<std::string> source_modes;
    std::unordered_set<std::string> detector_labels;
    std::unordered_set<std::string> detector_modes;
    for (std::size_t i = 0; i < circuit.elements.size(); ++i) {
        const int idx = static_cast<int>(i);
        const auto& e = circuit.elements[i];
        if (const auto* s = std::get_if<Source>(&e)) {
            v.mode_exists(idx, s->mode);
            if (stage != Stage::Sources)
                v.out.push_back({idx, "source on '" + s->mode + "' appears after non-source elements"});
            if (!source_modes.insert(s->mode).second)
                v.out.push_back({idx, "duplicate source on mode '" + s->mode + "'"});
            if (s->probe && !s->probe->valid())
                v.out.push_back({idx, "probe on '" + s->mode + "' violates |alpha|^2 + |beta|^2 = 1"});
        } else if (const auto* b = std::get_if<BeamSplitter>(&e)) {
            v.mode_exists(idx, b->mode1);
            v.mode_exists(idx, b->mode2);
            if (b->mode1 == b->mode2)
                v.out.push_back({idx, "beam splitter targets mode '" + b->mode1 + "' twice"});
            if (stage == Stage::Detectors)
                v.out.push_back({idx, "beam splitter appears after detectors"});
            stage = (stage == Stage::Detectors) ? stage : Stage::Unitaries;
        } else if (const auto* p = std::get_if<PhaseShift>(&e)) {
            v.mode_exists(idx, p->mode);
            if (!std::isfinite(p->phi)) v.out.push_back({idx, "non-finite phase"});
            if (stage == Stage::Detectors)
                v.out.push_back({idx, "phase shifter appears after detectors"});
            stage = (stage == Stage::Detectors) ? stage : Stage::Unitaries;
        } else if (const auto* bl = std::get_if<Block>(&e)) {
            v.mode_exists(idx, bl->mode);
            if (stage == Stage::Detectors) v.out.push_back({idx, "block appears after detectors"});
            stage = (stage == Stage::Detectors) ? stage : Stage::Unitaries;
        } else if (const auto* d = std::get_if<Detector>(&e)) {
            v.mode_exists(idx, d->mode);
            if (!detector_labels.insert(d->label).second)
                v.out.push_back({idx, "duplicate detector label '" + d->label + "'"});
            if (!detector_modes.insert(d->mode).second)
                v.out.push_back({idx, "duplicate detector on mode '" + d->mode + "'"});
            stage = Stage::Detectors;
        }
    }
    return v.out;
}

namespace {

struct LoweredOp {
    ModeUnitary u;
};

struct Lowered {
    RegistryPtr sim_registry;
    std::vector<Source> sources;
    std::vector<ModeUnitary> ops;
};

// Builds the simulation registry (declared modes plus one fresh loss mode per
// Block) and the primitive op stream. Throws on invalid circuits.
Lowered lower(const Circuit& circuit) {
    auto violations = validate(circuit);
    if (!violations.empty()) {
        std::string msg = "invalid circuit:";
        for (const auto& v : violations) msg += " [" + std::to_string(v.element_index) + "] " + v.message + ";";
        throw std::invalid_argument(msg);
    }
    std::vector<std::string> labels = circuit.registry->labels();
    int block_count = 0;
    for (const auto& e : circuit.elements)
        if (std::holds_alternative<Block>(e)) ++block_count;
    std::vector<std::string> loss_names;
    for (int k = 0; k < block_count; ++k) loss_names.push_back("~" + std::to_string(k + 1));
    labels.insert(labels.end(), loss_names.begin(), loss_names.end());

    Lowered lo;
    lo.sim_registry = make_registry(std::move(labels));
    int next_loss = 0;
    for (const auto& e : circuit.elements) {
        if (const auto* s = std::get_if<Source>(&e)) {
            lo.sources.push_back(*s);
        } else if (const auto* b = std::get_if<BeamSplitter>(&e)) {
            lo.ops.push_back(optics::beamsplitter_matrix(b->mode1, b->mode2));
        } else if (const auto* p = std::get_if<PhaseShift>(&e)) {
            lo.ops.push_back(optics::phase_matrix(p->mode, p->phi));
        } else if (const auto* bl = std::get_if<Block>(&e)) {
            Matrix swap(2, 2);
            swap(0, 1) = 1.0;
            swap(1, 0) = 1.0;
            lo.ops.push_back(ModeUnitary(std::move(swap), {bl->mode, loss_names[next_loss++]}));
        }
    }
    return lo;
}

} // namespace

StateVector simulate(const Circuit& circuit, std::size_t max_unitary_elements) {
    Lowered lo = lower(circuit);
    StateVector state = vacuum(lo.sim_registry);
    // Source factors form an operator product in element order; the rightmost
    // factor acts first, so iterate in reverse.
    for (auto it = lo.sources.rbegin(); it != lo.sources.rend(); ++it) {
        if (it->is_fermion()) {
            state = create(state, it->mode);
        } else {
            state = it->probe->beta * state + it->probe->alpha * create(state, it->mode);
        }
    }
    const std::size_t n_ops = std::min(max_unitary_elements, lo.ops.size());
    for (std::size_t i = 0; i < n_ops; ++i) state = apply_mode_unitary(state, lo.ops[i]);
    return state;
}

std::map<DetectionPattern, double> outcome_distribution(const StateVector& state,
                                                        const std::vector<Detector>& detectors) {
    const ModeRegistry& reg = *state.registry();
    std::vector<std::size_t> mode_index;
    mode_index.reserve(detectors.size());
    for (const auto& d : detectors) mode_index.push_back(reg.index(d.mode));

    std::map<DetectionPattern, double> out;
    for (const auto& [bits, amp] : state.terms()) {
        DetectionPattern pat;
        for (std::size_t i = 0; i < detectors.size(); ++i)
            pat[detectors[i].label] = occupied(bits, mode_index[i]) ? 1 : 0;
        out[pat] += std::norm(amp);
    }
    return out;
}

CollapseResult conditional_collapse(const StateVector& state,
                                    const std::vector<std::pair<Detector, int>>& constraints) {
    const ModeRegistry& reg = *state.registry();
    std::vector<std::pair<std::size_t, bool>> want;
    want.reserve(constraints.size());
    for (const auto& [det, occ] : constraints) {
        if (occ != 0 && occ != 1)
            throw std::invalid_argument("conditional_collapse: occupancy must be 0 or 1");
        want.emplace_back(reg.index(det.mode), occ == 1);
    }

    StateVector projected(state.registry());
    double weight = 0.0;
    for (const auto& [bits, amp] : state.terms()) {
        bool match = true;
        for (const auto& [idx, occ] : want) {
            if (occupied(bits, idx) != occ) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        projected.add_term(bits, amp);
        weight += std::norm(amp);
    }
    CollapseResult result;
    result.probability = weight;
    if (weight > 0.0) {
        result.state = (1.0 / std::sqrt(weight)) * projected;
    }
    return result;
}

} // namespace flox
