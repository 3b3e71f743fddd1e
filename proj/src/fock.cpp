// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#include "flox/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flox {

std::string format_basis(BasisBits bits, const ModeRegistry& registry) {
    std::string s(registry.size(), '0');
    for (std::size_t i = 0; i < registry.size(); ++i)
        if (occupied(bits, i)) s[i] = '1';
    return s;
}

std::vector<std::pair<BasisBits, Complex>> StateVector::sorted_terms() const {
    std::vector<std::pair<BasisBits, Complex>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& [bits, amp] : terms_) s += std::norm(amp);
    return std::sqrt(s);
}

void StateVector::add_term(BasisBits bits, Complex amp) {
    auto [it, inserted] = terms_.emplace(bits, amp);
    if (!inserted) it->second += amp;
}

void StateVector::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < tol)
            it = terms_.erase(it);
        else
            ++it;
    }
}

ModeUnitary::ModeUnitary(Matrix m, std::vector<std::string> targets) {
    if (m.rows() != m.cols()) throw std::invalid_argument("ModeUnitary: matrix must be square");
    if (m.rows() != targets.size())
        throw std::invalid_argument("ModeUnitary: matrix dimension does not match target count");
    if (targets.empty()) throw std::invalid_argument("ModeUnitary: no target modes");
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw std::invalid_argument("ModeUnitary: duplicate target mode '" + targets[i] + "'");
    if (!m.is_unitary(kUnitaryTolerance))
        throw std::invalid_argument("ModeUnitary: matrix is not unitary within tolerance");
    matrix = std::move(m);
    target_modes = std::move(targets);
}

ModeUnitary ModeUnitary::unchecked(Matrix m, std::vector<std::string> targets) {
    ModeUnitary u;
    u.matrix = std::move(m);
    u.target_modes = std::move(targets);
    return u;
}

StateVector vacuum(const RegistryPtr& registry) {
    StateVector s(registry);
    s.add_term(0, 1.0);
    return s;
}

StateVector create(const StateVector& state, const std::string& mode) {
    const std::size_t j = state.registry()->index(mode);
    const BasisBits mask = BasisBits{1} << j;
    StateVector out(state.registry());
    for (const auto& [bits, amp] : state.terms()) {
        if (bits & mask) continue; // Pauli exclusion
        out.add_term(bits | mask, static_cast<double>(jw_sign(bits, j)) * amp);
    }
    out.prune();
    return out;
}

StateVector annihilate(const StateVector& state, const std::string& mode) {
    const std::size_t j = state.registry()->index(mode);
    const BasisBits mask = BasisBits{1} << j;
    StateVector out(state.registry());
    for (const auto& [bits, amp] : state.terms()) {
        if (!(bits & mask)) continue;
        out.add_term(bits & ~mask, static_cast<double>(jw_sign(bits, j)) * amp);
    }
    out.prune();
    return out;
}

Complex inner_product(const StateVector& s1, const StateVector& s2) {
    if (*s1.registry() != *s2.registry())
        throw std::invalid_argument("inner_product: registry mismatch");
    const auto& small = s1.terms().size() <= s2.terms().size() ? s1 : s2;
    const auto& big = s1.terms().size() <= s2.terms().size() ? s2 : s1;
    const bool small_is_first = &small == &s1;
    Complex acc = 0.0;
    for (const auto& [bits, amp] : small.terms()) {
        const Complex other = big.amplitude(bits);
        acc += small_is_first ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return acc;
}

namespace {

// One expanding term of the per-basis-term rewrite. Kept as a flat vector:
// the accumulator never exceeds a handful of entries for small target sets.
struct Partial {
    BasisBits bits;
    Complex amp;
};

void accumulate(std::vector<Partial>& v, BasisBits bits, Complex amp) {
    for (auto& p : v) {
        if (p.bits == bits) {
            p.amp += amp;
            return;
        }
    }
    v.push_back({bits, amp});
}

} // namespace

StateVector apply_mode_unitary(const StateVector& state, const ModeUnitary& u) {
    const ModeRegistry& reg = *state.registry();
    const std::size_t d = u.target_modes.size();
    std::vector<std::size_t> target_index(d);
    std::vector<int> column_of(reg.size(), -1);
    for (std::size_t i = 0; i < d; ++i) {
        target_index[i] = reg.index(u.target_modes[i]);
        column_of[target_index[i]] = static_cast<int>(i);
    }

    StateVector out(state.registry());
    std::vector<Partial> acc, next;
    for (const auto& [bits, amp] : state.terms()) {
        // Rebuild the creation-operator product in registry order: apply the
        // rightmost (highest-index) factor first so signs stay canonical, and
        // substitute c^+_t -> sum_r U_{r,col} c^+_{target_r} on target modes.
        acc.assign(1, {0, amp});
        for (int j = static_cast<int>(reg.size()) - 1; j >= 0; --j) {
            if (!occupied(bits, static_cast<std::size_t>(j))) continue;
            const int col = column_of[static_cast<std::size_t>(j)];
            next.clear();
            if (col < 0) {
                const BasisBits mask = BasisBits{1} << j;
                for (const auto& p : acc) {
                    if (p.bits & mask) continue;
                    accumulate(next, p.bits | mask,
                               static_cast<double>(jw_sign(p.bits, static_cast<std::size_t>(j))) * p.amp);
                }
            } else {
                for (const auto& p : acc) {
                    for (std::size_t r = 0; r < d; ++r) {
                        const Complex w = u.matrix(r, static_cast<std::size_t>(col));
                        if (w == 0.0) continue;
                        const std::size_t t = target_index[r];
                        const BasisBits mask = BasisBits{1} << t;
                        if (p.bits & mask) continue; // c^+ c^+ on one mode vanishes
                        accumulate(next, p.bits | mask,
                                   static_cast<double>(jw_sign(p.bits, t)) * w * p.amp);
                    }
                }
            }
            acc.swap(next);
        }
        for (const auto& p : acc) out.add_term(p.bits, p.amp);
    }
    out.prune();
    return out;
}

bool equal_up_to_global_phase(const StateVector& s1, const StateVector& s2, double tol) {
    const double n1 = s1.norm();
    const double n2 = s2.norm();
    if (n1 == 0.0 || n2 == 0.0)
        throw std::invalid_argument("equal_up_to_global_phase: zero vector");
    return std::abs(inner_product(s1, s2)) >= (1.0 - tol) * n1 * n2;
}

StateVector operator*(Complex scale, const StateVector& state) {
    StateVector out(state.registry());
    for (const auto& [bits, amp] : state.terms()) out.add_term(bits, scale * amp);
    out.prune();
    return out;
}

StateVector operator+(const StateVector& lhs, const StateVector& rhs) {
    if (*lhs.registry() != *rhs.registry())
        throw std::invalid_argument("StateVector sum: registry mismatch");
    StateVector out(lhs.registry());
    for (const auto& [bits, amp] : lhs.terms()) out.add_term(bits, amp);
    for (const auto& [bits, amp] : rhs.terms()) out.add_term(bits, amp);
    out.prune();
    return out;
}

} // namespace flox
