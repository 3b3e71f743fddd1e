// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flox/matrix.hpp"
#include "flox/registry.hpp"

namespace flox {

/// Amplitudes below this magnitude are dropped after every operation.
constexpr double kPruneTolerance = 1e-14;
/// Elementwise tolerance on U^dagger U = I for mode unitaries.
constexpr double kUnitaryTolerance = 1e-12;

/// Occupation bit-pattern over a registry: bit i set <=> mode with registry
/// index i holds one fermion. The basis ket is the product of creation
/// operators in registry order applied to the vacuum.
using BasisBits = std::uint64_t;

inline bool occupied(BasisBits bits, std::size_t index) { return (bits >> index) & 1u; }

inline int particle_count(BasisBits bits) { return __builtin_popcountll(bits); }

/// (-1)^(number of occupied modes with registry index < `index`)
inline int jw_sign(BasisBits bits, std::size_t index) {
    const BasisBits below = bits & ((BasisBits{1} << index) - 1);
    return (__builtin_popcountll(below) & 1) ? -1 : 1;
}

/// "0101"-style occupation string, registry index 0 first.
std::string format_basis(BasisBits bits, const ModeRegistry& registry);

/// Sparse many-body state: map from occupation pattern to complex amplitude.
/// Immutable in normal use; all operations below are pure functions.
class StateVector {
  public:
    explicit StateVector(RegistryPtr registry) : registry_(std::move(registry)) {}

    const RegistryPtr& registry() const { return registry_; }
    const std::unordered_map<BasisBits, Complex>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Terms ordered by occupation pattern; the deterministic view used for
    /// output, serialization and comparisons.
    std::vector<std::pair<BasisBits, Complex>> sorted_terms() const;

    Complex amplitude(BasisBits bits) const {
        auto it = terms_.find(bits);
        return it == terms_.end() ? Complex(0.0) : it->second;
    }

    double norm() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(BasisBits bits, Complex amp);
    void prune(double tol = kPruneTolerance);

  private:
    RegistryPtr registry_;
    std::unordered_map<BasisBits, Complex> terms_;
};

/// Small single-particle unitary on an ordered subset of modes. Lifted to the
/// many-body space by apply_mode_unitary: c^+_{t_i} -> sum_j U_{ji} c^+_{t_j}.
struct ModeUnitary {
    Matrix matrix;
    std::vector<std::string> target_modes;

    ModeUnitary(Matrix m, std::vector<std::string> targets);

    /// Skips the unitarity check; for verification hooks that need to feed a
    /// deliberately broken matrix through the engine.
    static ModeUnitary unchecked(Matrix m, std::vector<std::string> targets);

  private:
    ModeUnitary() = default;
};

/// |0...0> with amplitude 1.
StateVector vacuum(const RegistryPtr& registry);

/// Apply c^+_mode with the Jordan-Wigner sign; doubly-occupied terms vanish.
StateVector create(const StateVector& state, const std::string& mode);

/// Apply c_mode (adjoint of create); empty-mode terms vanish.
StateVector annihilate(const StateVector& state, const std::string& mode);

/// <s1|s2>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& s1, const StateVector& s2);

StateVector apply_mode_unitary(const StateVector& state, const ModeUnitary& u);

/// true iff |<s1|s2>| >= (1 - tol) * |s1| * |s2|. Both states must be nonzero.
bool equal_up_to_global_phase(const StateVector& s1, const StateVector& s2, double tol);

StateVector operator*(Complex scale, const StateVector& state);
StateVector operator+(const StateVector& lhs, const StateVector& rhs);

} // namespace flox
