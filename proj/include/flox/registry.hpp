// Copyright 2026 The Flox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace flox {

/// Ordered register of named fermionic modes. The declaration order is the
/// canonical (Jordan-Wigner) order: every anticommutation sign produced by the
/// engine is defined relative to it, so the order is fixed at construction.
class ModeRegistry {
  public:
    ModeRegistry() = default;

    explicit ModeRegistry(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.size() > 64)
            throw std::invalid_argument("ModeRegistry: at most 64 modes supported");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty())
                throw std::invalid_argument("ModeRegistry: empty mode name");
            if (!index_.emplace(labels_[i], i).second)
                throw std::invalid_argument("ModeRegistry: duplicate mode name '" + labels_[i] + "'");
        }
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    std::size_t index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown mode '" + name + "': circuit/registry mismatch");
        return it->second;
    }

    bool operator==(const ModeRegistry& other) const { return labels_ == other.labels_; }
    bool operator!=(const ModeRegistry& other) const { return !(*this == other); }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

inline RegistryPtr make_registry(std::vector<std::string> labels) {
    return std::make_shared<const ModeRegistry>(std::move(labels));
}

} // namespace flox
