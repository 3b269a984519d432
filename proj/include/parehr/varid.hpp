#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parehr {

/// Variable blocks.  X holds the weight variables x_1..x_d, B the facet
/// right-hand sides b_1..b_n, H their perturbations h_1..h_n, T the dilation
/// variable and Z the series variable.  Block membership is part of the
/// variable identity, not a naming convention: block-wide substitutions
/// (h -> 0, b -> t*b) key off it.
enum class VarBlock : std::uint8_t { X = 0, B = 1, H = 2, T = 3, Z = 4 };

struct VarId {
    VarBlock block{VarBlock::X};
    std::uint32_t index{0};

    friend bool operator==(const VarId&, const VarId&) = default;
    friend std::strong_ordering operator<=>(const VarId&, const VarId&) = default;

    static VarId x(std::uint32_t i) { return {VarBlock::X, i}; }
    static VarId b(std::uint32_t i) { return {VarBlock::B, i}; }
    static VarId h(std::uint32_t i) { return {VarBlock::H, i}; }
    static VarId t() { return {VarBlock::T, 0}; }
    static VarId z() { return {VarBlock::Z, 0}; }
};

/// Maps variables to display names and back.  Defaults are x1..xd, b1..bn,
/// h1..hn, t, z (1-based); B-block labels such as "b12" can be installed,
/// in which case the matching H-block variable is named by swapping the
/// leading letter ("h12").
class VarTable {
public:
    VarTable() = default;

    /// Installs labels for b_0..b_{n-1} (and derived h labels).
    void set_b_labels(std::vector<std::string> labels);
    const std::vector<std::string>& b_labels() const { return b_labels_; }
    bool has_labels() const { return !b_labels_.empty(); }

    std::string name(VarId v) const;

    /// Resolves a display name (label or default) back to a variable.
    std::optional<VarId> lookup(const std::string& name) const;

private:
    std::vector<std::string> b_labels_;
};

}  // namespace parehr
