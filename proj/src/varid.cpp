#include "parehr/varid.hpp"

#include <cctype>

#include "parehr/errors.hpp"

namespace parehr {

void VarTable::set_b_labels(std::vector<std::string> labels) {
    for (const auto& s : labels)
        if (s.empty()) throw ParseError("VarTable: empty label");
    b_labels_ = std::move(labels);
}

std::string VarTable::name(VarId v) const {
    switch (v.block) {
        case VarBlock::X: return "x" + std::to_string(v.index + 1);
        case VarBlock::B:
            if (v.index < b_labels_.size()) return b_labels_[v.index];
            return "b" + std::to_string(v.index + 1);
        case VarBlock::H:
            if (v.index < b_labels_.size()) {
                std::string s = b_labels_[v.index];
                if (s[0] == 'b') return "h" + s.substr(1);
                return "h_" + s;
            }
            return "h" + std::to_string(v.index + 1);
        case VarBlock::T: return "t";
        case VarBlock::Z: return "z";
    }
    return "?";
}

std::optional<VarId> VarTable::lookup(const std::string& s) const {
    if (s.empty()) return std::nullopt;
    for (std::uint32_t i = 0; i < b_labels_.size(); ++i) {
        if (s == b_labels_[i]) return VarId::b(i);
        if (s.size() > 1 && s[0] == 'h') {
            const std::string& lbl = b_labels_[i];
            if (lbl[0] == 'b' && s.substr(1) == lbl.substr(1)) return VarId::h(i);
            if (s.substr(0, 2) == "h_" && s.substr(2) == lbl) return VarId::h(i);
        }
    }
    if (s == "t") return VarId::t();
    if (s == "z") return VarId::z();
    const char head = s[0];
    if ((head == 'x' || head == 'b' || head == 'h') && s.size() > 1) {
        for (std::size_t k = 1; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
        // default names shadowed by labels: with labels installed, plain
        // b<k>/h<k> names are not accepted for the B/H blocks
        if (!b_labels_.empty() && head != 'x') return std::nullopt;
        const unsigned long idx = std::stoul(s.substr(1));
        if (idx == 0) return std::nullopt;
        const auto i = static_cast<std::uint32_t>(idx - 1);
        if (head == 'x') return VarId::x(i);
        if (head == 'b') return VarId::b(i);
        return VarId::h(i);
    }
    return std::nullopt;
}

}  // namespace parehr
