// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_REPORT_HPP
#define POINTFREE_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pointfree {

enum class AxiomId { C0, C1, C2, C3, C4, C5, C6, IA, GIA, EXT, DISC };

inline const char* axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::C0: return "C0";
        case AxiomId::C1: return "C1";
        case AxiomId::C2: return "C2";
        case AxiomId::C3: return "C3";
        case AxiomId::C4: return "C4";
        case AxiomId::C5: return "C5";
        case AxiomId::C6: return "C6";
        case AxiomId::IA: return "IA";
        case AxiomId::GIA: return "GIA";
        case AxiomId::EXT: return "EXT";
        case AxiomId::DISC: return "DISC";
    }
    return "?";
}

inline std::optional<AxiomId> axiom_from_name(std::string_view name) {
    using enum AxiomId;
    for (AxiomId id : {C0, C1, C2, C3, C4, C5, C6, IA, GIA, EXT, DISC})
        if (name == axiom_name(id)) return id;
    return std::nullopt;
}

/// Outcome of one axiom or property check. When `holds` is false the
/// witness instantiates the outermost refuted quantifier: re-evaluating the
/// checked sentence at the witness yields false.
///
/// Witnesses are carried in two forms: `witness` holds printable canonical
/// literals (region names on the finite backend, region literals on the
/// interval backend), and `witness_codes` additionally holds the raw region
/// codes on the finite backend so tests can re-instantiate them.
struct CheckReport {
    std::string property;
    bool holds = false;
    std::vector<std::string> witness;
    std::vector<std::uint32_t> witness_codes;
    std::string note;
};

} // namespace pointfree

#endif
