// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_MODEL_IO_HPP
#define POINTFREE_MODEL_IO_HPP

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pointfree/contact.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/interval.hpp"
#include "pointfree/model_search.hpp"
#include "pointfree/nest.hpp"

namespace pointfree {

inline constexpr const char* tool_version = "pointfree 1.0.0";
inline constexpr int model_file_version = 1;

// ---------------------------------------------------------------------------
// Literal parsing: rationals, ambients, regions, nests.
// ---------------------------------------------------------------------------

inline Rat parse_rational(std::string_view text, std::size_t at = parse_error::npos) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rat(boost::multiprecision::cpp_int(std::string(text)));
        }
        boost::multiprecision::cpp_int num{std::string(text.substr(0, slash))};
        boost::multiprecision::cpp_int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw parse_error("zero denominator", at);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational \"" + std::string(text) + "\"", at);
    }
}

inline ExtRat parse_endpoint(std::string_view text, std::size_t at = parse_error::npos) {
    if (text == "-inf" || text == "-oo") return ExtRat::neg_inf();
    if (text == "inf" || text == "+inf" || text == "oo") return ExtRat::pos_inf();
    return ExtRat(parse_rational(text, at));
}

/// Ambient literals: "R", or "+"-separated pieces "[a,b]" and "{c}" with
/// rational (or -inf/inf) endpoints.
inline AmbientSpace parse_ambient(std::string_view text) {
    if (text == "R" || text == "r") return AmbientSpace::real_line();
    std::vector<AmbientPiece> pieces;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '+') {
            ++pos;
            continue;
        }
        if (text[pos] == '[') {
            const auto comma = text.find(',', pos);
            const auto close = text.find(']', pos);
            if (comma == std::string_view::npos || close == std::string_view::npos ||
                comma > close)
                throw parse_error("malformed interval piece in ambient", pos);
            ExtRat lo = parse_endpoint(text.substr(pos + 1, comma - pos - 1), pos + 1);
            ExtRat hi = parse_endpoint(text.substr(comma + 1, close - comma - 1), comma + 1);
            pieces.push_back(AmbientPiece::interval(lo, hi));
            pos = close + 1;
        } else if (text[pos] == '{') {
            const auto close = text.find('}', pos);
            if (close == std::string_view::npos)
                throw parse_error("malformed point piece in ambient", pos);
            pieces.push_back(
                AmbientPiece::point(parse_rational(text.substr(pos + 1, close - pos - 1), pos)));
            pos = close + 1;
        } else {
            throw parse_error("unexpected character in ambient literal", pos);
        }
    }
    return AmbientSpace(std::move(pieces));
}

/// Region literals over an ambient: "0", "1", or "|"-separated components
/// "(a,b)", "[a,b)", "(a,b]", "[a,b]" and "{c}"; the input is regularized,
/// so bracket ends are honored exactly when they survive Int Cl.
inline IntervalRegion parse_region_literal(const AmbientSpace& ambient, std::string_view text) {
    if (text == "0") return IntervalRegion::zero(ambient);
    if (text == "1") return IntervalRegion::one(ambient);
    RawRegion raw;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '|') {
            ++pos;
            continue;
        }
        if (text[pos] == '{') {
            const auto close = text.find('}', pos);
            if (close == std::string_view::npos)
                throw parse_error("malformed point component", pos);
            raw.points.push_back(parse_rational(text.substr(pos + 1, close - pos - 1), pos));
            pos = close + 1;
            continue;
        }
        if (text[pos] == '(' || text[pos] == '[') {
            const bool closed_lo = text[pos] == '[';
            std::size_t end = text.find_first_of(")]", pos);
            if (end == std::string_view::npos)
                throw parse_error("unterminated interval component", pos);
            const bool closed_hi = text[end] == ']';
            const auto comma = text.find(',', pos);
            if (comma == std::string_view::npos || comma > end)
                throw parse_error("interval component needs two endpoints", pos);
            ExtRat lo = parse_endpoint(text.substr(pos + 1, comma - pos - 1), pos + 1);
            ExtRat hi = parse_endpoint(text.substr(comma + 1, end - comma - 1), comma + 1);
            raw.intervals.push_back({lo, hi, closed_lo, closed_hi});
            pos = end + 1;
            continue;
        }
        throw parse_error("unexpected character in region literal", pos);
    }
    return regularize(ambient, raw);
}

/// Nest literals: "harmonic:p:c", "odd_harmonic:p:c", "geometric:p:r",
/// optionally prefixed "approx:" to mark a rational stand-in for
/// irrational data (never certified).
inline Nest parse_nest_literal(const AmbientSpace& ambient, std::string_view text) {
    bool approx = false;
    if (text.starts_with("approx:")) {
        approx = true;
        text.remove_prefix(7);
    }
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string_view::npos ? c1 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw parse_error("nest literal needs the form rule:center:parameter");
    const std::string_view rule = text.substr(0, c1);
    const Rat center = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    const Rat param = parse_rational(text.substr(c2 + 1));
    Nest n = [&] {
        if (rule == "harmonic") return Nest::harmonic(ambient, center, param);
        if (rule == "odd_harmonic") return Nest::odd_harmonic(ambient, center, param);
        if (rule == "geometric") return Nest::geometric(ambient, center, param);
        throw parse_error("unknown nest rule \"" + std::string(rule) + "\"");
    }();
    return approx ? n.mark_approximate() : n;
}

// ---------------------------------------------------------------------------
// Model files.
// ---------------------------------------------------------------------------

/// A parsed model file: either a finite contact structure or an interval
/// ambient with named regions and nests.
struct ModelFile {
    int version = model_file_version;
    std::optional<ContactStructure> structure;
    std::optional<AmbientSpace> ambient;
    std::map<std::string, IntervalRegion> regions;
    std::map<std::string, Nest> nests;

    bool is_interval() const { return ambient.has_value(); }
};

namespace detail {

using nlohmann::json;

inline void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                                const char* where) {
    for (const auto& [key, value] : object.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok)
            throw parse_error(std::string("unknown key \"") + key + "\" in " + where +
                              " (strict schema)");
    }
}

inline FiniteAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("\"algebra\" must be an object");
    reject_unknown_keys(j, {"atoms", "labels"}, "algebra");
    if (!j.contains("atoms") || !j["atoms"].is_number_integer())
        throw parse_error("\"algebra.atoms\" must be an integer");
    const int n = j["atoms"].get<int>();
    if (j.contains("labels")) {
        auto labels = j["labels"].get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != n)
            throw parse_error("\"algebra.labels\" must list exactly \"atoms\" labels");
        return FiniteAlgebra(std::move(labels));
    }
    return FiniteAlgebra(n);
}

inline RegionCode region_code_from_labels(const FiniteAlgebra& alg, const json& j,
                                          const char* where) {
    if (!j.is_array()) throw parse_error(std::string(where) + ": region must be a label array");
    RegionCode code = 0;
    for (const auto& item : j) {
        const std::string label = item.get<std::string>();
        bool found = false;
        for (int i = 0; i < alg.atom_count(); ++i)
            if (alg.atom_labels()[i] == label) {
                code |= RegionCode{1} << i;
                found = true;
            }
        if (!found)
            throw parse_error(std::string(where) + ": unknown atom label \"" + label + "\"");
    }
    return code;
}

inline int atom_index(const FiniteAlgebra& alg, const std::string& label, const char* where) {
    for (int i = 0; i < alg.atom_count(); ++i)
        if (alg.atom_labels()[i] == label) return i;
    throw parse_error(std::string(where) + ": unknown atom label \"" + label + "\"");
}

inline ContactStructure structure_from_json(const json& spec);

inline ContactStructure contact_from_json(const FiniteAlgebra* alg, const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw parse_error("\"contact\" must be an object with a \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "overlap") {
        reject_unknown_keys(j, {"kind"}, "contact");
        if (!alg) throw parse_error("overlap contact needs a top-level algebra");
        return ContactStructure::overlap_contact(*alg);
    }
    if (kind == "atom_graph") {
        reject_unknown_keys(j, {"kind", "edges"}, "contact");
        if (!alg) throw parse_error("atom_graph contact needs a top-level algebra");
        std::vector<std::pair<int, int>> edges;
        if (j.contains("edges"))
            for (const auto& e : j["edges"]) {
                if (!e.is_array() || e.size() != 2)
                    throw parse_error("atom_graph edge must be a two-label array");
                edges.emplace_back(atom_index(*alg, e[0].get<std::string>(), "edges"),
                                   atom_index(*alg, e[1].get<std::string>(), "edges"));
            }
        return ContactStructure::atom_graph(*alg, edges);
    }
    if (kind == "full") {
        reject_unknown_keys(j, {"kind", "pairs"}, "contact");
        if (!alg) throw parse_error("full contact needs a top-level algebra");
        std::vector<std::pair<RegionCode, RegionCode>> pairs;
        if (!j.contains("pairs") || !j["pairs"].is_array())
            throw parse_error("full contact needs a \"pairs\" array");
        for (const auto& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 2)
                throw parse_error("each pair must be [region, region]");
            pairs.emplace_back(region_code_from_labels(*alg, p[0], "pairs"),
                               region_code_from_labels(*alg, p[1], "pairs"));
        }
        try {
            return ContactStructure::full_relation(*alg, pairs);
        } catch (const usage_error& e) {
            throw parse_error(e.what());
        }
    }
    if (kind == "d_contact") {
        reject_unknown_keys(j, {"kind", "d"}, "contact");
        if (!alg) throw parse_error("d_contact needs a top-level algebra");
        if (!j.contains("d")) throw parse_error("d_contact needs \"d\"");
        RegionCode d = region_code_from_labels(*alg, j["d"], "d");
        if (d == 0) throw parse_error("d must be nonzero");
        return ContactStructure::with_distinguished(alg->region(d));
    }
    if (kind == "product") {
        reject_unknown_keys(j, {"kind", "first", "second"}, "contact");
        if (alg)
            throw parse_error("product models must not carry a top-level algebra; it is "
                              "derived from the factors");
        if (!j.contains("first") || !j.contains("second"))
            throw parse_error("product needs \"first\" and \"second\" factor specs");
        return ContactStructure::product_disjunctive(structure_from_json(j["first"]),
                                                     structure_from_json(j["second"]));
    }
    throw parse_error("unknown contact kind \"" + kind + "\"");
}

inline ContactStructure structure_from_json(const json& spec) {
    if (!spec.is_object()) throw parse_error("factor spec must be an object");
    reject_unknown_keys(spec, {"algebra", "contact"}, "factor");
    if (!spec.contains("contact")) throw parse_error("factor needs a \"contact\"");
    if (spec.contains("algebra")) {
        FiniteAlgebra alg = algebra_from_json(spec["algebra"]);
        return contact_from_json(&alg, spec["contact"]);
    }
    return contact_from_json(nullptr, spec["contact"]);
}

inline json region_to_labels(const Region& r) {
    json out = json::array();
    for (const Region& a : atoms_below(r)) {
        int idx = std::countr_zero(a.code());
        out.push_back(r.algebra().atom_labels()[idx]);
    }
    return out;
}

inline json structure_to_json(const ContactStructure& cs);

inline json contact_to_json(const ContactStructure& cs) {
    json out;
    switch (cs.kind()) {
        case ContactKind::overlap:
            out["kind"] = "overlap";
            return out;
        case ContactKind::atom_graph: {
            out["kind"] = "atom_graph";
            json edges = json::array();
            for (auto [i, j] : cs.atom_edges())
                edges.push_back(
                    {cs.algebra().atom_labels()[i], cs.algebra().atom_labels()[j]});
            out["edges"] = edges;
            return out;
        }
        case ContactKind::d_contact:
            out["kind"] = "d_contact";
            out["d"] = region_to_labels(cs.distinguished());
            return out;
        case ContactKind::product:
            out["kind"] = "product";
            out["first"] = structure_to_json(cs.left_factor());
            out["second"] = structure_to_json(cs.right_factor());
            return out;
        case ContactKind::full_relation: {
            out["kind"] = "full";
            json pairs = json::array();
            for (RegionCode x = 0; x < cs.universe_size(); ++x)
                for (RegionCode y = 0; y < cs.universe_size(); ++y)
                    if (cs.contact_codes(x, y)) {
                        json pair = json::array();
                        pair.push_back(region_to_labels(cs.algebra().region(x)));
                        pair.push_back(region_to_labels(cs.algebra().region(y)));
                        pairs.push_back(std::move(pair));
                    }
            out["pairs"] = pairs;
            return out;
        }
    }
    throw std::logic_error("contact kind");
}

inline json structure_to_json(const ContactStructure& cs) {
    json out;
    if (cs.kind() != ContactKind::product) {
        json alg;
        alg["atoms"] = cs.algebra().atom_count();
        alg["labels"] = cs.algebra().atom_labels();
        out["algebra"] = alg;
    }
    out["contact"] = contact_to_json(cs);
    return out;
}

} // namespace detail

inline ModelFile parse_model_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    if (!j.is_object()) throw parse_error("model file must be a JSON object");
    detail::reject_unknown_keys(
        j, {"version", "algebra", "contact", "ambient", "regions", "nests"}, "model");
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw parse_error("model file needs an integer \"version\"");
    if (j["version"].get<int>() != model_file_version)
        throw parse_error("unsupported model file version " + j["version"].dump());

    ModelFile out;
    if (j.contains("ambient")) {
        if (j.contains("algebra") || j.contains("contact"))
            throw parse_error("a model is either finite (algebra/contact) or interval "
                              "(ambient), not both");
        out.ambient = parse_ambient(j["ambient"].get<std::string>());
        if (j.contains("regions")) {
            for (const auto& [name, lit] : j["regions"].items())
                out.regions.emplace(name,
                                    parse_region_literal(*out.ambient, lit.get<std::string>()));
        }
        if (j.contains("nests")) {
            for (const auto& [name, lit] : j["nests"].items())
                out.nests.emplace(name,
                                  parse_nest_literal(*out.ambient, lit.get<std::string>()));
        }
        return out;
    }
    if (!j.contains("contact")) throw parse_error("model file needs \"contact\" or \"ambient\"");
    if (j.contains("regions") || j.contains("nests"))
        throw parse_error("\"regions\"/\"nests\" belong to interval models");
    if (j.contains("algebra")) {
        FiniteAlgebra alg = detail::algebra_from_json(j["algebra"]);
        out.structure = detail::contact_from_json(&alg, j["contact"]);
    } else {
        out.structure = detail::contact_from_json(nullptr, j["contact"]);
    }
    return out;
}

inline ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open model file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_json(buf.str());
}

inline nlohmann::ordered_json model_to_json(const ContactStructure& cs) {
    nlohmann::ordered_json out;
    out["version"] = model_file_version;
    nlohmann::json plain = detail::structure_to_json(cs);
    if (plain.contains("algebra")) out["algebra"] = plain["algebra"];
    out["contact"] = plain["contact"];
    return out;
}

// ---------------------------------------------------------------------------
// Report documents.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string digest_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// One row of a report: a property, its outcome, and supporting detail.
struct ReportEntry {
    std::string property;
    std::string status; // "holds", "fails", "certified", "countermodel-found", ...
    bool ok = true;     // whether this row counts as expected/successful
    std::vector<std::string> witness;
    std::string note;

    static ReportEntry from_check(const CheckReport& r) {
        ReportEntry e;
        e.property = r.property;
        e.status = r.holds ? "holds" : "fails";
        e.ok = r.holds;
        e.witness = r.witness;
        e.note = r.note;
        return e;
    }
    static ReportEntry from_depth(const DepthReport& r) {
        ReportEntry e;
        e.property = r.property;
        e.status = r.failed ? "failed"
                 : r.certified ? "certified"
                               : "verified-to-depth-" + std::to_string(r.verified_to_depth);
        e.ok = !r.failed;
        e.witness = r.witness;
        e.note = r.note;
        return e;
    }
    static ReportEntry from_outcome(const SearchOutcome& o) {
        ReportEntry e;
        e.property = o.property;
        e.status = status_name(o.status);
        e.ok = o.status != SearchOutcome::Status::countermodel_found;
        e.witness = o.witness;
        if (!o.model_summary.empty()) e.witness.push_back("model: " + o.model_summary);
        e.note = o.note;
        return e;
    }
};

/// A machine-readable report with stable field order; renders byte-stably
/// for fixed inputs, seed and version.
struct ReportDocument {
    std::string version = tool_version;
    std::string input_digest = "-";
    std::vector<ReportEntry> entries;

    bool overall_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }

    std::string render_text() const {
        std::ostringstream out;
        out << version << "\n";
        out << "input: " << input_digest << "\n";
        for (const auto& e : entries) {
            out << (e.ok ? "[ ok ] " : "[FAIL] ") << e.property << ": " << e.status;
            if (!e.witness.empty()) {
                out << "  witness:";
                for (const auto& w : e.witness) out << " " << w;
            }
            if (!e.note.empty()) out << "  -- " << e.note;
            out << "\n";
        }
        out << "overall: " << (overall_ok() ? "ok" : "FAIL") << " (" << entries.size()
            << " checks)\n";
        return out.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json out;
        out["version"] = version;
        out["input_digest"] = input_digest;
        out["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json row;
            row["property"] = e.property;
            row["status"] = e.status;
            row["ok"] = e.ok;
            row["witness"] = e.witness;
            row["note"] = e.note;
            out["entries"].push_back(row);
        }
        out["overall"] = overall_ok() ? "ok" : "FAIL";
        return out;
    }
};

} // namespace pointfree

#endif
