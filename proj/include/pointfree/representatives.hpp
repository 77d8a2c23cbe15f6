// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_REPRESENTATIVES_HPP
#define POINTFREE_REPRESENTATIVES_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/algebra.hpp"
#include "pointfree/contact.hpp"
#include "pointfree/errors.hpp"

namespace pointfree {

/// A finite set of regions of one algebra, stored as a bitmask over region
/// codes.
class RegionSet {
public:
    RegionSet(FiniteAlgebra algebra, const std::vector<Region>& members)
        : algebra_(std::move(algebra)), members_(0) {
        for (const Region& r : members) {
            if (!r.algebra().same_as(algebra_))
                throw usage_error("region set: member from a different algebra");
            members_ |= CodeMask{1} << r.code();
        }
    }

    static RegionSet from_mask(FiniteAlgebra algebra, CodeMask mask) {
        RegionSet s(std::move(algebra), {});
        const RegionCode universe = s.algebra_.universe_size();
        if (universe < 64 && (mask >> universe) != 0)
            throw usage_error("region set mask has bits outside the universe");
        s.members_ = mask;
        return s;
    }

    const FiniteAlgebra& algebra() const { return algebra_; }
    CodeMask mask() const { return members_; }
    bool empty() const { return members_ == 0; }
    int size() const { return std::popcount(members_); }
    bool contains(const Region& r) const {
        return r.algebra().same_as(algebra_) && (members_ >> r.code() & 1);
    }

    std::vector<Region> members() const {
        std::vector<Region> out;
        for (RegionCode c = 0; c < algebra_.universe_size(); ++c)
            if (members_ >> c & 1) out.push_back(algebra_.region(c));
        return out;
    }

    std::string name() const {
        std::string out = "{";
        bool first = true;
        for (RegionCode c = 0; c < algebra_.universe_size(); ++c)
            if (members_ >> c & 1) {
                if (!first) out += ", ";
                out += algebra_.region_name(c);
                first = false;
            }
        return out + "}";
    }

    friend bool operator==(const RegionSet& a, const RegionSet& b) {
        return a.algebra_.same_as(b.algebra_) && a.members_ == b.members_;
    }

private:
    FiniteAlgebra algebra_;
    CodeMask members_;
};

/// covers(X, Y): every member of Y has a member of X below it, i.e. X gets
/// at least as deep as Y everywhere.
inline bool covers(const RegionSet& X, const RegionSet& Y) {
    if (!X.algebra().same_as(Y.algebra()))
        throw usage_error("covers: region sets from different algebras");
    if (X.empty() || Y.empty()) throw usage_error("covers: empty operand");
    const auto sub = detail::submask_table(X.algebra());
    for (RegionCode y = 0; y < Y.algebra().universe_size(); ++y)
        if ((Y.mask() >> y & 1) && (X.mask() & sub[y]) == 0) return false;
    return true;
}

// Mutual covering.
inline bool coinitial(const RegionSet& X, const RegionSet& Y) {
    return covers(X, Y) && covers(Y, X);
}

// All pairs from Q1 x Q2 are in contact.
inline bool contact_all_pairs(const ContactStructure& cs, const RegionSet& Q1,
                              const RegionSet& Q2) {
    for (RegionCode x = 0; x < cs.universe_size(); ++x) {
        if (!(Q1.mask() >> x & 1)) continue;
        for (RegionCode y = 0; y < cs.universe_size(); ++y)
            if ((Q2.mask() >> y & 1) && !cs.contact_codes(x, y)) return false;
    }
    return true;
}

/// Outcome of the four G-representative conditions. Failed conditions
/// carry re-checkable witnesses.
struct GCheckReport {
    bool r0 = false, r1 = false, r2 = false, r3 = false;
    std::optional<std::pair<Region, Region>> r1_witness; // <<-incomparable distinct pair
    std::optional<Region> r2_witness;                    // member with no inward witness
    std::optional<std::pair<Region, Region>> r3_witness; // overlap all of Q yet separated
    bool all() const { return r0 && r1 && r2 && r3; }
};

namespace detail {

// Mask-only fast path shared by single checks and enumeration.
inline bool g_rep_mask(const ContactStructure& cs, CodeMask q) {
    if (q == 0 || (q & 1)) return false; // nonempty, r0
    const RegionCode universe = cs.universe_size();
    for (RegionCode u = 0; u < universe; ++u) {
        if (!(q >> u & 1)) continue;
        if (q & ~cs.comparable_row(u)) return false; // r1
        if ((cs.lldown_row(u) & q) == 0) return false; // r2
    }
    RegionCode touchers[32];
    int count = 0;
    for (RegionCode x = 0; x < universe; ++x)
        if ((q & ~cs.overlap_row(x)) == 0) touchers[count++] = x;
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j)
            if (!cs.contact_codes(touchers[i], touchers[j])) return false; // r3
    return true;
}

} // namespace detail

/// Checks the four conditions r0..r3 for Q to represent a point in the
/// sense of shrinking region systems. Witnesses are lexicographically first
/// in region-code order.
inline GCheckReport is_g_representative(const ContactStructure& cs, const RegionSet& Q) {
    if (!Q.algebra().same_as(cs.algebra()))
        throw usage_error("is_g_representative: region set from a different algebra");
    if (Q.empty()) throw usage_error("is_g_representative: empty region set");
    const RegionCode universe = cs.universe_size();
    const CodeMask q = Q.mask();
    GCheckReport rep;

    rep.r0 = !(q & 1);

    rep.r1 = true;
    for (RegionCode u = 0; u < universe && rep.r1; ++u) {
        if (!(q >> u & 1)) continue;
        const CodeMask bad = q & ~cs.comparable_row(u);
        if (bad) {
            rep.r1 = false;
            const RegionCode v = static_cast<RegionCode>(std::countr_zero(bad));
            rep.r1_witness = {cs.algebra().region(u), cs.algebra().region(v)};
        }
    }

    rep.r2 = true;
    for (RegionCode u = 0; u < universe && rep.r2; ++u) {
        if (!(q >> u & 1)) continue;
        if ((cs.lldown_row(u) & q) == 0) {
            rep.r2 = false;
            rep.r2_witness = cs.algebra().region(u);
        }
    }

    rep.r3 = true;
    for (RegionCode x = 0; x < universe && rep.r3; ++x) {
        if (q & ~cs.overlap_row(x)) continue;
        for (RegionCode y = x; y < universe; ++y) {
            if (q & ~cs.overlap_row(y)) continue;
            if (!cs.contact_codes(x, y)) {
                rep.r3 = false;
                rep.r3_witness = {cs.algebra().region(x), cs.algebra().region(y)};
                break;
            }
        }
    }
    return rep;
}

// Enumeration over all 2^universe - 1 nonempty region subsets stays
// tractable up to this universe size.
inline constexpr RegionCode g_enumeration_universe_cap = 16;

/// All G-representatives of the structure, in ascending set-mask order.
inline std::vector<RegionSet> enumerate_g_representatives(const ContactStructure& cs) {
    const RegionCode universe = cs.universe_size();
    if (universe > g_enumeration_universe_cap)
        throw capability_error("G-representative enumeration is capped at universe " +
                               std::to_string(g_enumeration_universe_cap) + ", got " +
                               std::to_string(universe));
    std::vector<RegionSet> out;
    const CodeMask all = (CodeMask{1} << universe) - 1;
    for (CodeMask q = 1; q <= all; ++q)
        if (detail::g_rep_mask(cs, q)) out.push_back(RegionSet::from_mask(cs.algebra(), q));
    return out;
}

/// Partition of the G-representatives under mutual covering. Throws
/// std::logic_error if mutual covering fails to be transitive on them
/// (cannot happen over a BWCA).
struct EquivalenceClasses {
    std::vector<std::vector<RegionSet>> classes;
};

inline EquivalenceClasses equivalence_classes(const ContactStructure& cs) {
    const std::vector<RegionSet> reps = enumerate_g_representatives(cs);
    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        related[i][i] = true;
        for (int j = i + 1; j < n; ++j)
            related[i][j] = related[j][i] = coinitial(reps[i], reps[j]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (related[i][j] && related[j][k] && !related[i][k])
                    throw std::logic_error("mutual covering is not transitive on these "
                                           "G-representatives");
    EquivalenceClasses out;
    std::vector<int> cls(n, -1);
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        const int id = static_cast<int>(out.classes.size());
        out.classes.emplace_back();
        for (int j = i; j < n; ++j)
            if (cls[j] < 0 && related[i][j]) {
                cls[j] = id;
                out.classes[id].push_back(reps[j]);
            }
    }
    return out;
}

/// The filter generated by a G-representative: its upward closure under <=,
/// stored extensionally.
class GFilter {
public:
    GFilter(FiniteAlgebra algebra, CodeMask elements)
        : algebra_(std::move(algebra)), elements_(elements) {}

    const FiniteAlgebra& algebra() const { return algebra_; }
    CodeMask mask() const { return elements_; }
    bool contains(const Region& r) const {
        return r.algebra().same_as(algebra_) && (elements_ >> r.code() & 1);
    }
    std::vector<Region> elements() const {
        std::vector<Region> out;
        for (RegionCode c = 0; c < algebra_.universe_size(); ++c)
            if (elements_ >> c & 1) out.push_back(algebra_.region(c));
        return out;
    }
    friend bool operator==(const GFilter& a, const GFilter& b) {
        return a.algebra_.same_as(b.algebra_) && a.elements_ == b.elements_;
    }

private:
    FiniteAlgebra algebra_;
    CodeMask elements_;
};

/// Up-closure of a G-representative. Verifies the membership
/// characterization (x in F iff some member is <<-below x iff some member
/// is <=-below x) as a post-contract; it cannot fail over a BWCA.
inline GFilter filter_of(const ContactStructure& cs, const RegionSet& Q) {
    if (!is_g_representative(cs, Q).all())
        throw usage_error("filter_of: the set is not a G-representative");
    const RegionCode universe = cs.universe_size();
    CodeMask filter = 0;
    for (RegionCode x = 0; x < universe; ++x)
        for (RegionCode qc = 0; qc < universe; ++qc)
            if ((Q.mask() >> qc & 1) && (qc & x) == qc) {
                filter |= CodeMask{1} << x;
                break;
            }
    for (RegionCode x = 0; x < universe; ++x) {
        const bool in_filter = filter >> x & 1;
        const bool ll_route = (Q.mask() & cs.lldown_row(x)) != 0;
        if (in_filter != ll_route)
            throw usage_error("filter_of: membership characterization failed; the structure "
                              "is not a BWCA");
    }
    return GFilter(cs.algebra(), filter);
}

/// All distinct G-points (filters of G-representatives), in order of first
/// generating representative.
inline std::vector<GFilter> g_points(const ContactStructure& cs) {
    std::vector<GFilter> out;
    for (const RegionSet& q : enumerate_g_representatives(cs)) {
        GFilter f = filter_of(cs, q);
        bool seen = false;
        for (const GFilter& g : out)
            if (g == f) seen = true;
        if (!seen) out.push_back(std::move(f));
    }
    return out;
}

/// Report of the abstractive-set conditions r0, r1 and (A). The
/// lower-bound condition is evaluated in both readings: literally (any
/// region, including 0, so it fails for every nonempty set) and with the
/// lower bound restricted to nonzero regions, which is the reading every
/// downstream check uses. On a finite algebra a chain has its minimum as a
/// nonzero lower bound, so no finite set is ever abstractive.
struct AbstractiveReport {
    bool r0 = false, r1 = false;
    std::optional<std::pair<Region, Region>> r1_witness;
    bool no_lower_bound_literal = false;  // always false: 0 bounds everything
    bool no_lower_bound_nonzero = false;  // the working reading of (A)
    std::optional<Region> lower_bound_witness; // nonzero bound if any, else 0
    bool abstractive = false; // r0 && r1 && no_lower_bound_nonzero
    std::string note;
};

inline AbstractiveReport is_abstractive(const ContactStructure& cs, const RegionSet& A) {
    if (!A.algebra().same_as(cs.algebra()))
        throw usage_error("is_abstractive: region set from a different algebra");
    if (A.empty()) throw usage_error("is_abstractive: empty region set");
    AbstractiveReport rep;
    GCheckReport g = is_g_representative(cs, A);
    rep.r0 = g.r0;
    rep.r1 = g.r1;
    rep.r1_witness = g.r1_witness;

    RegionCode meet_code = cs.universe_size() - 1;
    for (RegionCode c = 0; c < cs.universe_size(); ++c)
        if (A.mask() >> c & 1) meet_code &= c;

    rep.no_lower_bound_literal = false; // 0 lies below every member
    rep.no_lower_bound_nonzero = meet_code == 0;
    rep.lower_bound_witness = cs.algebra().region(meet_code);
    rep.abstractive = rep.r0 && rep.r1 && rep.no_lower_bound_nonzero;
    rep.note = "literal no-lower-bound reading is unsatisfiable (0 bounds every set); "
               "the nonzero reading is used downstream";
    if (!rep.no_lower_bound_nonzero && rep.r0 && rep.r1)
        rep.note += "; meet of the set is a nonzero lower bound";
    return rep;
}

/// Covering-minimality of an abstractive set against explicit candidates:
/// any candidate that covers A without being covered back refutes A as a
/// W-representative. On the finite backend the precondition (A
/// abstractive) never holds and the report is vacuous.
struct WMinimalityReport {
    bool applicable = false;
    bool refuted = false;
    std::optional<RegionSet> refuting_candidate;
    int candidates_checked = 0;
    std::string note;
};

inline WMinimalityReport w_minimality_check(const ContactStructure& cs, const RegionSet& A,
                                            std::span<const RegionSet> candidates) {
    WMinimalityReport rep;
    AbstractiveReport a = is_abstractive(cs, A);
    rep.applicable = a.abstractive;
    if (!rep.applicable) {
        rep.note = "vacuous: the set is not abstractive (finite algebras are atomic and "
                   "atomic algebras have no abstractive sets)";
        return rep;
    }
    for (const RegionSet& B : candidates) {
        ++rep.candidates_checked;
        if (covers(B, A) && !covers(A, B)) {
            rep.refuted = true;
            rep.refuting_candidate = B;
            rep.note = "candidate covers the set but is not covered back";
            return rep;
        }
    }
    rep.note = "no candidate refutes minimality";
    return rep;
}

/// Status of "every nonzero region has two separated nonzero proper
/// parts". The premises (C5 and atomlessness) can never both hold on a
/// finite algebra, so the implication premise -> conclusion is what the
/// finite backend can refute.
struct SeparatedPartsReport {
    bool premise_c5 = false;
    bool premise_atomless = false;
    bool conclusion = false;
    std::optional<Region> conclusion_witness; // region with no separated pair of parts
    bool implication = false;
};

inline SeparatedPartsReport check_separated_parts(const ContactStructure& cs) {
    const RegionCode universe = cs.universe_size();
    SeparatedPartsReport rep;
    rep.premise_c5 = axiom_holds(cs, AxiomId::C5);
    rep.premise_atomless = false; // every nonzero region of a finite algebra contains an atom
    rep.conclusion = true;
    for (RegionCode x = 1; x < universe && rep.conclusion; ++x) {
        bool found = false;
        for (RegionCode y = 1; y < universe && !found; ++y) {
            if ((y & x) != y || y == x) continue;
            for (RegionCode z = 1; z < universe; ++z) {
                if ((z & x) != z || z == x) continue;
                if (!cs.contact_codes(y, z)) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            rep.conclusion = false;
            rep.conclusion_witness = cs.algebra().region(x);
        }
    }
    rep.implication = !(rep.premise_c5 && rep.premise_atomless) || rep.conclusion;
    return rep;
}

} // namespace pointfree

#endif
