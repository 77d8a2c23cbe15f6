// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_NEST_HPP
#define POINTFREE_NEST_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/interval.hpp"
#include "pointfree/rational.hpp"

namespace pointfree {

enum class NestRule { harmonic, odd_harmonic, geometric, explicit_list };

/// A nest: a rule generating the k-th region of a shrinking family
/// (k >= 1). Rule nests produce the trace of (center - r_k, center + r_k)
/// on the ambient; explicit nests carry a finite member list and may
/// declare a rule nest as their tail (indexed absolutely, so member(k) of
/// the tail continues the list).
///
/// Depth-bounded checks are upgraded to full claims only through the rule
/// certificate below; nests carrying the `approximate` flag (rational
/// stand-ins for irrational data) are never certified.
class Nest {
public:
    static Nest harmonic(AmbientSpace ambient, Rat center, Rat scale) {
        if (scale <= 0) throw usage_error("harmonic nest needs a positive scale");
        return Nest(std::move(ambient), NestRule::harmonic, std::move(center), std::move(scale));
    }
    static Nest odd_harmonic(AmbientSpace ambient, Rat center, Rat scale) {
        if (scale <= 0) throw usage_error("odd_harmonic nest needs a positive scale");
        return Nest(std::move(ambient), NestRule::odd_harmonic, std::move(center),
                    std::move(scale));
    }
    static Nest geometric(AmbientSpace ambient, Rat center, Rat ratio) {
        if (!(ratio > 0 && ratio < 1))
            throw usage_error("geometric nest needs a ratio strictly between 0 and 1 "
                              "(radii must strictly decrease)");
        return Nest(std::move(ambient), NestRule::geometric, std::move(center), std::move(ratio));
    }
    static Nest explicit_list(AmbientSpace ambient, std::vector<IntervalRegion> members,
                              std::optional<Nest> tail = std::nullopt) {
        if (members.empty()) throw usage_error("explicit nest needs at least one member");
        for (const IntervalRegion& m : members)
            if (m.ambient() != ambient)
                throw usage_error("explicit nest member over a different ambient");
        Nest n(std::move(ambient), NestRule::explicit_list, 0, 0);
        n.members_ = std::move(members);
        if (tail) {
            if (tail->ambient() != n.ambient_)
                throw usage_error("tail nest over a different ambient");
            if (tail->rule_ == NestRule::explicit_list)
                throw usage_error("tail of an explicit nest must be a rule nest");
            n.tail_ = std::make_shared<const Nest>(std::move(*tail));
        }
        return n;
    }

    Nest mark_approximate() const {
        Nest n = *this;
        n.approximate_ = true;
        return n;
    }

    const AmbientSpace& ambient() const { return ambient_; }
    NestRule rule() const { return rule_; }
    bool is_rule_nest() const { return rule_ != NestRule::explicit_list; }
    bool has_rule_tail() const { return is_rule_nest() || tail_ != nullptr; }
    bool approximate() const { return approximate_; }
    int explicit_size() const { return static_cast<int>(members_.size()); }
    const Nest* tail() const { return tail_.get(); }

    // Defined member count; nullopt when the nest continues forever.
    std::optional<int> max_depth() const {
        if (has_rule_tail()) return std::nullopt;
        return explicit_size();
    }

    const Rat& center() const {
        if (is_rule_nest()) return center_;
        if (tail_) return tail_->center();
        throw usage_error("explicit nest without a tail has no center");
    }

    Rat radius(int k) const {
        if (k < 1) throw usage_error("nest members are indexed from 1");
        switch (rule_) {
            case NestRule::harmonic: return scale_ / k;
            case NestRule::odd_harmonic: return scale_ / (2 * k - 1);
            case NestRule::geometric: {
                Rat r = 1;
                for (int i = 0; i < k; ++i) r *= scale_;
                return r;
            }
            case NestRule::explicit_list:
                if (tail_ && k > explicit_size()) return tail_->radius(k);
                throw usage_error("explicit members have no generated radius");
        }
        throw usage_error("unreachable");
    }

    IntervalRegion member(int k) const {
        if (k < 1) throw usage_error("nest members are indexed from 1");
        if (rule_ == NestRule::explicit_list) {
            if (k <= explicit_size()) return members_[k - 1];
            if (tail_) return tail_->member(k);
            throw usage_error("member index " + std::to_string(k) +
                              " beyond the explicit nest of depth " +
                              std::to_string(explicit_size()));
        }
        const Rat r = radius(k);
        RawRegion raw;
        raw.intervals.push_back({ExtRat(center_ - r), ExtRat(center_ + r), false, false});
        return regularize(ambient_, raw);
    }

    std::string describe() const {
        switch (rule_) {
            case NestRule::harmonic:
                return "harmonic:" + rat_to_string(center_) + ":" + rat_to_string(scale_);
            case NestRule::odd_harmonic:
                return "odd_harmonic:" + rat_to_string(center_) + ":" + rat_to_string(scale_);
            case NestRule::geometric:
                return "geometric:" + rat_to_string(center_) + ":" + rat_to_string(scale_);
            case NestRule::explicit_list:
                return "explicit[" + std::to_string(explicit_size()) + "]" +
                       (tail_ ? "+" + tail_->describe() : "");
        }
        return "?";
    }

private:
    Nest(AmbientSpace ambient, NestRule rule, Rat center, Rat scale)
        : ambient_(std::move(ambient)), rule_(rule), center_(std::move(center)),
          scale_(std::move(scale)) {}

    AmbientSpace ambient_;
    NestRule rule_;
    Rat center_, scale_;
    std::vector<IntervalRegion> members_;
    std::shared_ptr<const Nest> tail_;
    bool approximate_ = false;
};

/// Outcome of a depth-bounded nest check. `certified` means a machine-
/// checked rule certificate extends the verified prefix to the whole nest;
/// `failed` means a definite counterexample was found.
struct DepthReport {
    std::string property;
    int verified_to_depth = 0;
    bool certified = false;
    bool failed = false;
    std::vector<std::string> witness;
    std::string note;
    bool ok() const { return !failed; }
};

inline constexpr int default_nest_depth = 32;

namespace detail {

// Distance from p to the nearest other finite ambient feature (piece
// endpoint or isolated point); nullopt when there is none (the full line).
inline std::optional<Rat> feature_gap(const AmbientSpace& ambient, const Rat& p) {
    std::optional<Rat> gap;
    auto consider = [&](const ExtRat& e) {
        if (!e.is_finite()) return;
        Rat d = e.value() > p ? e.value() - p : p - e.value();
        if (d == 0) return;
        if (!gap || d < *gap) gap = d;
    };
    for (const AmbientPiece& piece : ambient.pieces()) {
        consider(piece.lo);
        consider(piece.hi);
    }
    return gap;
}

// First index whose radius drops strictly below the bound.
inline int first_index_below(const Nest& nest, const Rat& bound, int start = 1) {
    int k = start;
    while (!(nest.radius(k) < bound)) {
        ++k;
        if (k > 1'000'000) throw capability_error("nest radius does not shrink below the bound");
    }
    return k;
}

// The index of the piece of the ambient containing p, if any.
inline std::optional<int> piece_of(const AmbientSpace& ambient, const Rat& p) {
    const ExtRat e{p};
    for (int i = 0; i < ambient.piece_count(); ++i) {
        const AmbientPiece& piece = ambient.pieces()[i];
        if (piece.is_point ? piece.lo == e : (piece.lo <= e && e <= piece.hi)) return i;
    }
    return std::nullopt;
}

struct RuleCertificate {
    int stable_from; // from this index on the member is a plain shrinking ball at the center
};

// Machine-checks the side conditions that let rule-level reasoning carry a
// prefix check to the whole tail: the center lies in an interval piece,
// radii strictly decrease to zero (by the rule's shape), and past
// `stable_from` the member is the trace of a ball strictly inside the
// center's piece neighborhood, so consecutive closures nest.
inline std::optional<RuleCertificate> rule_certificate(const Nest& nest, std::string* why) {
    auto fail = [&](std::string reason) {
        if (why) *why = std::move(reason);
        return std::nullopt;
    };
    if (nest.approximate())
        return fail("approximate nest: certified claims are not issued");
    if (!nest.has_rule_tail()) return fail("no tail rule: prefix-only checks");
    const Rat p = nest.center();
    auto piece_index = piece_of(nest.ambient(), p);
    if (!piece_index) return fail("center " + rat_to_string(p) + " lies outside the ambient");
    const AmbientPiece& piece = nest.ambient().pieces()[*piece_index];
    if (piece.is_point)
        return fail("center is an isolated point: the nest stabilizes at the atom {" +
                    rat_to_string(p) + "} and has a nonzero lower bound");
    auto gap = feature_gap(nest.ambient(), p);
    int stable = 1;
    if (gap) stable = first_index_below(nest, *gap);
    if (!nest.is_rule_nest()) stable = std::max(stable, nest.explicit_size() + 1);
    if (stable > 4096)
        return fail("rule stabilizes too deep (index " + std::to_string(stable) +
                    ") to machine-check the bridge prefix");
    return RuleCertificate{stable};
}

} // namespace detail

/// Prefix verification of the abstractive-set conditions: nonzero members
/// (r0), a strictly descending << chain (r1, r2, strict r2), and the
/// no-nonzero-lower-bound condition. A finite prefix always has its last
/// member as a nonzero lower bound, so the lower-bound entry can only be
/// certified through the rule certificate (shrinking radii force every
/// common lower bound to vanish); without one it reports inconclusive.
struct NestPrefixReport {
    DepthReport r0, chain, r2, strict, lower_bound;
    bool prefix_ok() const {
        return r0.ok() && chain.ok() && r2.ok() && strict.ok() && lower_bound.ok();
    }
    bool abstractive_certified() const {
        return prefix_ok() && r2.certified && lower_bound.certified;
    }
};

inline NestPrefixReport nest_prefix_check(const Nest& nest, int depth = default_nest_depth) {
    if (depth < 2) throw usage_error("nest checks need depth >= 2");
    std::string why;
    auto cert = detail::rule_certificate(nest, &why);
    if (cert) depth = std::max(depth, cert->stable_from + 1);
    if (auto max = nest.max_depth()) depth = std::min(depth, *max);

    NestPrefixReport out;
    for (DepthReport* r : {&out.r0, &out.chain, &out.r2, &out.strict, &out.lower_bound})
        r->verified_to_depth = depth;
    out.r0.property = "r0:nonzero-members";
    out.chain.property = "r1:ll-chain";
    out.r2.property = "r2:inward-witnesses";
    out.strict.property = "r2s:strictly-decreasing";
    out.lower_bound.property = "A:no-nonzero-lower-bound";

    std::vector<IntervalRegion> members;
    members.reserve(depth);
    for (int k = 1; k <= depth; ++k) members.push_back(nest.member(k));

    for (int k = 0; k < depth && !out.r0.failed; ++k)
        if (members[k].is_zero()) {
            out.r0.failed = true;
            out.r0.witness = {"k=" + std::to_string(k + 1)};
        }
    for (int k = 0; k + 1 < depth; ++k) {
        const IntervalRegion& outer = members[k];
        const IntervalRegion& inner = members[k + 1];
        if (!ll_T(inner, outer) && !out.chain.failed) {
            out.chain.failed = true;
            out.chain.witness = {"k=" + std::to_string(k + 1), outer.literal(), inner.literal()};
        }
        if (inner == outer && !out.strict.failed) {
            out.strict.failed = true;
            out.strict.witness = {"k=" + std::to_string(k + 1), outer.literal()};
        }
    }
    if (!out.chain.failed)
        out.chain.note = "consecutive members checked; << is transitive on the chain";

    // r2 for the prefix: every member but the last has its successor as an
    // inward witness; the last one needs the nest to continue.
    out.r2 = out.chain;
    out.r2.property = "r2:inward-witnesses";
    if (cert && !out.chain.failed) {
        out.r2.certified = true;
        out.r2.note = "certified: the rule keeps producing strictly smaller members";
        out.strict.certified = true;
        out.strict.note = "certified: radii strictly decrease under the rule";
    } else if (!out.chain.failed) {
        out.r2.note = "verified for the first " + std::to_string(depth - 1) +
                      " members; the last has no inward witness in a finite prefix";
    }

    if (cert && !out.chain.failed && !out.r0.failed) {
        out.lower_bound.certified = true;
        out.lower_bound.note =
            "certified: radii shrink to zero, so a common lower bound would have empty "
            "interior and must be 0 (rule certificate stable from index " +
            std::to_string(cert->stable_from) + ")";
    } else {
        IntervalRegion meet = members[0];
        for (int k = 1; k < depth; ++k) meet = ro_meet(meet, members[k]);
        out.lower_bound.note = std::string("inconclusive: ") + (cert ? "chain broken; " : why) +
                               (meet.is_zero() ? " (prefix meet already 0)"
                                               : " (prefix meet " + meet.literal() + ")");
    }
    return out;
}

/// Issues the local-basis certificate at p: every member contains p and the
/// radii shrink to zero, so the nest is a neighborhood basis at p. Together
/// with the abstractive prefix conditions this certifies the nest as a
/// W-representative: an abstractive set that is a local basis at a point of
/// the space is covering-minimal among abstractive sets.
inline DepthReport local_basis_certificate(const Nest& nest, const Rat& p,
                                           int depth = default_nest_depth) {
    DepthReport rep;
    rep.property = "W-representative:local-basis@" + rat_to_string(p);

    std::string why;
    auto cert = detail::rule_certificate(nest, &why);
    if (cert && nest.center() != p) {
        // p is eventually lost: find the first member missing it.
        Rat dist = nest.center() > p ? nest.center() - p : p - nest.center();
        int k = detail::first_index_below(nest, dist + 1, 1);
        while (region_contains(nest.member(k), p)) ++k;
        rep.failed = true;
        rep.verified_to_depth = k;
        rep.witness = {"k=" + std::to_string(k), nest.member(k).literal(),
                       "p=" + rat_to_string(p)};
        rep.note = "the member above no longer contains p";
        return rep;
    }

    const int check_depth = cert ? std::max(depth, cert->stable_from + 1)
                                 : std::min(depth, nest.max_depth().value_or(depth));
    NestPrefixReport prefix = nest_prefix_check(nest, check_depth);
    rep.verified_to_depth = check_depth;
    if (!prefix.prefix_ok() && (prefix.r0.failed || prefix.chain.failed || prefix.strict.failed)) {
        rep.failed = true;
        const DepthReport& bad = prefix.r0.failed ? prefix.r0
                                : prefix.chain.failed ? prefix.chain
                                                      : prefix.strict;
        rep.witness = bad.witness;
        rep.note = "abstractive prefix condition failed: " + bad.property;
        return rep;
    }
    for (int k = 1; k <= check_depth; ++k)
        if (!region_contains(nest.member(k), p)) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(k), nest.member(k).literal(),
                           "p=" + rat_to_string(p)};
            rep.note = "member does not contain p";
            return rep;
        }
    if (!cert) {
        rep.note = "prefix-only: " + why;
        return rep;
    }
    rep.certified = true;
    rep.note = "certified: members are shrinking neighborhoods of p (stable from index " +
               std::to_string(cert->stable_from) +
               "); an abstractive local basis at a point is a minimal abstractive set";
    return rep;
}

/// G-representative check for a nest. With a local-basis certificate at p,
/// r3 is certified by the shrinking-basis rule: a region overlapping every
/// member has p in its closure, so two such regions are in contact at p.
/// Randomized sanity pairs (regions clinging to p) are verified on top.
/// Without a certificate the check is depth-bounded: r3 is probed with the
/// clopen piece traces and random pairs that overlap the whole verified
/// prefix.
inline DepthReport g_rep_certified(const Nest& nest, const Rat& p,
                                   int depth = default_nest_depth, unsigned seed = 0xC0FFEE) {
    DepthReport rep;
    rep.property = "G-representative@" + rat_to_string(p);
    const AmbientSpace& amb = nest.ambient();
    std::mt19937 rng(seed);

    DepthReport basis = local_basis_certificate(nest, p, depth);
    const int check_depth = basis.verified_to_depth > 0 ? basis.verified_to_depth : depth;
    rep.verified_to_depth = check_depth;

    if (basis.certified) {
        // Sanity sampling: pairs of regions whose closures contain p
        // overlap every member; they must be in contact.
        auto clinging = [&](std::mt19937& r) -> IntervalRegion {
            auto piece = detail::piece_of(amb, p);
            const AmbientPiece& pc = amb.pieces()[*piece];
            std::uniform_int_distribution<int> numer(1, 16);
            std::uniform_int_distribution<int> side(0, 1);
            Rat delta(numer(r), 16);
            const bool can_right = ExtRat(p) < pc.hi;
            const bool can_left = pc.lo < ExtRat(p);
            const bool go_right = can_right && (!can_left || side(r) == 0);
            RawRegion raw;
            if (go_right)
                raw.intervals.push_back({ExtRat(p), ExtRat(p + delta), false, false});
            else
                raw.intervals.push_back({ExtRat(p - delta), ExtRat(p), false, false});
            return regularize(amb, raw);
        };
        for (int i = 0; i < 64; ++i) {
            IntervalRegion u = ro_join(clinging(rng), random_region(amb, rng));
            IntervalRegion v = ro_join(clinging(rng), random_region(amb, rng));
            if (!contact_T(u, v))
                throw std::logic_error("g_rep_certified: sanity pair violated the basis rule");
        }
        rep.certified = true;
        rep.note = "r0-r2 from the abstractive prefix; r3 certified: a region overlapping "
                   "every member of a shrinking basis at p has p in its closure, so two such "
                   "regions share p in their closures; 64 sanity pairs verified";
        return rep;
    }

    NestPrefixReport prefix = nest_prefix_check(nest, std::min(depth, nest.max_depth().value_or(depth)));
    if (prefix.r0.failed || prefix.chain.failed) {
        rep.failed = true;
        rep.witness = prefix.r0.failed ? prefix.r0.witness : prefix.chain.witness;
        rep.note = "prefix condition failed";
        return rep;
    }

    // Depth-bounded r3 probe: a region overlapping the innermost verified
    // member overlaps the whole prefix (the members form a chain).
    const int probe_depth = std::min(depth, nest.max_depth().value_or(depth));
    IntervalRegion innermost = nest.member(probe_depth);
    std::vector<IntervalRegion> candidates;
    for (int i = 0; i < amb.piece_count(); ++i) candidates.push_back(piece_trace(amb, i));
    for (int i = 0; i < 32; ++i) candidates.push_back(random_region(amb, rng));
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a; b < candidates.size(); ++b) {
            const IntervalRegion &u = candidates[a], &v = candidates[b];
            if (u.is_zero() || v.is_zero()) continue;
            if (!ro_overlap(u, innermost) || !ro_overlap(v, innermost)) continue;
            if (!contact_T(u, v)) {
                rep.failed = true;
                rep.verified_to_depth = probe_depth;
                rep.witness = {u.literal(), v.literal()};
                rep.note = "r3 refuted to depth " + std::to_string(probe_depth) +
                           ": both regions overlap every member of the prefix yet are "
                           "separated";
                return rep;
            }
        }
    rep.verified_to_depth = probe_depth;
    rep.note = "no certificate (" + std::string(basis.note) +
               "); r3 sampled to the stated depth only";
    return rep;
}

/// Covering check: for each of the first `depth` members of B, find a
/// member of A below it. With rule certificates at the same center on both
/// sides the covering is certified for the whole nests, not just the
/// prefix; a rule nest whose center a member of B misses gives a definite
/// refutation.
inline DepthReport nest_covering(const Nest& A, const Nest& B, int depth = default_nest_depth) {
    if (A.ambient() != B.ambient()) throw usage_error("nest_covering: different ambients");
    DepthReport rep;
    rep.property = "covering";
    const int b_depth = std::min(depth, B.max_depth().value_or(depth));
    rep.verified_to_depth = b_depth;

    std::string why_a;
    auto cert_a = detail::rule_certificate(A, &why_a);
    const std::optional<int> a_max = A.max_depth();

    for (int j = 1; j <= b_depth; ++j) {
        IntervalRegion b = B.member(j);
        if (b.is_zero()) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(j), "0"};
            rep.note = "zero member cannot be covered";
            return rep;
        }
        if (cert_a && !region_contains(b, A.center())) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(j), b.literal()};
            rep.note = "definite: every member of the covering nest contains its center " +
                       rat_to_string(A.center()) + ", which this member misses";
            return rep;
        }
        int scan_limit;
        if (cert_a) {
            // b contains A's center; a ball at the center of small enough
            // radius fits inside b's component around it, provided it also
            // stays clear of every other ambient feature.
            Rat delta = 1;
            const Rat& p = A.center();
            for (const IntervalComponent& c : b.components()) {
                const bool inside =
                    (c.lo < ExtRat(p) ||
                     (c.lo == ExtRat(p) && c.lo.is_finite() &&
                      c.lo == A.ambient().pieces()[c.piece].lo)) &&
                    (ExtRat(p) < c.hi ||
                     (c.hi == ExtRat(p) && c.hi.is_finite() &&
                      c.hi == A.ambient().pieces()[c.piece].hi));
                if (!inside) continue;
                Rat room = 1;
                bool have = false;
                if (c.lo.is_finite() && c.lo.value() < p) {
                    room = p - c.lo.value();
                    have = true;
                }
                if (c.hi.is_finite() && p < c.hi.value()) {
                    Rat r2 = c.hi.value() - p;
                    room = have ? (r2 < room ? r2 : room) : r2;
                    have = true;
                }
                delta = have ? room : Rat(1);
                break;
            }
            if (auto gap = detail::feature_gap(A.ambient(), p); gap && *gap < delta)
                delta = *gap;
            scan_limit = detail::first_index_below(A, delta) + 8;
        } else {
            scan_limit = a_max ? *a_max : 4 * depth + 64;
        }
        bool found = false;
        for (int i = 1; i <= scan_limit && !found; ++i) {
            if (a_max && i > *a_max) break;
            if (ro_leq(A.member(i), b)) found = true;
        }
        if (!found) {
            rep.witness = {"k=" + std::to_string(j), b.literal()};
            rep.note = "inconclusive at member " + std::to_string(j) + ": no covering member "
                       "found within the scan bound and no certificate applies";
            return rep;
        }
    }

    std::string why_b;
    auto cert_b = detail::rule_certificate(B, &why_b);
    if (cert_a && cert_b && A.center() == B.center()) {
        rep.certified = true;
        rep.note = "certified: both nests are shrinking neighborhood bases at " +
                   rat_to_string(A.center()) +
                   ", so every member of one contains arbitrarily small members of the other";
    } else {
        rep.note = "prefix covering verified to depth " + std::to_string(b_depth);
    }
    return rep;
}

inline std::pair<DepthReport, DepthReport> nest_mutual_covering(const Nest& A, const Nest& B,
                                                                int depth = default_nest_depth) {
    return {nest_covering(A, B, depth), nest_covering(B, A, depth)};
}

/// The refinement construction showing that a nest with two separated
/// persistent overlappers is not covering-minimal: pad u away from v by
/// iterated interpolation (u << ... << u_1 << u_0 = -v) and take
/// b_k = u_k . x_k. The result is an abstractive prefix covered by the
/// nest that the nest does not cover back.
struct SeparationRefinement {
    std::vector<IntervalRegion> refined;
    DepthReport report;
};

inline SeparationRefinement separation_refinement(const Nest& nest, const IntervalRegion& u,
                                                  const IntervalRegion& v,
                                                  int depth = default_nest_depth) {
    SeparationRefinement out;
    DepthReport& rep = out.report;
    rep.property = "separation-refinement";
    const int d = std::min(depth, nest.max_depth().value_or(depth));
    rep.verified_to_depth = d;

    if (contact_T(u, v)) throw usage_error("separation_refinement: u and v are in contact");
    IntervalRegion not_v = ro_complement(v);
    if (!ll_T(u, not_v)) throw std::logic_error("separated regions must satisfy u << -v");

    std::vector<IntervalRegion> members;
    for (int k = 1; k <= d; ++k) members.push_back(nest.member(k));
    for (int k = 0; k < d; ++k)
        if (!ro_overlap(u, members[k]) || !ro_overlap(v, members[k]))
            throw usage_error("separation_refinement: u and v must overlap every member of "
                              "the prefix (failed at k=" + std::to_string(k + 1) + ")");

    // u << u_d << ... << u_1 << u_0 = -v
    std::vector<IntervalRegion> pads;
    pads.push_back(not_v);
    for (int k = 1; k <= d; ++k) pads.push_back(ia_interpolant(u, pads.back()));

    for (int k = 1; k <= d; ++k) out.refined.push_back(ro_meet(pads[k], members[k - 1]));

    for (int k = 0; k < d; ++k) {
        if (out.refined[k].is_zero()) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(k + 1)};
            rep.note = "refined member vanished";
            return out;
        }
        if (k + 1 < d) {
            if (!ll_T(out.refined[k + 1], out.refined[k]) ||
                out.refined[k + 1] == out.refined[k]) {
                rep.failed = true;
                rep.witness = {"k=" + std::to_string(k + 1), out.refined[k].literal(),
                               out.refined[k + 1].literal()};
                rep.note = "refined members do not descend strictly";
                return out;
            }
        }
    }

    // covered by the nest: member k of the nest contains refined member k
    for (int k = 0; k < d; ++k)
        if (!ro_leq(out.refined[k], members[k])) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(k + 1)};
            rep.note = "refined member escaped the nest member";
            return out;
        }
    // not covering back: no nest member fits below any refined member,
    // because refined members avoid v while every nest member meets it
    for (int i = 0; i < d; ++i) {
        if (!ll_T(out.refined[i], not_v)) {
            rep.failed = true;
            rep.witness = {"k=" + std::to_string(i + 1)};
            rep.note = "refined member does not avoid v";
            return out;
        }
        for (int j = 0; j < d; ++j)
            if (ro_leq(members[j], out.refined[i])) {
                rep.failed = true;
                rep.witness = {"i=" + std::to_string(i + 1), "j=" + std::to_string(j + 1)};
                rep.note = "a nest member slipped below a refined member";
                return out;
            }
    }
    rep.note = "refined chain is an abstractive prefix covered by the nest but not covering "
               "it: refined members avoid v (<< its complement) while every checked nest "
               "member overlaps v";
    return out;
}

/// Explicit nest tracing symmetric harmonic balls at two centers; the
/// standard source of an abstractive chain that pins no single location
/// (r3 fails against the two piece traces on a disconnected ambient).
inline Nest harmonic_pair_prefix(const AmbientSpace& ambient, const Rat& p1, const Rat& p2,
                                 const Rat& scale, int depth) {
    if (scale <= 0) throw usage_error("harmonic_pair_prefix needs a positive scale");
    std::vector<IntervalRegion> members;
    for (int k = 1; k <= depth; ++k) {
        Rat r = scale / k;
        RawRegion raw;
        raw.intervals.push_back({ExtRat(p1 - r), ExtRat(p1 + r), false, false});
        raw.intervals.push_back({ExtRat(p2 - r), ExtRat(p2 + r), false, false});
        members.push_back(regularize(ambient, raw));
    }
    return Nest::explicit_list(ambient, std::move(members));
}

} // namespace pointfree

#endif
