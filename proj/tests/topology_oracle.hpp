// SPDX-License-Identifier: Apache-2.0
//
// Test-only membership oracle for subspace topology on the rational line.
//
// Every set in play (ambient, raw input, canonical region) is a finite
// union of intervals whose endpoints come from a known finite set of
// critical values, so membership is constant on each open gap between
// consecutive critical values. Evaluating predicates at the critical
// values themselves plus one representative per gap therefore decides
// interior and closure exactly, straight from their neighborhood
// definitions and independently of the canonicalization code under test.

#ifndef POINTFREE_TESTS_TOPOLOGY_ORACLE_HPP
#define POINTFREE_TESTS_TOPOLOGY_ORACLE_HPP

#include "pointfree/interval.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using pointfree::AmbientPiece;
using pointfree::AmbientSpace;
using pointfree::ExtRat;
using pointfree::IntervalRegion;
using pointfree::Rat;
using pointfree::RawInterval;
using pointfree::RawRegion;

// Sample points alternate gap representatives and critical values:
//   gap_-inf, v0, gap(v0,v1), v1, ..., v_last, gap_+inf
// Even indices are gap representatives, odd indices critical values.
struct SampleLine {
    std::vector<Rat> samples;
    std::vector<bool> is_value;

    static SampleLine build(std::vector<Rat> critical) {
        std::sort(critical.begin(), critical.end());
        critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
        SampleLine line;
        if (critical.empty()) {
            line.samples.push_back(0);
            line.is_value.push_back(false);
            return line;
        }
        line.samples.push_back(critical.front() - 1);
        line.is_value.push_back(false);
        for (std::size_t i = 0; i < critical.size(); ++i) {
            line.samples.push_back(critical[i]);
            line.is_value.push_back(true);
            if (i + 1 < critical.size()) {
                line.samples.push_back((critical[i] + critical[i + 1]) / 2);
                line.is_value.push_back(false);
            }
        }
        line.samples.push_back(critical.back() + 1);
        line.is_value.push_back(false);
        return line;
    }
};

using Membership = std::vector<bool>;

inline Membership ambient_membership(const SampleLine& line, const AmbientSpace& amb) {
    Membership m(line.samples.size(), false);
    for (std::size_t i = 0; i < line.samples.size(); ++i) {
        ExtRat x{line.samples[i]};
        for (const AmbientPiece& p : amb.pieces())
            if (p.is_point ? p.lo == x : (p.lo <= x && x <= p.hi)) m[i] = true;
    }
    return m;
}

inline Membership raw_membership(const SampleLine& line, const RawRegion& raw) {
    Membership m(line.samples.size(), false);
    for (std::size_t i = 0; i < line.samples.size(); ++i) {
        ExtRat x{line.samples[i]};
        for (const RawInterval& r : raw.intervals)
            if (pointfree::detail::raw_contains(r, x)) m[i] = true;
        for (const Rat& p : raw.points)
            if (ExtRat(p) == x) m[i] = true;
    }
    return m;
}

inline Membership region_membership(const SampleLine& line, const IntervalRegion& r) {
    Membership m(line.samples.size(), false);
    for (std::size_t i = 0; i < line.samples.size(); ++i)
        m[i] = pointfree::region_contains(r, line.samples[i]);
    return m;
}

// Closure within the subspace X: a point of X is in Cl S iff S holds at it
// or on an adjacent gap.
inline Membership closure_in(const SampleLine& line, const Membership& s, const Membership& x) {
    Membership out(s.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!x[i]) continue;
        bool near = s[i];
        if (line.is_value[i]) {
            if (i > 0 && s[i - 1]) near = true;
            if (i + 1 < s.size() && s[i + 1]) near = true;
        }
        out[i] = near;
    }
    return out;
}

// Interior within the subspace X: a point is interior to S iff every
// X-point of an adjacent gap is also in S.
inline Membership interior_in(const SampleLine& line, const Membership& s, const Membership& x) {
    Membership out(s.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i] || !x[i]) continue;
        bool ok = true;
        if (line.is_value[i]) {
            if (i > 0 && x[i - 1] && !s[i - 1]) ok = false;
            if (i + 1 < s.size() && x[i + 1] && !s[i + 1]) ok = false;
        }
        out[i] = ok;
    }
    return out;
}

inline Membership intersect(const Membership& a, const Membership& b) {
    Membership out(a.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
}

inline bool any_common(const Membership& a, const Membership& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

inline bool subset(const Membership& a, const Membership& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

// All finite endpoints mentioned by the ambient, a raw region, or regions.
inline std::vector<Rat> critical_values(const AmbientSpace& amb, const RawRegion* raw,
                                        std::initializer_list<const IntervalRegion*> regions) {
    std::vector<Rat> vals;
    auto add = [&](const ExtRat& e) {
        if (e.is_finite()) vals.push_back(e.value());
    };
    for (const AmbientPiece& p : amb.pieces()) {
        add(p.lo);
        add(p.hi);
    }
    if (raw) {
        for (const RawInterval& r : raw->intervals) {
            add(r.lo);
            add(r.hi);
        }
        for (const Rat& p : raw->points) vals.push_back(p);
    }
    for (const IntervalRegion* r : regions) {
        for (const auto& c : r->components()) {
            add(c.lo);
            add(c.hi);
        }
    }
    return vals;
}

} // namespace oracle

#endif
