// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_ALGEBRA_HPP
#define POINTFREE_ALGEBRA_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"

namespace pointfree {

// Regions of a finite Boolean algebra are encoded as atom bitsets: bit i of
// the code is atom i. Code 0 is the zero region, code 2^n - 1 the unit.
using RegionCode = std::uint32_t;

// Bitmask over region codes (bit c set <=> code c in the set). The universe
// never exceeds 32 codes, so 64 bits is always enough.
using CodeMask = std::uint64_t;

class Region;

/// A finite Boolean algebra on named atoms. The universe is all atom
/// subsets. Instances are immutable; two algebras are "the same" only if
/// they are the same instance, and every Region carries its algebra so that
/// mixed-algebra operations can be rejected.
class FiniteAlgebra {
public:
    // Exhaustive checks over region tuples and region subsets grow doubly
    // exponentially in the atom count; five atoms (universe 32) is the
    // largest size any operation here needs.
    static constexpr int max_atoms = 5;

    explicit FiniteAlgebra(int atom_count)
        : FiniteAlgebra(default_labels(atom_count)) {}

    explicit FiniteAlgebra(std::vector<std::string> atom_labels) {
        const int n = static_cast<int>(atom_labels.size());
        if (n < 1 || n > max_atoms)
            throw usage_error("algebra must have between 1 and " +
                              std::to_string(max_atoms) + " atoms, got " + std::to_string(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (atom_labels[i] == atom_labels[j])
                    throw usage_error("duplicate atom label \"" + atom_labels[i] + "\"");
        data_ = std::make_shared<const Data>(Data{n, std::move(atom_labels)});
    }

    int atom_count() const { return data_->atom_count; }
    RegionCode universe_size() const { return RegionCode{1} << data_->atom_count; }
    const std::vector<std::string>& atom_labels() const { return data_->labels; }

    bool same_as(const FiniteAlgebra& other) const { return data_ == other.data_; }

    Region region(RegionCode code) const;
    Region zero() const;
    Region one() const;
    Region atom(int index) const;
    std::vector<Region> atoms() const;

    // "0", "1", or "{a0,a2}".
    std::string region_name(RegionCode code) const {
        if (code == 0) return "0";
        if (code == universe_size() - 1) return "1";
        std::string out = "{";
        bool first = true;
        for (int i = 0; i < atom_count(); ++i) {
            if (code & (RegionCode{1} << i)) {
                if (!first) out += ",";
                out += data_->labels[i];
                first = false;
            }
        }
        return out + "}";
    }

private:
    struct Data {
        int atom_count;
        std::vector<std::string> labels;
    };

    static std::vector<std::string> default_labels(int n) {
        std::vector<std::string> labels;
        labels.reserve(n > 0 ? n : 0);
        for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
        return labels;
    }

    std::shared_ptr<const Data> data_;
};

/// A region: an atom subset of one particular algebra. Value-comparable;
/// regions of different algebras are never equal.
class Region {
public:
    Region(FiniteAlgebra algebra, RegionCode code)
        : algebra_(std::move(algebra)), code_(code) {
        if (code_ >= algebra_.universe_size())
            throw usage_error("region code " + std::to_string(code_) +
                              " out of range for a " + std::to_string(algebra_.atom_count()) +
                              "-atom algebra");
    }

    RegionCode code() const { return code_; }
    const FiniteAlgebra& algebra() const { return algebra_; }

    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == algebra_.universe_size() - 1; }

    std::string name() const { return algebra_.region_name(code_); }

    friend bool operator==(const Region& a, const Region& b) {
        return a.algebra_.same_as(b.algebra_) && a.code_ == b.code_;
    }
    friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

private:
    FiniteAlgebra algebra_;
    RegionCode code_;
};

inline Region FiniteAlgebra::region(RegionCode code) const { return Region(*this, code); }
inline Region FiniteAlgebra::zero() const { return Region(*this, 0); }
inline Region FiniteAlgebra::one() const { return Region(*this, universe_size() - 1); }

inline Region FiniteAlgebra::atom(int index) const {
    if (index < 0 || index >= atom_count())
        throw usage_error("atom index out of range");
    return Region(*this, RegionCode{1} << index);
}

inline std::vector<Region> FiniteAlgebra::atoms() const {
    std::vector<Region> out;
    out.reserve(atom_count());
    for (int i = 0; i < atom_count(); ++i) out.push_back(atom(i));
    return out;
}

namespace detail {
inline void require_same_algebra(const Region& a, const Region& b, const char* op) {
    if (!a.algebra().same_as(b.algebra()))
        throw usage_error(std::string(op) + ": operands belong to different algebras");
}
} // namespace detail

inline Region meet(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "meet");
    return Region(a.algebra(), a.code() & b.code());
}

inline Region join(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "join");
    return Region(a.algebra(), a.code() | b.code());
}

inline Region complement(const Region& a) {
    return Region(a.algebra(), ~a.code() & (a.algebra().universe_size() - 1));
}

// a - b, short for a . -b.
inline Region minus(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "minus");
    return Region(a.algebra(), a.code() & ~b.code());
}

inline bool leq(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "leq");
    return (a.code() & b.code()) == a.code();
}

inline bool lt(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "lt");
    return (a.code() & b.code()) == a.code() && a.code() != b.code();
}

inline bool overlap(const Region& a, const Region& b) {
    detail::require_same_algebra(a, b, "overlap");
    return (a.code() & b.code()) != 0;
}

inline bool is_atom(const Region& a) { return std::popcount(a.code()) == 1; }

// All parts of a, including 0 and a itself, in ascending code order.
inline std::vector<Region> down_set(const Region& a) {
    std::vector<Region> out;
    const RegionCode m = a.code();
    RegionCode s = 0;
    while (true) {
        out.push_back(Region(a.algebra(), s));
        if (s == m) break;
        s = (s - m) & m; // next submask of m in ascending order
    }
    return out;
}

inline std::vector<Region> atoms_below(const Region& a) {
    std::vector<Region> out;
    for (int i = 0; i < a.algebra().atom_count(); ++i)
        if (a.code() & (RegionCode{1} << i)) out.push_back(a.algebra().atom(i));
    return out;
}

namespace detail {

// For each code y, the mask of codes x with x <= y. Independent of any
// contact relation; handy for covering and filter computations.
inline std::vector<CodeMask> submask_table(const FiniteAlgebra& alg) {
    const RegionCode universe = alg.universe_size();
    std::vector<CodeMask> table(universe, 0);
    for (RegionCode y = 0; y < universe; ++y) {
        RegionCode s = 0;
        while (true) {
            table[y] |= CodeMask{1} << s;
            if (s == y) break;
            s = (s - y) & y;
        }
    }
    return table;
}

} // namespace detail

} // namespace pointfree

#endif
