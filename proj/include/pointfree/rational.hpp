// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_RATIONAL_HPP
#define POINTFREE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pointfree/errors.hpp"

namespace pointfree {

// Exact arbitrary-precision rational. Closure and interior decisions on
// interval endpoints must be exact; floating point would corrupt contact
// decisions at touching endpoints.
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

/// A rational extended with two infinities, used for interval endpoints.
class ExtRat {
public:
    ExtRat() : kind_(Kind::finite), value_(0) {}
    ExtRat(Rat v) : kind_(Kind::finite), value_(std::move(v)) {}
    ExtRat(int v) : kind_(Kind::finite), value_(v) {}

    static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }
    static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    const Rat& value() const {
        if (!is_finite()) throw usage_error("value() on an infinite endpoint");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ == Kind::neg_inf) return b.kind_ != Kind::neg_inf;
        if (a.kind_ == Kind::pos_inf) return false;
        if (b.kind_ == Kind::neg_inf) return false;
        if (b.kind_ == Kind::pos_inf) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

    std::string to_string() const {
        switch (kind_) {
            case Kind::neg_inf: return "-inf";
            case Kind::pos_inf: return "inf";
            default: return rat_to_string(value_);
        }
    }

private:
    enum class Kind { neg_inf, finite, pos_inf };
    explicit ExtRat(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rat value_;
};

inline ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

// Midpoint of two finite extended rationals.
inline Rat rat_mid(const Rat& a, const Rat& b) { return (a + b) / 2; }

} // namespace pointfree

#endif
