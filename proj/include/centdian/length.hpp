#ifndef CENTDIAN_LENGTH_HPP
#define CENTDIAN_LENGTH_HPP

#include <stdexcept>

#include "centdian/rational.hpp"

namespace centdian {

/// A travel distance: either a finite nonnegative rational or "unreachable"
/// (no connecting path).  Unreachable compares strictly greater than every
/// finite value and is absorbing under addition.
class Length {
public:
    Length() : finite_(false) {}

    static Length unreachable() { return Length(); }
    static Length finite(Rat v) {
        Length l;
        l.finite_ = true;
        l.value_ = std::move(v);
        return l;
    }

    bool is_unreachable() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw std::logic_error("value() on unreachable length");
        return value_;
    }

    friend bool operator==(const Length& a, const Length& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Length& a, const Length& b) { return !(a == b); }
    friend bool operator<(const Length& a, const Length& b) {
        if (!a.finite_) return false;            // unreachable is maximal
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Length& a, const Length& b) { return !(b < a); }
    friend bool operator>(const Length& a, const Length& b) { return b < a; }
    friend bool operator>=(const Length& a, const Length& b) { return !(a < b); }

    friend Length operator+(const Length& a, const Length& b) {
        if (!a.finite_ || !b.finite_) return unreachable();
        return finite(a.value_ + b.value_);
    }

    static const Length& min(const Length& a, const Length& b) {
        return b < a ? b : a;
    }

private:
    bool finite_;
    Rat value_;
};

}  // namespace centdian

#endif  // CENTDIAN_LENGTH_HPP
