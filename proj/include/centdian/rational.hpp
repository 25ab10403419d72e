#ifndef CENTDIAN_RATIONAL_HPP
#define CENTDIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace centdian {

/// Exact rational number with arbitrary-precision numerator/denominator.
///
/// Values are always kept in canonical form (lowest terms, positive
/// denominator).  All arithmetic and comparisons are exact; nothing in the
/// library ever rounds except the fixed-point rendering helpers, which are
/// used for display only.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}          // NOLINT: implicit by design, ints are exact
    Rat(long num, long den);

    /// Parses "42", "-3.50" or "7/2" into an exact value.  Decimal digits
    /// become a fraction over a power of ten ("0.448" -> 56/125).  Returns
    /// nullopt on malformed input; never rounds.
    static std::optional<Rat> parse(const std::string& text);

    int sign() const { return sgn(q_); }
    Rat abs() const;

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }

    /// "n/d", or just "n" when the denominator is 1.
    std::string fraction_str() const;

    /// Fixed-point rendering with `places` fractional digits, rounding
    /// ties-to-even.  Display only; exact values travel as num/den.
    std::string decimal(int places = 6) const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    static const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
    static const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

}  // namespace centdian

#endif  // CENTDIAN_RATIONAL_HPP
