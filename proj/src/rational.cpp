#include "centdian/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace centdian {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.sign() == 0) throw std::invalid_argument("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::abs() const {
    Rat r = *this;
    if (r.sign() < 0) r.q_ = -r.q_;
    return r;
}

std::string Rat::fraction_str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

std::optional<Rat> Rat::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) return std::nullopt;

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class d(den, 10);
        if (d == 0) return std::nullopt;
        value = mpq_class(mpz_class(num, 10), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = mpq_class(mpz_class(whole + frac, 10), scale);
    } else {
        if (!all_digits(s)) return std::nullopt;
        value = mpq_class(mpz_class(s, 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rat(value);
}

std::string Rat::decimal(int places) const {
    if (places < 0) throw std::invalid_argument("negative digit count");
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    mpz_class num = ::abs(q_.get_num());
    const mpz_class& den = q_.get_den();
    mpz_class scaled = num * scale;
    mpz_class quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                den.get_mpz_t());

    // Round half to even on the discarded remainder.
    mpz_class twice = 2 * rem;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) quo += 1;

    mpz_class whole = quo / scale;
    mpz_class frac = quo % scale;
    std::string out;
    if (sign() < 0 && quo != 0) out += '-';
    out += whole.get_str();
    if (places > 0) {
        std::string digits = frac.get_str();
        out += '.';
        out += std::string(static_cast<size_t>(places) - digits.size(), '0');
        out += digits;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.fraction_str();
}

}  // namespace centdian
