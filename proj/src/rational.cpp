#include "mstable/rational.hpp"

#include "mstable/error.hpp"

#include <cctype>

namespace mstable {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) {
    require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), ErrorCode::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail(ErrorCode::ParseError, "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) fail(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
        mpz_class den(std::string(den_text), 10);
        require(den != 0, ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac.empty() && !all_digits(frac)))
            fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
        std::string digits = std::string(int_part) + std::string(frac);
        mpz_class num(digits.empty() ? std::string("0") : digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        mpq_class q(neg ? mpz_class(-num) : num, den);
        q.canonicalize();
        return Rational(q);
    }

    return Rational(mpq_class(parse_integer(text, text)));
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace mstable
