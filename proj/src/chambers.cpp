#include "mstable/chambers.hpp"

#include "mstable/contraction.hpp"
#include "mstable/error.hpp"

namespace mstable {

std::string Model::to_string() const {
    std::string base = "Mbar_{1," + std::to_string(n) + "}";
    switch (kind) {
    case Kind::MBar: return base;
    case Kind::MStable: return base + "(" + std::to_string(m) + ")";
    case Kind::MStableNormalized: return base + "(" + std::to_string(m) + ")*";
    case Kind::SmallContraction: return "small-contraction";
    }
    return "?";
}

std::string Model::short_name() const {
    switch (kind) {
    case Kind::MBar: return "MBar";
    case Kind::MStable:
    case Kind::MStableNormalized: return "m=" + std::to_string(m);
    case Kind::SmallContraction: return "small";
    }
    return "?";
}

bool Chamber::contains(const Rational& s) const {
    bool above = lower_closed ? s >= lower : s > lower;
    bool below = !upper || (upper_closed ? s <= *upper : s < *upper);
    return above && below;
}

namespace {

std::string bracket(const Rational& lo, const std::optional<Rational>& hi, bool lo_closed, bool hi_closed) {
    std::string out = lo_closed ? "[" : "(";
    out += lo.to_string() + "," + (hi ? hi->to_string() : std::string("inf"));
    out += hi_closed ? "]" : ")";
    return out;
}

}  // namespace

std::string Chamber::interval_string() const { return bracket(lower, upper, lower_closed, upper_closed); }

Rational Chamber::alpha_lower() const { return alpha_of_s(lower); }

std::optional<Rational> Chamber::alpha_upper() const {
    if (!upper) return std::nullopt;
    return alpha_of_s(*upper);
}

std::string Chamber::alpha_interval_string() const {
    return bracket(alpha_lower(), alpha_upper(), lower_closed, upper_closed);
}

bool is_big(int n, const Rational& s) {
    require(n >= 2, ErrorCode::OutOfRange, "bigness needs n >= 2");
    return s > Rational(12 - n);
}

std::vector<Chamber> chamber_table(int n) {
    require(n >= 2, ErrorCode::OutOfRange, "chamber table needs n >= 2");
    using K = Model::Kind;
    std::vector<Chamber> out;
    out.push_back({11, std::nullopt, false, false, {K::MBar, n, 0}});
    if (n - 1 == 1) {
        out.push_back({10, Rational(11), false, true, {K::MStable, n, 1}});
        return out;
    }
    out.push_back({10, Rational(11), false, true, {K::MStable, n, 1}});
    // Middle range m = 2..n-2: open chambers (11-m, 12-m), transitional point 12-m above each.
    for (int m = 2; m <= n - 2; ++m) {
        out.push_back({12 - m, Rational(12 - m), true, true, {K::SmallContraction, n, 0}});
        out.push_back({11 - m, Rational(12 - m), false, false, {K::MStableNormalized, n, m}});
    }
    // Last chamber (12-n, 13-n], closed above; for n = 3 it directly follows (10,11].
    out.push_back({12 - n, Rational(13 - n), false, true, {K::MStableNormalized, n, n - 1}});
    return out;
}

Chamber model_at(int n, const Rational& s) {
    require(is_big(n, s), ErrorCode::NotBig,
            "D(" + s.to_string() + ") is not big on Mbar_{1," + std::to_string(n) + "} (needs s > " +
                std::to_string(12 - n) + ")");
    using K = Model::Kind;
    if (s > Rational(11)) return {11, std::nullopt, false, false, {K::MBar, n, 0}};
    if (s > Rational(10)) return {10, Rational(11), false, true, {K::MStable, n, 1}};
    if (s <= Rational(13 - n)) return {12 - n, Rational(13 - n), false, true, {K::MStableNormalized, n, n - 1}};
    // Here 13-n < s <= 10, so n >= 4 and the middle range is non-empty.
    if (s.is_integer()) {
        long v = s.numerator().get_si();
        return {Rational(v), Rational(v), true, true, {K::SmallContraction, n, 0}};
    }
    // floor(s) = 11 - m
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
    int m = 11 - static_cast<int>(fl.get_si());
    return {11 - m, Rational(12 - m), false, false, {K::MStableNormalized, n, m}};
}

}  // namespace mstable
