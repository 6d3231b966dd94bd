#pragma once

#include "mstable/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mstable {

struct Model {
    enum class Kind { MBar, MStable, MStableNormalized, SmallContraction };
    Kind kind = Kind::MBar;
    int n = 0;
    int m = 0;  // stability parameter; 0 for MBar and SmallContraction

    /// "Mbar_{1,7}", "Mbar_{1,7}(1)", "Mbar_{1,7}(3)*", "small-contraction"
    std::string to_string() const;
    /// "MBar", "m=1", ..., "small"
    std::string short_name() const;
    friend bool operator==(const Model&, const Model&) = default;
};

/// Interval of the slope s on which Proj R(D(s)) is a fixed model. An empty
/// upper bound means +infinity. Degenerate chambers [s, s] hold the transitional values.
struct Chamber {
    Rational lower;
    std::optional<Rational> upper;
    bool lower_closed = false;
    bool upper_closed = false;
    Model model;

    bool contains(const Rational& s) const;
    bool degenerate() const { return upper && *upper == lower; }
    /// Bracket notation "(10,11]", "(11,inf)", "[9,9]".
    std::string interval_string() const;
    /// Same interval in alpha = (s-1)/12.
    std::string alpha_interval_string() const;
    Rational alpha_lower() const;
    std::optional<Rational> alpha_upper() const;

    friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// D(s) = s lambda + psi - Delta is big iff s > 12 - n.
bool is_big(int n, const Rational& s);

/// The chamber containing s. Throws NOT_BIG when s <= 12 - n.
Chamber model_at(int n, const Rational& s);

/// Partition of (12-n, inf) into chambers, ordered by descending s. Transitional
/// values 10, 9, ..., 14-n appear as degenerate chambers.
std::vector<Chamber> chamber_table(int n);

}  // namespace mstable
