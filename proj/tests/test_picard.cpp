#include "doctest.h"
#include "mstable/error.hpp"
#include "mstable/picard.hpp"

using namespace mstable;

namespace {

DivisorClass sum_over(const Space& sp, int lo, int hi, auto weight) {
    DivisorClass d(sp);
    for (int k = lo; k <= hi; ++k)
        for (MarkSet s : subsets_of_size(sp.n(), k)) d.add_to(s, weight(s));
    return d;
}

}  // namespace

TEST_CASE("psi_1 on Mbar_{1,3}") {
    Space sp(3, 0);
    DivisorClass expect = DivisorClass::lambda_class(sp);
    for (auto s : {MarkSet::of({1, 2}), MarkSet::of({1, 3}), MarkSet::of({1, 2, 3})}) expect.add_to(s, 1);
    CHECK(expand(sp, TautClass::psi_i(1)) == expect);
}

TEST_CASE("D(11) on Mbar_{1,7}") {
    Space sp(7, 0);
    DivisorClass expect = sum_over(sp, 2, 7, [](MarkSet s) { return Rational(s.size() - 1); });
    expect.set_lambda(6);
    CHECK(expand(sp, TautClass::ds(11)) == expect);
}

TEST_CASE("D(0) on Mbar_{1,12} has no lambda term") {
    Space sp(12, 0);
    DivisorClass d = expand(sp, TautClass::ds(0));
    CHECK(d.lambda().is_zero());
    CHECK(d.coefficient(MarkSet::full(12)) == Rational(11));
    CHECK(d.boundary_coeffs().size() == (1u << 12) - 1 - 12);
}

TEST_CASE("delta_irr is 12 lambda everywhere") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m < n; ++m) {
            Space sp(n, m);
            CHECK(expand(sp, TautClass::delta_irr()) == Rational(12) * DivisorClass::lambda_class(sp));
        }
}

TEST_CASE("add and scale") {
    Space sp(2, 0);
    DivisorClass l = DivisorClass::lambda_class(sp);
    CHECK((l + Rational(-1) * l).is_zero());
    DivisorClass d = expand(sp, TautClass::psi()) - expand(sp, TautClass::delta0());
    DivisorClass expect = Rational(2) * l;
    expect.set(MarkSet::of({1, 2}), 1);
    CHECK(d == expect);
    CHECK(scale(expand(sp, TautClass::delta_irr()), Rational(1, 12)) == l);
    CHECK_THROWS_AS(add(l, DivisorClass::lambda_class(Space(3, 0))), Error);
}

TEST_CASE("zero coefficients are pruned") {
    Space sp(4, 0);
    DivisorClass d(sp);
    d.set(MarkSet::of({1, 2}), 3);
    d.add_to(MarkSet::of({1, 2}), -3);
    CHECK(d.boundary_coeffs().empty());
    CHECK(d == DivisorClass(sp));
}

TEST_CASE("keys outside the basis are rejected") {
    Space sp(5, 2);
    DivisorClass d(sp);
    CHECK_THROWS_AS(d.set(MarkSet::of({1, 2, 3, 4}), 1), Error);
    CHECK_THROWS_AS(d.set(MarkSet::of({1}), 1), Error);
    CHECK_THROWS_AS(expand(sp, TautClass::delta0S(MarkSet::of({1, 2, 3, 4}))), Error);
    CHECK_THROWS_AS(expand(sp, TautClass::psi_i(6)), Error);
    CHECK_THROWS_AS(expand(sp, TautClass::psi_i(0)), Error);
}

TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(Space(3, 1)) == std::vector<std::string>{"lambda", "delta_{1,2}", "delta_{1,3}", "delta_{2,3}"});
    CHECK(enumerate_basis(Space(3, 2)) == std::vector<std::string>{"lambda"});
    CHECK(enumerate_basis(Space(2, 0)) == std::vector<std::string>{"lambda", "delta_{1,2}"});
    for (int n = 1; n <= 9; ++n)
        for (int m = 0; m < n; ++m) CHECK(enumerate_basis(Space(n, m)).size() == Space(n, m).basis_size());
}

TEST_CASE("space bounds") {
    CHECK_THROWS_AS(Space(3, 3), Error);
    CHECK_THROWS_AS(Space(0, 0), Error);
    CHECK_THROWS_AS(Space(63, 0), Error);
    CHECK_NOTHROW(Space(62, 61));
    try {
        boundary_basis(Space(17, 0));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EnumerationCap);
    }
    CHECK(boundary_basis(Space(17, 15), EnumLimits{17}).size() == 136);
}

TEST_CASE("class names parse and print") {
    for (std::string t : {"lambda", "delta_irr", "delta0", "delta", "psi", "K", "psi_3", "delta0_1,2", "D(11/2)"})
        CHECK(TautClass::parse(t).to_string() == t);
    CHECK_THROWS_AS(TautClass::parse("phi"), Error);
}

TEST_CASE("relations hold for every n <= 10") {
    ExpandOptions stack;
    stack.canonical = CanonicalConvention::Stack;
    for (int n = 1; n <= 10; ++n) {
        Space full(n, 0);
        for (int m = 0; m < n; ++m) {
            Space sp(n, m);
            DivisorClass psi_sum(sp);
            for (int i = 1; i <= n; ++i) {
                DivisorClass rel = expand(sp, TautClass::psi_i(i)) - expand(sp, TautClass::lambda());
                for (MarkSet s : boundary_basis(sp))
                    if (s.contains(i)) rel -= expand(sp, TautClass::delta0S(s));
                CHECK(rel.is_zero());
                psi_sum += expand(sp, TautClass::psi_i(i));
            }
            CHECK(psi_sum == expand(sp, TautClass::psi()));

            DivisorClass k = Rational(13) * expand(sp, TautClass::lambda()) - Rational(2) * expand(sp, TautClass::delta()) +
                             expand(sp, TautClass::psi());
            DivisorClass expect = sum_over(sp, 2, n - m, [](MarkSet s) { return Rational(s.size() - 2); });
            expect.set_lambda(n - 11);
            CHECK(k == expect);
            CHECK(expand(sp, TautClass::canonical(), stack) == expect);
            DivisorClass coarse = expect;
            if (m == 0 && n >= 2) coarse.add_to(MarkSet::full(n), -1);
            CHECK(expand(sp, TautClass::canonical()) == coarse);

            // truncation of the Mbar expansion
            for (TautClass t : {TautClass::psi(), TautClass::delta(), TautClass::ds(Rational(7, 3)), TautClass::psi_i(1)}) {
                DivisorClass big = expand(full, t, stack);
                DivisorClass cut(sp);
                cut.set_lambda(big.lambda());
                for (const auto& [s, c] : big.boundary_coeffs())
                    if (sp.in_basis(s)) cut.set(s, c);
                CHECK(expand(sp, t, stack) == cut);
            }
        }
    }
}
