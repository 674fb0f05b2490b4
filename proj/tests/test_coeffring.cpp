#include <doctest.h>

#include <random>

#include "qaw/laurent.hpp"

using namespace qaw;

namespace {

// small random Laurent elements for the ring-axiom properties
Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(-3, 3), num(-5, 5), den(1, 4);
    Laurent r;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        GaussianRational c{make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))};
        r += Laurent::monomial(c, {expo(rng), expo(rng), expo(rng)});
    }
    return r;
}

}  // namespace

TEST_CASE("inverse pair and exponent addition") {
    CHECK(sym::s(1) * sym::s(-1) == sym::one());
    CHECK(sym::v(2) * sym::v(2) == Laurent::monomial(GaussianRational(1), {4, 0, 0}));
}

TEST_CASE("difference of squares in s") {
    Laurent lhs = (sym::s(-1) - sym::s(1)) * (sym::s(-1) + sym::s(1));
    CHECK(lhs == sym::s(-2) - sym::s(2));
}

TEST_CASE("substitution fixed points and values") {
    CHECK(sym::substitute(sym::s(-1) - sym::s(1), make_rat(1, 3), Rat(1), Rat(7)).is_zero());
    CHECK(sym::substitute(sym::v(2), make_rat(1, 2), Rat(1), Rat(1)) ==
          GaussianRational(make_rat(1, 4)));
    GaussianRational got =
        sym::substitute(sym::im() * (sym::s(-1) - sym::s(1)), Rat(1), Rat(2), Rat(1));
    CHECK(got == GaussianRational(Rat(0), make_rat(-3, 2)));
}

TEST_CASE("conjugation: i negated, involution") {
    CHECK(sym::im().conj() == -sym::im());
    Laurent x = sym::s(1) + sym::im() * sym::t(1);
    CHECK(x.conj() == sym::s(1) - sym::im() * sym::t(1));
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        Laurent c = random_laurent(rng);
        CHECK(c.conj().conj() == c);
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(23);
    std::array<Rat, 3> vals{make_rat(2, 3), make_rat(5, 4), make_rat(1, 7)};
    for (int i = 0; i < 30; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        CHECK((a * b).substitute(vals) == a.substitute(vals) * b.substitute(vals));
        CHECK((a + b).substitute(vals) == a.substitute(vals) + b.substitute(vals));
    }
}

TEST_CASE("conjugation is a ring involution") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("parameter shift rewrites exponents") {
    // s -> s q: sigma -> sigma + 1
    Laurent x = sym::s(2) * sym::v(1);
    CHECK(sym::shift(x, 0, 1) == Laurent::monomial(GaussianRational(1), {5, 2, 0}));
    CHECK(sym::shift(sym::t(-1), 2, 0) == Laurent::monomial(GaussianRational(1), {-4, 0, -1}));
}

TEST_CASE("SqrtRational arithmetic in Q(sqrt q)") {
    Rat q = make_rat(1, 2);
    SqrtRational v = SqrtRational::root_of(q);
    CHECK(v * v == SqrtRational(q));
    CHECK((v.pow(4)) == SqrtRational(make_rat(1, 4)));
    SqrtRational x = SqrtRational(make_rat(3, 4)) + v;
    CHECK(x * x.inv() == SqrtRational(1));
    CHECK((v.pow(-2)) == SqrtRational(Rat(2)));
    // perfect squares fold into the rational part
    SqrtRational w = SqrtRational::root_of(make_rat(9, 4));
    CHECK(w.is_rational());
    CHECK(w == SqrtRational(make_rat(3, 2)));
    CHECK(v.to_double() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK_THROWS_AS(parse_rat("x"), parse_error);
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
}
