#include <doctest.h>

#include <complex>
#include <random>

#include "qaw/qseries.hpp"

using namespace qaw;

TEST_CASE("q-shifted factorial basics") {
    Rat q = make_rat(1, 2);
    CHECK(qpoch(make_rat(2, 3), q, 0) == Rat(1));
    CHECK(qpoch(make_rat(2, 3), q, 1) == make_rat(1, 3));
    // (q;q)_2 at q=1/2: (1-1/2)(1-1/4)
    CHECK(qpoch(q, q, 2) == make_rat(3, 8));
}

TEST_CASE("splitting identity (a;q)_{j+k} = (a;q)_j (a q^j; q)_k") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> small(0, 6), num(-4, 4), den(1, 5);
    for (int i = 0; i < 40; ++i) {
        Rat a = make_rat(num(rng), den(rng));
        Rat q = make_rat(1 + small(rng) % 5, 7);
        int j = small(rng), k = small(rng);
        CHECK(qpoch(a, q, j + k) == qpoch(a, q, j) * qpoch(Rat(a * rat_pow(q, j)), q, k));
    }
}

TEST_CASE("infinite product") {
    CHECK(qpoch_inf(0.0, 0.5) == 1.0);
    // (1/2; 1/2)_inf, frozen from a 200-factor long-double product
    CHECK(qpoch_inf(0.5, 0.5) == doctest::Approx(0.2887880950866024).epsilon(1e-12));
    CHECK_THROWS_AS(qpoch_inf(0.5, 1.5), std::domain_error);
}

TEST_CASE("terminating phi sums") {
    Rat q = make_rat(1, 2);
    // an upper parameter equal to 1 = q^0 kills everything past k=0
    CHECK(phi<Rat>({Rat(1), make_rat(1, 3)}, {make_rat(1, 5)}, q, q) == Rat(1));
    // 2phi1(q^-1, b; c; q, q) = 1 + q (1-q^-1)(1-b) / ((1-q)(1-c))
    Rat b = make_rat(1, 3), c = make_rat(1, 5);
    Rat expect = Rat(1) + q * (Rat(1) - Rat(1) / q) * (Rat(1) - b) / ((Rat(1) - q) * (Rat(1) - c));
    CHECK(phi<Rat>({Rat(1) / q, b}, {c}, q, q) == expect);
}

TEST_CASE("phi with zero upper parameters and z = 0") {
    Rat q = make_rat(1, 2);
    CHECK(phi<Rat>({Rat(0), Rat(0)}, {make_rat(1, 3)}, q, Rat(0), {.max_terms = 10}) == Rat(1));
}

TEST_CASE("phi pole and non-termination errors") {
    Rat q = make_rat(1, 2);
    // lower parameter q^-1 vanishes at k = 2 before the q^-3 upper terminates
    CHECK_THROWS_AS(phi<Rat>({rat_pow(q, -3)}, {rat_pow(q, -1)}, q, q), pole_error);
    CHECK_THROWS_AS(phi<Rat>({make_rat(1, 3)}, {make_rat(1, 5)}, q, q), unsupported_mode);
}

TEST_CASE("exact and float phi agree after substitution") {
    Rat q = make_rat(2, 3);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-3, 3), den(2, 5), deg(0, 5);
    for (int i = 0; i < 25; ++i) {
        int n = deg(rng);
        Rat a2 = make_rat(num(rng), den(rng)), b1 = make_rat(num(rng), den(rng));
        Rat exact;
        double fl;
        try {
            exact = phi<Rat>({rat_pow(q, -n), a2}, {b1}, q, q);
            // float parameters are inexact, so the termination scan may miss;
            // cap the term count instead
            fl = phi<double>({std::pow(rat_to_double(q), -n), rat_to_double(a2)},
                             {rat_to_double(b1)}, rat_to_double(q), rat_to_double(q),
                             {.max_terms = n + 30});
        } catch (const pole_error&) {
            continue;
        }
        CHECK(rat_to_double(exact) == doctest::Approx(fl).epsilon(1e-12));
    }
}

TEST_CASE("phi handles complex arguments") {
    using C = std::complex<double>;
    C q{0.5, 0.0}, a{0.3, 0.4};
    C val = phi<C>({C{4.0, 0.0}, a}, {C{0.2, 0.0}}, q, C{0.1, 0.0}, {.max_terms = 40});
    CHECK(std::isfinite(val.real()));
}
