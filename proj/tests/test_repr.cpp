#include <doctest.h>

#include <random>

#include "qaw/polyfam.hpp"
#include "qaw/repr.hpp"

using namespace qaw;

namespace {

SpectralGrid grid_half(long two_sigma) {  // q = 1/2
    return {make_rat(1, 2), rat_pow(make_rat(1, 2), two_sigma), std::pow(0.5, two_sigma / 2.0)};
}

NCElement random_element(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> nterms(1, 3), deg(0, max_deg), coef(-3, 3), pick(0, 3);
    NCElement r;
    for (int i = 0, k = nterms(rng); i < k; ++i) {
        NCElement w = NCElement::unit();
        for (int j = 0, d = deg(rng); j < d; ++j) {
            switch (pick(rng)) {
                case 0: w = nc_mul(w, nc_gen_alpha()); break;
                case 1: w = nc_mul(w, nc_gen_beta()); break;
                case 2: w = nc_mul(w, nc_gen_gamma()); break;
                default: w = nc_mul(w, nc_gen_delta()); break;
            }
        }
        r += w.scaled(sym::rat(Rat(coef(rng))) + sym::im() * sym::s(pick(rng) - 1));
    }
    return r;
}

double op_dist_on_cols(const TruncatedOperator& A, const TruncatedOperator& B, int cols) {
    double worst = 0.0;
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < A.dim(); ++i) worst = std::max(worst, std::abs(A.at(i, j) - B.at(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("generator matrices realize the representation") {
    ReprPoint pt{0.5, 0.5, 0.25};
    int N = 12;
    TruncatedOperator A = pi_matrix(nc_gen_alpha(), pt, N);
    TruncatedOperator B = pi_matrix(nc_gen_beta(), pt, N);
    TruncatedOperator G = pi_matrix(nc_gen_gamma(), pt, N);
    // pi(gamma) e_n = q^n e_n, pi(alpha) e_0 = 0
    for (int n = 0; n < N; ++n) CHECK(G.at(n, n) == cplx{std::pow(0.5, n), 0.0});
    for (int i = 0; i < N; ++i) CHECK(A.at(i, 0) == cplx{0.0, 0.0});
    // pi(beta) = -q pi(gamma)
    CHECK(op_dist_on_cols(B, G.scaled(-0.5), N) == 0.0);
    // pi(alpha delta - q beta gamma) is the identity on exact columns
    NCElement rel = nc_mul(nc_gen_alpha(), nc_gen_delta()) -
                    nc_mul(nc_gen_beta(), nc_gen_gamma()).scaled(sym::q(1));
    // the relation collapses to the unit in normal form, so every column is exact
    TruncatedOperator R = pi_matrix(rel, pt, N);
    CHECK(R.exact_cols() == N);
    for (int j = 0; j < R.exact_cols(); ++j)
        for (int i = 0; i < N; ++i)
            CHECK(std::abs(R.at(i, j) - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) < 1e-14);
}

TEST_CASE("pi is a *-homomorphism on exact columns") {
    ReprPoint pt{0.5, 0.5, 0.5};
    int N = 20;
    std::mt19937 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        NCElement x = random_element(rng, 2), y = random_element(rng, 2);
        TruncatedOperator XY = pi_matrix(nc_mul(x, y), pt, N);
        TruncatedOperator X = pi_matrix(x, pt, N), Y = pi_matrix(y, pt, N);
        TruncatedOperator prod = X * Y;
        int cols = N - 4;
        CHECK(op_dist_on_cols(XY, prod, cols) < 1e-12);
        // adjoint: pi(x*) = pi(x)^dagger on the interior block
        TruncatedOperator Xs = pi_matrix(nc_star(x), pt, N);
        double worst = 0.0;
        for (int i = 2; i < N - 2; ++i)
            for (int j = 2; j < N - 2; ++j)
                worst = std::max(worst, std::abs(Xs.at(i, j) - std::conj(X.at(j, i))));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("banded columns are independent of the truncation size") {
    ReprPoint pt{0.5, 0.5, 0.25};
    NCElement x = nc_mul(build_rho(ParamIndex::infinite(), ParamIndex{}),
                         build_minor(Gen::delta, ParamIndex::infinite(), ParamIndex{}));
    TruncatedOperator M1 = pi_matrix(x, pt, 30), M2 = pi_matrix(x, pt, 40);
    REQUIRE(M1.exact_cols() == 30 - M1.bandwidth());
    for (int j = 0; j < M1.exact_cols(); ++j)
        for (int i = 0; i < 30; ++i) CHECK(M1.at(i, j) == M2.at(i, j));  // bit for bit
}

TEST_CASE("eigenvalue ladders of the truncated operator") {
    VerificationReport rep = spectrum_check(grid_half(2), 40, 10, 1e-8);
    INFO(rep.notes);
    CHECK(rep.pass);
}

TEST_CASE("eigenvectors: normalization, residual, orthogonality") {
    SpectralGrid g = grid_half(2);
    int N = 50;
    ReprPoint pt{0.5, g.s, 1.0};
    TruncatedOperator R = pi_matrix(build_rho(ParamIndex::infinite(), ParamIndex{}), pt, N);
    std::vector<EigVec> vecs;
    for (Ladder lad : {Ladder::negative, Ladder::positive})
        for (int n = 0; n <= 3; ++n) vecs.push_back(eigvec({lad, n}, g, N));
    for (const EigVec& v : vecs) {
        CHECK(v.coeffs[0] == cplx{1.0, 0.0});
        std::vector<cplx> rv = R.apply(v.coeffs);
        double lam = rat_to_double(v.lam);
        double resid = 0.0;
        for (int i = 0; i + 2 < N; ++i) resid = std::max(resid, std::abs(rv[i] - lam * v.coeffs[i]));
        CHECK(resid < 1e-12);
    }
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            cplx dot{0.0, 0.0};
            for (int k = 0; k < N; ++k) dot += std::conj(vecs[i].coeffs[k]) * vecs[j].coeffs[k];
            double ni = std::sqrt(eigvec_norm_sq(vecs[i].label, g));
            double nj = std::sqrt(eigvec_norm_sq(vecs[j].label, g));
            CHECK(std::abs(dot) < 1e-9 * ni * nj);
        }
}

TEST_CASE("eigenvector norms match the closed form") {
    for (long two_sigma : {1L, 2L, 4L})
        for (const Rat& q : {make_rat(1, 2), make_rat(3, 4)}) {
            SpectralGrid g{q, rat_pow(q, two_sigma), std::pow(rat_to_double(q), two_sigma / 2.0)};
            for (Ladder lad : {Ladder::negative, Ladder::positive})
                for (int n = 0; n <= 8; ++n) {
                    VerificationReport rep = norm_check({lad, n}, g, 1e-10);
                    INFO("two_sigma=", two_sigma, " n=", n);
                    CHECK(rep.pass);
                }
        }
}

TEST_CASE("eigvec_at throws off the spectrum") {
    SpectralGrid g = grid_half(2);
    CHECK(eigvec_at(Rat(-1), g, 12).label.index == 0);
    CHECK_THROWS_AS(eigvec_at(make_rat(1, 3), g, 12), spectrum_error);
    CHECK_THROWS_AS(eigvec_at(Rat(0), g, 12), spectrum_error);
}

TEST_CASE("classify_eigenvalue accepts the ladders and rejects the rest") {
    SpectralGrid g = grid_half(2);
    CHECK(classify_eigenvalue(Rat(-1), g)->index == 0);
    CHECK(classify_eigenvalue(make_rat(-1, 16), g)->index == 2);
    auto pos = classify_eigenvalue(make_rat(1, 16), g);  // q^{2 sigma + 2}
    REQUIRE(pos.has_value());
    CHECK(pos->ladder == Ladder::positive);
    CHECK(pos->index == 1);
    CHECK(!classify_eigenvalue(make_rat(1, 3), g).has_value());
    CHECK(!classify_eigenvalue(make_rat(-1, 3), g).has_value());
    CHECK(!classify_eigenvalue(Rat(-4), g).has_value());
}

TEST_CASE("degree-one element actions on the eigenvector basis") {
    SpectralGrid g = grid_half(2);
    for (ActionFamily fam : {ActionFamily::sigma_side, ActionFamily::tau_side})
        for (Gen gen : {Gen::alpha, Gen::beta, Gen::gamma, Gen::delta})
            for (Ladder lad : {Ladder::negative, Ladder::positive})
                for (int n = 0; n <= 3; ++n) {
                    VerificationReport rep = action_check_minor(gen, fam, {lad, n}, g, 40, 1e-10);
                    INFO(rep.id, " ladder=", static_cast<int>(lad), " n=", n, " resid=",
                         rep.residual);
                    CHECK(rep.pass);
                }
}

TEST_CASE("generalized matrix element actions") {
    SpectralGrid g = grid_half(2);
    for (int l = 1; l <= 2; ++l)
        for (int index : {0, 1, -1, l, -l})
            for (ActionFamily fam : {ActionFamily::sigma_side, ActionFamily::tau_side}) {
                VerificationReport rep = action_check_b(l, index, fam, {Ladder::negative, 2}, g,
                                                        48, 1e-8);
                INFO("l=", l, " index=", index, " resid=", rep.residual);
                CHECK(rep.pass);
            }
    // the positive ladder too
    VerificationReport rep = action_check_b(2, 1, ActionFamily::sigma_side,
                                            {Ladder::positive, 1}, g, 48, 1e-8);
    CHECK(rep.pass);
}

TEST_CASE("tensor recurrence coefficients and subspace invariance") {
    SpectralGrid g = grid_half(2);
    for (int m = 0; m <= 6; ++m)
        for (int p = 0; p <= 2; ++p) {
            VerificationReport rep = tensor_rho_action(m, p, g, g, 48, 1e-9);
            INFO("m=", m, " p=", p, " resid=", rep.residual);
            CHECK(rep.pass);
        }
}

TEST_CASE("normalized tensor basis vectors have unit length") {
    // the closed-form normalization against the converged coefficient sums
    SpectralGrid g = grid_half(2);
    double q0 = 0.5;
    for (int m = 0; m <= 4; ++m)
        for (int p = 0; p <= 2; ++p) {
            double n1 = eigvec_norm_sq({Ladder::negative, m}, g);
            double n2 = eigvec_norm_sq({Ladder::negative, m + p}, g);
            double q2 = q0 * q0, t2 = rat_to_double(g.s2), s2 = t2;
            double radicand = qpoch(q2, q2, m) * qpoch(-q2 / t2, q2, m) * qpoch(q2, q2, m + p) *
                              qpoch(-q2 / s2, q2, m + p) * qpoch_inf(-t2, q2) * qpoch_inf(-s2, q2);
            double wnorm = std::pow(q0, 2 * m + p) * std::sqrt(n1 * n2) / std::sqrt(radicand);
            CHECK(wnorm == doctest::Approx(1.0).epsilon(1e-10));
        }
}

TEST_CASE("operator-level addition formula") {
    SpectralGrid g = grid_half(2);
    for (int l = 0; l <= 2; ++l) {
        VerificationReport rep = abstract_addition_check(l, g, g, 40, l <= 1 ? 1e-8 : 1e-7);
        INFO("l=", l, " resid=", rep.residual);
        CHECK(rep.pass);
    }
}

TEST_CASE("large-sigma behaviour of the normalized eigenvectors") {
    // v_{-q^{2n}} / ||.|| approaches i^n e_n; the positive-ladder vectors flatten
    Rat q = make_rat(1, 2);
    int n = 2, N = 40;
    double prev_dist = 1e9, prev_flat = 1e9;
    for (long sigma : {1L, 2L, 3L}) {
        SpectralGrid g{q, rat_pow(q, 2 * sigma), std::pow(0.5, static_cast<double>(sigma))};
        EigVec v = eigvec({Ladder::negative, n}, g, N);
        double nn = std::sqrt(eigvec_norm_sq({Ladder::negative, n}, g));
        double dist = 0.0;
        cplx in{0, 0};
        switch (n % 4) {
            case 0: in = {1, 0}; break;
            case 1: in = {0, 1}; break;
            case 2: in = {-1, 0}; break;
            case 3: in = {0, -1}; break;
        }
        for (int k = 0; k < N; ++k) {
            cplx target = (k == n) ? in : cplx{0.0, 0.0};
            dist = std::max(dist, std::abs(v.coeffs[k] / nn - target));
        }
        CHECK(dist < prev_dist);
        prev_dist = dist;
        // positive-ladder: the normalized vector's largest coordinate shrinks
        EigVec w = eigvec({Ladder::positive, n}, g, N);
        double wn = std::sqrt(eigvec_norm_sq({Ladder::positive, n}, g));
        double flat = std::abs(w.coeffs[0]) / wn;
        CHECK(flat < prev_flat);
        prev_flat = flat;
    }
}
