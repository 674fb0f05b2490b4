#include "qaw/repr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qaw/polyfam.hpp"
#include "qaw/qseries.hpp"

namespace qaw {

namespace {

std::string dstr(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// pi of a normal-form monomial maps e_n to a single scaled basis vector
struct MonoEntry {
    int row = -1;  // -1: column annihilated or truncated away
    double value = 0.0;
};

MonoEntry pi_mono_column(const NCMonomial& m, int n, double q, int N) {
    double diag = ((m.b % 2) ? -1.0 : 1.0) * std::pow(q, m.b + (m.b + m.c) * n);
    if (m.ad >= 0) {
        if (n - m.ad < 0) return {-1, 0.0};  // annihilated: exact zero column segment
        double w = 1.0;
        for (int j = 0; j < m.ad; ++j) w *= 1.0 - std::pow(q, 2 * (n - j));
        return {n - m.ad, diag * std::sqrt(w)};
    }
    int d = -m.ad;
    if (n + d > N - 1) return {-1, 0.0};  // truncated
    double w = 1.0;
    for (int j = 1; j <= d; ++j) w *= 1.0 - std::pow(q, 2 * n + 2 * j);
    return {n + d, diag * std::sqrt(w)};
}

}  // namespace

std::vector<cplx> TruncatedOperator::apply(const std::vector<cplx>& v) const {
    std::vector<cplx> out(dim_, cplx{0.0, 0.0});
    for (int i = 0; i < dim_; ++i) {
        cplx acc{0.0, 0.0};
        const cplx* row = a_.data() + static_cast<std::size_t>(i) * dim_;
        for (int j = 0; j < dim_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<cplx> TruncatedOperator::column(int j) const {
    std::vector<cplx> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = at(i, j);
    return out;
}

TruncatedOperator TruncatedOperator::scaled(cplx f) const {
    TruncatedOperator r = *this;
    for (auto& x : r.a_) x *= f;
    return r;
}

TruncatedOperator operator*(const TruncatedOperator& x, const TruncatedOperator& y) {
    // column j of xy = x (column j of y): needs column j of y exact and the
    // columns of x it reaches (up to j + bandwidth(y)) exact as well
    TruncatedOperator r(x.dim_, std::min(x.dim_, x.bandwidth_ + y.bandwidth_),
                        std::min(y.exact_cols_, x.exact_cols_ - y.bandwidth_));
    int n = x.dim_;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            cplx f = x.at(i, k);
            if (f == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += f * y.at(k, j);
        }
    return r;
}

TruncatedOperator operator+(const TruncatedOperator& x, const TruncatedOperator& y) {
    TruncatedOperator r = x;
    r.bandwidth_ = std::max(x.bandwidth_, y.bandwidth_);
    r.exact_cols_ = std::min(x.exact_cols_, y.exact_cols_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
}

TruncatedOperator pi_matrix(const NCElement& x, const ReprPoint& pt, int N) {
    int bw = x.max_shift();
    TruncatedOperator M(N, bw, N - bw);
    double v0 = std::sqrt(pt.q);
    for (auto& [mono, coef] : x.terms()) {
        cplx c = sym::eval(coef, v0, pt.s, pt.t);
        for (int n = 0; n < N; ++n) {
            MonoEntry e = pi_mono_column(mono, n, pt.q, N);
            if (e.row >= 0) M.at(e.row, n) += c * e.value;
        }
    }
    return M;
}

TruncatedOperator pi_matrix(const BElement& b, const ReprPoint& pt, int N, bool apply_D) {
    double v0 = std::sqrt(pt.q);
    cplx cn = sym::eval(b.cn_num, v0, pt.s, pt.t);
    double cnden = sym::eval(b.cn_den, v0, pt.s, pt.t).real();
    cplx denom = sym::eval(b.denom, v0, pt.s, pt.t);
    cplx factor = cn / (std::sqrt(cnden) * denom);
    const NCElement body = apply_D ? nc_D(b.body) : b.body;
    return pi_matrix(body, pt, N).scaled(factor);
}

// ---------------------------------------------------------------------------

SpectralGrid SpectralGrid::shifted(int k) const {
    return {q, s2 * rat_pow(q, 2 * k), s * std::pow(rat_to_double(q), k)};
}

Rat ladder_value(const EigLabel& label, const SpectralGrid& grid) {
    Rat p = rat_pow(grid.q, 2 * label.index);
    return label.ladder == Ladder::negative ? Rat(-p) : Rat(grid.s2 * p);
}

std::optional<EigLabel> classify_eigenvalue(const Rat& lam, const SpectralGrid& grid) {
    if (lam == 0) return std::nullopt;
    Rat q2 = grid.q * grid.q;
    Rat x = lam < 0 ? Rat(-lam) : Rat(lam / grid.s2);
    Ladder lad = lam < 0 ? Ladder::negative : Ladder::positive;
    Rat p(1);
    for (int n = 0; n < 100000; ++n) {
        if (x == p) return EigLabel{lad, n};
        if (x > p) return std::nullopt;
        p *= q2;
    }
    return std::nullopt;
}

namespace {

// exact sqrt-free coefficients r_n of the eigenvector recurrence
std::vector<Rat> eig_r(const Rat& lam, const Rat& q, const Rat& s2, int N) {
    std::vector<Rat> r;
    r.reserve(N);
    r.emplace_back(1);
    Rat q2 = q * q;
    Rat qn(1), qn_prev = Rat(1) / q, q2n(1);  // q^n, q^{n-1}, q^{2n}
    for (int n = 0; n + 1 < N; ++n) {
        Rat rhs = (lam + q2n * (Rat(1) - s2)) * r[n];
        if (n >= 1) rhs -= qn_prev * (Rat(1) - q2n) * r[n - 1];
        r.push_back(rhs / (qn * s2));
        qn_prev = qn;
        qn *= q;
        q2n *= q2;
    }
    return r;
}

}  // namespace

EigVec eigvec(const EigLabel& label, const SpectralGrid& grid, int N) {
    EigVec v;
    v.label = label;
    v.lam = ladder_value(label, grid);
    std::vector<Rat> r = eig_r(v.lam, grid.q, grid.s2, N);
    v.coeffs.resize(N);
    double q0 = rat_to_double(grid.q);
    double poch = 1.0, sn = 1.0;
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int n = 0; n < N; ++n) {
        if (n >= 1) {
            poch *= 1.0 - std::pow(q0, 2 * n);
            sn *= grid.s;
        }
        v.coeffs[n] = ipow[n % 4] * (sn * rat_to_double(r[n]) / std::sqrt(poch));
    }
    return v;
}

EigVec eigvec_at(const Rat& lam, const SpectralGrid& grid, int N) {
    auto label = classify_eigenvalue(lam, grid);
    if (!label)
        throw spectrum_error("eigvec_at: " + rat_str(lam) +
                             " is not on the ladders -q^{2n}, q^{2 sigma + 2n}");
    return eigvec(*label, grid, N);
}

double eigvec_norm_sq(const EigLabel& label, const SpectralGrid& grid) {
    // |p_n|^2 = s^{2n} r_n^2 / (q^2;q^2)_n is rational; the terms are positive
    // so float accumulation of exactly-computed terms is safe
    Rat lam = ladder_value(label, grid);
    const int cap = 400;
    std::vector<Rat> r = eig_r(lam, grid.q, grid.s2, cap);
    Rat q2 = grid.q * grid.q;
    Rat poch(1), s2n(1), q2n(1);
    double total = 0.0;
    for (int n = 0; n < cap; ++n) {
        if (n >= 1) {
            q2n *= q2;
            poch *= Rat(1) - q2n;
            s2n *= grid.s2;
        }
        double term = rat_to_double(s2n * r[n] * r[n] / poch);
        total += term;
        if (n > 8 && term < 1e-26 * total) break;
    }
    return total;
}

double eigvec_norm_sq_formula(const EigLabel& label, const SpectralGrid& grid) {
    double q0 = rat_to_double(grid.q), q2 = q0 * q0, s2 = rat_to_double(grid.s2);
    int n = label.index;
    if (label.ladder == Ladder::negative)
        return std::pow(q0, -2 * n) * qpoch(q2, q2, n) * qpoch(-q2 / s2, q2, n) *
               qpoch_inf(-s2, q2);
    return std::pow(q0, -2 * n) * qpoch(q2, q2, n) * qpoch(-q2 * s2, q2, n) *
           qpoch_inf(-1.0 / s2, q2);
}

// ---------------------------------------------------------------------------

VerificationReport spectrum_check(const SpectralGrid& grid, int N, int n_max, double tol) {
    double q0 = rat_to_double(grid.q), s2 = rat_to_double(grid.s2);
    // real symmetric form of pi(rho_{inf,sigma}) under e_n -> i^n e_n
    Eigen::VectorXd diag(N), off(N - 1);
    for (int n = 0; n < N; ++n) diag[n] = -std::pow(q0, 2 * n) * (1.0 - s2);
    for (int n = 0; n + 1 < N; ++n)
        off[n] = grid.s * std::pow(q0, n) * std::sqrt(1.0 - std::pow(q0, 2 * n + 2));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + N);

    std::vector<bool> used(eigs.size(), false);
    double worst = 0.0;
    std::string worst_id;
    for (Ladder lad : {Ladder::negative, Ladder::positive})
        for (int n = 0; n <= n_max; ++n) {
            double target = rat_to_double(ladder_value({lad, n}, grid));
            int best = -1;
            double bd = 1e300;
            for (std::size_t i = 0; i < eigs.size(); ++i) {
                if (used[i]) continue;
                double d = std::abs(eigs[i] - target);
                if (d < bd) {
                    bd = d;
                    best = static_cast<int>(i);
                }
            }
            if (best >= 0) used[best] = true;
            if (bd > worst) {
                worst = bd;
                worst_id = (lad == Ladder::negative ? "-q^" : "q^{2s}+q^") + std::to_string(2 * n);
            }
        }
    VerificationReport rep;
    rep.id = "spectral-ladders";
    rep.params = {{"q", rat_str(grid.q)}, {"s2", rat_str(grid.s2)}, {"N", std::to_string(N)},
                  {"n_max", std::to_string(n_max)}};
    rep.mode = "float";
    rep.residual = worst;
    rep.pass = worst <= tol;
    rep.notes = rep.pass ? "" : "worst ladder point " + worst_id;
    return rep;
}

VerificationReport norm_check(const EigLabel& label, const SpectralGrid& grid, double tol) {
    double sum = eigvec_norm_sq(label, grid);
    double formula = eigvec_norm_sq_formula(label, grid);
    double resid = std::abs(sum - formula) / std::max(1.0, std::abs(formula));
    VerificationReport rep;
    rep.id = "eigenvector-norm";
    rep.params = {{"ladder", label.ladder == Ladder::negative ? "-" : "+"},
                  {"n", std::to_string(label.index)},
                  {"q", rat_str(grid.q)},
                  {"s2", rat_str(grid.s2)}};
    rep.mode = "float";
    rep.residual = resid;
    rep.pass = resid <= tol;
    return rep;
}

namespace {

std::vector<cplx> zero_vec(int N) { return std::vector<cplx>(N, cplx{0.0, 0.0}); }

// v_{lam'} in the target grid, or the zero vector when lam' is outside the
// spectrum (v_lam = 0 off the ladders by convention)
std::vector<cplx> target_vector(const Rat& lam, const SpectralGrid& grid, int N) {
    auto label = classify_eigenvalue(lam, grid);
    if (!label) return zero_vec(N);
    return eigvec(*label, grid, N).coeffs;
}

double compare_on_exact(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs,
                        int exact_coords) {
    double worst = 0.0;
    for (int i = 0; i < exact_coords; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    return worst;
}

}  // namespace

VerificationReport action_check_minor(Gen g, ActionFamily family, const EigLabel& label,
                                      const SpectralGrid& grid, int N, double tol) {
    double q0 = rat_to_double(grid.q);
    double rq = std::sqrt(q0);
    Rat lam = ladder_value(label, grid);
    double lamf = rat_to_double(lam);
    double s2f = rat_to_double(grid.s2);
    const cplx I{0.0, 1.0};

    ParamIndex inf = ParamIndex::infinite(), self{};
    NCElement op = family == ActionFamily::sigma_side ? build_minor(g, inf, self)
                                                      : build_minor(g, self, inf);
    ReprPoint pt{q0, family == ActionFamily::sigma_side ? grid.s : 1.0,
                 family == ActionFamily::tau_side ? grid.s : 1.0};

    cplx scalar;
    Rat target_lam;
    int grid_shift;
    switch (g) {
        case Gen::alpha:
            scalar = I * rq / grid.s * (1.0 + lamf);
            target_lam = lam / (grid.q * grid.q);
            grid_shift = -1;
            break;
        case Gen::beta:
            scalar = family == ActionFamily::sigma_side ? I * rq * (s2f - lamf) : I * rq;
            target_lam = lam;
            grid_shift = family == ActionFamily::sigma_side ? 1 : -1;
            break;
        case Gen::gamma:
            scalar = family == ActionFamily::sigma_side ? I * rq : I * rq * (s2f - lamf);
            target_lam = lam;
            grid_shift = family == ActionFamily::sigma_side ? -1 : 1;
            break;
        case Gen::delta:
            scalar = -I * rq * grid.s;
            target_lam = lam * grid.q * grid.q;
            grid_shift = 1;
            break;
    }

    EigVec v = eigvec(label, grid, N);
    std::vector<cplx> lhs = pi_matrix(op, pt, N).apply(v.coeffs);
    std::vector<cplx> tgt = target_vector(target_lam, grid.shifted(grid_shift), N);
    for (auto& x : tgt) x *= scalar;
    double resid = compare_on_exact(lhs, tgt, N - 1);

    VerificationReport rep;
    const char* names[] = {"alpha", "beta", "gamma", "delta"};
    rep.id = std::string("action-") + names[static_cast<int>(g)] +
             (family == ActionFamily::sigma_side ? "-sigma" : "-tau");
    rep.params = {{"ladder", label.ladder == Ladder::negative ? "-" : "+"},
                  {"n", std::to_string(label.index)},
                  {"q", rat_str(grid.q)},
                  {"s2", rat_str(grid.s2)},
                  {"N", std::to_string(N)}};
    rep.mode = "float";
    rep.residual = resid;
    rep.pass = resid <= tol;
    return rep;
}

VerificationReport action_check_b(int l, int index, ActionFamily family, const EigLabel& label,
                                  const SpectralGrid& grid, int N, double tol) {
    int n = std::abs(index);
    if (n > l) throw unsupported_index("action_check_b: |index| must be <= l");
    double q0 = rat_to_double(grid.q), q2 = q0 * q0;
    double s2f = rat_to_double(grid.s2), sf = grid.s;
    Rat lam = ladder_value(label, grid);
    double lamf = rat_to_double(lam);

    BElement b = family == ActionFamily::sigma_side
                     ? build_b(l, index, 0, BFamily::sigma_side)
                     : build_b(l, 0, index, BFamily::tau_side);
    ReprPoint pt{q0, family == ActionFamily::sigma_side ? sf : 1.0,
                 family == ActionFamily::tau_side ? sf : 1.0};
    TruncatedOperator M = pi_matrix(b, pt, N, /*apply_D=*/family == ActionFamily::tau_side);

    // C_n as a float, from the factored exact parts
    double v0 = std::sqrt(q0);
    double cn = sym::eval(b.cn_num, v0, pt.s, pt.t).real() /
                std::sqrt(sym::eval(b.cn_den, v0, pt.s, pt.t).real());

    double scalar;
    Rat target_lam;
    if (index >= 0) {
        double P = big_qjacobi_value<double>(l - n, n, n, lamf, s2f, 1.0, q2);
        double power = family == ActionFamily::sigma_side ? std::pow(sf, n)
                                                          : std::pow(sf * q0, n);
        scalar = cn * power * P;
        target_lam = lam * rat_pow(grid.q, 2 * n);
    } else {
        double P = big_qjacobi_value<double>(l - n, n, n, lamf / std::pow(q0, 2 * n), s2f, 1.0, q2);
        double poch = qpoch(-lamf, 1.0 / q2, n) * qpoch(lamf / s2f, 1.0 / q2, n);
        double power = family == ActionFamily::sigma_side ? std::pow(sf / q0, n)
                                                          : std::pow(sf / q2, n);
        scalar = ((n % 2) ? -1.0 : 1.0) * cn * power * poch * P;
        target_lam = lam * rat_pow(grid.q, -2 * n);
    }

    EigVec v = eigvec(label, grid, N);
    std::vector<cplx> lhs = M.apply(v.coeffs);
    std::vector<cplx> tgt = target_vector(target_lam, grid, N);
    for (auto& x : tgt) x *= scalar;
    double scale = 0.0;
    for (auto& x : lhs) scale = std::max(scale, std::abs(x));
    double resid = compare_on_exact(lhs, tgt, N - 2 * l - 1) / std::max(1.0, scale);

    VerificationReport rep;
    rep.id = "action-matrix-element";
    rep.params = {{"l", std::to_string(l)},
                  {"index", std::to_string(index)},
                  {"family", family == ActionFamily::sigma_side ? "sigma" : "tau"},
                  {"ladder", label.ladder == Ladder::negative ? "-" : "+"},
                  {"n", std::to_string(label.index)},
                  {"q", rat_str(grid.q)},
                  {"N", std::to_string(N)}};
    rep.mode = "float";
    rep.residual = resid;
    rep.pass = resid <= tol;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct PreparedTensor {
    std::vector<std::pair<std::pair<NCMonomial, NCMonomial>, cplx>> terms;
};

PreparedTensor prepare(const TensorElement& t, double q0, double sf, double tf) {
    PreparedTensor p;
    double v0 = std::sqrt(q0);
    p.terms.reserve(t.terms().size());
    for (auto& [key, coef] : t.terms()) p.terms.push_back({key, sym::eval(coef, v0, sf, tf)});
    return p;
}

// z = T (u (x) w) accumulated on an N x N grid (row-major, left leg major)
std::vector<cplx> apply_tensor(const PreparedTensor& T, const std::vector<cplx>& u,
                               const std::vector<cplx>& w, double q0, int N) {
    std::vector<cplx> z(static_cast<std::size_t>(N) * N, cplx{0.0, 0.0});
    std::vector<cplx> lu(N), rw(N);
    for (auto& [key, c] : T.terms) {
        std::fill(lu.begin(), lu.end(), cplx{0.0, 0.0});
        std::fill(rw.begin(), rw.end(), cplx{0.0, 0.0});
        for (int j = 0; j < N; ++j) {
            MonoEntry e = pi_mono_column(key.first, j, q0, N);
            if (e.row >= 0) lu[e.row] += e.value * u[j];
        }
        for (int k = 0; k < N; ++k) {
            MonoEntry e = pi_mono_column(key.second, k, q0, N);
            if (e.row >= 0) rw[e.row] += e.value * w[k];
        }
        for (int a = 0; a < N; ++a) {
            cplx f = c * lu[a];
            if (f == cplx{0.0, 0.0}) continue;
            cplx* row = z.data() + static_cast<std::size_t>(a) * N;
            for (int bcol = 0; bcol < N; ++bcol) row[bcol] += f * rw[bcol];
        }
    }
    return z;
}

cplx tensor_dot(const std::vector<cplx>& u, const std::vector<cplx>& w,
                const std::vector<cplx>& z, int N) {
    cplx acc{0.0, 0.0};
    for (int a = 0; a < N; ++a) {
        cplx cu = std::conj(u[a]);
        if (cu == cplx{0.0, 0.0}) continue;
        const cplx* row = z.data() + static_cast<std::size_t>(a) * N;
        for (int b = 0; b < N; ++b) acc += cu * std::conj(w[b]) * row[b];
    }
    return acc;
}

}  // namespace

VerificationReport tensor_rho_action(int m, int p, const SpectralGrid& tau_grid,
                                     const SpectralGrid& sigma_grid, int N, double tol) {
    double q0 = rat_to_double(tau_grid.q);
    double tf = tau_grid.s, sf = sigma_grid.s;
    double t2f = rat_to_double(tau_grid.s2), s2f = rat_to_double(sigma_grid.s2);

    TensorElement T = nc_delta(build_rho(ParamIndex{}, ParamIndex{}));
    PreparedTensor PT = prepare(T, q0, sf, tf);

    auto uvec = [&](int k) {  // v_{-q^{2k}}(q^tau) (x) v_{-q^{2k+2p}}(q^sigma)
        return std::pair{eigvec({Ladder::negative, k}, tau_grid, N).coeffs,
                         eigvec({Ladder::negative, k + p}, sigma_grid, N).coeffs};
    };
    auto norm_sq = [&](int k) {
        return eigvec_norm_sq({Ladder::negative, k}, tau_grid) *
               eigvec_norm_sq({Ladder::negative, k + p}, sigma_grid);
    };

    auto [u_m, w_m] = uvec(m);
    std::vector<cplx> z = apply_tensor(PT, u_m, w_m, q0, N);
    for (auto& x : z) x *= 2.0;

    double nm = norm_sq(m), nup = norm_sq(m + 1);
    auto [u_up, w_up] = uvec(m + 1);
    cplx A = tensor_dot(u_up, w_up, z, N) / nup;
    cplx B = tensor_dot(u_m, w_m, z, N) / nm;
    cplx C{0.0, 0.0};
    double ndn = 1.0;
    std::vector<cplx> u_dn, w_dn;
    if (m >= 1) {
        ndn = norm_sq(m - 1);
        std::tie(u_dn, w_dn) = uvec(m - 1);
        C = tensor_dot(u_dn, w_dn, z, N) / ndn;
    }

    // printed coefficients on the normalized vectors w_k = u_k / ||u_k||
    double a_m = std::sqrt((1.0 - std::pow(q0, 2 * m + 2)) * (1.0 - std::pow(q0, 2 * m + 2 * p + 2)) *
                           (1.0 + std::pow(q0, 2 * m + 2) / t2f) *
                           (1.0 + std::pow(q0, 2 * m + 2 * p + 2) / s2f));
    double b_m = std::pow(q0, 2 * m) *
                 (std::pow(q0, 1 + 2 * p) / sf * (tf - 1.0 / tf) + q0 / tf * (sf - 1.0 / sf) +
                  std::pow(q0, 2 * m + 2 * p + 1) / (sf * tf) * (1.0 + q0 * q0));
    double a_m1 = 0.0;
    if (m >= 1)
        a_m1 = std::sqrt((1.0 - std::pow(q0, 2 * m)) * (1.0 - std::pow(q0, 2 * m + 2 * p)) *
                         (1.0 + std::pow(q0, 2 * m) / t2f) *
                         (1.0 + std::pow(q0, 2 * m + 2 * p) / s2f));

    double g_m = 1.0 / std::sqrt(nm);
    double resid = std::abs(A * g_m * std::sqrt(nup) - a_m);
    resid = std::max(resid, std::abs(B - b_m));
    if (m >= 1) resid = std::max(resid, std::abs(C * g_m * std::sqrt(ndn) - a_m1));

    // subspace invariance: z minus its projection onto u_{m-1}, u_m, u_{m+1}
    {
        std::vector<cplx> proj(z.size(), cplx{0.0, 0.0});
        auto axpy_outer = [&](cplx f, const std::vector<cplx>& a, const std::vector<cplx>& b) {
            for (int i = 0; i < N; ++i) {
                cplx fa = f * a[i];
                if (fa == cplx{0.0, 0.0}) continue;
                cplx* row = proj.data() + static_cast<std::size_t>(i) * N;
                for (int j = 0; j < N; ++j) row[j] += fa * b[j];
            }
        };
        axpy_outer(A, u_up, w_up);
        axpy_outer(B, u_m, w_m);
        if (m >= 1) axpy_outer(C, u_dn, w_dn);
        double off = 0.0, scale = 0.0;
        int safe = N - 3;  // degree-2 legs keep these coordinates exact
        for (int i = 0; i < safe; ++i)
            for (int j = 0; j < safe; ++j) {
                std::size_t k = static_cast<std::size_t>(i) * N + j;
                off = std::max(off, std::abs(z[k] - proj[k]));
                scale = std::max(scale, std::abs(z[k]));
            }
        resid = std::max(resid, off / std::max(1.0, scale));
    }

    VerificationReport rep;
    rep.id = "tensor-three-term";
    rep.params = {{"m", std::to_string(m)},     {"p", std::to_string(p)},
                  {"q", rat_str(tau_grid.q)},   {"t2", rat_str(tau_grid.s2)},
                  {"s2", rat_str(sigma_grid.s2)}, {"N", std::to_string(N)}};
    rep.mode = "float";
    rep.residual = resid;
    rep.pass = resid <= tol;
    return rep;
}

VerificationReport abstract_addition_check(int l, const SpectralGrid& tau_grid,
                                           const SpectralGrid& sigma_grid, int N, double tol) {
    double q0 = rat_to_double(tau_grid.q);
    double sf = sigma_grid.s, tf = tau_grid.s;
    ReprPoint pt{q0, sf, tf};

    // LHS: coefficients of p_l^{(0,0)}(x; q^tau, q^sigma | q^2) scaled by
    // q^{-l} (q^{2l+2}; q^2)_l^{-1}, applied to powers of Delta(rho_{tau,sigma})
    double q2 = q0 * q0;
    UniPoly<double> poly = pjacobi<double>(l, 0, 0, tf, sf, q2, q0)
                               .scaled(std::pow(q0, -l) / qpoch(std::pow(q0, 2 * l + 2), q2, l));
    TensorElement T = nc_delta(build_rho(ParamIndex{}, ParamIndex{}));
    std::vector<PreparedTensor> Tpow;
    {
        TensorElement acc = TensorElement::unit();
        for (int k = 0; k <= l; ++k) {
            Tpow.push_back(prepare(acc, q0, sf, tf));
            if (k < l) acc = acc * T;
        }
    }

    // RHS legs
    std::vector<TruncatedOperator> left, right;
    for (int n = -l; n <= l; ++n) {
        left.push_back(pi_matrix(build_b(l, 0, n, BFamily::tau_side), pt, N, /*apply_D=*/true));
        right.push_back(pi_matrix(build_b(l, n, 0, BFamily::sigma_side), pt, N, /*apply_D=*/false));
    }

    int J = std::min(12, N - 2 * l - 2);
    double resid = 0.0;
    std::vector<cplx> lhs_col(static_cast<std::size_t>(N) * N), rhs_col(lhs_col.size());
    for (int j = 0; j < J; ++j)
        for (int k = 0; k < J; ++k) {
            std::fill(lhs_col.begin(), lhs_col.end(), cplx{0.0, 0.0});
            for (int d = 0; d <= l; ++d) {
                double cd = poly.coeff(d);
                if (cd == 0.0) continue;
                for (auto& [key, c] : Tpow[d].terms) {
                    MonoEntry el = pi_mono_column(key.first, j, q0, N);
                    MonoEntry er = pi_mono_column(key.second, k, q0, N);
                    if (el.row >= 0 && er.row >= 0)
                        lhs_col[static_cast<std::size_t>(el.row) * N + er.row] +=
                            cd * c * el.value * er.value;
                }
            }
            std::fill(rhs_col.begin(), rhs_col.end(), cplx{0.0, 0.0});
            for (std::size_t idx = 0; idx < left.size(); ++idx) {
                for (int a = 0; a < N; ++a) {
                    cplx la = left[idx].at(a, j);
                    if (la == cplx{0.0, 0.0}) continue;
                    cplx* row = rhs_col.data() + static_cast<std::size_t>(a) * N;
                    for (int bidx = 0; bidx < N; ++bidx) row[bidx] += la * right[idx].at(bidx, k);
                }
            }
            for (std::size_t idx2 = 0; idx2 < lhs_col.size(); ++idx2)
                resid = std::max(resid, std::abs(lhs_col[idx2] - rhs_col[idx2]));
        }

    VerificationReport rep;
    rep.id = "operator-addition-formula";
    rep.params = {{"l", std::to_string(l)},
                  {"q", rat_str(tau_grid.q)},
                  {"t2", rat_str(tau_grid.s2)},
                  {"s2", rat_str(sigma_grid.s2)},
                  {"N", std::to_string(N)},
                  {"columns", std::to_string(J)}};
    rep.mode = "float";
    rep.residual = resid;
    rep.pass = resid <= tol;
    rep.notes = "columnwise max abs difference, " + dstr(resid);
    return rep;
}

}  // namespace qaw
