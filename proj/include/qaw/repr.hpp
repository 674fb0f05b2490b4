#pragma once

// The infinite-dimensional *-representation of the quantum SU(2) coordinate
// algebra on l^2(Z_+), truncated to N dimensions:
//   pi(alpha) e_n = sqrt(1-q^{2n}) e_{n-1},   pi(beta) e_n  = -q^{n+1} e_n,
//   pi(gamma) e_n = q^n e_n,                  pi(delta) e_n = sqrt(1-q^{2n+2}) e_{n+1},
// with e_{-p} = 0.  Eigenvector bases of pi(rho_{inf,sigma}) and
// pi(rho_{tau,inf}), their actions under the degree-one elements and the
// generalized matrix elements, the tensor-product three-term recurrence and
// the operator-level addition formula.

#include <complex>
#include <optional>
#include <vector>

#include "qaw/ncalg.hpp"
#include "qaw/report.hpp"

namespace qaw {

using cplx = std::complex<double>;

class TruncatedOperator {
  public:
    TruncatedOperator() = default;
    TruncatedOperator(int dim, int bandwidth, int exact_cols)
        : dim_(dim), bandwidth_(bandwidth), exact_cols_(exact_cols),
          a_(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0}) {}

    int dim() const { return dim_; }
    int bandwidth() const { return bandwidth_; }
    int exact_cols() const { return exact_cols_; }

    cplx& at(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
    cplx at(int row, int col) const { return a_[static_cast<std::size_t>(row) * dim_ + col]; }

    std::vector<cplx> apply(const std::vector<cplx>& v) const;
    std::vector<cplx> column(int j) const;
    TruncatedOperator scaled(cplx f) const;
    friend TruncatedOperator operator*(const TruncatedOperator& x, const TruncatedOperator& y);
    friend TruncatedOperator operator+(const TruncatedOperator& x, const TruncatedOperator& y);

  private:
    int dim_ = 0, bandwidth_ = 0, exact_cols_ = 0;
    std::vector<cplx> a_;
};

// numeric realization point: q plus the parameter values q^sigma, q^tau
struct ReprPoint {
    double q = 0.5;
    double s = 0.5;  // q^sigma
    double t = 0.5;  // q^tau
};

TruncatedOperator pi_matrix(const NCElement& x, const ReprPoint& pt, int N);

// pi of a generalized matrix element: (cn_num/sqrt(cn_den)) * pi(body)/denom
TruncatedOperator pi_matrix(const BElement& b, const ReprPoint& pt, int N,
                            bool apply_D = false);

// ---------------------------------------------------------------------------
// Eigenvectors of pi(rho_{inf,sigma}).  The spectrum is the pair of ladders
// lam = -q^{2n} and lam = q^{2 sigma + 2n}; the coefficients are generated by
// the square-root-free exact recurrence
//   q^n s^2 r_{n+1} = (lam + q^{2n}(1 - s^2)) r_n - q^{n-1}(1 - q^{2n}) r_{n-1}
// with p_n = i^n s^n r_n / sqrt((q^2;q^2)_n).  The same machinery serves
// pi(rho_{tau,inf}) with s replaced by q^tau.

enum class Ladder { negative, positive };

struct EigLabel {
    Ladder ladder = Ladder::negative;
    int index = 0;
};

struct SpectralGrid {
    Rat q;      // 0 < q < 1
    Rat s2;     // q^{2 sigma}, exact
    double s;   // q^sigma as a float (used in the coefficient assembly only)
    SpectralGrid shifted(int k) const;  // sigma -> sigma + k
};

Rat ladder_value(const EigLabel& label, const SpectralGrid& grid);

// exact ladder-membership test; nullopt when lam is not an eigenvalue
std::optional<EigLabel> classify_eigenvalue(const Rat& lam, const SpectralGrid& grid);

struct EigVec {
    EigLabel label;
    Rat lam;
    std::vector<cplx> coeffs;  // <v, e_0> = 1
};

EigVec eigvec(const EigLabel& label, const SpectralGrid& grid, int N);

// same, keyed by the eigenvalue itself; throws spectrum_error off the ladders
EigVec eigvec_at(const Rat& lam, const SpectralGrid& grid, int N);

// squared norm from the coefficients (converged partial sum)
double eigvec_norm_sq(const EigLabel& label, const SpectralGrid& grid);
// the closed-form squared norm against which eigvec_norm_sq is verified
double eigvec_norm_sq_formula(const EigLabel& label, const SpectralGrid& grid);

// ---------------------------------------------------------------------------
// Verification entry points (one VerificationReport per check).

// truncated pi(rho_{inf,sigma}) spectrum against the ladders, n <= n_max
VerificationReport spectrum_check(const SpectralGrid& grid, int N, int n_max, double tol);

VerificationReport norm_check(const EigLabel& label, const SpectralGrid& grid, double tol);

// the eight degree-one actions; family selects which limit element acts
enum class ActionFamily { sigma_side, tau_side };  // X_{inf,sigma} vs X_{tau,inf}
VerificationReport action_check_minor(Gen g, ActionFamily family, const EigLabel& label,
                                      const SpectralGrid& grid, int N, double tol);

// generalized-matrix-element actions; index is +-n with 0 <= n <= l
VerificationReport action_check_b(int l, int index, ActionFamily family, const EigLabel& label,
                                  const SpectralGrid& grid, int N, double tol);

// the tensor-product three-term recurrence on w_m = normalized
// v_{-q^{2m}}(q^tau) (x) v_{-q^{2m+2p}}(q^sigma)
VerificationReport tensor_rho_action(int m, int p, const SpectralGrid& tau_grid,
                                     const SpectralGrid& sigma_grid, int N, double tol);

// the operator-level addition formula: (pi x pi) Delta(b^l_{0,0}(tau,sigma))
// against sum_n pi(D.b^l_{0,n}(tau,inf)) (x) pi(b^l_{n,0}(inf,sigma)),
// compared columnwise on the truncation-exact block
VerificationReport abstract_addition_check(int l, const SpectralGrid& tau_grid,
                                           const SpectralGrid& sigma_grid, int N, double tol);

}  // namespace qaw
