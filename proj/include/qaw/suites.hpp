#pragma once

// Named verification suites over their default parameter grids.  The same
// functions back the command-line runner and the acceptance tests, so the
// grids and tolerances live in exactly one place.

#include <istream>
#include <vector>

#include "qaw/limits.hpp"
#include "qaw/report.hpp"
#include "qaw/verify.hpp"

namespace qaw {

std::vector<AdditionParams> default_addition_grid();
std::vector<AdditionParams> parse_addition_grid_csv(std::istream& in);

std::vector<VerificationReport> run_addition_suite(const std::vector<AdditionParams>& grid,
                                                   int jobs = 0);
std::vector<VerificationReport> run_identity_suite();
std::vector<VerificationReport> run_spectrum_suite();
std::vector<VerificationReport> run_norm_suite();
std::vector<VerificationReport> run_action_suite();
std::vector<VerificationReport> run_matrix_element_action_suite();
std::vector<VerificationReport> run_tensor_suite();
std::vector<VerificationReport> run_abstract_suite();
std::vector<VerificationReport> run_product_suite(int jobs = 0);
std::vector<VerificationReport> run_classical_suite(unsigned seed = 20260808);
std::vector<VerificationReport> run_limit_scan_suite();

std::vector<VerificationReport> run_all_suites(int jobs = 0);

}  // namespace qaw
