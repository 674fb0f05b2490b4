#include "qaw/suites.hpp"

#include <random>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/ncalg.hpp"
#include "qaw/repr.hpp"

namespace qaw {

std::vector<AdditionParams> default_addition_grid() {
    std::vector<AdditionParams> grid;
    const Rat qs[] = {make_rat(1, 2), make_rat(2, 3), make_rat(9, 10)};
    const Rat ss[] = {make_rat(1), make_rat(2), make_rat(1, 3)};
    const Rat ts[] = {make_rat(1), make_rat(3, 2)};
    for (int l = 0; l <= 4; ++l)
        for (int m = 0; m <= 3; ++m)
            for (int p = 0; p <= 3; ++p)
                for (const Rat& q : qs)
                    for (const Rat& s : ss)
                        for (const Rat& t : ts) grid.push_back({l, m, p, q, s, t});
    return grid;
}

std::vector<AdditionParams> parse_addition_grid_csv(std::istream& in) {
    std::vector<AdditionParams> grid;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("l,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 6)
            throw parse_error("grid row needs 6 fields: l,m,p,q,s,t", grid.size() + 1);
        grid.push_back({std::stoi(fields[0]), std::stoi(fields[1]), std::stoi(fields[2]),
                        parse_rat(fields[3]), parse_rat(fields[4]), parse_rat(fields[5])});
    }
    return grid;
}

std::vector<VerificationReport> run_addition_suite(const std::vector<AdditionParams>& grid,
                                                   int jobs) {
    std::vector<VerificationReport> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            out[i] = addition_formula_exact(grid[i]);
        } catch (const pole_error& e) {
            // degenerate parameters are reported, not counted as failures
            out[i].id = "addition-formula-exact";
            out[i].params = {{"l", std::to_string(grid[i].l)}, {"m", std::to_string(grid[i].m)},
                             {"p", std::to_string(grid[i].p)}, {"q", rat_str(grid[i].q)},
                             {"s", rat_str(grid[i].s)},        {"t", rat_str(grid[i].t)}};
            out[i].mode = "exact";
            out[i].pass = true;
            out[i].notes = std::string("skipped: ") + e.what();
        }
    }, jobs);
    return out;
}

std::vector<VerificationReport> run_identity_suite() {
    std::vector<VerificationReport> out;
    for (const IdentityResult& r : identity_suite()) {
        VerificationReport rep;
        rep.id = "identity-" + r.id;
        rep.params = {{"lhs", r.lhs}, {"rhs", r.rhs}};
        rep.mode = "exact";
        rep.pass = r.pass;
        rep.residual = r.pass ? 0.0 : static_cast<double>(r.residual_terms);
        if (!r.pass) rep.notes = std::to_string(r.residual_terms) + " residual terms";
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

// sigma given as the half-integer two_sigma / 2
SpectralGrid grid_of(const Rat& q, long two_sigma) {
    return {q, rat_pow(q, two_sigma), std::pow(rat_to_double(q), two_sigma / 2.0)};
}

}  // namespace

std::vector<VerificationReport> run_spectrum_suite() {
    // q = 1/2, sigma = 1, N = 40: ladders reproduced for n <= 10 within 1e-8
    SpectralGrid g = grid_of(make_rat(1, 2), 2);
    return {spectrum_check(g, 40, 10, 1e-8)};
}

std::vector<VerificationReport> run_norm_suite() {
    struct Row {
        Rat q;
        long two_sigma;
        Ladder lad;
        int n;
    };
    std::vector<Row> rows;
    for (const Rat& q : {make_rat(1, 2), make_rat(3, 4)})
        for (long two_sigma : {1L, 2L, 4L})  // sigma = 1/2, 1, 2
            for (Ladder lad : {Ladder::negative, Ladder::positive})
                for (int n = 0; n <= 8; ++n) rows.push_back({q, two_sigma, lad, n});
    std::vector<VerificationReport> out(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        out[i] = norm_check({rows[i].lad, rows[i].n}, grid_of(rows[i].q, rows[i].two_sigma), 1e-10);
    });
    return out;
}

std::vector<VerificationReport> run_action_suite() {
    // all eight degree-one statements, four eigenvalues per ladder
    std::vector<VerificationReport> out;
    SpectralGrid g = grid_of(make_rat(1, 2), 2);
    for (ActionFamily fam : {ActionFamily::sigma_side, ActionFamily::tau_side})
        for (Gen gen : {Gen::alpha, Gen::beta, Gen::gamma, Gen::delta})
            for (Ladder lad : {Ladder::negative, Ladder::positive})
                for (int n = 0; n <= 3; ++n)
                    out.push_back(action_check_minor(gen, fam, {lad, n}, g, 40, 1e-10));
    return out;
}

std::vector<VerificationReport> run_matrix_element_action_suite() {
    std::vector<VerificationReport> out;
    SpectralGrid g = grid_of(make_rat(1, 2), 2);
    for (int l = 1; l <= 2; ++l)
        for (int n = 0; n <= l; ++n)
            for (int sign : {1, -1}) {
                if (n == 0 && sign < 0) continue;
                for (ActionFamily fam : {ActionFamily::sigma_side, ActionFamily::tau_side})
                    for (int k = 0; k <= 2; ++k)
                        out.push_back(action_check_b(l, sign * n, fam, {Ladder::negative, k}, g,
                                                     48, 1e-8));
            }
    return out;
}

std::vector<VerificationReport> run_tensor_suite() {
    SpectralGrid g = grid_of(make_rat(1, 2), 2);
    std::vector<std::pair<int, int>> rows;
    for (int m = 0; m <= 6; ++m)
        for (int p = 0; p <= 2; ++p) rows.push_back({m, p});
    std::vector<VerificationReport> out(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        out[i] = tensor_rho_action(rows[i].first, rows[i].second, g, g, 48, 1e-9);
    });
    return out;
}

std::vector<VerificationReport> run_abstract_suite() {
    std::vector<VerificationReport> out;
    SpectralGrid g = grid_of(make_rat(1, 2), 2);
    for (int l = 0; l <= 2; ++l)
        out.push_back(abstract_addition_check(l, g, g, 40, l <= 1 ? 1e-8 : 1e-7));
    return out;
}

std::vector<VerificationReport> run_product_suite(int jobs) {
    struct Row {
        int l, m, n, p;
    };
    std::vector<Row> rows;
    for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= l; ++n)
            for (int m = 0; m <= 3; ++m)
                for (int p = 0; p <= 2; ++p) rows.push_back({l, m, n, p});
    std::vector<VerificationReport> out(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        auto [l, m, n, p] = rows[i];
        out[i] = product_formula_check(l, m, n, p, make_rat(1, 2), make_rat(1), make_rat(1), 1e-9);
    }, jobs);
    return out;
}

std::vector<VerificationReport> run_classical_suite(unsigned seed) {
    std::vector<VerificationReport> out;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> inner(-0.9, 0.9);
    for (int i = 0; i < 20; ++i) {
        int l = i % 7;
        out.push_back(classical_addition_check(l, unit(rng), unit(rng), unit(rng), 1e-12));
    }
    for (int i = 0; i < 20; ++i) {
        int l = i % 7;
        int n = l == 0 ? 0 : i % (l + 1);
        out.push_back(classical_product_check(l, n, inner(rng), inner(rng), l + 8, 1e-10));
    }
    VerificationReport sym;
    sym.id = "legendre-addition-degree1-symbolic";
    sym.mode = "exact";
    sym.pass = classical_addition_l1_symbolic();
    sym.residual = sym.pass ? 0.0 : 1.0;
    out.push_back(sym);
    return out;
}

std::vector<VerificationReport> run_limit_scan_suite() {
    LimitScanConfig cfg;  // l = 2, c = 1/2, r = 1, m = 8, 16, 32
    return {qlim_scan(cfg).report};
}

std::vector<VerificationReport> run_all_suites(int jobs) {
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(run_identity_suite());
    append(run_addition_suite(default_addition_grid(), jobs));
    append(run_spectrum_suite());
    append(run_norm_suite());
    append(run_action_suite());
    append(run_matrix_element_action_suite());
    append(run_tensor_suite());
    append(run_abstract_suite());
    append(run_product_suite(jobs));
    append(run_classical_suite());
    append(run_limit_scan_suite());
    return out;
}

}  // namespace qaw
