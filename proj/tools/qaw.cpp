// Command-line front end: evaluate the polynomial families, run the
// verification suites, emit JSON-lines reports and CSV summaries.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qaw/ncparse.hpp"
#include "qaw/repr.hpp"
#include "qaw/suites.hpp"

namespace {

using namespace qaw;

int emit(const std::string& suite, const std::vector<VerificationReport>& records,
         const std::string& out_path, const std::string& csv_path, bool quiet = false) {
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        write_json_lines(os, suite, records);
    }
    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        write_csv(os, records);
    }
    std::size_t failed = 0;
    for (auto& r : records)
        if (!r.pass) ++failed;
    if (!quiet) {
        if (out_path.empty())
            write_json_lines(std::cout, suite, records);
        else
            std::cout << suite << ": " << records.size() - failed << "/" << records.size()
                      << " passed\n";
        for (auto& r : records)
            if (!r.pass) std::cerr << "FAIL " << report_json(r) << "\n";
    }
    return suite_exit_code(records);
}

std::string poly_str(const UniPoly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        Rat a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || a != 1) os << a;
        if (k > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string poly_str(const UniPoly<SqrtRational>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) os << " ";
        os << "x^" << k << ": " << p.coeff(k).str();
        if (k < p.degree()) os << ",";
    }
    return os.str();
}

SpectralGrid make_grid(const Rat& q, const Rat& sigma) {
    Rat two_sigma = sigma * 2;
    if (two_sigma.get_den() != 1)
        throw std::invalid_argument("sigma/tau must be half-integers for the exact ladders");
    long k = two_sigma.get_num().get_si();
    return {q, rat_pow(q, k), std::pow(rat_to_double(q), k / 2.0)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-special-function verification toolkit for the quantum SU(2) addition formula"};
    app.require_subcommand(1);

    // ---- eval ---------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial family");
    std::string family, x_str;
    int n = 0, alpha = 0, beta = 0;
    std::string q_str = "1/2", s_str = "1", t_str = "1", c_str = "1", d_str = "1";
    std::string a_str = "1/2", b_str = "1/2";
    eval->add_option("family", family,
                     "aw | pjacobi | qlaguerre | bigqjacobi | chebyshev | jacobiR")
        ->required();
    eval->add_option("n", n, "degree")->required();
    eval->add_option("--alpha", alpha);
    eval->add_option("--beta", beta);
    eval->add_option("--q", q_str, "base, as a rational p/q");
    eval->add_option("--s", s_str);
    eval->add_option("--t", t_str);
    eval->add_option("--a", a_str, "Askey-Wilson parameter a");
    eval->add_option("--b", b_str, "Askey-Wilson parameter b");
    eval->add_option("--c", c_str);
    eval->add_option("--d", d_str);
    eval->add_option("--x", x_str, "evaluate at x (rational)");

    // ---- ncalg --------------------------------------------------------
    auto* nc = app.add_subcommand("ncalg", "symbolic quantum SU(2) algebra");
    auto* nc_eval = nc->add_subcommand("eval", "normalize an algebra expression");
    std::string expr;
    nc_eval->add_option("expr", expr, "expression")->required();
    auto* nc_verify = nc->add_subcommand("verify", "run the symbolic identity suite");
    std::string out_path, csv_path;
    nc_verify->add_option("--out", out_path, "JSON-lines output path");
    nc_verify->add_option("--csv", csv_path, "CSV summary path");
    auto* nc_check = nc->add_subcommand("check", "check lhs == rhs in normal form");
    std::string lhs_expr, rhs_expr;
    nc_check->add_option("lhs", lhs_expr)->required();
    nc_check->add_option("rhs", rhs_expr)->required();

    // ---- repr ---------------------------------------------------------
    auto* repr = app.add_subcommand("repr", "truncated representation checks");
    auto* repr_check = repr->add_subcommand("check", "run a representation suite");
    std::string repr_suite = "spectrum", sigma_str = "1", tau_str = "1";
    int N = 40;
    repr_check->add_option("--suite", repr_suite, "spectrum | norms | actions | tensor | abstract")
        ->required();
    repr_check->add_option("--q", q_str, "base, rational");
    repr_check->add_option("--sigma", sigma_str, "half-integer sigma");
    repr_check->add_option("--tau", tau_str, "half-integer tau");
    repr_check->add_option("--N", N, "truncation dimension");
    repr_check->add_option("--out", out_path);
    repr_check->add_option("--csv", csv_path);

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "polynomial identity verification");
    auto* v_add = verify->add_subcommand("addition", "the two-parameter addition formula");
    int l = 2, m = 1, p = 1, prod_n = 1;
    bool exact_mode = false, float_mode = false, symbolic_mode = false, base_squared_variant = false;
    v_add->add_option("--l", l)->required();
    v_add->add_option("--m", m)->required();
    v_add->add_option("--p", p)->required();
    v_add->add_option("--q", q_str, "rational base");
    v_add->add_option("--s", s_str, "q^tau, rational");
    v_add->add_option("--t", t_str, "q^sigma, rational");
    v_add->add_flag("--exact", exact_mode, "exact basis-coefficient certificate (default)");
    v_add->add_flag("--float", float_mode, "pointwise floating check");
    v_add->add_flag("--symbolic", symbolic_mode, "leave s, t as formal symbols");
    v_add->add_flag("--variant-base-squared", base_squared_variant,
                    "also record the residual of the second-sum variant with squared base");
    auto* v_prod = verify->add_subcommand("product", "the companion product formula");
    v_prod->add_option("--l", l)->required();
    v_prod->add_option("--m", m)->required();
    v_prod->add_option("--n", prod_n)->required();
    v_prod->add_option("--p", p)->required();
    v_prod->add_option("--q", q_str);
    v_prod->add_option("--s", s_str);
    v_prod->add_option("--t", t_str);
    double tol = 1e-9;
    v_prod->add_option("--tol", tol, "relative tolerance (float modes)");
    v_add->add_option("--tol", tol, "relative tolerance (float mode)");
    auto* repr_tol_opt =
        repr_check->add_option("--tol", tol, "override the per-suite default tolerance");
    auto* v_suite = verify->add_subcommand("suite", "run a named suite over a grid");
    std::string suite_name = "all", grid_path = "default";
    int jobs = 0;
    v_suite->add_option("--name", suite_name,
                        "identities | addition | repr | product | limits | all");
    v_suite->add_option("--grid", grid_path, "addition grid CSV path, or 'default'");
    v_suite->add_option("--out", out_path);
    v_suite->add_option("--csv", csv_path);
    v_suite->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    // ---- limits -------------------------------------------------------
    auto* limits = app.add_subcommand("limits", "classical endpoint checks");
    auto* l_scan = limits->add_subcommand("scan", "base-to-one convergence scan");
    std::string m_list_str = "8,16,32", c_str2 = "1/2";
    int scan_r = 1;
    l_scan->add_option("--l", l);
    l_scan->add_option("--c", c_str2, "classical base c in (0,1), rational");
    l_scan->add_option("--r", scan_r, "p = m r");
    l_scan->add_option("--m", m_list_str, "comma-separated m values");
    l_scan->add_option("--out", out_path);
    l_scan->add_option("--csv", csv_path, "per-m deviation table");
    auto* l_classical = limits->add_subcommand("classical", "addition/product formula spot checks");
    unsigned seed = 20260808;
    l_classical->add_option("--seed", seed);
    l_classical->add_option("--out", out_path);
    l_classical->add_option("--csv", csv_path);

    // ---- report -------------------------------------------------------
    auto* report = app.add_subcommand("report", "convert a JSON-lines report to CSV");
    std::string in_path;
    report->add_option("--in", in_path, "JSON-lines input")->required();
    report->add_option("--csv", csv_path, "CSV output")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            Rat q = parse_rat(q_str);
            SqrtRational qe(q), v = SqrtRational::root_of(q);
            UniPoly<SqrtRational> poly;
            if (family == "chebyshev" || family == "jacobiR") {
                UniPoly<Rat> pr = family == "chebyshev" ? chebyshev_T(n)
                                                        : classical_jacobi_R(n, alpha, beta);
                if (!x_str.empty()) {
                    std::cout << rat_str(pr.eval(parse_rat(x_str))) << "\n";
                    return 0;
                }
                std::cout << poly_str(pr) << "\n";
                return 0;
            } else if (family == "aw") {
                AWParams<SqrtRational> P{SqrtRational(parse_rat(a_str)),
                                         SqrtRational(parse_rat(b_str)),
                                         SqrtRational(parse_rat(c_str)),
                                         SqrtRational(parse_rat(d_str)), qe};
                poly = askey_wilson(n, P);
            } else if (family == "pjacobi") {
                poly = pjacobi(n, alpha, beta, SqrtRational(parse_rat(s_str)),
                               SqrtRational(parse_rat(t_str)), qe, v);
            } else if (family == "qlaguerre") {
                poly = qlaguerre(n, alpha, SqrtRational(parse_rat(s_str)),
                                 SqrtRational(parse_rat(t_str)), qe, v);
            } else if (family == "bigqjacobi") {
                poly = big_qjacobi(n, alpha, beta, SqrtRational(parse_rat(c_str)),
                                   SqrtRational(parse_rat(d_str)), qe);
            } else {
                std::cerr << "unknown family '" << family << "'\n";
                return 2;
            }
            if (!x_str.empty())
                std::cout << poly.eval(SqrtRational(parse_rat(x_str))).str() << "\n";
            else
                std::cout << poly_str(poly) << "\n";
            return 0;
        }

        if (nc_eval->parsed()) {
            ParsedValue v = parse_nc_value(expr);
            std::cout << (v.is_tensor ? print_nc(v.tensor) : print_nc(v.elem)) << "\n";
            return 0;
        }
        if (nc_verify->parsed())
            return emit("identities", run_identity_suite(), out_path, csv_path);
        if (nc_check->parsed()) {
            ParsedValue a = parse_nc_value(lhs_expr), b = parse_nc_value(rhs_expr);
            if (a.is_tensor != b.is_tensor) {
                std::cerr << "cannot compare a tensor with an algebra element\n";
                return 2;
            }
            IdentityResult r = a.is_tensor ? identity_check("cli", a.tensor, b.tensor)
                                           : identity_check("cli", a.elem, b.elem);
            std::cout << (r.pass ? "equal" : "different (" +
                                                 std::to_string(r.residual_terms) +
                                                 " residual terms)")
                      << "\n";
            return r.pass ? 0 : 1;
        }

        if (repr_check->parsed()) {
            Rat q = parse_rat(q_str);
            SpectralGrid sg = make_grid(q, parse_rat(sigma_str));
            SpectralGrid tg = make_grid(q, parse_rat(tau_str));
            bool tol_set = repr_tol_opt->count() > 0;
            auto tol_or = [&](double dflt) { return tol_set ? tol : dflt; };
            std::vector<VerificationReport> records;
            if (repr_suite == "spectrum") {
                records.push_back(spectrum_check(sg, N, 10, tol_or(1e-8)));
            } else if (repr_suite == "norms") {
                for (Ladder lad : {Ladder::negative, Ladder::positive})
                    for (int k = 0; k <= 8; ++k)
                        records.push_back(norm_check({lad, k}, sg, tol_or(1e-10)));
            } else if (repr_suite == "actions") {
                for (ActionFamily fam : {ActionFamily::sigma_side, ActionFamily::tau_side})
                    for (Gen g : {Gen::alpha, Gen::beta, Gen::gamma, Gen::delta})
                        for (Ladder lad : {Ladder::negative, Ladder::positive})
                            for (int k = 0; k <= 3; ++k)
                                records.push_back(action_check_minor(
                                    g, fam, {lad, k}, fam == ActionFamily::sigma_side ? sg : tg, N,
                                    tol_or(1e-10)));
            } else if (repr_suite == "tensor") {
                for (int mm = 0; mm <= 6; ++mm)
                    for (int pp = 0; pp <= 2; ++pp)
                        records.push_back(tensor_rho_action(mm, pp, tg, sg, N, tol_or(1e-9)));
            } else if (repr_suite == "abstract") {
                for (int ll = 0; ll <= 2; ++ll)
                    records.push_back(abstract_addition_check(ll, tg, sg, N,
                                                              tol_or(ll <= 1 ? 1e-8 : 1e-7)));
            } else {
                std::cerr << "unknown repr suite '" << repr_suite << "'\n";
                return 2;
            }
            return emit("repr-" + repr_suite, records, out_path, csv_path);
        }

        if (v_add->parsed()) {
            AdditionParams P{l, m, p, parse_rat(q_str), parse_rat(s_str), parse_rat(t_str)};
            VerificationReport rep;
            if (symbolic_mode)
                rep = addition_formula_symbolic(l, m, p, P.q);
            else if (float_mode && !exact_mode)
                rep = addition_formula_pointwise(P, {0.0, 0.5, -0.5, 1.0, -1.0}, tol);
            else
                rep = addition_formula_exact(P, base_squared_variant);
            return emit("addition", {rep}, out_path, csv_path);
        }
        if (v_prod->parsed()) {
            VerificationReport rep = product_formula_check(
                l, m, prod_n, p, parse_rat(q_str), parse_rat(s_str), parse_rat(t_str), tol);
            return emit("product", {rep}, out_path, csv_path);
        }
        if (v_suite->parsed()) {
            std::vector<VerificationReport> records;
            if (suite_name == "identities") {
                records = run_identity_suite();
            } else if (suite_name == "addition") {
                std::vector<AdditionParams> grid;
                if (grid_path == "default") {
                    grid = default_addition_grid();
                } else {
                    std::ifstream in(grid_path);
                    if (!in) {
                        std::cerr << "cannot open grid file " << grid_path << "\n";
                        return 2;
                    }
                    grid = parse_addition_grid_csv(in);
                }
                records = run_addition_suite(grid, jobs);
            } else if (suite_name == "repr") {
                auto append = [&records](std::vector<VerificationReport> v) {
                    records.insert(records.end(), v.begin(), v.end());
                };
                append(run_spectrum_suite());
                append(run_norm_suite());
                append(run_action_suite());
                append(run_matrix_element_action_suite());
                append(run_tensor_suite());
                append(run_abstract_suite());
            } else if (suite_name == "product") {
                records = run_product_suite(jobs);
            } else if (suite_name == "limits") {
                records = run_classical_suite();
                auto scan = run_limit_scan_suite();
                records.insert(records.end(), scan.begin(), scan.end());
            } else if (suite_name == "all") {
                records = run_all_suites(jobs);
            } else {
                std::cerr << "unknown suite '" << suite_name << "'\n";
                return 2;
            }
            return emit(suite_name, records, out_path, csv_path);
        }

        if (l_scan->parsed()) {
            LimitScanConfig cfg;
            cfg.l = l;
            cfg.c = parse_rat(c_str2);
            cfg.r = scan_r;
            cfg.m_list.clear();
            std::istringstream ms(m_list_str);
            std::string tok;
            while (std::getline(ms, tok, ',')) cfg.m_list.push_back(std::stoi(tok));
            LimitScanResult res = qlim_scan(cfg);
            if (!csv_path.empty()) {
                std::ofstream os(csv_path);
                os << "m,addition,dconst,ratio,bigqjacobi,qlegendre,pochhammer\n";
                for (auto& r : res.rows)
                    os << r.m << "," << r.dev_addition << "," << r.dev_dconst << "," << r.dev_ratio
                       << "," << r.dev_bigqjacobi << "," << r.dev_qlegendre << "," << r.dev_poch
                       << "\n";
            }
            return emit("limit-scan", {res.report}, out_path, "");
        }
        if (l_classical->parsed())
            return emit("classical", run_classical_suite(seed), out_path, csv_path);

        if (report->parsed()) {
            std::ifstream in(in_path);
            if (!in) {
                std::cerr << "cannot open " << in_path << "\n";
                return 2;
            }
            // pass JSON lines through to CSV; the header line is skipped
            std::vector<VerificationReport> records;
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto j = nlohmann::json::parse(line);
                if (first && j.contains("suite")) {
                    first = false;
                    continue;
                }
                first = false;
                VerificationReport r;
                r.id = j.value("id", "");
                if (j.contains("params"))
                    for (auto& [k, v] : j["params"].items()) r.params[k] = v.get<std::string>();
                r.mode = j.value("mode", "");
                r.residual = j.value("residual", 0.0);
                r.pass = j.value("pass", false);
                r.notes = j.value("notes", "");
                records.push_back(std::move(r));
            }
            std::ofstream os(csv_path);
            write_csv(os, records);
            return suite_exit_code(records);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
