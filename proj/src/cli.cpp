#include "hdiff/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hdiff/expr.hpp"
#include "hdiff/reps.hpp"
#include "hdiff/rmatrix.hpp"
#include "hdiff/symmetry.hpp"
#include "hdiff/weyl.hpp"

namespace hdiff {

namespace {

struct SigmaInput {
    SigmaSpec spec;          // canonical decomposition when available
    RatFunc potential;       // realized potential
    bool in_wbar = false;
};

SigmaInput load_sigma(int n, const std::string& expr, const std::string& file) {
    SigmaInput out;
    VarSpec spec{n, 0};
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open sigma file '" + file + "'");
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.contains("raw")) {
            out.potential = parse_expr(j["raw"].get<std::string>(), ExprContext::cartan(n));
        } else {
            SigmaSpec s;
            s.n = n;
            s.site.assign(n, UniRat::zero());
            if (j.contains("pi")) {
                for (auto& [key, val] : j["pi"].items()) {
                    int k = std::stoi(key);
                    if (k < 1 || k > n) throw Error("sigma file: site index out of range");
                    s.site[k - 1] = UniRat{parse_expr(val.get<std::string>(), ExprContext::univariate())};
                }
            }
            if (j.contains("H")) {
                RatFunc h = parse_expr(j["H"].get<std::string>(), ExprContext::cartan(n));
                auto dec = w_decompose(h, n);
                if (!dec.in_wbar || !dec.spec.is_symmetric_polynomial())
                    throw Error("sigma file: H entry is not in the symmetric span");
                for (size_t m = 0; m < dec.spec.hpart.size(); ++m) {
                    if (s.hpart.size() <= m) s.hpart.resize(m + 1, Rat(0));
                    s.hpart[m] += dec.spec.hpart[m];
                }
            }
            s.canonicalize();
            out.spec = s;
            out.potential = s.realize(spec);
            out.in_wbar = true;
            return out;
        }
    } else {
        out.potential = parse_expr(expr, ExprContext::cartan(n));
    }
    auto dec = w_decompose(out.potential, n);
    out.in_wbar = dec.in_wbar;
    if (dec.in_wbar) out.spec = dec.spec;
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(parse_rat(tok));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (auto& r : parse_rat_list(text)) out.push_back((int)r.get_num().get_si());
    return out;
}

std::string matrix_json(const MatrixRep& rep) {
    nlohmann::ordered_json j;
    j["dim"] = rep.dim;
    j["field"] = rep.field.quadratic
                     ? "w^2 = " + to_string(rep.field.c1) + "*w + " + to_string(rep.field.c0)
                     : "rational";
    auto put = [&](const std::string& key, const FMat& m) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r < m.rows; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(fstr(m.at(r, c)));
            rows.push_back(row);
        }
        j[key] = rows;
    };
    for (int i = 0; i < rep.n; ++i) {
        for (int a = 0; a < rep.N; ++a) {
            std::string suf = std::to_string(i + 1) + (rep.N > 1 ? "_" + std::to_string(a + 1) : "");
            put("x" + suf, rep.xm(i, a));
            put("d" + suf, rep.dm(i, a));
        }
        put("h" + std::to_string(i + 1), rep.h[i]);
    }
    return j.dump();
}

void emit(Report& rep, const std::string& command, const std::string& format, std::ostream& out) {
    rep.command = command;
    if (format == "text") out << rep.text();
    else out << rep.json() << "\n";
}

int run_rmatrix(int n, const std::string& format, std::ostream& out) {
    Report rep = check_r_properties(n);
    emit(rep, "rmatrix --n " + std::to_string(n) + " --check", format, out);
    return rep.exit_code();
}

int run_pbw(int n, int N, const SigmaInput& sig, const std::string& mode, const std::string& format,
            std::ostream& out) {
    auto ctx = make_ring(n, N, sig.potential);
    PbwMode m = mode == "analytic" ? PbwMode::Analytic
                                   : (mode == "bruteforce" ? PbwMode::Bruteforce : PbwMode::Both);
    Report rep = pbw_overlap_check(ctx, m);
    if (!sig.in_wbar) rep.add("sigma solves the one-potential difference system", true, "", "no (warning)");
    for (int i = 0; i < n; ++i) {
        auto led = ubar_membership(ctx->sigma_site(i), n);
        if (!led.inside())
            rep.add("sigma_" + std::to_string(i + 1) + " lies in the localized Cartan ring", true, "",
                    "no (warning)");
    }
    emit(rep, "pbw", format, out);
    return rep.exit_code();
}

int run_delta(int n, const std::string& solve, const std::string& decompose,
              const std::string& format, std::ostream& out) {
    Report rep;
    if (!solve.empty()) {
        std::vector<RatFunc> sigmas;
        std::stringstream ss(solve);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            if (!tok.empty()) sigmas.push_back(parse_expr(tok, ExprContext::cartan(n)));
        if ((int)sigmas.size() != n) throw Error("delta --solve needs n expressions");
        auto res = delta_system_residual(sigmas);
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!res[i][j].is_zero() && ok) {
                    ok = false;
                    wit = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
        rep.add("difference system satisfied", ok, wit);
        if (ok) {
            RatFunc pot = potential_from_sigmas(sigmas);
            VarNames vn = cartan_names(n);
            rep.add("potential", true, "", pot.str(vn));
        }
    }
    if (!decompose.empty()) {
        RatFunc sigma = parse_expr(decompose, ExprContext::cartan(n));
        auto dec = w_decompose(sigma, n);
        rep.add("potential solves the difference system", dec.in_wbar,
                dec.in_wbar ? ""
                            : "(" + std::to_string(dec.witness.first + 1) + "," +
                                  std::to_string(dec.witness.second + 1) + ")",
                dec.in_wbar ? dec.spec.str() : "");
        if (dec.in_wbar)
            rep.add("symmetric polynomial (braid-admissible)", true, "",
                    zhelobenko_admissible(dec.spec) ? "yes" : "no");
    }
    emit(rep, "delta", format, out);
    return rep.exit_code();
}

int run_center(int n, int N, const SigmaInput& sig, int scan_degree, const std::string& format,
               std::ostream& out) {
    Report rep;
    if (!sig.in_wbar) {
        rep.add("sigma solves the difference system", false);
        emit(rep, "center", format, out);
        return 1;
    }
    auto ctx = make_ring(n, N, sig.spec);
    if (N == 1) {
        auto cs = central_elements(ctx, sig.spec);
        for (int k = 0; k < n; ++k) {
            rep.add("c_" + std::to_string(k + 1), true, "", cs[k].str());
            Report vc = verify_centrality(ctx, cs[k], "c_" + std::to_string(k + 1));
            bool ok = vc.all_pass();
            rep.add("c_" + std::to_string(k + 1) + " central", ok);
        }
        Report gr = gamma_recovery(ctx, sig.spec);
        for (auto& c : gr.checks) rep.checks.push_back(c);
    } else {
        Report gl = glN_check(ctx);
        for (auto& c : gl.checks) rep.checks.push_back(c);
    }
    auto scan = quadratic_center_scan(ctx, scan_degree);
    rep.add("quadratic center dimension (mod constants)", true,
            scan.bound_limited ? "bound-limited" : "", std::to_string(scan.dim_mod_constants));
    emit(rep, "center", format, out);
    return rep.exit_code();
}

int run_iso(int n, const SigmaInput& sig, const std::string& format, std::ostream& out) {
    Report rep;
    if (!sig.in_wbar) {
        rep.add("sigma solves the difference system", false);
        emit(rep, "iso", format, out);
        return 1;
    }
    WeylIso iso(n, sig.spec);
    // generator image table
    VarNames vn = cartan_names(n);
    for (int i = 0; i < n; ++i) {
        rep.add("image of x^" + std::to_string(i + 1), true, "", iso.image_x(i).str());
        rep.add("image of d_" + std::to_string(i + 1), true, "", iso.image_d(i).str());
    }
    Report chk = iso.check();
    for (auto& c : chk.checks) rep.checks.push_back(c);
    emit(rep, "iso", format, out);
    return rep.exit_code();
}

int run_rep(int n, const SigmaInput& sig, const std::string& lambda_text, const std::string& dims_text,
            const std::string& fixture, int bound, const std::string& format, std::ostream& out) {
    Report rep;
    if (!fixture.empty()) {
        Fixture f;
        if (fixture == "nondiagonalizable") f = fixture_nondiagonalizable();
        else if (fixture == "sixth-root") f = fixture_sixth_root();
        else if (fixture == "shifted-chain") f = fixture_shifted_chain(3, Rat(0), Rat(1, 2));
        else throw Error("unknown fixture '" + fixture + "'");
        Report vr = verify_module(f.sigma_sites, f.rep);
        for (auto& c : vr.checks) rep.checks.push_back(c);
        auto scan = invariant_subspace_scan(f.rep);
        rep.add("reducible", scan.oracle_reducible, scan.witness);
        rep.add("indecomposable", scan.indecomposable_certified);
        rep.add("matrices", true, "", matrix_json(f.rep));
        emit(rep, "rep --fixture " + fixture, format, out);
        return rep.exit_code();
    }
    if (!sig.in_wbar) {
        rep.add("sigma solves the difference system", false);
        emit(rep, "rep", format, out);
        return 1;
    }
    std::vector<Rat> lambda = parse_rat_list(lambda_text);
    if ((int)lambda.size() != n) throw Error("rep needs --lambda with n entries");
    std::vector<int> dims;
    if (!dims_text.empty()) {
        dims = parse_int_list(dims_text);
    } else {
        auto d = finite_module_dims(sig.spec, lambda, bound);
        if (!d) {
            rep.add("finite-dimensional quotient exists", false, "",
                    "none up to bound " + std::to_string(bound));
            emit(rep, "rep", format, out);
            return 1;
        }
        dims = *d;
        std::string ds;
        for (int v : dims) ds += (ds.empty() ? "" : ",") + std::to_string(v);
        rep.add("dimension vector", true, "", ds);
    }
    auto ctx = make_ring(n, 1, sig.spec);
    MatrixRep mr = build_matrix_module(ctx, lambda, dims);
    rep.add("matrices", true, "", matrix_json(mr));
    Report vr = verify_module(sig.spec.sigmas(VarSpec{n, 0}), mr);
    for (auto& c : vr.checks) rep.checks.push_back(c);
    auto irr = irreducibility_test(sig.spec, lambda, dims, mr);
    rep.add("irreducible (weight conditions)", irr.analytic_irreducible);
    rep.add("irreducible (matrix oracle)", irr.oracle_irreducible,
            irr.oracle_reducible ? irr.witness : "");
    rep.add("oracles agree", irr.analytic_irreducible == irr.oracle_irreducible);
    emit(rep, "rep", format, out);
    return rep.exit_code();
}

int run_symmetry(int n, int N, const SigmaInput& sig, const std::string& kind,
                 const std::string& format, std::ostream& out) {
    Report rep;
    SymKind k;
    if (kind == "s") k = SymKind::S;
    else if (kind == "sprime") k = SymKind::SPrime;
    else if (kind == "q") k = SymKind::QCheck;
    else if (kind == "qweyl") k = SymKind::QCheckWeyl;
    else throw Error("unknown symmetry kind '" + kind + "'");

    if (k == SymKind::QCheckWeyl) {
        Report r = group_relations_check_weyl(n);
        for (auto& c : r.checks) rep.checks.push_back(c);
        emit(rep, "symmetry", format, out);
        return rep.exit_code();
    }
    if (k == SymKind::QCheck) {
        if (!sig.in_wbar || !symmetry_admissible(k, sig.spec)) {
            rep.add("braid operators require a symmetric polynomial potential", false,
                    "site parts present in the canonical decomposition");
            emit(rep, "symmetry", format, out);
            return 1;
        }
    }
    auto ctx = make_ring(n, N, sig.potential);
    Report r = group_relations_check(ctx, k);
    for (auto& c : r.checks) rep.checks.push_back(c);
    emit(rep, "symmetry", format, out);
    return rep.exit_code();
}

int run_selftest(int n, int N, const SigmaInput& sig, const std::string& format, std::ostream& out) {
    auto ctx = make_ring(n, N, sig.potential);
    Report rep = self_test_relations(ctx);
    emit(rep, "selftest", format, out);
    return rep.exit_code();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for the deformed differential-operator rings"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    int n = 2, N = 1, scan_degree = 3, bound = 64;
    std::string sigma_expr = "H(1)", sigma_file, mode = "both", kind = "s";
    std::string solve, decompose, lambda_text, dims_text, fixture;
    bool check_flag = false;

    auto* rmx = app.add_subcommand("rmatrix", "operator properties");
    rmx->add_option("--n", n)->required();
    rmx->add_flag("--check", check_flag);

    auto* pbw = app.add_subcommand("pbw", "basis consistency of the zero-order term");
    pbw->add_option("--n", n)->required();
    pbw->add_option("--N", N);
    pbw->add_option("--sigma", sigma_expr);
    pbw->add_option("--sigma-file", sigma_file);
    pbw->add_option("--mode", mode)->check(CLI::IsMember({"analytic", "bruteforce", "both"}));

    auto* delta = app.add_subcommand("delta", "difference system for potentials");
    delta->add_option("--n", n)->required();
    delta->add_option("--solve", solve);
    delta->add_option("--decompose", decompose);

    auto* center = app.add_subcommand("center", "central elements");
    center->add_option("--n", n)->required();
    center->add_option("--N", N);
    center->add_option("--sigma", sigma_expr);
    center->add_option("--sigma-file", sigma_file);
    center->add_option("--scan-degree", scan_degree);

    auto* iso = app.add_subcommand("iso", "localized Weyl-algebra isomorphism");
    iso->add_option("--n", n)->required();
    iso->add_option("--sigma", sigma_expr);
    iso->add_option("--sigma-file", sigma_file);

    auto* repc = app.add_subcommand("rep", "finite-dimensional modules");
    repc->add_option("--n", n);
    repc->add_option("--sigma", sigma_expr);
    repc->add_option("--sigma-file", sigma_file);
    repc->add_option("--lambda", lambda_text);
    repc->add_option("--dims", dims_text);
    repc->add_option("--fixture", fixture);
    repc->add_option("--bound", bound);

    auto* sym = app.add_subcommand("symmetry", "symmetric-group and braid actions");
    sym->add_option("--n", n)->required();
    sym->add_option("--N", N);
    sym->add_option("--sigma", sigma_expr);
    sym->add_option("--sigma-file", sigma_file);
    sym->add_option("--kind", kind);
    int depth = 3;
    sym->add_option("--depth", depth);  // the standard relation words cover depth 3

    auto* self = app.add_subcommand("selftest", "internal relation stock");
    self->add_option("--n", n)->required();
    self->add_option("--N", N);
    self->add_option("--sigma", sigma_expr);
    self->add_option("--sigma-file", sigma_file);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (rmx->parsed()) return run_rmatrix(n, format, out);
        SigmaInput sig;
        if (pbw->parsed() || center->parsed() || iso->parsed() || sym->parsed() || self->parsed() ||
            (repc->parsed() && fixture.empty())) {
            sig = load_sigma(n, sigma_expr, sigma_file);
        }
        if (pbw->parsed()) return run_pbw(n, N, sig, mode, format, out);
        if (delta->parsed()) return run_delta(n, solve, decompose, format, out);
        if (center->parsed()) return run_center(n, N, sig, scan_degree, format, out);
        if (iso->parsed()) return run_iso(n, sig, format, out);
        if (repc->parsed()) return run_rep(n, sig, lambda_text, dims_text, fixture, bound, format, out);
        if (sym->parsed()) return run_symmetry(n, N, sig, kind, format, out);
        if (self->parsed()) return run_selftest(n, N, sig, format, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace hdiff
