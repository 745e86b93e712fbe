// pi-series: prove, discover, evaluate and certify series expansions of pi
// of the form pi = (1/r) sum_n S(n) / (C(mn, pn) a^n).
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "piser/catalog.hpp"
#include "piser/detlab.hpp"
#include "piser/discover.hpp"
#include "piser/evalnum.hpp"
#include "piser/factorization.hpp"
#include "piser/formula_io.hpp"
#include "piser/prover.hpp"

namespace {

using namespace piser;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int cmd_prove(int k, int max_k, std::string out_path, int verify_digits) {
    if (k < 1 || k > max_k) {
        std::cerr << "prove: k must be in [1, " << max_k << "]\n";
        return kExitUsage;
    }
    prover::ProofCertificate cert = prover::prove(k);
    Formula F;
    F.m = 8 * k;
    F.p = 4 * k;
    F.a = BigInt(-4).pow(static_cast<unsigned>(k));
    F.r = cert.r;
    F.S_int = cert.S_int;
    F.provenance = Provenance::proven;
    F.proven_k = k;
    if (out_path.empty()) out_path = "proof-k" + std::to_string(k) + ".pis";
    FormulaFile ff;
    ff.formula = F;
    ff.rcheck = cert.Rcheck;
    ff.comment = "proven certificate, k=" + std::to_string(k);
    write_formula_file(out_path, ff);
    std::cout << "k=" << k << "  r=" << cert.r.to_string() << " ("
              << factor_smooth(cert.r, 100).to_string() << ")\n";
    std::cout << "S degree " << (cert.S_int.size() - 1) << ", certificate written to " << out_path
              << "\n";
    std::cout << "ode residual identically zero: " << (cert.residual_zero ? "yes" : "NO") << "\n";
    NumericReport rep = verify_formula_numeric(F, verify_digits);
    std::cout << "numeric certification at " << verify_digits
              << " digits: " << (rep.pass ? "pass" : "FAIL")
              << " (residual " << rep.residual.to_string() << ")\n";
    return cert.residual_zero && rep.pass ? kExitOk : kExitVerifyFail;
}

int cmd_eval(const std::string& path, int digits) {
    if (digits < 1) {
        std::cerr << "eval: --digits must be >= 1\n";
        return kExitUsage;
    }
    FormulaFile ff = read_formula_file(path);
    FixedDec v = eval_formula(ff.formula, digits);
    std::cout << format_digits(v);
    return kExitOk;
}

int cmd_candidates(int max_m) {
    auto cands = discover::enumerate_candidates(max_m);
    std::cout << "m\tp\ta\twitness\n";
    for (const auto& c : cands)
        std::cout << c.m << "\t" << c.p << "\t" << c.a.to_string() << "\t"
                  << (c.witness_root == discover::WitnessRoot::at_i ? "i" : "1+i") << "\n";
    std::cout << cands.size() << " candidates with m <= " << max_m << "\n";
    return kExitOk;
}

int cmd_discover(int m, int p, const std::string& a_str, int degree, int digits,
                 const std::string& out_path) {
    if (!(0 < p && p < m) || degree < 1 || digits < 1) {
        std::cerr << "discover: need 0 < p < m, degree >= 1, digits >= 1\n";
        return kExitUsage;
    }
    BigInt a = BigInt::parse(a_str);
    auto F = discover::find_relation(m, p, a, degree, digits);
    if (!F) {
        std::cout << "no relation found (insufficient precision or nothing survived validation)\n";
        return kExitVerifyFail;
    }
    std::cout << "pi = (1/r) sum S(n) / (C(" << m << "n," << p << "n) * (" << a.to_string()
              << ")^n)\n";
    std::cout << "r = " << F->r.to_string() << "  smooth part: " << factor_smooth(F->r, 100).to_string()
              << "\n";
    std::cout << "S:";
    for (const auto& c : F->S_int) std::cout << " " << c.to_string();
    std::cout << "\n";
    NumericReport rep = verify_formula_numeric(*F, 2 * digits);
    std::cout << "re-validated at " << 2 * digits << " digits: " << (rep.pass ? "pass" : "FAIL")
              << "\n";
    if (!rep.pass) return kExitVerifyFail;
    if (!out_path.empty()) {
        FormulaFile ff;
        ff.formula = *F;
        ff.comment = "discovered by lattice reduction";
        write_formula_file(out_path, ff);
        std::cout << "written to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_det(int k) {
    if (k < 1) {
        std::cerr << "det: k must be >= 1\n";
        return kExitUsage;
    }
    prover::ProverContext ctx = prover::make_context(k);
    Rational det = prover::det_series_system(ctx, prover::Parameterization::monomial);
    BigInt closed = prover::det_A_closed_form(k);
    Factorization f = factor_smooth(det.num(), 100);
    std::cout << "det of the size-" << (ctx.N + 4 * k) << " series system, k=" << k << ":\n";
    std::cout << "  sign " << (det.sign() > 0 ? "+" : "-") << ", magnitude " << f.to_string() << "\n";
    bool match = det.num().abs() == closed.abs() && det.den().is_one();
    std::cout << "  closed form magnitude match: " << (match ? "yes" : "NO") << "\n";
    std::cout << "  closed form sign: " << (closed.sign() > 0 ? "+" : "-")
              << (det.sign() == closed.sign() ? " (agrees)" : " (differs)") << "\n";
    return match ? kExitOk : kExitVerifyFail;
}

int cmd_identity(detlab::Identity which, int k, int trials, std::uint64_t seed) {
    if (k < 1 || trials < 1) {
        std::cerr << "identity check: need k >= 1 and trials >= 1\n";
        return kExitUsage;
    }
    detlab::IdentityReport rep = detlab::verify_identity(which, k, trials, seed);
    std::cout << detlab::to_string(rep) << "\n";
    return rep.all_match ? kExitOk : kExitVerifyFail;
}

int cmd_chain(int k) {
    if (k != 1 && k != 2) {
        std::cerr << "chain: supported for k in {1, 2}\n";
        return kExitUsage;
    }
    detlab::ChainReport rep = detlab::reduce_chain(k);
    std::cout << detlab::to_string(rep);
    return rep.all_ok() ? kExitOk : kExitVerifyFail;
}

int cmd_catalog_add(const std::string& dir, const std::string& path, const std::string& name,
                    int digits) {
    FormulaFile ff = read_formula_file(path);
    Catalog cat(dir);
    cat.add(name, ff, digits);
    std::cout << "added '" << name << "' (verified at " << std::max(digits, 100) << " digits)\n";
    return kExitOk;
}

int cmd_catalog_list(const std::string& dir) {
    Catalog cat(dir);
    for (const auto& e : cat.list())
        std::cout << e.name << "\tm=" << e.m << " p=" << e.p << " a=" << e.a.to_string() << "\t"
                  << e.provenance << "\t" << e.verified_digits << " digits\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact proofs, discovery and certification of pi series"};
    app.require_subcommand(1);

    int k = 1, max_k = 4, digits = 50, trials = 20, degree = 1, max_m = 16, m = 0, p = 0;
    std::uint64_t seed = 42;
    std::string out_path, formula_path, a_str, name, dir;

    auto* prove = app.add_subcommand("prove", "solve the series system for k and write a certificate");
    prove->add_option("--k", k, "family index")->required();
    prove->add_option("--out", out_path, "output formula file");
    prove->add_option("--max-k", max_k, "largest accepted k")->capture_default_str();
    int prove_digits = 200;
    prove->add_option("--digits", prove_digits, "numeric certification digits")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate a formula file to D digits");
    eval->add_option("formula", formula_path, "formula file")->required();
    eval->add_option("--digits", digits, "digits after the decimal point")->capture_default_str();

    auto* cand = app.add_subcommand("candidates", "enumerate admissible (m, p, a)");
    cand->add_option("--max-m", max_m, "largest m")->capture_default_str();

    auto* disc = app.add_subcommand("discover", "integer-relation search for S(n)");
    disc->add_option("--m", m)->required();
    disc->add_option("--p", p)->required();
    disc->add_option("--a", a_str)->required();
    disc->add_option("--degree", degree, "degree of S")->capture_default_str();
    disc->add_option("--digits", digits, "working precision")->capture_default_str();
    disc->add_option("--out", out_path, "write the discovered formula here");

    auto* det = app.add_subcommand("det", "series-system determinant vs closed form");
    det->add_option("--k", k)->required();

    auto* thm2 = app.add_subcommand("thm2", "randomized check of the X-family determinant identity");
    thm2->add_option("--k", k)->required();
    thm2->add_option("--trials", trials, "points")->capture_default_str();
    thm2->add_option("--seed", seed, "rng seed")->capture_default_str();

    auto* lem7 = app.add_subcommand("lemma7", "randomized check of the Z-family determinant identity");
    lem7->add_option("--k", k)->required();
    lem7->add_option("--trials", trials, "points")->capture_default_str();
    lem7->add_option("--seed", seed, "rng seed")->capture_default_str();

    auto* chain = app.add_subcommand("chain", "stepwise determinant reduction report");
    chain->add_option("--k", k)->required();

    auto* cadd = app.add_subcommand("catalog-add", "verify a formula file and add it to the catalog");
    cadd->add_option("formula", formula_path, "formula file")->required();
    cadd->add_option("--name", name, "entry name")->required();
    cadd->add_option("--digits", digits, "verification digits (min 100)")->capture_default_str();
    cadd->add_option("--dir", dir, "catalog directory (default $PI_SERIES_CATALOG)");

    auto* clist = app.add_subcommand("catalog-list", "list catalog entries");
    clist->add_option("--dir", dir, "catalog directory (default $PI_SERIES_CATALOG)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (prove->parsed()) return cmd_prove(k, max_k, out_path, prove_digits);
        if (eval->parsed()) return cmd_eval(formula_path, digits);
        if (cand->parsed()) return cmd_candidates(max_m);
        if (disc->parsed()) return cmd_discover(m, p, a_str, degree, digits, out_path);
        if (det->parsed()) return cmd_det(k);
        if (thm2->parsed()) return cmd_identity(detlab::Identity::thm2, k, trials, seed);
        if (lem7->parsed()) return cmd_identity(detlab::Identity::lemma7, k, trials, seed);
        if (chain->parsed()) return cmd_chain(k);
        if (cadd->parsed()) return cmd_catalog_add(dir, formula_path, name, digits);
        if (clist->parsed()) return cmd_catalog_list(dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
