#include "qcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "qcat/errors.hpp"
#include "qcat/hecke.hpp"
#include "qcat/k0.hpp"
#include "qcat/tensor_ops.hpp"
#include "qcat/weights.hpp"

namespace qcat::cli {

namespace {

ScalarMode generic() { return ScalarMode::generic(); }

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open output file '" + path + "'");
    out << text << "\n";
}

void check(VerificationReport& rep, std::string relation, int n, int k, bool ok,
           const std::string& witness) {
    if (ok)
        rep.add_pass(std::move(relation), n, k);
    else
        rep.add_fail(std::move(relation), n, k, witness);
}

// ---- verify hecke ----------------------------------------------------------

HeckeElement random_monomial(const HeckeContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-2, 2);
    std::vector<int> xexp(static_cast<std::size_t>(ctx.size()));
    for (int& e : xexp) e = exp(rng);
    std::vector<int> img(static_cast<std::size_t>(ctx.size()));
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
    std::shuffle(img.begin(), img.end(), rng);
    std::uniform_int_distribution<int> num(-3, 3);
    int c = num(rng);
    if (c == 0) c = 1;
    return HeckeElement::monomial(ctx, std::move(xexp), Permutation(img),
                                  Scalar::integer(c, ctx.mode()));
}

VerificationReport hecke_suite(int k, unsigned seed) {
    int size = k + 1;
    if (size < 2 || size > 6) throw DomainError("verify hecke: need 1 <= k <= 5");
    HeckeContext ctx(size, Scalar::generator(generic()));
    const Scalar& q0 = ctx.q0();
    HeckeElement one = HeckeElement::unit(ctx);
    VerificationReport rep;

    auto t = [&](int i) { return HeckeElement::t_gen(ctx, i); };
    auto x = [&](int i) { return HeckeElement::x_power(ctx, i, 1); };
    auto prod = [&](const HeckeElement& a, const HeckeElement& b) { return mul(ctx, a, b); };

    for (int i = 1; i <= size - 1; ++i) {
        check(rep, "quadratic[i=" + std::to_string(i) + "]", size, k,
              prod(t(i) + one, t(i) - one.scaled(q0)).is_zero(), "nonzero normal form");
        check(rep, "t-inverse[i=" + std::to_string(i) + "]", size, k,
              prod(t(i), HeckeElement::t_gen_inverse(ctx, i)) == one, "T_i inverse fails");
        check(rep, "affine-txt[i=" + std::to_string(i) + "]", size, k,
              prod(prod(t(i), x(i)), t(i)) == x(i + 1).scaled(q0), "TXT != q0 X");
        check(rep, "tx-pair[i=" + std::to_string(i) + "]", size, k,
              prod(t(i), prod(x(i), x(i + 1))) == prod(prod(x(i + 1), x(i)), t(i)),
              "TXX != XXT");
        for (int j = 1; j <= size; ++j) {
            if (j == i || j == i + 1) continue;
            check(rep, "commute-tx[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                  size, k, prod(t(i), x(j)) == prod(x(j), t(i)), "TX != XT");
        }
    }
    for (int i = 1; i + 1 <= size - 1; ++i)
        check(rep, "braid[i=" + std::to_string(i) + "]", size, k,
              prod(prod(t(i), t(i + 1)), t(i)) == prod(prod(t(i + 1), t(i)), t(i + 1)),
              "braid relation fails");
    for (int i = 1; i <= size - 1; ++i)
        for (int j = i + 2; j <= size - 1; ++j)
            check(rep, "commute-tt[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                  size, k, prod(t(i), t(j)) == prod(t(j), t(i)), "TT != TT");
    for (int i = 1; i <= size; ++i) {
        check(rep, "x-inverse[i=" + std::to_string(i) + "]", size, k,
              prod(x(i), HeckeElement::x_power(ctx, i, -1)) == one, "X inverse fails");
        for (int j = i + 1; j <= size; ++j)
            check(rep, "commute-xx[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                  size, k, prod(x(i), x(j)) == prod(x(j), x(i)), "XX != XX");
    }

    for (const Permutation& w : all_permutations(size)) {
        HeckeElement expect = HeckeElement::t_basis(ctx, w);
        bool ok = true;
        for (const auto& word : w.all_reduced_words()) {
            HeckeElement p = one;
            for (int i : word) p = prod(p, t(i));
            if (!(p == expect)) {
                ok = false;
                break;
            }
        }
        check(rep, "matsumoto[" + w.to_string() + "]", size, k, ok,
              "reduced words disagree");
    }

    std::mt19937 rng(seed);
    bool assoc = true;
    for (int trial = 0; trial < 25 && assoc; ++trial) {
        HeckeElement a = random_monomial(ctx, rng);
        HeckeElement b = random_monomial(ctx, rng);
        HeckeElement c = random_monomial(ctx, rng);
        assoc = prod(prod(a, b), c) == prod(a, prod(b, c));
    }
    check(rep, "associativity[25 trials]", size, k, assoc, "associativity fails");

    for (SymmetrizerKind kind : {SymmetrizerKind::Trivial, SymmetrizerKind::Sign}) {
        const char* name = kind == SymmetrizerKind::Trivial ? "one" : "sgn";
        HeckeElement c = symmetrizer(ctx, kind);
        Scalar scale = symmetrizer_scale(ctx, kind);
        check(rep, std::string("quasi-idempotent[") + name + "]", size, k,
              prod(c, c) == c.scaled(scale), "c^2 != P c");
        Scalar absorb = kind == SymmetrizerKind::Trivial ? q0 : -Scalar::one(generic());
        bool ok = true;
        for (int i = 1; i <= size - 1 && ok; ++i) ok = prod(t(i), c) == c.scaled(absorb);
        check(rep, std::string("absorption[") + name + "]", size, k, ok,
              "T_i c has the wrong scale");
    }

    for (int npow = 1; npow <= 3; ++npow)
        for (long a : {0L, 1L})
            rep.append(verify_commutation(ctx, npow, mpq_class(a)));
    return rep;
}

// ---- verify rmatrix --------------------------------------------------------

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

VerificationReport rmatrix_suite(int n, int k) {
    VerificationReport rep;
    DenseOperator r = r_hat(n);
    std::size_t d = r.dim();
    Scalar q = Scalar::q_power(1, generic());
    DenseOperator zero(d);
    check(rep, "rhat-quadratic", n, 2,
          (r - DenseOperator::scalar(d, q))
                  .mul(r + DenseOperator::scalar(d, Scalar::q_power(-1, generic()))) == zero,
          "(r-q)(r+q^-1) != 0");
    std::size_t sym = static_cast<std::size_t>(n) * (n + 1) / 2;
    std::size_t alt = static_cast<std::size_t>(n) * (n - 1) / 2;
    check(rep, "rhat-multiplicity-q", n, 2,
          (r - DenseOperator::scalar(d, q)).rank() == d - sym, "symmetric rank off");
    check(rep, "rhat-multiplicity[-q^-1]", n, 2,
          (r + DenseOperator::scalar(d, Scalar::q_power(-1, generic()))).rank() == d - alt,
          "antisymmetric rank off");

    rep.append(verify_hecke_rep(n, k));

    // Projector family of the double braiding on V (x) V.
    DenseOperator y = y_op(n, 2, 2);
    std::vector<long> exps = content_exponents(n, 1);
    SpectralDecomposition dec = spectral_projectors(y, exps);
    DenseOperator sum(y.dim());
    bool idem = true, comm = true, orth = true;
    for (std::size_t i = 0; i < dec.projectors.size(); ++i) {
        const DenseOperator& p = dec.projectors[i];
        sum += p;
        if (!(p.mul(p) == p)) idem = false;
        if (!(p.mul(y) == y.mul(p))) comm = false;
        for (std::size_t j = i + 1; j < dec.projectors.size(); ++j)
            if (!p.mul(dec.projectors[j]).is_zero()) orth = false;
    }
    check(rep, "projector-idempotent", n, 2, idem, "P^2 != P");
    check(rep, "projector-orthogonal", n, 2, orth, "P_i P_j != 0");
    check(rep, "projector-commutes", n, 2, comm, "PY != YP");
    check(rep, "projector-complete", n, 2, sum == DenseOperator::identity(y.dim()),
          "sum != identity");

    for (int j = 1; j <= k; ++j)
        check(rep, "antisym-rank[k=" + std::to_string(j) + "]", n, j,
              antisym_rank(n, j) == static_cast<std::size_t>(binomial(n, j)),
              "rank != binomial");

    for (long a : {0L, 1L, 2L}) rep.append(e2_invariance_check(n, 1, a));
    return rep;
}

// ---- verify k0 -------------------------------------------------------------

// Every weight of rank n with entries in [lo, hi].
std::vector<Weight> weight_box(int n, long lo, long hi) {
    std::vector<Weight> out;
    Weight w(static_cast<std::size_t>(n), lo);
    for (;;) {
        out.push_back(w);
        int pos = n - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == hi) {
            w[static_cast<std::size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        w[static_cast<std::size_t>(pos)] += 1;
    }
    return out;
}

VerificationReport k0_axiom_checks(int n, const std::vector<Weight>& box, const Regime& regime,
                                   const std::vector<long>& as, int k_tag) {
    VerificationReport rep;
    for (long a : as) {
        std::string tag = "[a=" + std::to_string(a) + (regime.is_generic() ? "]" : ",mod ell]");
        bool ef = true, he = true, hf = true;
        std::string witness;
        for (const Weight& lam : box) {
            if (!regime.is_generic() && !is_dominant(lam)) continue;
            K0Vector v = K0Vector::basis(n, regime, lam);
            K0Vector lhs = apply_e(apply_f(v, a), a) - apply_f(apply_e(v, a), a);
            if (!(lhs == apply_h(v, a))) {
                ef = false;
                witness = weight_to_string(lam);
                break;
            }
            K0Vector he_l = apply_h(apply_e(v, a), a) - apply_e(apply_h(v, a), a);
            if (!(he_l == apply_e(v, a).scaled(2))) {
                he = false;
                witness = weight_to_string(lam);
                break;
            }
            K0Vector hf_l = apply_h(apply_f(v, a), a) - apply_f(apply_h(v, a), a);
            if (!(hf_l == apply_f(v, a).scaled(-2))) {
                hf = false;
                witness = weight_to_string(lam);
                break;
            }
        }
        check(rep, "k0-axiom-ef-h" + tag, n, k_tag, ef, "fails at " + witness);
        check(rep, "k0-axiom-he-2e" + tag, n, k_tag, he, "fails at " + witness);
        check(rep, "k0-axiom-hf-2f" + tag, n, k_tag, hf, "fails at " + witness);
    }
    return rep;
}

VerificationReport k0_suite(int n, long box, std::optional<long> ell) {
    if (box < 1 || box > 6) throw DomainError("verify k0: need 1 <= box <= 6");
    VerificationReport rep;
    std::vector<Weight> weights = weight_box(n, -box, box);
    rep.append(k0_axiom_checks(n, weights, Regime::generic(), {-1, 0, 1}, 0));

    for (long a : {-1L, 0L, 1L}) {
        bool agree = true, blocks = true;
        std::string witness;
        for (const Weight& lam : weights) {
            K0Vector v = K0Vector::basis(n, Regime::generic(), lam);
            K0Vector closed = reflect_closed(v, a);
            if (!(closed == reflect_exp(v, a)) || !(closed == reflect_euler(v, a))) {
                agree = false;
                witness = weight_to_string(lam);
                break;
            }
            long m = homogeneous_block(v, a);
            if (!(apply_h(closed, a) == closed.scaled(-m))) {
                blocks = false;
                witness = weight_to_string(lam);
                break;
            }
        }
        check(rep, "reflection-agreement[a=" + std::to_string(a) + "]", n, 0, agree,
              "fails at " + witness);
        check(rep, "reflection-block-negation[a=" + std::to_string(a) + "]", n, 0, blocks,
              "fails at " + witness);
    }

    if (ell) {
        Regime regime = Regime::root_of_unity(*ell);
        std::vector<Weight> dom = weight_box(n, 0, 2 * box);
        std::vector<long> as;
        for (long a = 0; a < *ell; ++a) as.push_back(a);
        rep.append(k0_axiom_checks(n, dom, regime, as, 0));
    }
    return rep;
}

// ---- command implementations -----------------------------------------------

struct VerifyOptions {
    std::string suite;
    int n = 2;
    int k = 3;
    long box = 2;
    std::optional<long> ell;
    unsigned seed = 1;
    std::string out;
};

int run_verify(const VerifyOptions& opt) {
    VerificationReport rep;
    if (opt.suite == "hecke") {
        rep = hecke_suite(opt.k, opt.seed);
    } else if (opt.suite == "braid") {
        rep = verify_braid_relations(opt.n, opt.k);
    } else if (opt.suite == "rmatrix") {
        rep = rmatrix_suite(opt.n, opt.k);
    } else if (opt.suite == "k0") {
        rep = k0_suite(opt.n, opt.box, opt.ell);
    } else {
        throw DomainError("unknown suite '" + opt.suite + "'");
    }
    std::cout << rep.to_text();
    if (!opt.out.empty()) write_output(opt.out, rep.to_json());
    return rep.all_pass() ? 0 : 1;
}

struct K0Options {
    std::string op = "e";
    long a = 0;
    std::string lambda, mu;
    std::string in, out;
};

int run_k0_vector_command(const std::string& sub, const K0Options& opt) {
    K0Vector v = k0_from_json(read_input(opt.in));
    K0Vector result(v.rank(), v.regime());
    if (sub == "apply") {
        if (opt.op == "e")
            result = apply_e(v, opt.a);
        else if (opt.op == "f")
            result = apply_f(v, opt.a);
        else if (opt.op == "h")
            result = apply_h(v, opt.a);
        else
            throw DomainError("k0 apply: --op must be e, f or h");
    } else if (sub == "reflect") {
        result = reflect_closed(v, opt.a);
    } else {
        result = reflect_euler(v, opt.a);
    }
    write_output(opt.out, k0_to_json(result));
    return 0;
}

int run_k0_path(const K0Options& opt) {
    Weight lambda = parse_weight(opt.lambda);
    Weight mu = parse_weight(opt.mu);
    PathCertificate cert = derived_path(lambda, mu);
    write_output(opt.out, certificate_to_json(cert));
    return cert.pass ? 0 : 1;
}

struct OrbitOptions {
    std::string lambda, mu;
    std::optional<long> ell;
    std::string out;
};

int run_orbit(const OrbitOptions& opt) {
    Weight lambda = parse_weight(opt.lambda);
    Weight mu = parse_weight(opt.mu);
    if (lambda.size() != mu.size())
        throw DomainError("orbit: weights must have equal rank");
    Regime regime = opt.ell ? Regime::root_of_unity(*opt.ell) : Regime::generic();

    bool stab = same_dot_stabilizer(lambda, mu);
    bool linked = linkage_equal(lambda, mu, regime);
    auto word = t_group_path(lambda, mu);

    std::ostringstream json;
    json << "{\n  \"lambda\": \"" << weight_to_string(lambda) << "\",\n  \"mu\": \""
         << weight_to_string(mu) << "\",\n  \"same_dot_stabilizer\": "
         << (stab ? "true" : "false") << ",\n  \"linkage_equal\": " << (linked ? "true" : "false")
         << ",\n  \"word\": ";
    if (word)
        json << "\"" << t_word_to_string(*word) << "\"";
    else
        json << "null";
    json << "\n}";
    write_output(opt.out, json.str());
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact verifier for braided tensor operators, affine Hecke rewriting, "
                 "and reflection combinatorics on Grothendieck groups"};
    app.name("qcat");
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", vopt.suite, "hecke | braid | rmatrix | k0")
        ->required()
        ->check(CLI::IsMember({"hecke", "braid", "rmatrix", "k0"}));
    verify->add_option("--n", vopt.n, "rank of gl_n / value range");
    verify->add_option("--k", vopt.k, "tensor factors or Hecke parameter");
    verify->add_option("--box", vopt.box, "weight box radius for the k0 suite");
    verify->add_option("--ell", vopt.ell, "root-of-unity order (k0 suite)");
    verify->add_option("--seed", vopt.seed, "seed for randomized trials");
    verify->add_option("--out", vopt.out, "write the report JSON here");

    K0Options kopt;
    CLI::App* k0cmd = app.add_subcommand("k0", "Grothendieck-group operators");
    k0cmd->require_subcommand(1);
    CLI::App* apply = k0cmd->add_subcommand("apply", "apply e, f or h to a vector");
    apply->add_option("--op", kopt.op, "e | f | h")->required();
    apply->add_option("--a", kopt.a, "content index")->required();
    apply->add_option("--in", kopt.in, "input K0 vector JSON (default stdin)");
    apply->add_option("--out", kopt.out, "output path (default stdout)");
    CLI::App* reflect = k0cmd->add_subcommand("reflect", "signed reflection on classes");
    reflect->add_option("--a", kopt.a, "content index")->required();
    reflect->add_option("--in", kopt.in, "input K0 vector JSON (default stdin)");
    reflect->add_option("--out", kopt.out, "output path (default stdout)");
    CLI::App* theta = k0cmd->add_subcommand("theta", "alternating divided-power sum");
    theta->add_option("--a", kopt.a, "content index")->required();
    theta->add_option("--in", kopt.in, "input K0 vector JSON (default stdin)");
    theta->add_option("--out", kopt.out, "output path (default stdout)");
    CLI::App* path = k0cmd->add_subcommand("path", "derived-equivalence path certificate");
    path->add_option("--lambda", kopt.lambda, "start weight, e.g. 1,0")->required();
    path->add_option("--mu", kopt.mu, "end weight")->required();
    path->add_option("--out", kopt.out, "output path (default stdout)");

    OrbitOptions oopt;
    CLI::App* orbit = app.add_subcommand("orbit", "dot-orbit and linkage facts");
    orbit->add_option("--lambda", oopt.lambda, "first weight")->required();
    orbit->add_option("--mu", oopt.mu, "second weight")->required();
    orbit->add_option("--ell", oopt.ell, "root-of-unity order (default generic)");
    orbit->add_option("--out", oopt.out, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(vopt);
        if (k0cmd->parsed()) {
            if (apply->parsed()) return run_k0_vector_command("apply", kopt);
            if (reflect->parsed()) return run_k0_vector_command("reflect", kopt);
            if (theta->parsed()) return run_k0_vector_command("theta", kopt);
            if (path->parsed()) return run_k0_path(kopt);
        }
        if (orbit->parsed()) return run_orbit(oopt);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace qcat::cli
