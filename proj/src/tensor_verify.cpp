#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/permutation.hpp"
#include "qcat/tensor_ops.hpp"

namespace qcat {

namespace {

ScalarMode generic() { return ScalarMode::generic(); }

std::string entry_witness(const DenseOperator& lhs, const DenseOperator& rhs) {
    for (std::size_t i = 0; i < lhs.dim(); ++i)
        for (std::size_t j = 0; j < lhs.dim(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "): " + lhs.at(i, j).render() + " vs " + rhs.at(i, j).render();
    return "";
}

void check_equal(VerificationReport& rep, std::string relation, int n, int k,
                 const DenseOperator& lhs, const DenseOperator& rhs) {
    if (lhs == rhs)
        rep.add_pass(std::move(relation), n, k);
    else
        rep.add_fail(std::move(relation), n, k, entry_witness(lhs, rhs));
}

std::string idx1(const char* name, int i) {
    return std::string(name) + "[i=" + std::to_string(i) + "]";
}

std::string idx2(const char* name, int i, int j) {
    return std::string(name) + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
}

// b_p^{-1} = b_p - (q - q^{-1}), from the quadratic relation of r_hat.
DenseOperator adjacent_braiding_inverse(int n, int k, int p) {
    DenseOperator b = adjacent_braiding(n, k, p);
    Scalar hook = Scalar::q_power(1, generic()) - Scalar::q_power(-1, generic());
    return b - DenseOperator::scalar(b.dim(), hook);
}

DenseOperator y_op_inverse(int n, int k, int i) {
    TensorSpace space(n, k);
    int p = k - i + 1;
    DenseOperator acc = DenseOperator::identity(space.dim());
    for (int j = p; j <= k - 1; ++j) acc = acc.mul(adjacent_braiding_inverse(n, k, j));
    for (int j = k - 1; j >= p; --j) acc = acc.mul(adjacent_braiding_inverse(n, k, j));
    return acc;
}

} // namespace

VerificationReport verify_braid_relations(int n, int k) {
    if (k < 1) throw DomainError("verify_braid_relations: need k >= 1");
    VerificationReport rep;
    std::vector<DenseOperator> sigma, y;
    sigma.reserve(static_cast<std::size_t>(k));
    y.reserve(static_cast<std::size_t>(k + 1));
    sigma.push_back(DenseOperator(0)); // 1-based
    y.push_back(DenseOperator(0));
    for (int i = 1; i <= k - 1; ++i) sigma.push_back(sigma_op(n, k, i));
    for (int i = 1; i <= k; ++i) y.push_back(y_op(n, k, i));

    for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 2; j <= k - 1; ++j)
            check_equal(rep, idx2("coxeter1", i, j), n, k, sigma[i] * sigma[j],
                        sigma[j] * sigma[i]);
    for (int i = 1; i + 1 <= k - 1; ++i)
        check_equal(rep, idx1("coxeter2", i), n, k, sigma[i] * sigma[i + 1] * sigma[i],
                    sigma[i + 1] * sigma[i] * sigma[i + 1]);
    for (int i = 1; i <= k - 1; ++i)
        check_equal(rep, idx1("affine1", i), n, k, sigma[i] * y[i] * sigma[i], y[i + 1]);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k; ++j) {
            if (std::abs(i - j) <= 1) continue;
            check_equal(rep, idx2("affine2", i, j), n, k, sigma[i] * y[j], y[j] * sigma[i]);
        }
    for (int i = 1; i + 1 <= k; ++i)
        check_equal(rep, idx1("affine3", i), n, k, sigma[i] * y[i] * y[i + 1],
                    y[i + 1] * y[i] * sigma[i]);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            check_equal(rep, idx2("affine4", i, j), n, k, y[i] * y[j], y[j] * y[i]);
    return rep;
}

VerificationReport verify_hecke_rep(int n, int k) {
    if (k < 1) throw DomainError("verify_hecke_rep: need k >= 1");
    int kk = k + 1; // number of tensor factors; H_{k+1} has T_1..T_k, X_1..X_{k+1}
    TensorSpace space(n, kk);
    std::size_t d = space.dim();
    Scalar q = Scalar::q_power(1, generic());
    Scalar q0 = Scalar::q_power(2, generic());
    DenseOperator id = DenseOperator::identity(d);

    std::vector<DenseOperator> t, x, xinv;
    t.push_back(DenseOperator(0));
    x.push_back(DenseOperator(0));
    xinv.push_back(DenseOperator(0));
    for (int i = 1; i <= k; ++i) t.push_back(sigma_op(n, kk, i).scaled(q));
    for (int i = 1; i <= kk; ++i) {
        x.push_back(y_op(n, kk, i));
        xinv.push_back(y_op_inverse(n, kk, i));
    }

    VerificationReport rep;
    for (int i = 1; i <= k; ++i)
        check_equal(rep, idx1("quadratic", i), n, k,
                    (t[i] + id) * (t[i] - DenseOperator::scalar(d, q0)), DenseOperator(d));
    for (int i = 1; i + 1 <= k; ++i)
        check_equal(rep, idx1("braid", i), n, k, t[i] * t[i + 1] * t[i],
                    t[i + 1] * t[i] * t[i + 1]);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j)
            check_equal(rep, idx2("commute-tt", i, j), n, k, t[i] * t[j], t[j] * t[i]);
    for (int i = 1; i <= kk; ++i)
        for (int j = i + 1; j <= kk; ++j)
            check_equal(rep, idx2("commute-xx", i, j), n, k, x[i] * x[j], x[j] * x[i]);
    for (int i = 1; i <= kk; ++i)
        check_equal(rep, idx1("x-inverse", i), n, k, x[i] * xinv[i], id);
    for (int i = 1; i <= k; ++i)
        check_equal(rep, idx1("affine-txt", i), n, k, t[i] * x[i] * t[i],
                    x[i + 1].scaled(q0));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= kk; ++j) {
            if (j == i || j == i + 1) continue;
            check_equal(rep, idx2("commute-tx", i, j), n, k, t[i] * x[j], x[j] * t[i]);
        }
    for (int i = 1; i <= k; ++i)
        check_equal(rep, idx1("tx-pair", i), n, k, t[i] * x[i] * x[i + 1],
                    x[i + 1] * x[i] * t[i]);
    return rep;
}

SpectralDecomposition spectral_projectors(const DenseOperator& y,
                                          const std::vector<long>& exponents) {
    std::set<long> seen(exponents.begin(), exponents.end());
    if (seen.size() != exponents.size())
        throw DomainError("spectral_projectors: duplicate exponents");
    std::size_t d = y.dim();

    std::vector<std::vector<std::vector<Scalar>>> kernels;
    std::size_t total = 0;
    for (long e : exponents) {
        DenseOperator shifted = y - DenseOperator::scalar(d, Scalar::q_power(e, generic()));
        // Walk up (y - q^e)^j until the kernel stops growing; the chain is
        // monotone, so stabilization certifies the full generalized eigenspace
        // without paying for the degree blowup of the dim-th power.
        DenseOperator acc = shifted;
        auto ker = acc.kernel();
        for (std::size_t j = 1; j < d; ++j) {
            acc = acc.mul(shifted);
            auto next = acc.kernel();
            if (next.size() == ker.size()) break;
            ker = std::move(next);
        }
        total += ker.size();
        kernels.push_back(std::move(ker));
    }
    if (total != d)
        throw IncompleteSpectrum("spectral_projectors: exponent list covers " +
                                 std::to_string(total) + " of " + std::to_string(d) +
                                 " dimensions");

    // Change of basis to the concatenated generalized eigenbasis; projector for
    // one exponent keeps that block and kills the rest.
    DenseOperator b(d);
    std::size_t col = 0;
    for (const auto& ker : kernels)
        for (const auto& v : ker) {
            for (std::size_t i = 0; i < d; ++i) b.at(i, col) = v[i];
            ++col;
        }
    DenseOperator binv = b.inverse();

    SpectralDecomposition out;
    out.exponents = exponents;
    col = 0;
    for (const auto& ker : kernels) {
        DenseOperator block(d);
        for (std::size_t c = col; c < col + ker.size(); ++c)
            for (std::size_t i = 0; i < d; ++i) block.at(i, c) = b.at(i, c);
        out.projectors.push_back(block.mul(binv));
        out.ranks.push_back(ker.size());
        col += ker.size();
    }
    return out;
}

DenseOperator pr_projector(const DenseOperator& y, long exponent,
                           const std::vector<long>& candidates) {
    std::vector<long> list = candidates;
    if (std::find(list.begin(), list.end(), exponent) == list.end())
        list.push_back(exponent);
    SpectralDecomposition dec = spectral_projectors(y, list);
    for (std::size_t i = 0; i < dec.exponents.size(); ++i)
        if (dec.exponents[i] == exponent) return dec.projectors[i];
    throw InternalError("pr_projector: exponent vanished from its own list");
}

std::map<Weight, long> weyl_filtration(int n, int m) {
    if (n < 1 || m < 0) throw DomainError("weyl_filtration: need n >= 1, m >= 0");
    std::map<Weight, long> classes;
    classes[Weight(static_cast<std::size_t>(n), 0)] = 1;
    for (int step = 0; step < m; ++step) {
        std::map<Weight, long> next;
        for (const auto& [lam, mult] : classes)
            for (int i = 0; i < n; ++i) {
                Weight mu = lam;
                mu[static_cast<std::size_t>(i)] += 1;
                if (is_dominant(mu)) next[mu] += mult;
            }
        classes = std::move(next);
    }
    return classes;
}

mpz_class weyl_dim(const Weight& kappa) {
    int n = static_cast<int>(kappa.size());
    mpq_class acc = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc *= mpq_class(kappa[static_cast<std::size_t>(i)] -
                                 kappa[static_cast<std::size_t>(j)] + j - i,
                             j - i);
    acc.canonicalize();
    if (acc.get_den() != 1) throw InternalError("weyl_dim: non-integral product");
    return acc.get_num();
}

std::vector<long> content_exponents(int n, int m) {
    std::set<long> exps;
    for (const auto& [lam, mult] : weyl_filtration(n, m))
        for (int i = 0; i < n; ++i) {
            Weight mu = lam;
            mu[static_cast<std::size_t>(i)] += 1;
            if (is_dominant(mu)) exps.insert(2 * content(lam, i));
        }
    return std::vector<long>(exps.begin(), exps.end());
}

DenseOperator e_a_projector(int n, int m, long a) {
    DenseOperator y = y_op(n, m + 1, m + 1);
    std::vector<long> candidates = content_exponents(n, m);
    long target = 2 * (a - 1);
    SpectralDecomposition dec = spectral_projectors(y, candidates);
    for (std::size_t i = 0; i < dec.exponents.size(); ++i)
        if (dec.exponents[i] == target) return dec.projectors[i];
    return DenseOperator(y.dim());
}

mpz_class e_a_rank_prediction(int n, int m, long a) {
    mpz_class total = 0;
    for (const auto& [lam, mult] : weyl_filtration(n, m))
        for (int i = 0; i < n; ++i) {
            if (content(lam, i) != a - 1) continue;
            Weight mu = lam;
            mu[static_cast<std::size_t>(i)] += 1;
            if (is_dominant(mu)) total += mpz_class(mult) * weyl_dim(mu);
        }
    return total;
}

std::size_t antisym_rank(int n, int k) {
    if (k < 1) throw DomainError("antisym_rank: need k >= 1");
    TensorSpace space(n, k);
    std::size_t d = space.dim();
    Scalar q = Scalar::q_power(1, generic());

    std::vector<DenseOperator> tgen; // Phi(T_i) = q sigma_i, 1-based
    tgen.push_back(DenseOperator(0));
    for (int i = 1; i <= k - 1; ++i) tgen.push_back(sigma_op(n, k, i).scaled(q));

    std::vector<Permutation> perms = all_permutations(k);
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        return a.length() < b.length();
    });

    // Phi(T_w) by one-generator extension along right descents.
    std::map<Permutation, DenseOperator> tw;
    DenseOperator acc(d);
    for (const Permutation& w : perms) {
        int len = w.length();
        if (len == 0) {
            tw.emplace(w, DenseOperator::identity(d));
        } else {
            int desc = 0;
            for (int i = 1; i <= k - 1; ++i)
                if (!w.has_right_ascent(i)) {
                    desc = i;
                    break;
                }
            if (desc == 0) throw InternalError("antisym_rank: no descent on a long element");
            Permutation shorter = w * Permutation::transposition(k, desc);
            tw.emplace(w, tw.at(shorter).mul(tgen[desc]));
        }
        // (-q0)^{-l(w)} with q0 = q^2; tw already carries Phi's q^{l(w)}.
        Scalar coeff = Scalar::q_power(-2 * len, generic());
        if (len % 2 != 0) coeff = -coeff;
        acc += tw.at(w).scaled(coeff);
    }
    return acc.rank();
}

VerificationReport e2_invariance_check(int n, int m, long a) {
    if (m < 0) throw DomainError("e2_invariance_check: need m >= 0");
    int kk = m + 2;
    TensorSpace space(n, kk);
    std::size_t d = space.dim();
    DenseOperator x1 = y_op(n, kk, m + 1);
    DenseOperator x2 = y_op(n, kk, m + 2);
    DenseOperator sig = sigma_op(n, kk, kk - 1); // braids the two leftmost factors

    Scalar target = Scalar::q_power(2 * (a - 1), generic());
    DenseOperator n1 = (x1 - DenseOperator::scalar(d, target)).power(static_cast<long>(d));
    DenseOperator n2 = (x2 - DenseOperator::scalar(d, target)).power(static_cast<long>(d));

    // Joint generalized eigenspace: kernel of the stacked matrix.
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = n1.at(i, j);
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = n2.at(i, j);
        rows.push_back(std::move(row));
    }
    auto joint = kernel_basis(std::move(rows), d);

    VerificationReport rep;
    std::string relation = "e2-invariance[a=" + std::to_string(a) + "]";
    if (joint.empty()) {
        rep.add_pass(relation, n, m);
        return rep;
    }

    // sigma W inside span(W): augmenting the span with the images must not
    // raise the rank.  Columns become rows; rank is transpose-invariant.
    std::vector<std::vector<Scalar>> span_rows = joint;
    std::size_t base_rank = rank_of(span_rows);
    for (const auto& v : joint) span_rows.push_back(sig.apply(v));
    std::size_t extended_rank = rank_of(span_rows);
    if (base_rank == extended_rank)
        rep.add_pass(relation, n, m);
    else
        rep.add_fail(relation, n, m,
                     "sigma_1 leaks the joint eigenspace: rank " + std::to_string(base_rank) +
                         " grows to " + std::to_string(extended_rank));
    return rep;
}

} // namespace qcat
