#include "qcat/k0.hpp"

#include <algorithm>
#include <cstddef>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

long mod_ell(long x, long ell) {
    long r = x % ell;
    return r < 0 ? r + ell : r;
}

// Dense rational matrices, used only for the exponential model of the
// reflection and for the 2x2 sanity data.
using Mat = std::vector<std::vector<mpq_class>>;

Mat mat_zero(std::size_t n) {
    return Mat(n, std::vector<mpq_class>(n, mpq_class(0)));
}

Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size();
    Mat c = mat_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

void mat_add_to(Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
}

void mat_scale(Mat& a, const mpq_class& c) {
    for (auto& row : a)
        for (auto& x : row) x *= c;
}

// exp(M) for nilpotent M, by the terminating series.
Mat mat_exp_nilpotent(const Mat& m) {
    std::size_t n = m.size();
    Mat acc = mat_identity(n);
    Mat term = mat_identity(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        term = mat_mul(term, m);
        mat_scale(term, mpq_class(1, static_cast<long>(k)));
        if (mat_is_zero(term)) return acc;
        mat_add_to(acc, term);
    }
    throw InternalError("matrix exponential: input is not nilpotent");
}

void require_generic(const Regime& regime, const char* what) {
    if (!regime.is_generic())
        throw DomainError(std::string(what) + " is defined in the generic regime only");
}

} // namespace

K0Vector::K0Vector(int n, Regime regime) : n_(n), regime_(regime) {
    if (n < 1) throw DomainError("K0Vector: rank must be at least 1");
}

K0Vector K0Vector::basis(int n, const Regime& regime, const Weight& lambda) {
    K0Vector v(n, regime);
    v.add(lambda, 1);
    return v;
}

void K0Vector::add(const Weight& lambda, const mpq_class& coeff) {
    if (static_cast<int>(lambda.size()) != n_)
        throw DomainError("K0Vector: weight rank mismatch");
    if (!regime_.is_generic() && !is_dominant(lambda))
        throw DomainError("K0Vector: Weyl classes require dominant weights");
    if (coeff == 0) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

K0Vector K0Vector::operator-() const { return scaled(-1); }

K0Vector& K0Vector::operator+=(const K0Vector& o) {
    if (n_ != o.n_ || !(regime_ == o.regime_))
        throw ModeMismatch("K0Vector: mixed ranks or regimes");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

K0Vector& K0Vector::operator-=(const K0Vector& o) {
    if (n_ != o.n_ || !(regime_ == o.regime_))
        throw ModeMismatch("K0Vector: mixed ranks or regimes");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

K0Vector K0Vector::scaled(const mpq_class& c) const {
    K0Vector out(n_, regime_);
    if (c == 0) return out;
    for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
    return out;
}

bool K0Vector::operator==(const K0Vector& o) const {
    return n_ == o.n_ && regime_ == o.regime_ && terms_ == o.terms_;
}

K0Vector apply_e(const K0Vector& v, long a) {
    const Regime& regime = v.regime();
    K0Vector out(v.rank(), regime);
    for (const auto& [lam, c] : v.terms()) {
        for (int i = 0; i < v.rank(); ++i) {
            long ci = content(lam, i);
            if (regime.is_generic()) {
                if (ci != a - 1) continue;
            } else {
                if (mod_ell(ci, regime.ell()) != mod_ell(a - 1, regime.ell())) continue;
            }
            Weight mu = lam;
            mu[static_cast<std::size_t>(i)] += 1;
            if (!regime.is_generic() && !is_dominant(mu)) continue;
            out.add(mu, c);
        }
    }
    return out;
}

K0Vector apply_f(const K0Vector& v, long a) {
    const Regime& regime = v.regime();
    K0Vector out(v.rank(), regime);
    for (const auto& [lam, c] : v.terms()) {
        for (int i = 0; i < v.rank(); ++i) {
            long ci = content(lam, i);
            if (regime.is_generic()) {
                if (ci != a) continue;
            } else {
                if (mod_ell(ci, regime.ell()) != mod_ell(a, regime.ell())) continue;
            }
            Weight mu = lam;
            mu[static_cast<std::size_t>(i)] -= 1;
            if (!regime.is_generic() && !is_dominant(mu)) continue;
            out.add(mu, c);
        }
    }
    return out;
}

K0Vector apply_h(const K0Vector& v, long a) {
    K0Vector out(v.rank(), v.regime());
    for (const auto& [lam, c] : v.terms())
        out.add(lam, c * h_weight(lam, a, v.regime()));
    return out;
}

long block_of(const Weight& lambda, long a, const Regime& regime) {
    return h_weight(lambda, a, regime);
}

long homogeneous_block(const K0Vector& v, long a) {
    if (v.is_zero()) throw DomainError("homogeneous_block: zero vector has no block");
    bool first = true;
    long block = 0;
    for (const auto& [lam, c] : v.terms()) {
        long b = h_weight(lam, a, v.regime());
        if (first) {
            block = b;
            first = false;
        } else if (b != block) {
            throw DomainError("homogeneous_block: vector mixes h-weight blocks");
        }
    }
    return block;
}

K0Vector reflect_closed(const K0Vector& v, long a) {
    require_generic(v.regime(), "reflect_closed");
    K0Vector out(v.rank(), v.regime());
    for (const auto& [lam, c] : v.terms()) {
        // Toggle the contents sitting at a-1 and a; the sign counts the
        // positions leaving content a.
        int minus = 0;
        Weight mu = lam;
        for (int i = 0; i < v.rank(); ++i) {
            long ci = content(lam, i);
            if (ci == a) {
                mu[static_cast<std::size_t>(i)] -= 1;
                ++minus;
            } else if (ci == a - 1) {
                mu[static_cast<std::size_t>(i)] += 1;
            }
        }
        out.add(mu, (minus % 2 == 0) ? c : -c);
    }
    return out;
}

K0Vector reflect_exp(const K0Vector& v, long a) {
    require_generic(v.regime(), "reflect_exp");
    if (v.is_zero()) return v;

    // Close the support under independent toggles of the positions whose
    // content lies in {a-1, a}; e and f preserve the span of this set.
    std::vector<Weight> basis;
    std::map<Weight, std::size_t> index;
    for (const auto& [lam, c] : v.terms()) {
        std::vector<int> toggle;
        for (int i = 0; i < v.rank(); ++i) {
            long ci = content(lam, i);
            if (ci == a - 1 || ci == a) toggle.push_back(i);
        }
        std::size_t count = std::size_t(1) << toggle.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            Weight mu = lam;
            for (std::size_t t = 0; t < toggle.size(); ++t) {
                int i = toggle[t];
                long want = (mask >> t & 1) ? a : a - 1;
                mu[static_cast<std::size_t>(i)] += want - content(lam, i);
            }
            if (index.emplace(mu, basis.size()).second) {
                basis.push_back(mu);
                if (basis.size() > (std::size_t(1) << 16))
                    throw ResourceLimit("reflect_exp: toggle closure too large");
            }
        }
    }

    std::size_t dim = basis.size();
    Mat E = mat_zero(dim), F = mat_zero(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        K0Vector ev = apply_e(K0Vector::basis(v.rank(), v.regime(), basis[j]), a);
        for (const auto& [w, c] : ev.terms()) E[index.at(w)][j] += c;
        K0Vector fv = apply_f(K0Vector::basis(v.rank(), v.regime(), basis[j]), a);
        for (const auto& [w, c] : fv.terms()) F[index.at(w)][j] += c;
    }

    Mat mF = F;
    mat_scale(mF, -1);
    Mat S = mat_mul(mat_exp_nilpotent(mF), mat_mul(mat_exp_nilpotent(E), mat_exp_nilpotent(mF)));

    std::vector<mpq_class> coords(dim, mpq_class(0));
    for (const auto& [w, c] : v.terms()) coords[index.at(w)] = c;
    K0Vector out(v.rank(), v.regime());
    for (std::size_t i = 0; i < dim; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < dim; ++j)
            if (S[i][j] != 0 && coords[j] != 0) acc += S[i][j] * coords[j];
        if (acc != 0) out.add(basis[i], acc);
    }
    return out;
}

K0Vector reflect_euler(const K0Vector& v, long a) {
    require_generic(v.regime(), "reflect_euler");
    if (v.is_zero()) return v;
    long m = -homogeneous_block(v, a);

    // Alternating sum of divided powers e^(m+r) f^(r); f is locally nilpotent
    // on the content ladder, so the loop ends once f^(r) kills v.
    K0Vector out(v.rank(), v.regime());
    K0Vector fr = v; // f^(r) v
    mpq_class rfact = 1;
    for (long r = 0;; ++r) {
        if (r > 0) {
            fr = apply_f(fr, a);
            rfact *= r;
            if (fr.is_zero()) break;
        }
        long k = m + r;
        if (k < 0) continue;
        K0Vector term = fr.scaled(1 / rfact);
        mpq_class kfact = 1;
        for (long s = 1; s <= k; ++s) {
            term = apply_e(term, a);
            kfact *= s;
        }
        term = term.scaled(1 / kfact);
        if (r % 2 != 0) term = -term;
        out += term;
    }
    return out;
}

Sl2Data Sl2Data::standard() {
    Sl2Data d;
    d.e = {{{mpq_class(0), mpq_class(1)}, {mpq_class(0), mpq_class(0)}}};
    d.f = {{{mpq_class(0), mpq_class(0)}, {mpq_class(1), mpq_class(0)}}};
    d.h = {{{mpq_class(1), mpq_class(0)}, {mpq_class(0), mpq_class(-1)}}};
    d.s = {{{mpq_class(0), mpq_class(1)}, {mpq_class(-1), mpq_class(0)}}};
    return d;
}

bool Sl2Data::check() const {
    auto to_mat = [](const Mat2& m) {
        Mat out = mat_zero(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) out[i][j] = m[i][j];
        return out;
    };
    Mat E = to_mat(e), F = to_mat(f), H = to_mat(h), S = to_mat(s);

    Mat comm = mat_mul(E, F), fe = mat_mul(F, E);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) comm[i][j] -= fe[i][j];
    if (comm != H) return false;

    Mat mF = F;
    mat_scale(mF, -1);
    Mat prod = mat_mul(mat_exp_nilpotent(mF), mat_mul(mat_exp_nilpotent(E), mat_exp_nilpotent(mF)));
    return prod == S;
}

namespace {

// One determinant-twist or reflection letter on classes, together with the
// homological shift that makes its matrix the bare relabeling.  x is the
// rho-shifted base weight before the letter.
K0Vector apply_path_letter(const TLetter& g, const Weight& x, const K0Vector& v) {
    switch (g.kind) {
    case TLetter::Kind::Shift:
    case TLetter::Kind::ShiftInv: {
        long d = g.kind == TLetter::Kind::Shift ? 1 : -1;
        K0Vector out(v.rank(), v.regime());
        for (const auto& [w, c] : v.terms()) {
            Weight mu = w;
            for (auto& entry : mu) entry += d;
            out.add(mu, c);
        }
        return out;
    }
    case TLetter::Kind::Toggle: {
        long a = g.value - static_cast<long>(x.size()) + 1; // content scale
        int shift = 0;
        for (long entry : x)
            if (entry == g.value) ++shift;
        K0Vector image = reflect_closed(v, a);
        return shift % 2 == 0 ? image : -image;
    }
    }
    throw InternalError("apply_path_letter: unknown letter");
}

} // namespace

PathCertificate derived_path(const Weight& lambda, const Weight& mu) {
    if (lambda.size() != mu.size() || lambda.empty())
        throw DomainError("derived_path: weights must share a positive rank");
    auto word = t_group_path(lambda, mu);
    if (!word)
        throw DomainError("derived_path: dot stabilizers differ");
    int n = static_cast<int>(lambda.size());
    Regime regime = Regime::generic();

    PathCertificate cert;
    cert.lambda = lambda;
    cert.mu = mu;
    cert.word = *word;
    cert.pass = true;

    for (const Permutation& w : all_permutations(n)) {
        PathEntry entry;
        entry.w = w;
        entry.source = dot_action(w, lambda);
        entry.expected = dot_action(w, mu);

        K0Vector v = K0Vector::basis(n, regime, entry.source);
        Weight x = lambda;
        const Weight r = rho(n);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += r[i];
        for (const TLetter& g : cert.word) {
            v = apply_path_letter(g, x, v);
            x = apply_t_letter(g, x);
        }
        entry.image = v;
        entry.pass = v == K0Vector::basis(n, regime, entry.expected);
        if (!entry.pass) cert.pass = false;
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

} // namespace qcat
