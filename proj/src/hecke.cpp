#include "qcat/hecke.hpp"

#include <tuple>

#include "qcat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcat {

HeckeContext::HeckeContext(int size, Scalar q0) : size_(size), q0_(std::move(q0)) {
    if (size_ < 1) throw DomainError("Hecke context needs at least one strand");
    if (q0_.is_zero() || q0_.is_one())
        throw DomainError("Hecke parameter q0 must be invertible and != 1");
}

HeckeElement HeckeElement::zero() {
    return {};
}

HeckeElement HeckeElement::unit(const HeckeContext& ctx) {
    return monomial(ctx, std::vector<int>(std::size_t(ctx.size()), 0),
                    Permutation::identity(ctx.size()), Scalar::one(ctx.mode()));
}

HeckeElement HeckeElement::monomial(const HeckeContext& ctx, std::vector<int> xexp,
                                    const Permutation& w, const Scalar& c) {
    if (int(xexp.size()) != ctx.size() || w.size() != ctx.size())
        throw DomainError("monomial data does not match the context size");
    HeckeElement e;
    e.add_term({std::move(xexp), w}, c);
    return e;
}

HeckeElement HeckeElement::x_power(const HeckeContext& ctx, int i, int exp) {
    if (i < 1 || i > ctx.size()) throw DomainError("X index out of range");
    std::vector<int> xe(std::size_t(ctx.size()), 0);
    xe[std::size_t(i - 1)] = exp;
    return monomial(ctx, std::move(xe), Permutation::identity(ctx.size()),
                    Scalar::one(ctx.mode()));
}

HeckeElement HeckeElement::t_basis(const HeckeContext& ctx, const Permutation& w) {
    return monomial(ctx, std::vector<int>(std::size_t(ctx.size()), 0), w,
                    Scalar::one(ctx.mode()));
}

HeckeElement HeckeElement::t_gen(const HeckeContext& ctx, int i) {
    return t_basis(ctx, Permutation::transposition(ctx.size(), i));
}

HeckeElement HeckeElement::t_gen_inverse(const HeckeContext& ctx, int i) {
    // T_i^-1 = q0^-1 T_i + (q0^-1 - 1), from the quadratic relation.
    Scalar qinv = ctx.q0().inverse();
    HeckeElement e = t_gen(ctx, i).scaled(qinv);
    e += unit(ctx).scaled(qinv - Scalar::one(ctx.mode()));
    return e;
}

void HeckeElement::add_term(const HeckeKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const Scalar& c) const {
    HeckeElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

namespace {

// T_i X^beta rewritten as sum of d * X^gamma (T_i)^{0 or 1}.  Peels one X_i or
// X_{i+1} per step, so the strand-i exponent gap shrinks by one each level and
// the expansion has |beta_i - beta_{i+1}| + 1 terms.
struct TXTerm {
    std::vector<int> xexp;
    bool has_t;
    Scalar coeff;
};

std::vector<TXTerm> t_times_x(const HeckeContext& ctx, int i, const std::vector<int>& beta) {
    int a = beta[std::size_t(i - 1)];
    int b = beta[std::size_t(i)];
    if (a == b) return {{beta, true, Scalar::one(ctx.mode())}};
    const Scalar one = Scalar::one(ctx.mode());
    if (a > b) {
        // T_i X_i = X_{i+1} T_i + (1 - q0) X_{i+1}
        std::vector<int> bp = beta;
        bp[std::size_t(i - 1)] -= 1;
        auto rec = t_times_x(ctx, i, bp);
        for (auto& t : rec) t.xexp[std::size_t(i)] += 1;
        std::vector<int> extra = bp;
        extra[std::size_t(i)] += 1;
        rec.push_back({std::move(extra), false, one - ctx.q0()});
        return rec;
    }
    // T_i X_{i+1} = X_i T_i + (q0 - 1) X_{i+1}
    std::vector<int> bp = beta;
    bp[std::size_t(i)] -= 1;
    auto rec = t_times_x(ctx, i, bp);
    for (auto& t : rec) t.xexp[std::size_t(i - 1)] += 1;
    std::vector<int> extra = bp;
    extra[std::size_t(i)] += 1;
    rec.push_back({std::move(extra), false, ctx.q0() - one});
    return rec;
}

} // namespace

HeckeElement lmul_t(const HeckeContext& ctx, int i, const HeckeElement& e) {
    if (i < 1 || i >= ctx.size()) throw DomainError("T index out of range");
    HeckeElement r;
    const Permutation si = Permutation::transposition(ctx.size(), i);
    const Scalar q0m1 = ctx.q0() - Scalar::one(ctx.mode());
    for (const auto& [key, c] : e.terms()) {
        for (auto& part : t_times_x(ctx, i, key.xexp)) {
            Scalar d = c * part.coeff;
            if (!part.has_t) {
                r.add_term({std::move(part.xexp), key.w}, d);
                continue;
            }
            // T_i T_w: length-additive case stays a basis element, otherwise
            // the quadratic relation splits it.
            Permutation sw = si * key.w;
            if (sw.length() > key.w.length()) {
                r.add_term({std::move(part.xexp), sw}, d);
            } else {
                r.add_term({part.xexp, key.w}, d * q0m1);
                r.add_term({std::move(part.xexp), sw}, d * ctx.q0());
            }
        }
    }
    return r;
}

namespace {

// X^alpha * (T_w * y), the per-term work item of a product.
HeckeElement term_times(const HeckeContext& ctx, const HeckeKey& key, const Scalar& c,
                        const HeckeElement& y) {
    HeckeElement z = y;
    std::vector<int> word = key.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) z = lmul_t(ctx, *it, z);
    HeckeElement r;
    for (const auto& [k, v] : z.terms()) {
        HeckeKey shifted = k;
        for (std::size_t s = 0; s < shifted.xexp.size(); ++s)
            shifted.xexp[s] += key.xexp[s];
        r.add_term(shifted, v * c);
    }
    return r;
}

void check_operands(const HeckeContext& ctx, const HeckeElement& x, const HeckeElement& y) {
    for (const auto* e : {&x, &y})
        for (const auto& [k, c] : e->terms())
            if (int(k.xexp.size()) != ctx.size())
                throw DomainError("element does not belong to this context");
}

} // namespace

HeckeElement mul_serial(const HeckeContext& ctx, const HeckeElement& x, const HeckeElement& y) {
    check_operands(ctx, x, y);
    HeckeElement r;
    for (const auto& [key, c] : x.terms()) r += term_times(ctx, key, c, y);
    return r;
}

HeckeElement mul(const HeckeContext& ctx, const HeckeElement& x, const HeckeElement& y) {
    check_operands(ctx, x, y);
    std::vector<const std::pair<const HeckeKey, Scalar>*> items;
    items.reserve(x.term_count());
    for (const auto& kv : x.terms()) items.push_back(&kv);
    HeckeElement r;
#pragma omp parallel
    {
        HeckeElement local;
#pragma omp for schedule(dynamic) nowait
        for (long idx = 0; idx < long(items.size()); ++idx)
            local += term_times(ctx, items[std::size_t(idx)]->first,
                                items[std::size_t(idx)]->second, y);
#pragma omp critical(qcat_hecke_mul_merge)
        r += local;
    }
    return r;
}

HeckeElement power(const HeckeContext& ctx, const HeckeElement& x, int e) {
    if (e < 0) throw DomainError("negative Hecke element power");
    HeckeElement acc = HeckeElement::unit(ctx);
    for (int j = 0; j < e; ++j) acc = mul(ctx, acc, x);
    return acc;
}

HeckeElement symmetrizer(const HeckeContext& ctx, SymmetrizerKind kind) {
    HeckeElement c;
    const Scalar mq0inv = (-ctx.q0()).inverse();
    for (const auto& w : all_permutations(ctx.size())) {
        Scalar coeff = kind == SymmetrizerKind::Trivial
                           ? Scalar::one(ctx.mode())
                           : mq0inv.pow(w.length());
        c.add_term({std::vector<int>(std::size_t(ctx.size()), 0), w}, coeff);
    }
    return c;
}

Scalar symmetrizer_scale(const HeckeContext& ctx, SymmetrizerKind kind) {
    Scalar p = Scalar::zero(ctx.mode());
    for (const auto& w : all_permutations(ctx.size()))
        p += ctx.q0().pow(kind == SymmetrizerKind::Trivial ? w.length() : -w.length());
    return p;
}

VerificationReport verify_commutation(const HeckeContext& ctx, int n_power, const mpq_class& a) {
    if (ctx.size() < 2) throw DomainError("commutation check needs at least two strands");
    if (n_power < 1) throw DomainError("commutation check needs a positive power");
    if (n_power > 16) throw ResourceLimit("commutation power out of range");
    const Scalar one = Scalar::one(ctx.mode());
    const HeckeElement t1 = HeckeElement::t_gen(ctx, 1);
    const HeckeElement unit = HeckeElement::unit(ctx);
    const HeckeElement x1a =
        HeckeElement::x_power(ctx, 1, 1) - unit.scaled(Scalar::rational(a, ctx.mode()));
    const HeckeElement x2a =
        HeckeElement::x_power(ctx, 2, 1) - unit.scaled(Scalar::rational(a, ctx.mode()));

    HeckeElement lhs = mul(ctx, t1, power(ctx, x2a, n_power)) -
                       mul(ctx, power(ctx, x1a, n_power), t1);
    HeckeElement sum = HeckeElement::zero();
    for (int j = 0; j <= n_power - 1; ++j)
        sum += mul(ctx, power(ctx, x1a, n_power - 1 - j), power(ctx, x2a, j));
    HeckeElement rhs = mul(ctx, HeckeElement::x_power(ctx, 2, 1), sum).scaled(ctx.q0() - one);

    VerificationReport rep;
    std::string name = "T1-past-(X2-a)^N straightening, N=" + std::to_string(n_power) +
                       ", a=" + a.get_str();
    if (lhs == rhs) {
        rep.add_pass(name, ctx.size(), n_power);
    } else {
        HeckeElement diff = lhs - rhs;
        rep.add_fail(name, ctx.size(), n_power, "difference = " + render(ctx, diff));
    }
    return rep;
}

} // namespace qcat
