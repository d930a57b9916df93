#include "qcat/weights.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "qcat/errors.hpp"

namespace qcat {

Regime Regime::root_of_unity(long ell) {
    if (ell < 3) throw DomainError("root-of-unity order must be >= 3");
    return Regime(ell);
}

long Regime::ell() const {
    if (is_generic()) throw DomainError("generic regime has no order");
    return ell_;
}

long trace_form(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw DomainError("trace form needs equal lengths");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Weight rho(int n) {
    Weight r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[std::size_t(i)] = n - 1 - i;
    return r;
}

bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

long content(const Weight& lambda, int i) {
    if (i < 0 || std::size_t(i) >= lambda.size()) throw DomainError("content index out of range");
    return lambda[std::size_t(i)] - i;
}

std::vector<long> contents(const Weight& lambda) {
    std::vector<long> c(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) c[i] = lambda[i] - long(i);
    return c;
}

Weight permute(const Permutation& w, const Weight& mu) {
    if (w.size() != int(mu.size())) throw DomainError("permutation and weight sizes differ");
    Weight r(mu.size());
    for (int i = 0; i < w.size(); ++i) r[std::size_t(w(i))] = mu[std::size_t(i)];
    return r;
}

Weight dot_action(const Permutation& w, const Weight& lambda) {
    Weight x = lambda;
    Weight rh = rho(int(lambda.size()));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += rh[i];
    x = permute(w, x);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= rh[i];
    return x;
}

Weight affine_dot_action(int i, long m, const Weight& lambda, const Regime& regime) {
    if (regime.is_generic())
        throw DomainError("affine reflections act only at a root of unity");
    int n = int(lambda.size());
    if (i < 1 || i >= n) throw DomainError("affine reflection index out of range");
    Weight x = lambda;
    Weight rh = rho(n);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += rh[j];
    std::swap(x[std::size_t(i - 1)], x[std::size_t(i)]);
    x[std::size_t(i - 1)] += m * regime.ell();
    x[std::size_t(i)] -= m * regime.ell();
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= rh[j];
    return x;
}

bool arrow(const Weight& lambda, const Weight& mu, long a, const Regime& regime) {
    if (lambda.size() != mu.size()) return false;
    int delta_at = -1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        long d = mu[i] - lambda[i];
        if (d == 0) continue;
        if (d != 1 || delta_at >= 0) return false;
        delta_at = int(i);
    }
    if (delta_at < 0) return false;
    long c = content(lambda, delta_at);
    if (regime.is_generic()) return c == a - 1;
    if (!is_dominant(lambda) || !is_dominant(mu)) return false;
    long ell = regime.ell();
    return ((c - (a - 1)) % ell + ell) % ell == 0;
}

long h_weight(const Weight& lambda, long a, const Regime& regime) {
    auto cs = contents(lambda);
    if (regime.is_generic()) {
        long removable = 0, addable = 0;
        for (long c : cs) {
            if (c == a) ++removable;
            if (c == a - 1) ++addable;
        }
        return removable - addable;
    }
    if (!is_dominant(lambda))
        throw DomainError("h-weight at a root of unity needs a dominant weight");
    long ell = regime.ell();
    auto congruent = [ell](long x, long y) { return ((x - y) % ell + ell) % ell == 0; };
    long removable = 0, addable = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (congruent(cs[i], a)) {
            Weight down = lambda;
            down[i] -= 1;
            if (is_dominant(down)) ++removable;
        }
        if (congruent(cs[i], a - 1)) {
            Weight up = lambda;
            up[i] += 1;
            if (is_dominant(up)) ++addable;
        }
    }
    return removable - addable;
}

// ---------------------------------------------------------------------------
// Toggle group.

Weight apply_t_letter(const TLetter& g, const Weight& x) {
    Weight r = x;
    switch (g.kind) {
        case TLetter::Kind::Shift:
            for (auto& v : r) v += 1;
            break;
        case TLetter::Kind::ShiftInv:
            for (auto& v : r) v -= 1;
            break;
        case TLetter::Kind::Toggle:
            for (auto& v : r) {
                if (v == g.value - 1)
                    v = g.value;
                else if (v == g.value)
                    v = g.value - 1;
            }
            break;
    }
    return r;
}

Weight apply_t_word(const TWord& word, const Weight& x) {
    Weight r = x;
    for (const auto& g : word) r = apply_t_letter(g, r);
    return r;
}

std::string t_word_to_string(const TWord& word) {
    std::string out;
    for (const auto& g : word) {
        if (!out.empty()) out += ' ';
        switch (g.kind) {
            case TLetter::Kind::Shift: out += "d"; break;
            case TLetter::Kind::ShiftInv: out += "d^-1"; break;
            case TLetter::Kind::Toggle: out += "t" + std::to_string(g.value); break;
        }
    }
    return out;
}

TWord parse_t_word(const std::string& text) {
    TWord word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string tok = text.substr(pos, end - pos);
        pos = end;
        if (tok == "d") {
            word.push_back({TLetter::Kind::Shift, 0});
        } else if (tok == "d^-1") {
            word.push_back({TLetter::Kind::ShiftInv, 0});
        } else if (tok.size() > 1 && tok[0] == 't') {
            try {
                word.push_back({TLetter::Kind::Toggle, std::stol(tok.substr(1))});
            } catch (const std::exception&) {
                throw ParseError("bad toggle letter \"" + tok + "\"");
            }
        } else {
            throw ParseError("bad letter \"" + tok + "\" in word \"" + text + "\"");
        }
    }
    return word;
}

bool same_dot_stabilizer(const Weight& lambda, const Weight& mu) {
    if (lambda.size() != mu.size()) throw DomainError("weights of different ranks");
    // The dot stabilizer of lambda is the ordinary stabilizer of lambda + rho,
    // the Young subgroup of its coincidence pattern.
    Weight rh = rho(int(lambda.size()));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            if ((lambda[i] + rh[i] == lambda[j] + rh[j]) !=
                (mu[i] + rh[i] == mu[j] + rh[j]))
                return false;
    return true;
}

namespace {

bool letters_cancel(const TLetter& a, const TLetter& b) {
    if (a.kind == TLetter::Kind::Shift && b.kind == TLetter::Kind::ShiftInv) return true;
    if (a.kind == TLetter::Kind::ShiftInv && b.kind == TLetter::Kind::Shift) return true;
    return a.kind == TLetter::Kind::Toggle && b.kind == TLetter::Kind::Toggle &&
           a.value == b.value;
}

void simplify(TWord& word) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (letters_cancel(word[i], word[i + 1])) {
                word.erase(word.begin() + long(i), word.begin() + long(i) + 2);
                changed = true;
                break;
            }
        }
    }
}

// Word moving x to the canonical member of its pattern class: distinct values
// compacted to {0, ..., r-1}, keeping the relative order of value classes.
TWord canonicalize(const Weight& x, Weight& out) {
    TWord word;
    Weight cur = x;
    while (true) {
        std::set<long> vals(cur.begin(), cur.end());
        long prev = 0;
        bool moved = false;
        bool have_prev = false;
        for (long v : vals) {
            if (have_prev && v - prev > 1) {
                // Slot v-1 is free; slide the whole class at v down one step.
                word.push_back({TLetter::Kind::Toggle, v});
                cur = apply_t_letter(word.back(), cur);
                moved = true;
                break;
            }
            prev = v;
            have_prev = true;
        }
        if (!moved) break;
    }
    long base = *std::min_element(cur.begin(), cur.end());
    TLetter step{base > 0 ? TLetter::Kind::ShiftInv : TLetter::Kind::Shift, 0};
    for (long i = 0; i < std::labs(base); ++i) {
        word.push_back(step);
        cur = apply_t_letter(step, cur);
    }
    out = cur;
    return word;
}

} // namespace

std::optional<TWord> t_group_path(const Weight& lambda, const Weight& mu) {
    if (!same_dot_stabilizer(lambda, mu)) return std::nullopt;
    int n = int(lambda.size());
    Weight x = lambda, y = mu;
    Weight rh = rho(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += rh[i];
        y[i] += rh[i];
    }

    Weight cx, cy;
    TWord wx = canonicalize(x, cx);
    TWord wy = canonicalize(y, cy);

    // cx and cy use values {0..r-1} on identical position classes; realize the
    // value permutation sending cx to cy by adjacent value toggles.
    long r = *std::max_element(cx.begin(), cx.end()) + 1;
    std::vector<int> pi(std::size_t(r), -1);
    for (std::size_t i = 0; i < cx.size(); ++i) pi[std::size_t(cx[i])] = int(cy[i]);
    for (int v : pi)
        if (v < 0) throw InternalError("canonical forms use different value sets");
    std::vector<int> word_idx = Permutation(pi).reduced_word();
    TWord path = wx;
    // pi = s(i1) o ... o s(ir) as functions; applying toggles first-to-last
    // post-composes, so emit the reduced word reversed.
    for (auto it = word_idx.rbegin(); it != word_idx.rend(); ++it)
        path.push_back({TLetter::Kind::Toggle, long(*it)});
    for (auto it = wy.rbegin(); it != wy.rend(); ++it) {
        TLetter inv = *it;
        if (inv.kind == TLetter::Kind::Shift)
            inv.kind = TLetter::Kind::ShiftInv;
        else if (inv.kind == TLetter::Kind::ShiftInv)
            inv.kind = TLetter::Kind::Shift;
        path.push_back(inv);
    }
    simplify(path);
    if (apply_t_word(path, x) != y) throw InternalError("path does not carry lambda to mu");
    return path;
}

bool linkage_equal(const Weight& lambda, const Weight& mu, const Regime& regime) {
    if (lambda.size() != mu.size()) throw DomainError("weights of different ranks");
    int n = int(lambda.size());
    Weight rh = rho(n);
    Weight x = lambda, y = mu;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += rh[i];
        y[i] += rh[i];
    }
    if (regime.is_generic()) {
        std::multiset<long> mx(x.begin(), x.end()), my(y.begin(), y.end());
        return mx == my;
    }
    long ell = regime.ell();
    long sx = 0, sy = 0;
    std::multiset<long> rx, ry;
    for (long v : x) {
        sx += v;
        rx.insert(((v % ell) + ell) % ell);
    }
    for (long v : y) {
        sy += v;
        ry.insert(((v % ell) + ell) % ell);
    }
    return sx == sy && rx == ry;
}

std::string weight_to_string(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out;
}

Weight parse_weight(const std::string& text) {
    Weight w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        // trim
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.erase(tok.begin());
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        if (tok.empty()) throw ParseError("bad weight text \"" + text + "\"");
        try {
            std::size_t used = 0;
            w.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad weight entry \"" + tok + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (w.empty()) throw ParseError("empty weight");
    return w;
}

} // namespace qcat
