#include "qcat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= size() || seen[std::size_t(v)])
            throw DomainError("not a permutation in one-line notation");
        seen[std::size_t(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.image_ = std::move(img);
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("generator index out of range");
    Permutation p = identity(n);
    std::swap(p.image_[std::size_t(i - 1)], p.image_[std::size_t(i)]);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < size(); ++x)
        if (image_[std::size_t(x)] != x) return false;
    return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("composing permutations of different sizes");
    Permutation r;
    r.image_.resize(u.image_.size());
    for (int x = 0; x < u.size(); ++x) r.image_[std::size_t(x)] = u(v(x));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.image_.resize(image_.size());
    for (int x = 0; x < size(); ++x) r.image_[std::size_t(image_[std::size_t(x)])] = x;
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (image_[std::size_t(i)] > image_[std::size_t(j)]) ++inv;
    return inv;
}

bool Permutation::has_right_ascent(int i) const {
    // w*s(i) swaps the preimages at positions i-1, i; it is longer iff the
    // one-line values there increase.
    return image_[std::size_t(i - 1)] < image_[std::size_t(i)];
}

std::vector<int> Permutation::reduced_word() const {
    // Repeatedly strip a right descent: w -> w*s(i), recording i; the recorded
    // list reversed is a reduced word since each step shortens by one.
    Permutation w = *this;
    std::vector<int> word;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i = 1; i < size(); ++i) {
            if (!w.has_right_ascent(i)) {
                std::swap(w.image_[std::size_t(i - 1)], w.image_[std::size_t(i)]);
                word.push_back(i);
                progressed = true;
                break;
            }
        }
    }
    if (!w.is_identity()) throw InternalError("descent stripping did not reach identity");
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::vector<int>> Permutation::all_reduced_words() const {
    // R(w) = { u ++ [i] : i a right descent of w, u in R(w*s(i)) }.
    if (is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 1; i < size(); ++i) {
        if (has_right_ascent(i)) continue;
        Permutation shorter = *this * transposition(size(), i);
        for (auto& u : shorter.all_reduced_words()) {
            u.push_back(i);
            out.push_back(std::move(u));
        }
    }
    return out;
}

std::string Permutation::to_string() const {
    std::string s;
    for (int x = 0; x < size(); ++x) {
        if (x) s += ' ';
        s += std::to_string(image_[std::size_t(x)] + 1);
    }
    return s;
}

Permutation Permutation::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> img;
    int v;
    while (in >> v) img.push_back(v - 1);
    if (!in.eof()) throw ParseError("bad permutation text \"" + text + "\"");
    if (img.empty()) throw ParseError("empty permutation text");
    try {
        return Permutation(std::move(img));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + ": \"" + text + "\"");
    }
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0 || n > 8) throw ResourceLimit("permutation enumeration limited to n <= 8");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace qcat
