#pragma once

#include <string>
#include <vector>

namespace qcat {

// Permutation of {0, ..., n-1} in one-line notation (image[i] = where i goes).
// Text form is 1-based: "2 1 3".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    // Adjacent transposition swapping i-1 and i (1-based generator index, so
    // s(n, 1) swaps the first two points).  Pre: 1 <= i <= n-1.
    static Permutation transposition(int n, int i);

    int size() const { return int(image_.size()); }
    int operator()(int x) const { return image_[std::size_t(x)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;

    // (u * v)(x) = u(v(x)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);
    Permutation inverse() const;

    // Number of inversions = Coxeter length.
    int length() const;
    // Indices of the generators in one reduced word, left to right:
    // w == s(i1) * s(i2) * ... * s(ir).
    std::vector<int> reduced_word() const;
    // Every reduced word of w (used to check word-independence of products).
    std::vector<std::vector<int>> all_reduced_words() const;

    // True if w * s(i) is longer than w (1-based i).
    bool has_right_ascent(int i) const;

    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;
    static Permutation parse(const std::string& text);

private:
    std::vector<int> image_;
};

// All n! permutations of {0,...,n-1}.  Guarded: n <= 8.
std::vector<Permutation> all_permutations(int n);

} // namespace qcat
