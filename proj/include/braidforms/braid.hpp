#pragma once

#include <compare>
#include <string>
#include <vector>

namespace braidforms {

// Permutation of {1..n} in one-line notation. image()[i-1] is the end
// position of the strand starting at position i.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    static Permutation from_one_line(std::vector<int> image);

    int n() const { return static_cast<int>(image_.size()); }
    int apply(int i) const { return image_[i - 1]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (a.compose(b))(x) = a(b(x))
    Permutation compose(const Permutation& b) const;
    // s_i o pi: swaps the values i, i+1
    Permutation swap_values(int i) const;
    int position_of(int value) const;

    int inversions() const;
    // True iff l(s_i o pi) = l(pi) + 1, i.e. value i occurs before value i+1.
    bool left_mul_lengthens(int i) const;

    // Deterministic reduced word w with perm_of(w) = *this and
    // |w| = inversions(): repeatedly swaps the leftmost descent of the
    // one-line image, which yields the lexicographically smallest word.
    std::vector<int> reduced_word() const;

    // Restriction to {1..n-1}; requires apply(n) == n.
    Permutation drop_fixed_last() const;

    std::string render() const;  // "[3,1,2]"
    static Permutation parse(const std::string& text, int n = 0);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// A word in the braid group B_n: letter +i is sigma_i, -i its inverse.
class BraidWord {
public:
    BraidWord(int n, std::vector<int> letters);
    static BraidWord parse(const std::string& text, int n);

    int strands() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    bool all_positive() const;

    int writhe() const;  // exponent sum

    BraidWord star() const;     // letters reversed, signs kept
    BraidWord inverse() const;  // letters reversed, signs flipped
    BraidWord concat(const BraidWord& tail) const;

    // Position-tracking permutation: appending letter +-i post-composes
    // with s_i, so perm(uv) = perm(v) o perm(u).
    Permutation perm() const;

    std::string render() const;

    bool operator==(const BraidWord&) const = default;

private:
    int n_;
    std::vector<int> letters_;
};

// Positive lift of the canonical reduced word of pi.
BraidWord positive_perm_word(const Permutation& pi);
// Negative permutation braid word: reduced word with all letters negated.
BraidWord negative_perm_word(const Permutation& pi);

}  // namespace braidforms
