#include "braidforms/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidforms {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), 1);
    return p;
}

Permutation Permutation::from_one_line(std::vector<int> image) {
    int n = static_cast<int>(image.size());
    if (n < 1) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n, false);
    for (int v : image) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a bijection of {1..n}");
        seen[v - 1] = true;
    }
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (image_[i - 1] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.image_.resize(image_.size());
    for (int i = 1; i <= n(); ++i) p.image_[image_[i - 1] - 1] = i;
    return p;
}

Permutation Permutation::compose(const Permutation& b) const {
    if (n() != b.n()) throw std::invalid_argument("size mismatch in compose");
    Permutation p;
    p.image_.resize(image_.size());
    for (int i = 1; i <= n(); ++i) p.image_[i - 1] = apply(b.apply(i));
    return p;
}

Permutation Permutation::swap_values(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("generator index out of range");
    Permutation p = *this;
    for (auto& v : p.image_) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return p;
}

int Permutation::position_of(int value) const {
    for (int i = 1; i <= n(); ++i)
        if (image_[i - 1] == value) return i;
    throw std::invalid_argument("value out of range");
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (image_[i] > image_[j]) ++count;
    return count;
}

bool Permutation::left_mul_lengthens(int i) const {
    return position_of(i) < position_of(i + 1);
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    std::vector<int> a = image_;
    for (;;) {
        int j = -1;
        for (int k = 0; k + 1 < n(); ++k) {
            if (a[k] > a[k + 1]) {
                j = k;
                break;
            }
        }
        if (j < 0) break;
        std::swap(a[j], a[j + 1]);
        word.push_back(j + 1);
    }
    return word;
}

Permutation Permutation::drop_fixed_last() const {
    if (image_.back() != n()) throw std::invalid_argument("last strand is not fixed");
    Permutation p;
    p.image_.assign(image_.begin(), image_.end() - 1);
    return p;
}

std::string Permutation::render() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) out << ',';
        out << image_[i];
    }
    out << ']';
    return out.str();
}

Permutation Permutation::parse(const std::string& text, int n) {
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == ',') cleaned.push_back(' ');
        else cleaned.push_back(ch);
    }
    std::istringstream in(cleaned);
    std::vector<int> image;
    int v;
    while (in >> v) image.push_back(v);
    if (!in.eof()) throw std::invalid_argument("malformed permutation '" + text + "'");
    auto p = from_one_line(std::move(image));
    if (n != 0 && p.n() != n) throw std::invalid_argument("permutation size mismatch");
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    for (int l : letters_)
        if (l == 0 || std::abs(l) >= n)
            throw std::invalid_argument("braid letter out of range for B_" + std::to_string(n));
}

BraidWord BraidWord::parse(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed braid letter '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("malformed braid letter '" + tok + "'");
        letters.push_back(v);
    }
    return BraidWord(n, std::move(letters));
}

bool BraidWord::all_positive() const {
    return std::all_of(letters_.begin(), letters_.end(), [](int l) { return l > 0; });
}

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters_) w += l > 0 ? 1 : -1;
    return w;
}

BraidWord BraidWord::star() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    return BraidWord(n_, std::move(rev));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(-*it);
    return BraidWord(n_, std::move(rev));
}

BraidWord BraidWord::concat(const BraidWord& tail) const {
    if (n_ != tail.n_) throw std::invalid_argument("strand count mismatch in concat");
    std::vector<int> letters = letters_;
    letters.insert(letters.end(), tail.letters_.begin(), tail.letters_.end());
    return BraidWord(n_, std::move(letters));
}

Permutation BraidWord::perm() const {
    Permutation p = Permutation::identity(n_);
    for (int l : letters_) p = p.swap_values(std::abs(l));
    return p;
}

std::string BraidWord::render() const {
    std::ostringstream out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << letters_[i];
    }
    return out.str();
}

BraidWord positive_perm_word(const Permutation& pi) {
    return BraidWord(pi.n(), pi.reduced_word());
}

BraidWord negative_perm_word(const Permutation& pi) {
    auto word = pi.reduced_word();
    for (auto& l : word) l = -l;
    return BraidWord(pi.n(), std::move(word));
}

}  // namespace braidforms
