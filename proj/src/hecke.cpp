#include "braidforms/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace braidforms {

HeckeElement::HeckeElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
}

HeckeElement HeckeElement::unit(int n) {
    HeckeElement h(n);
    h.coeffs_.emplace(Permutation::identity(n), LaurentPoly2::constant(vars_z(), 1));
    return h;
}

void HeckeElement::add_term(const Permutation& pi, const LaurentPoly2& c) {
    if (pi.n() != n_) throw std::invalid_argument("permutation size mismatch");
    if (c.vars() != vars_z()) throw std::invalid_argument("coefficient must live in Z[z]");
    if (c.has_negative_exp("z"))
        throw std::logic_error("Hecke coefficient left Z[z]: " + c.render());
    if (c.is_zero()) return;
    auto it = coeffs_.find(pi);
    if (it == coeffs_.end()) {
        coeffs_.emplace(pi, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
    if (n_ != other.n_) throw std::invalid_argument("strand count mismatch");
    HeckeElement r = *this;
    for (const auto& [pi, c] : other.coeffs_) r.add_term(pi, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& other) const {
    if (n_ != other.n_) throw std::invalid_argument("strand count mismatch");
    HeckeElement r = *this;
    for (const auto& [pi, c] : other.coeffs_) r.add_term(pi, -c);
    return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly2& c) const {
    HeckeElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [pi, coeff] : coeffs_) r.add_term(pi, coeff * c);
    return r;
}

HeckeElement HeckeElement::mul_gen(int i, int sign) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    const LaurentPoly2 z = LaurentPoly2::monomial(vars_z(), 1, 1);
    HeckeElement r(n_);
    for (const auto& [pi, c] : coeffs_) {
        Permutation next = pi.swap_values(i);
        bool lengthens = pi.left_mul_lengthens(i);
        r.add_term(next, c);
        if (lengthens && sign < 0) r.add_term(pi, -(c * z));
        if (!lengthens && sign > 0) r.add_term(pi, c * z);
    }
    return r;
}

HeckeElement braid_to_hecke(const BraidWord& w) {
    HeckeElement h = HeckeElement::unit(w.strands());
    for (int l : w.letters()) h = h.mul_gen(std::abs(l), l > 0 ? 1 : -1);
    return h;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
    HeckeElement r(a.strands());
    for (const auto& [kappa, d] : b.coeffs()) {
        HeckeElement folded = a;
        for (int i : kappa.reduced_word()) folded = folded.mul_gen(i, 1);
        r = r + folded.scaled(d);
    }
    return r;
}

HeckeElement pos_perm_elt(const Permutation& pi) {
    HeckeElement h(pi.n());
    h.add_term(pi, LaurentPoly2::constant(vars_z(), 1));
    return h;
}

HeckeElement neg_perm_elt(const Permutation& pi) {
    return braid_to_hecke(negative_perm_word(pi));
}

HeckeElement star_elt(const HeckeElement& h) {
    HeckeElement r(h.strands());
    for (const auto& [pi, c] : h.coeffs()) r.add_term(pi.inverse(), c);
    return r;
}

std::string render_hecke(const HeckeElement& h) {
    if (h.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pi, c] : h.coeffs()) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.render() << ")*w" << pi.render();
    }
    return out.str();
}

}  // namespace braidforms
