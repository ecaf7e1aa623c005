#pragma once

#include <map>

#include "braidforms/braid.hpp"
#include "braidforms/laurent.hpp"

namespace braidforms {

// Element of the Hecke algebra H_n(z), the quotient of the braid group
// algebra by sigma_i - sigma_i^{-1} = z. Stored in the basis of positive
// permutation braids omega_pi, with coefficients in Z[z] (univariate
// polynomials with nonnegative exponents). Coefficients are never zero and
// the key set stays within the n! basis permutations.
class HeckeElement {
public:
    using CoeffMap = std::map<Permutation, LaurentPoly2>;

    explicit HeckeElement(int n);
    static HeckeElement unit(int n);

    int strands() const { return n_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool operator==(const HeckeElement&) const = default;

    HeckeElement operator+(const HeckeElement& other) const;
    HeckeElement operator-(const HeckeElement& other) const;
    // Scale by a Z[z] polynomial.
    HeckeElement scaled(const LaurentPoly2& c) const;

    // Right multiplication by sigma_i^{sign}. On a basis key omega_pi with
    // pi' = s_i o pi:
    //   length up:   sigma_i      -> omega_pi'
    //                sigma_i^{-1} -> omega_pi' - z omega_pi
    //   length down: sigma_i      -> omega_pi' + z omega_pi
    //                sigma_i^{-1} -> omega_pi'
    HeckeElement mul_gen(int i, int sign) const;

    void add_term(const Permutation& pi, const LaurentPoly2& c);

private:
    int n_;
    CoeffMap coeffs_;
};

HeckeElement braid_to_hecke(const BraidWord& w);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

// Basis element omega_pi / image of the negative permutation braid nu_pi.
HeckeElement pos_perm_elt(const Permutation& pi);
HeckeElement neg_perm_elt(const Permutation& pi);

// Word-reversal anti-automorphism: omega_pi -> omega_{pi^{-1}} on keys.
HeckeElement star_elt(const HeckeElement& h);

std::string render_hecke(const HeckeElement& h);

}  // namespace braidforms
