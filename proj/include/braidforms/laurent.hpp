#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidforms {

using Int = boost::multiprecision::cpp_int;

// Ordered pair of variable tags. An empty second tag marks a univariate
// polynomial; all of its terms must carry a zero second exponent.
struct Vars {
    std::string x;
    std::string y;
    bool operator==(const Vars&) const = default;
    bool univariate() const { return y.empty(); }
};

inline Vars vars_z() { return {"z", ""}; }
inline Vars vars_zT() { return {"z", "T"}; }
inline Vars vars_vz() { return {"v", "z"}; }

// Sparse Laurent polynomial over Z in one or two named variables.
//
// Representation is canonical: zero coefficients are never stored, and the
// term map is ordered by (first exponent, second exponent), so two values
// represent the same polynomial exactly when they compare equal. Values are
// immutable once built; every operation returns a fresh polynomial.
class LaurentPoly2 {
public:
    using Exponents = std::pair<int, int>;
    using TermMap = std::map<Exponents, Int>;

    LaurentPoly2() : vars_{"", ""} {}
    explicit LaurentPoly2(Vars vars) : vars_(std::move(vars)) {}

    static LaurentPoly2 zero(Vars vars) { return LaurentPoly2(std::move(vars)); }
    static LaurentPoly2 constant(Vars vars, Int c);
    // c * x^a * y^b (b must be 0 for univariate vars)
    static LaurentPoly2 monomial(Vars vars, Int c, int a, int b = 0);

    const Vars& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    bool operator==(const LaurentPoly2&) const = default;

    LaurentPoly2 operator+(const LaurentPoly2& q) const;
    LaurentPoly2 operator-(const LaurentPoly2& q) const;
    LaurentPoly2 operator-() const;
    LaurentPoly2 operator*(const LaurentPoly2& q) const;
    LaurentPoly2 pow(unsigned k) const;

    // Coefficient of var^k, as a polynomial in the remaining variable.
    // For a univariate input the result is a constant univariate polynomial.
    LaurentPoly2 coeff_of(const std::string& var, int k) const;

    // Substitutes a univariate polynomial (in vars().x) for the second
    // variable; the result is univariate in vars().x.
    LaurentPoly2 substitute_second(const LaurentPoly2& value) const;

    // Reinterprets a univariate polynomial as living in `vars`, with its
    // exponents moved to slot 0 (the first variable) or slot 1.
    LaurentPoly2 embed(Vars vars, int slot) const;

    std::optional<int> min_exp(const std::string& var) const;
    std::optional<int> max_exp(const std::string& var) const;
    bool has_negative_exp(const std::string& var) const;

    // Canonical text form, e.g. "2*v^2 + v^2*z^2 - v^4". Terms appear in
    // ascending (first, second) exponent order; a unit coefficient is elided
    // except on the constant term.
    std::string render() const;
    static LaurentPoly2 parse(const std::string& text, Vars vars);

private:
    int var_slot(const std::string& var) const;
    void add_term(int a, int b, Int c);

    Vars vars_;
    TermMap terms_;

    friend class LaurentPolyBuilder;
};

// Mutable accumulator used internally by arithmetic and parsers.
class LaurentPolyBuilder {
public:
    explicit LaurentPolyBuilder(Vars vars) : poly_(std::move(vars)) {}
    void add(int a, int b, const Int& c) { poly_.add_term(a, b, c); }
    LaurentPoly2 take() { return std::move(poly_); }

private:
    LaurentPoly2 poly_;
};

}  // namespace braidforms
