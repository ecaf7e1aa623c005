#include "braidforms/trace.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace braidforms {

namespace {

std::shared_mutex trace_table_mutex;
std::map<std::vector<int>, LaurentPoly2> trace_table;

LaurentPoly2 trace_monomial_T() { return LaurentPoly2::monomial(vars_zT(), 1, 0, 1); }

LaurentPoly2 compute_basis_trace(const Permutation& pi) {
    const int n = pi.n();
    if (n == 1) return LaurentPoly2::constant(vars_zT(), 1);
    const int j = pi.apply(n);
    if (j == n) return trace_of_basis(pi.drop_fixed_last());

    // pi = gamma o rho with gamma = s_j o ... o s_{n-1} (the minimal coset
    // representative sending n to j) and rho fixing n.
    std::vector<int> rho_image(n);
    for (int x = 1; x <= n; ++x) {
        int v = pi.apply(x);
        if (v == j) v = n;
        else if (v > j) v -= 1;
        rho_image[x - 1] = v;
    }
    Permutation rho = Permutation::from_one_line(rho_image).drop_fixed_last();

    // Markov: Tr(omega_rho sigma_{n-1} sigma_{n-2}...sigma_j)
    //       = T * Tr_{n-1}(omega_rho sigma_{n-2}...sigma_j)
    HeckeElement rest = pos_perm_elt(rho);
    for (int i = n - 2; i >= j; --i) rest = rest.mul_gen(i, 1);

    LaurentPoly2 acc = LaurentPoly2::zero(vars_zT());
    for (const auto& [kappa, c] : rest.coeffs())
        acc = acc + c.embed(vars_zT(), 0) * trace_of_basis(kappa);
    return trace_monomial_T() * acc;
}

}  // namespace

LaurentPoly2 trace_of_basis(const Permutation& pi) {
    {
        std::shared_lock lock(trace_table_mutex);
        auto it = trace_table.find(pi.image());
        if (it != trace_table.end()) return it->second;
    }
    LaurentPoly2 value = compute_basis_trace(pi);
    {
        std::unique_lock lock(trace_table_mutex);
        trace_table.emplace(pi.image(), value);
    }
    return value;
}

void warm_trace_table(int n) {
    for (int k = 1; k <= n; ++k)
        for (const auto& pi : all_permutations(k)) trace_of_basis(pi);
}

LaurentPoly2 ocneanu_trace(const HeckeElement& h) {
    LaurentPoly2 acc = LaurentPoly2::zero(vars_zT());
    for (const auto& [pi, c] : h.coeffs())
        acc = acc + c.embed(vars_zT(), 0) * trace_of_basis(pi);
    auto tdeg = acc.max_exp("T");
    if (tdeg && *tdeg > h.strands() - 1)
        throw std::logic_error("trace exceeded T-degree bound: " + acc.render());
    if (acc.has_negative_exp("z"))
        throw std::logic_error("trace left Z[z,T]: " + acc.render());
    return acc;
}

LaurentPoly2 framed_from_trace(const LaurentPoly2& trace, int n) {
    if (trace.vars() != vars_zT()) throw std::invalid_argument("trace must live in Z[z,T]");
    auto tdeg = trace.max_exp("T");
    if (tdeg && *tdeg > n - 1) throw std::invalid_argument("trace T-degree exceeds n-1");

    const Vars vz = vars_vz();
    const LaurentPoly2 one_minus_v2 =
        LaurentPoly2::constant(vz, 1) - LaurentPoly2::monomial(vz, 1, 2, 0);
    LaurentPoly2 framed = LaurentPoly2::zero(vz);
    for (int k = 0; k <= n - 1; ++k) {
        LaurentPoly2 fk = trace.coeff_of("T", k);
        if (fk.is_zero()) continue;
        LaurentPoly2 term = fk.embed(vz, 1) * one_minus_v2.pow(static_cast<unsigned>(n - 1 - k)) *
                            LaurentPoly2::monomial(vz, 1, 1 - n, k - n + 1);
        framed = framed + term;
    }

    // The closed form keeps every value inside the MFW window with fixed
    // v-parity; violations indicate a corrupted trace.
    if (!mfw_window_check(framed, n))
        throw std::logic_error("framed Homfly escaped the MFW window: " + framed.render());
    for (const auto& [e, c] : framed.terms()) {
        if (((e.first - (n - 1)) % 2 + 2) % 2 != 0)
            throw std::logic_error("framed Homfly broke v-parity: " + framed.render());
    }
    return framed;
}

LaurentPoly2 framed_homfly(const BraidWord& w) {
    return framed_from_trace(ocneanu_trace(braid_to_hecke(w)), w.strands());
}

LaurentPoly2 homfly_P(const BraidWord& w) {
    return framed_homfly(w) * LaurentPoly2::monomial(vars_vz(), 1, w.writhe(), 0);
}

LaurentPoly2 extremal_column_of_framed(const LaurentPoly2& framed, int n, ColumnSide side) {
    if (framed.vars() != vars_vz()) throw std::invalid_argument("expected a polynomial in (v,z)");
    LaurentPoly2 col = side == ColumnSide::Lower ? framed.coeff_of("v", 1 - n)
                                                 : framed.coeff_of("v", n - 1);
    Int unit = 1;
    if (side == ColumnSide::Upper && (n - 1) % 2 == 1) unit = -1;
    LaurentPoly2 scaled = col * LaurentPoly2::monomial(vars_z(), unit, n - 1);
    if (scaled.has_negative_exp("z"))
        throw std::logic_error("extremal column left Z[z]: " + scaled.render());
    return scaled;
}

LaurentPoly2 extremal_column(const BraidWord& w, ColumnSide side) {
    return extremal_column_of_framed(framed_homfly(w), w.strands(), side);
}

bool mfw_window_check(const LaurentPoly2& framed, int n) {
    auto lo = framed.min_exp("v");
    auto hi = framed.max_exp("v");
    if (!lo) return true;
    return *lo >= 1 - n && *hi <= n - 1;
}

}  // namespace braidforms
