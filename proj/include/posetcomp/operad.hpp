#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetcomp/hochschild.hpp"

namespace posetcomp {

// End_{I,S}: relative cochains in the mu basis, composed by the two-delta rule.

/// x o_i y on the mu basis: mu_s o_i mu_b = [s_{i-1} = b_0][s_i = b_k] mu_{(s_0..s_{i-1}, b_1..b_{k-1}, s_i..s_n)}.
RelCochain end_partial(const RelCochain& x, int i, const RelCochain& y);
/// gamma(x; y_1..y_m) = (..((x o_m y_m) o_{m-1} y_{m-1})..) o_1 y_1.
RelCochain end_gamma(const RelCochain& x, const std::vector<RelCochain>& ys);
/// Sum of mu_{(s0,s1)} over comparable pairs: the identity of I.
RelCochain end_unit(const NervePtr& nerve);
/// Sum of mu over all 2-chains: the product of I.
RelCochain multiplication_element(const NervePtr& nerve);

// Cochain operad on C^*(nerve).

/// gamma(f; g_1..g_k)(c) = f(c_0, c_{N_1}, .., c_{N_k}) * prod_j g_j(c_{N_{j-1}}..c_{N_j}), N_j partial sums.
Cochain cochain_gamma(const Cochain& f, const std::vector<Cochain>& gs);
/// f o_i g = gamma(f; 1, .., g, .., 1).
Cochain cochain_partial(const Cochain& f, int i, const Cochain& g);
/// Sum of (s0,s1)^* over comparable pairs.
Cochain cochain_unit(const NervePtr& nerve);

RelCochain operad_iso(const Cochain& f);
Cochain operad_iso_inverse(const RelCochain& f);

/// Arity-n element of the S-relative endomorphism operad: a map from the
/// consecutive basis tensors of degree n to I, stored value by value.
class RelOperadElement {
public:
    RelOperadElement(NervePtr nerve, int arity);

    static RelOperadElement from_cochain(const RelCochain& f);
    static RelOperadElement unit(const NervePtr& nerve);

    int arity() const { return arity_; }
    const NervePtr& nerve() const { return nerve_; }
    const IncidenceElement& value(std::size_t basis_index) const { return values_[basis_index]; }
    void set_value(std::size_t basis_index, IncidenceElement v) { values_[basis_index] = std::move(v); }

    /// Multilinear evaluation on incidence elements.
    IncidenceElement evaluate(const std::vector<IncidenceElement>& args) const;
    /// Bimodule check: the value on (c_0..c_n) must be a multiple of (c_0, c_n).
    /// Returns the offending basis chain, if any.
    std::optional<Chain> factorization_witness() const;
    /// Throws factorization-violation when the bimodule contract fails.
    RelCochain to_cochain() const;

    friend bool operator==(const RelOperadElement& a, const RelOperadElement& b) {
        return a.arity_ == b.arity_ && a.values_ == b.values_;
    }

private:
    NervePtr nerve_;
    int arity_;
    std::vector<IncidenceElement> values_;
};

/// Composition of multilinear bimodule maps, evaluated on basis tensors.
RelOperadElement relative_gamma(const RelOperadElement& x, const std::vector<RelOperadElement>& xs);
RelOperadElement relative_partial(const RelOperadElement& x, int i, const RelOperadElement& y);

struct ClosureReport {
    bool passed = true;
    std::size_t compositions = 0;
    std::string witness;
};

/// Checks that all partial compositions of S-valued elements are again S-valued.
ClosureReport sdiag_valued_closure_check(const std::vector<RelOperadElement>& elements);

}  // namespace posetcomp
