#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "posetcomp/incidence.hpp"
#include "posetcomp/nerve.hpp"

namespace posetcomp {

struct RelCochainTag {};
/// Relative Hochschild cochain sum_c k_c mu_c, stored by the coefficients k_c.
/// mu_c sends the consecutive tensor of c to (c_0, c_n) and every other basis tensor to 0.
using RelCochain = BasisVector<RelCochainTag>;

// Simplicial structure of T_S(I), computed on tensor factors.
RelTensor rel_face(const RelTensor& t, int i);
RelTensor rel_degeneracy(const RelTensor& t, int i);
SparseMatrix rel_boundary_matrix(const NervePtr& nerve, int n);
BettiTable rel_chain_betti(const NervePtr& nerve, int maxdeg, const FieldSpec& field = {});

RelTensor chain_iso(const GradedVector& u);
GradedVector chain_iso_inverse(const RelTensor& t);

IncidenceElement mu_eval(const RelCochain& f, const RelTensor& t);
/// Evaluation on a full tensor; non-consecutive factor lists contribute nothing.
IncidenceElement mu_eval(const RelCochain& f, const FullTensor& t);
/// Multilinear evaluation f(a_1, ..., a_n) on arbitrary incidence elements.
IncidenceElement evaluate(const RelCochain& f, const std::vector<IncidenceElement>& args);

/// Builds a degree-n relative cochain from its values on basis tensors.
/// Throws factorization-violation if some value is not a multiple of (c_0, c_n).
RelCochain read_back(const NervePtr& nerve, int n,
                     const std::function<IncidenceElement(const std::vector<IncidencePair>&)>& value);

RelCochain rel_coboundary(const RelCochain& f);
RelCochain rel_cup(const RelCochain& f, const RelCochain& g);
RelCochain rel_coface(const RelCochain& f, int i);
RelCochain rel_codegeneracy(const RelCochain& f, int i);

RelCochain iota(const Cochain& f);
Cochain iota_inverse(const RelCochain& f);

/// Cochain of the full Hochschild complex Hom(I^{(x)n}, I), sparse on factor lists.
/// Degree 0 is I itself, keyed by the empty list.
class FullCochain {
public:
    FullCochain() = default;
    explicit FullCochain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    void add(const std::vector<IncidencePair>& args, const IncidenceElement& value);
    IncidenceElement value(const std::vector<IncidencePair>& args) const;
    IncidenceElement evaluate(const std::vector<IncidenceElement>& args) const;
    const std::map<std::vector<IncidencePair>, IncidenceElement>& values() const { return values_; }
    friend bool operator==(const FullCochain&, const FullCochain&) = default;

private:
    int degree_ = 0;
    std::map<std::vector<IncidencePair>, IncidenceElement> values_;
};

/// Classical Hochschild differential:
/// (df)(a0..an) = a0 f(a1..an) + sum_i (-1)^{i+1} f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a0..a_{n-1}) an.
FullCochain full_coboundary(const Poset& p, const FullCochain& f);
FullCochain embed_rel_to_full(const RelCochain& f);
FullCochain identity_cochain(const Poset& p);

/// Dimension of Hom(I^{(x)n}, I).
std::size_t full_cochain_dim(const Poset& p, int n);
/// Matrix of the full differential C^n -> C^{n+1} in the basis (tuple, output pair).
SparseMatrix full_coboundary_matrix(const Poset& p, int n);

inline constexpr std::size_t default_hh_cap = 20000;

/// Cohomology of the full Hochschild complex in degrees 0..maxdeg.
/// Throws resource-limit when a needed matrix dimension exceeds cap.
BettiTable hh_betti(const Poset& p, int maxdeg, std::size_t cap = default_hh_cap, const FieldSpec& field = {});

/// Cohomology of the nerve cochain complex (dual ranks), degrees 0..maxdeg.
BettiTable nerve_cobetti(const NervePtr& nerve, int maxdeg, const FieldSpec& field = {});

}  // namespace posetcomp
