#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcomp/nerve.hpp"

namespace posetcomp {

/// Basis element (lo, hi) of the incidence algebra, lo <= hi.
struct IncidencePair {
    Element lo = 0;
    Element hi = 0;

    bool is_diagonal() const { return lo == hi; }
    friend auto operator<=>(const IncidencePair&, const IncidencePair&) = default;
};

/// Element of I_Sigma as a sparse combination of comparable pairs.
class IncidenceElement {
public:
    IncidenceElement() = default;
    IncidenceElement(IncidencePair p, Scalar s = Scalar(1)) { add(p, s); }  // NOLINT

    void add(IncidencePair p, const Scalar& s);
    Scalar coeff(IncidencePair p) const;
    const std::map<IncidencePair, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when every term sits on the diagonal, i.e. the element lies in S_Sigma.
    bool is_diagonal() const;

    IncidenceElement& operator+=(const IncidenceElement& o);
    IncidenceElement& operator*=(const Scalar& s);
    friend IncidenceElement operator+(IncidenceElement a, const IncidenceElement& b) { return a += b; }
    friend IncidenceElement operator*(const Scalar& s, IncidenceElement a) { return a *= s; }
    friend bool operator==(const IncidenceElement& a, const IncidenceElement& b) { return a.terms_ == b.terms_; }

    std::string to_string(const Poset& p) const;

private:
    std::map<IncidencePair, Scalar> terms_;
};

/// Comparable pairs of p in lexicographic order; the basis of I_Sigma.
std::vector<IncidencePair> incidence_basis(const Poset& p);
IncidencePair checked_pair(const Poset& p, Element lo, Element hi);

/// Product of basis pairs: (x, y)(y', z) = (x, z) if y == y', else 0.
std::optional<IncidencePair> pair_mul(IncidencePair a, IncidencePair b);
IncidenceElement inc_mul(const IncidenceElement& x, const IncidenceElement& y);
/// Sum of all diagonal pairs.
IncidenceElement inc_unit(const Poset& p);

/// Product in the barycentric incidence algebra: (.., s) * (s, ..) glues, else 0.
std::optional<Chain> bi_mul(const Chain& u, const Chain& v);

struct RelTensorTag {};
/// Element of I_Sigma^{(x)_S n}, stored in the chain basis: chain (s0..sn)
/// stands for (s0,s1) (x) ... (x) (s_{n-1},sn); degree 0 is S_Sigma.
using RelTensor = BasisVector<RelTensorTag>;

/// Consecutive factor list of a chain; a degree-0 chain (s) maps to [(s,s)].
std::vector<IncidencePair> tensor_factors(const Chain& c);
/// Inverse of tensor_factors. Returns nullopt if factors are not consecutive.
std::optional<Chain> chain_from_factors(const std::vector<IncidencePair>& factors, bool degree_zero = false);

RelTensor bi_tensor_iso(const NervePtr& nerve, const Chain& c);
Chain bi_tensor_iso_inverse(const RelTensor& t);

/// Product in T_S(I): tensor concatenation over S (ends must match).
RelTensor rel_tensor_mul(const RelTensor& u, const RelTensor& v);

/// (s0..sn) -> (s0, sn), extended linearly; degree >= 1.
IncidenceElement contract(const RelTensor& t);

/// Element of the full tensor power I^{(x)n} as a sparse map on factor lists.
class FullTensor {
public:
    FullTensor() = default;
    explicit FullTensor(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    void add(const std::vector<IncidencePair>& factors, const Scalar& s);
    const std::map<std::vector<IncidencePair>, Scalar>& terms() const { return terms_; }
    friend bool operator==(const FullTensor&, const FullTensor&) = default;

private:
    int degree_ = 0;
    std::map<std::vector<IncidencePair>, Scalar> terms_;
};

FullTensor retract_embed(const RelTensor& t);
/// Keeps only consecutive pure tensors; left inverse of retract_embed.
RelTensor retract_project(const NervePtr& nerve, const FullTensor& t);

}  // namespace posetcomp
