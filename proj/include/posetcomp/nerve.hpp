#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetcomp/error.hpp"
#include "posetcomp/poset.hpp"
#include "posetcomp/scalar.hpp"
#include "posetcomp/sparse_matrix.hpp"

namespace posetcomp {

/// Canonically ordered chain basis of one degree.
class ChainBasis {
public:
    explicit ChainBasis(std::vector<Chain> chains);

    std::size_t size() const { return chains_.size(); }
    const Chain& operator[](std::size_t i) const { return chains_[i]; }
    const std::vector<Chain>& chains() const { return chains_; }
    std::optional<std::size_t> find(const Chain& c) const;
    std::size_t index_of(const Chain& c) const;

private:
    std::vector<Chain> chains_;
    std::unordered_map<Chain, std::size_t, ChainHash> index_;
};

/// The nerve of a poset with lazily built, cached chain bases.
/// Thread-safe; bases are never invalidated once built.
class Nerve {
public:
    explicit Nerve(Poset p) : poset_(std::move(p)) {}

    const Poset& poset() const { return poset_; }
    const ChainBasis& basis(int n) const;
    const ChainBasis& strict_basis(int n) const;

private:
    Poset poset_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<ChainBasis>> all_;
    mutable std::map<int, std::unique_ptr<ChainBasis>> strict_;
};

using NervePtr = std::shared_ptr<const Nerve>;
NervePtr make_nerve(Poset p);

/// Dense coefficient vector over the chain basis of one degree. The Tag
/// distinguishes what the coefficients mean (chains, cochains, relative
/// tensors, relative cochains in the mu basis).
template <class Tag>
class BasisVector {
public:
    BasisVector() = default;
    BasisVector(NervePtr nerve, int degree)
        : nerve_(std::move(nerve)), degree_(degree), coeffs_(nerve_->basis(degree).size()) {}

    static BasisVector basis_element(NervePtr nerve, const Chain& c, Scalar coeff = Scalar(1)) {
        BasisVector v(std::move(nerve), c.degree());
        v.add(c, coeff);
        return v;
    }

    const NervePtr& nerve() const { return nerve_; }
    const Poset& poset() const { return nerve_->poset(); }
    const ChainBasis& basis() const { return nerve_->basis(degree_); }
    int degree() const { return degree_; }
    std::size_t dim() const { return coeffs_.size(); }

    const Scalar& at(std::size_t i) const { return coeffs_[i]; }
    Scalar& at(std::size_t i) { return coeffs_[i]; }
    const Scalar& operator[](const Chain& c) const { return coeffs_[basis().index_of(c)]; }
    Scalar coeff(const Chain& c) const {
        auto i = basis().find(c);
        return i ? coeffs_[*i] : Scalar();
    }
    void add(const Chain& c, const Scalar& s) {
        if (c.degree() != degree_) throw Error(ErrorKind::degree_mismatch, "chain degree does not match vector degree");
        coeffs_[basis().index_of(c)] += s;
    }

    bool is_zero() const {
        for (const auto& s : coeffs_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// Nonzero (chain, coefficient) pairs in basis order.
    std::vector<std::pair<Chain, Scalar>> support() const {
        std::vector<std::pair<Chain, Scalar>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.emplace_back(basis()[i], coeffs_[i]);
        return out;
    }

    BasisVector& operator+=(const BasisVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    BasisVector& operator-=(const BasisVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    BasisVector& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
    friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
    friend BasisVector operator*(const Scalar& s, BasisVector a) { return a *= s; }
    BasisVector operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const BasisVector& a, const BasisVector& b) {
        if (a.degree_ != b.degree_ || a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }

    /// Same coefficients reinterpreted under another tag.
    template <class Other>
    BasisVector<Other> retag() const {
        BasisVector<Other> out(nerve_, degree_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.at(i) = coeffs_[i];
        return out;
    }

private:
    void check_same(const BasisVector& o) const {
        if (degree_ != o.degree_ || nerve_ != o.nerve_)
            throw Error(ErrorKind::degree_mismatch, "vectors live in different spaces");
    }

    NervePtr nerve_;
    int degree_ = 0;
    std::vector<Scalar> coeffs_;
};

struct ChainTag {};
struct CochainTag {};

using GradedVector = BasisVector<ChainTag>;
/// Functional on the degree-n chains, stored by its values on basis chains.
using Cochain = BasisVector<CochainTag>;

Chain face(const Chain& c, int i);
Chain degeneracy(const Chain& c, int i);

/// Matrix of the boundary from degree n to degree n-1 (n >= 1).
SparseMatrix boundary_matrix(const Nerve& nerve, int n, bool normalized);

/// Front/back splits (v0..vj, vj..vn) for j = 0..n.
std::vector<std::pair<Chain, Chain>> aw_coproduct(const Chain& c);

GradedVector chain_boundary(const GradedVector& x);

/// Degree-0 cochain taking every vertex to 1.
Cochain unit_cochain(const NervePtr& nerve);
Cochain cup(const Cochain& f, const Cochain& g);
Cochain coboundary(const Cochain& f);
/// Precomposition with the i-th face; raises degree by one.
Cochain coface(const Cochain& f, int i);
/// Precomposition with the i-th degeneracy; lowers degree by one.
Cochain codegeneracy(const Cochain& f, int i);

BettiTable nerve_betti(const NervePtr& nerve, int maxdeg, bool normalized, const FieldSpec& field = {});

}  // namespace posetcomp
