#include "posetcomp/nerve.hpp"

#include <string>

namespace posetcomp {

ChainBasis::ChainBasis(std::vector<Chain> chains) : chains_(std::move(chains)) {
    index_.reserve(chains_.size());
    for (std::size_t i = 0; i < chains_.size(); ++i) index_.emplace(chains_[i], i);
}

std::optional<std::size_t> ChainBasis::find(const Chain& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ChainBasis::index_of(const Chain& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw Error(ErrorKind::index_out_of_range, "sequence is not a basis chain");
    return it->second;
}

const ChainBasis& Nerve::basis(int n) const {
    std::lock_guard lock(mutex_);
    auto& slot = all_[n];
    if (!slot) slot = std::make_unique<ChainBasis>(chains(poset_, n));
    return *slot;
}

const ChainBasis& Nerve::strict_basis(int n) const {
    std::lock_guard lock(mutex_);
    auto& slot = strict_[n];
    if (!slot) slot = std::make_unique<ChainBasis>(strict_chains(poset_, n));
    return *slot;
}

NervePtr make_nerve(Poset p) { return std::make_shared<const Nerve>(std::move(p)); }

Chain face(const Chain& c, int i) {
    const int n = c.degree();
    if (n < 1 || i < 0 || i > n)
        throw Error(ErrorKind::index_out_of_range, "face index " + std::to_string(i) + " on degree " + std::to_string(n));
    Chain out = c;
    out.v.erase(out.v.begin() + i);
    return out;
}

Chain degeneracy(const Chain& c, int i) {
    const int n = c.degree();
    if (i < 0 || i > n)
        throw Error(ErrorKind::index_out_of_range,
                    "degeneracy index " + std::to_string(i) + " on degree " + std::to_string(n));
    Chain out = c;
    out.v.insert(out.v.begin() + i, c.v[static_cast<std::size_t>(i)]);
    return out;
}

SparseMatrix boundary_matrix(const Nerve& nerve, int n, bool normalized) {
    if (n < 1) throw Error(ErrorKind::index_out_of_range, "boundary needs n >= 1");
    const ChainBasis& src = normalized ? nerve.strict_basis(n) : nerve.basis(n);
    const ChainBasis& dst = normalized ? nerve.strict_basis(n - 1) : nerve.basis(n - 1);
    SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
        for (int i = 0; i <= n; ++i)
            m.add(dst.index_of(face(src[col], i)), col, Scalar(i % 2 == 0 ? 1 : -1));
    return m;
}

std::vector<std::pair<Chain, Chain>> aw_coproduct(const Chain& c) {
    std::vector<std::pair<Chain, Chain>> out;
    for (std::size_t j = 0; j < c.v.size(); ++j)
        out.emplace_back(Chain(std::vector<Element>(c.v.begin(), c.v.begin() + static_cast<long>(j) + 1)),
                         Chain(std::vector<Element>(c.v.begin() + static_cast<long>(j), c.v.end())));
    return out;
}

GradedVector chain_boundary(const GradedVector& x) {
    if (x.degree() < 1) throw Error(ErrorKind::index_out_of_range, "boundary needs degree >= 1");
    GradedVector out(x.nerve(), x.degree() - 1);
    for (const auto& [c, s] : x.support())
        for (int i = 0; i <= c.degree(); ++i) out.add(face(c, i), i % 2 == 0 ? s : -s);
    return out;
}

Cochain unit_cochain(const NervePtr& nerve) {
    Cochain u(nerve, 0);
    for (std::size_t i = 0; i < u.dim(); ++i) u.at(i) = Scalar(1);
    return u;
}

Cochain cup(const Cochain& f, const Cochain& g) {
    const int p = f.degree();
    const int q = g.degree();
    Cochain out(f.nerve(), p + q);
    const auto& basis = out.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Chain& c = basis[k];
        Chain front(std::vector<Element>(c.v.begin(), c.v.begin() + p + 1));
        Chain back(std::vector<Element>(c.v.begin() + p, c.v.end()));
        out.at(k) = f[front] * g[back];
    }
    return out;
}

Cochain coboundary(const Cochain& f) {
    Cochain out(f.nerve(), f.degree() + 1);
    const auto& basis = out.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Scalar total;
        for (int i = 0; i <= f.degree() + 1; ++i) {
            const Scalar& v = f[face(basis[k], i)];
            if (i % 2 == 0) total += v;
            else total -= v;
        }
        out.at(k) = total;
    }
    return out;
}

Cochain coface(const Cochain& f, int i) {
    const int n = f.degree() + 1;
    if (i < 0 || i > n) throw Error(ErrorKind::index_out_of_range, "coface index " + std::to_string(i));
    Cochain out(f.nerve(), n);
    const auto& basis = out.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) out.at(k) = f[face(basis[k], i)];
    return out;
}

Cochain codegeneracy(const Cochain& f, int i) {
    const int n = f.degree();
    if (n < 1 || i < 0 || i > n - 1) throw Error(ErrorKind::index_out_of_range, "codegeneracy index " + std::to_string(i));
    Cochain out(f.nerve(), n - 1);
    const auto& basis = out.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) out.at(k) = f[degeneracy(basis[k], i)];
    return out;
}

BettiTable nerve_betti(const NervePtr& nerve, int maxdeg, bool normalized, const FieldSpec& field) {
    std::vector<SparseMatrix> d(static_cast<std::size_t>(maxdeg) + 2);
    std::vector<std::size_t> dims;
    for (int n = 0; n <= maxdeg + 1; ++n)
        dims.push_back(normalized ? nerve->strict_basis(n).size() : nerve->basis(n).size());
    for (int n = 1; n <= maxdeg + 1; ++n) d[static_cast<std::size_t>(n)] = boundary_matrix(*nerve, n, normalized);
    return betti_from_boundaries(d, dims, maxdeg, field);
}

}  // namespace posetcomp
