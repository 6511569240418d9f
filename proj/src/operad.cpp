#include "posetcomp/operad.hpp"

#include <sstream>

namespace posetcomp {

RelCochain end_partial(const RelCochain& x, int i, const RelCochain& y) {
    const int m = x.degree();
    const int k = y.degree();
    if (i < 1 || i > m) throw Error(ErrorKind::index_out_of_range, "partial composition slot " + std::to_string(i));
    RelCochain out(x.nerve(), m + k - 1);
    const auto ys = y.support();
    for (const auto& [s, a] : x.support())
        for (const auto& [b, c] : ys) {
            const auto iu = static_cast<std::size_t>(i);
            if (s[iu - 1] != b.front() || s[iu] != b.back()) continue;
            Chain glued(std::vector<Element>(s.v.begin(), s.v.begin() + i));
            glued.v.insert(glued.v.end(), b.v.begin() + 1, b.v.end() - 1);
            glued.v.insert(glued.v.end(), s.v.begin() + i, s.v.end());
            out.add(glued, a * c);
        }
    return out;
}

RelCochain end_gamma(const RelCochain& x, const std::vector<RelCochain>& ys) {
    if (static_cast<int>(ys.size()) != x.degree())
        throw Error(ErrorKind::arity_mismatch, "gamma needs one input per slot");
    RelCochain out = x;
    for (int i = x.degree(); i >= 1; --i) out = end_partial(out, i, ys[static_cast<std::size_t>(i) - 1]);
    return out;
}

RelCochain end_unit(const NervePtr& nerve) {
    RelCochain u(nerve, 1);
    for (std::size_t i = 0; i < u.dim(); ++i) u.at(i) = Scalar(1);
    return u;
}

RelCochain multiplication_element(const NervePtr& nerve) {
    RelCochain m(nerve, 2);
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i) = Scalar(1);
    return m;
}

Cochain cochain_gamma(const Cochain& f, const std::vector<Cochain>& gs) {
    if (static_cast<int>(gs.size()) != f.degree())
        throw Error(ErrorKind::arity_mismatch, "gamma needs one input per slot");
    int total = 0;
    for (const auto& g : gs) total += g.degree();
    Cochain out(f.nerve(), total);
    const auto& basis = out.basis();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const Chain& c = basis[idx];
        Chain outer{c[0]};
        Scalar prod(1);
        std::size_t start = 0;
        for (const auto& g : gs) {
            const std::size_t stop = start + static_cast<std::size_t>(g.degree());
            prod *= g[Chain(std::vector<Element>(c.v.begin() + static_cast<long>(start),
                                                 c.v.begin() + static_cast<long>(stop) + 1))];
            if (prod.is_zero()) break;
            outer.v.push_back(c[stop]);
            start = stop;
        }
        if (!prod.is_zero()) prod *= f[outer];
        out.at(idx) = prod;
    }
    return out;
}

Cochain cochain_unit(const NervePtr& nerve) {
    Cochain u(nerve, 1);
    for (std::size_t i = 0; i < u.dim(); ++i) u.at(i) = Scalar(1);
    return u;
}

Cochain cochain_partial(const Cochain& f, int i, const Cochain& g) {
    if (i < 1 || i > f.degree()) throw Error(ErrorKind::index_out_of_range, "partial composition slot " + std::to_string(i));
    std::vector<Cochain> gs(static_cast<std::size_t>(f.degree()), cochain_unit(f.nerve()));
    gs[static_cast<std::size_t>(i) - 1] = g;
    return cochain_gamma(f, gs);
}

RelCochain operad_iso(const Cochain& f) { return iota(f); }
Cochain operad_iso_inverse(const RelCochain& f) { return iota_inverse(f); }

RelOperadElement::RelOperadElement(NervePtr nerve, int arity)
    : nerve_(std::move(nerve)), arity_(arity), values_(nerve_->basis(arity).size()) {
    if (arity < 1) throw Error(ErrorKind::arity_mismatch, "operad arities start at 1");
}

RelOperadElement RelOperadElement::from_cochain(const RelCochain& f) {
    RelOperadElement e(f.nerve(), f.degree());
    const auto& basis = f.basis();
    for (std::size_t k = 0; k < basis.size(); ++k)
        e.values_[k] = IncidenceElement({basis[k].front(), basis[k].back()}, f.at(k));
    return e;
}

RelOperadElement RelOperadElement::unit(const NervePtr& nerve) {
    RelOperadElement e(nerve, 1);
    const auto& basis = nerve->basis(1);
    for (std::size_t k = 0; k < basis.size(); ++k) e.values_[k] = IncidenceElement({basis[k][0], basis[k][1]});
    return e;
}

IncidenceElement RelOperadElement::evaluate(const std::vector<IncidenceElement>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw Error(ErrorKind::arity_mismatch, "wrong argument count");
    IncidenceElement out;
    const auto& basis = nerve_->basis(arity_);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (values_[k].is_zero()) continue;
        Scalar prod(1);
        for (std::size_t j = 0; j < args.size() && !prod.is_zero(); ++j)
            prod *= args[j].coeff({basis[k].v[j], basis[k].v[j + 1]});
        if (!prod.is_zero()) out += prod * values_[k];
    }
    return out;
}

std::optional<Chain> RelOperadElement::factorization_witness() const {
    const auto& basis = nerve_->basis(arity_);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& [p, s] : values_[k].terms())
            if (p.lo != basis[k].front() || p.hi != basis[k].back()) return basis[k];
    return std::nullopt;
}

RelCochain RelOperadElement::to_cochain() const {
    if (factorization_witness())
        throw Error(ErrorKind::factorization_violation, "operad element is not an S-bimodule map");
    RelCochain f(nerve_, arity_);
    const auto& basis = nerve_->basis(arity_);
    for (std::size_t k = 0; k < basis.size(); ++k) f.at(k) = values_[k].coeff({basis[k].front(), basis[k].back()});
    return f;
}

RelOperadElement relative_gamma(const RelOperadElement& x, const std::vector<RelOperadElement>& xs) {
    if (static_cast<int>(xs.size()) != x.arity()) throw Error(ErrorKind::arity_mismatch, "gamma needs one input per slot");
    if (x.factorization_witness()) throw Error(ErrorKind::factorization_violation, "outer element is not a bimodule map");
    int total = 0;
    for (const auto& y : xs) {
        if (y.factorization_witness()) throw Error(ErrorKind::factorization_violation, "input is not a bimodule map");
        total += y.arity();
    }
    RelOperadElement out(x.nerve(), total);
    const auto& basis = x.nerve()->basis(total);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto factors = tensor_factors(basis[k]);
        std::vector<IncidenceElement> inner;
        std::size_t start = 0;
        for (const auto& y : xs) {
            const std::size_t stop = start + static_cast<std::size_t>(y.arity());
            inner.push_back(y.evaluate({factors.begin() + static_cast<long>(start), factors.begin() + static_cast<long>(stop)}));
            start = stop;
        }
        out.set_value(k, x.evaluate(inner));
    }
    return out;
}

RelOperadElement relative_partial(const RelOperadElement& x, int i, const RelOperadElement& y) {
    if (i < 1 || i > x.arity()) throw Error(ErrorKind::index_out_of_range, "partial composition slot " + std::to_string(i));
    std::vector<RelOperadElement> xs(static_cast<std::size_t>(x.arity()), RelOperadElement::unit(x.nerve()));
    xs[static_cast<std::size_t>(i) - 1] = y;
    return relative_gamma(x, xs);
}

ClosureReport sdiag_valued_closure_check(const std::vector<RelOperadElement>& elements) {
    ClosureReport report;
    auto diagonal_witness = [](const RelOperadElement& e) -> std::optional<std::string> {
        const auto& basis = e.nerve()->basis(e.arity());
        const Poset& p = e.nerve()->poset();
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!e.value(k).is_diagonal()) {
                std::ostringstream os;
                os << "value on (";
                for (std::size_t j = 0; j < basis[k].v.size(); ++j) os << (j ? "," : "") << p.label(basis[k].v[j]);
                os << ") is " << e.value(k).to_string(p);
                return os.str();
            }
        return std::nullopt;
    };
    for (std::size_t a = 0; a < elements.size(); ++a) {
        if (auto w = diagonal_witness(elements[a])) {
            report.passed = false;
            report.witness = "input " + std::to_string(a) + " not S-valued: " + *w;
            return report;
        }
    }
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = 0; b < elements.size(); ++b)
            for (int i = 1; i <= elements[a].arity(); ++i) {
                const RelOperadElement c = relative_partial(elements[a], i, elements[b]);
                ++report.compositions;
                if (auto w = diagonal_witness(c)) {
                    report.passed = false;
                    report.witness = "x" + std::to_string(a) + " o_" + std::to_string(i) + " x" + std::to_string(b) + ": " + *w;
                    return report;
                }
            }
    return report;
}

}  // namespace posetcomp
