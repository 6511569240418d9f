#include "posetcomp/incidence.hpp"

#include <sstream>

namespace posetcomp {

void IncidenceElement::add(IncidencePair p, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar IncidenceElement::coeff(IncidencePair p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second;
}

bool IncidenceElement::is_diagonal() const {
    for (const auto& [p, s] : terms_)
        if (!p.is_diagonal()) return false;
    return true;
}

IncidenceElement& IncidenceElement::operator+=(const IncidenceElement& o) {
    for (const auto& [p, s] : o.terms_) add(p, s);
    return *this;
}

IncidenceElement& IncidenceElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= s;
    return *this;
}

std::string IncidenceElement::to_string(const Poset& poset) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << s << "*(" << poset.label(p.lo) << "," << poset.label(p.hi) << ")";
    }
    return os.str();
}

std::vector<IncidencePair> incidence_basis(const Poset& p) {
    std::vector<IncidencePair> out;
    for (auto [x, y] : p.comparable_pairs()) out.push_back({x, y});
    return out;
}

IncidencePair checked_pair(const Poset& p, Element lo, Element hi) {
    if (!p.leq(lo, hi)) throw Error(ErrorKind::index_out_of_range, "pair is not comparable");
    return {lo, hi};
}

std::optional<IncidencePair> pair_mul(IncidencePair a, IncidencePair b) {
    if (a.hi != b.lo) return std::nullopt;
    return IncidencePair{a.lo, b.hi};
}

IncidenceElement inc_mul(const IncidenceElement& x, const IncidenceElement& y) {
    IncidenceElement out;
    for (const auto& [a, s] : x.terms())
        for (const auto& [b, t] : y.terms())
            if (auto ab = pair_mul(a, b)) out.add(*ab, s * t);
    return out;
}

IncidenceElement inc_unit(const Poset& p) {
    IncidenceElement out;
    for (Element x = 0; x < static_cast<Element>(p.size()); ++x) out.add({x, x}, Scalar(1));
    return out;
}

std::optional<Chain> bi_mul(const Chain& u, const Chain& v) {
    if (u.back() != v.front()) return std::nullopt;
    Chain out = u;
    out.v.insert(out.v.end(), v.v.begin() + 1, v.v.end());
    return out;
}

std::vector<IncidencePair> tensor_factors(const Chain& c) {
    if (c.degree() == 0) return {{c[0], c[0]}};
    std::vector<IncidencePair> out;
    for (std::size_t i = 1; i < c.v.size(); ++i) out.push_back({c.v[i - 1], c.v[i]});
    return out;
}

std::optional<Chain> chain_from_factors(const std::vector<IncidencePair>& factors, bool degree_zero) {
    if (factors.empty()) return std::nullopt;
    if (degree_zero) {
        if (factors.size() != 1 || !factors[0].is_diagonal()) return std::nullopt;
        return Chain{factors[0].lo};
    }
    Chain c{factors[0].lo};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].lo != c.back()) return std::nullopt;
        c.v.push_back(factors[i].hi);
    }
    return c;
}

RelTensor bi_tensor_iso(const NervePtr& nerve, const Chain& c) { return RelTensor::basis_element(nerve, c); }

Chain bi_tensor_iso_inverse(const RelTensor& t) {
    auto sup = t.support();
    if (sup.size() != 1 || !sup[0].second.is_one())
        throw Error(ErrorKind::degree_mismatch, "not a basis tensor");
    return sup[0].first;
}

RelTensor rel_tensor_mul(const RelTensor& u, const RelTensor& v) {
    RelTensor out(u.nerve(), u.degree() + v.degree());
    for (const auto& [a, s] : u.support())
        for (const auto& [b, t] : v.support())
            if (auto ab = bi_mul(a, b)) out.add(*ab, s * t);
    return out;
}

IncidenceElement contract(const RelTensor& t) {
    if (t.degree() < 1) throw Error(ErrorKind::degree_mismatch, "contract needs degree >= 1");
    IncidenceElement out;
    for (const auto& [c, s] : t.support()) out.add({c.front(), c.back()}, s);
    return out;
}

void FullTensor::add(const std::vector<IncidencePair>& factors, const Scalar& s) {
    if (static_cast<int>(factors.size()) != degree_) throw Error(ErrorKind::degree_mismatch, "wrong tensor length");
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(factors, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FullTensor retract_embed(const RelTensor& t) {
    if (t.degree() < 1) throw Error(ErrorKind::degree_mismatch, "retract needs degree >= 1");
    FullTensor out(t.degree());
    for (const auto& [c, s] : t.support()) out.add(tensor_factors(c), s);
    return out;
}

RelTensor retract_project(const NervePtr& nerve, const FullTensor& t) {
    RelTensor out(nerve, t.degree());
    for (const auto& [factors, s] : t.terms())
        if (auto c = chain_from_factors(factors)) out.add(*c, s);
    return out;
}

}  // namespace posetcomp
