#include "posetcomp/hochschild.hpp"

#include <string>

namespace posetcomp {

namespace {

RelTensor apply_basis(const RelTensor& t, int out_degree, const std::function<Chain(const Chain&)>& op) {
    RelTensor out(t.nerve(), out_degree);
    for (const auto& [c, s] : t.support()) out.add(op(c), s);
    return out;
}

Chain must_chain(const std::vector<IncidencePair>& factors, bool degree_zero = false) {
    auto c = chain_from_factors(factors, degree_zero);
    if (!c) throw Error(ErrorKind::factorization_violation, "factors are not consecutive");
    return *c;
}

Scalar sign(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

std::vector<IncidenceElement> as_elements(const std::vector<IncidencePair>& pairs) {
    return {pairs.begin(), pairs.end()};
}

}  // namespace

RelTensor rel_face(const RelTensor& t, int i) {
    const int n = t.degree();
    if (n < 1 || i < 0 || i > n)
        throw Error(ErrorKind::index_out_of_range, "relative face index " + std::to_string(i));
    return apply_basis(t, n - 1, [&](const Chain& c) {
        std::vector<IncidencePair> f = tensor_factors(c);
        if (n == 1) {
            // dropping the only factor leaves the idempotent at the surviving end
            const Element end = i == 0 ? f[0].hi : f[0].lo;
            return Chain{end};
        }
        if (i == 0) {
            f.erase(f.begin());
        } else if (i == n) {
            f.pop_back();
        } else {
            auto merged = pair_mul(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(i)]);
            f[static_cast<std::size_t>(i - 1)] = *merged;
            f.erase(f.begin() + i);
        }
        return must_chain(f);
    });
}

RelTensor rel_degeneracy(const RelTensor& t, int i) {
    const int n = t.degree();
    if (i < 0 || i > n) throw Error(ErrorKind::index_out_of_range, "relative degeneracy index " + std::to_string(i));
    return apply_basis(t, n + 1, [&](const Chain& c) {
        if (n == 0) return must_chain({{c[0], c[0]}});
        std::vector<IncidencePair> f = tensor_factors(c);
        const Element vertex = c[static_cast<std::size_t>(i)];
        f.insert(f.begin() + i, IncidencePair{vertex, vertex});
        return must_chain(f);
    });
}

SparseMatrix rel_boundary_matrix(const NervePtr& nerve, int n) {
    const ChainBasis& src = nerve->basis(n);
    const ChainBasis& dst = nerve->basis(n - 1);
    SparseMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        const RelTensor t = RelTensor::basis_element(nerve, src[col]);
        for (int i = 0; i <= n; ++i) {
            const RelTensor face_i = rel_face(t, i);
            for (const auto& [c, s] : face_i.support()) m.add(dst.index_of(c), col, sign(i) * s);
        }
    }
    return m;
}

BettiTable rel_chain_betti(const NervePtr& nerve, int maxdeg, const FieldSpec& field) {
    std::vector<SparseMatrix> d(static_cast<std::size_t>(maxdeg) + 2);
    std::vector<std::size_t> dims;
    for (int n = 0; n <= maxdeg + 1; ++n) dims.push_back(nerve->basis(n).size());
    for (int n = 1; n <= maxdeg + 1; ++n) d[static_cast<std::size_t>(n)] = rel_boundary_matrix(nerve, n);
    return betti_from_boundaries(d, dims, maxdeg, field);
}

RelTensor chain_iso(const GradedVector& u) { return u.retag<RelTensorTag>(); }
GradedVector chain_iso_inverse(const RelTensor& t) { return t.retag<ChainTag>(); }

IncidenceElement mu_eval(const RelCochain& f, const RelTensor& t) {
    if (f.degree() != t.degree()) throw Error(ErrorKind::degree_mismatch, "cochain and tensor degrees differ");
    IncidenceElement out;
    for (const auto& [c, s] : t.support()) out.add({c.front(), c.back()}, f[c] * s);
    return out;
}

IncidenceElement mu_eval(const RelCochain& f, const FullTensor& t) {
    if (f.degree() != t.degree()) throw Error(ErrorKind::degree_mismatch, "cochain and tensor degrees differ");
    IncidenceElement out;
    for (const auto& [factors, s] : t.terms())
        if (auto c = chain_from_factors(factors)) out.add({c->front(), c->back()}, f.coeff(*c) * s);
    return out;
}

IncidenceElement evaluate(const RelCochain& f, const std::vector<IncidenceElement>& args) {
    if (static_cast<int>(args.size()) != f.degree())
        throw Error(ErrorKind::degree_mismatch, "wrong number of arguments for cochain");
    IncidenceElement out;
    bool pure = true;
    for (const auto& a : args) {
        if (a.is_zero()) return out;
        pure = pure && a.terms().size() == 1;
    }
    if (pure) {
        // a single tensor of basis pairs: only the chain it spells out can contribute
        std::vector<Element> v{args.front().terms().begin()->first.lo};
        Scalar prod(1);
        for (const auto& a : args) {
            const auto& [q, s] = *a.terms().begin();
            if (q.lo != v.back()) return out;
            v.push_back(q.hi);
            prod *= s;
        }
        const Chain c(std::move(v));
        out.add({c.front(), c.back()}, f.coeff(c) * prod);
        return out;
    }
    const auto& basis = f.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.at(i).is_zero()) continue;
        const Chain& c = basis[i];
        Scalar prod = f.at(i);
        for (std::size_t j = 0; j < args.size() && !prod.is_zero(); ++j)
            prod *= args[j].coeff({c.v[j], c.v[j + 1]});
        out.add({c.front(), c.back()}, prod);
    }
    return out;
}

RelCochain read_back(const NervePtr& nerve, int n,
                     const std::function<IncidenceElement(const std::vector<IncidencePair>&)>& value) {
    RelCochain out(nerve, n);
    const auto& basis = out.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Chain& c = basis[k];
        const IncidencePair ends{c.front(), c.back()};
        const IncidenceElement v = value(tensor_factors(c));
        for (const auto& [p, s] : v.terms())
            if (!(p == ends))
                throw Error(ErrorKind::factorization_violation, "value on a basis tensor leaves the (first,last) line");
        out.at(k) = v.coeff(ends);
    }
    return out;
}

RelCochain rel_coboundary(const RelCochain& f) {
    const int n = f.degree();
    return read_back(f.nerve(), n + 1, [&](const std::vector<IncidencePair>& a) {
        std::vector<IncidenceElement> args = as_elements(a);
        IncidenceElement out = inc_mul(args[0], evaluate(f, {args.begin() + 1, args.end()}));
        for (int i = 0; i < n; ++i) {
            std::vector<IncidenceElement> merged;
            for (int j = 0; j <= n; ++j) {
                if (j == i + 1) continue;
                merged.push_back(j == i ? inc_mul(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i) + 1])
                                        : args[static_cast<std::size_t>(j)]);
            }
            out += sign(i + 1) * evaluate(f, merged);
        }
        out += sign(n + 1) * inc_mul(evaluate(f, {args.begin(), args.end() - 1}), args.back());
        return out;
    });
}

RelCochain rel_cup(const RelCochain& f, const RelCochain& g) {
    const auto p = static_cast<std::ptrdiff_t>(f.degree());
    return read_back(f.nerve(), f.degree() + g.degree(), [&](const std::vector<IncidencePair>& a) {
        std::vector<IncidenceElement> args = as_elements(a);
        return inc_mul(evaluate(f, {args.begin(), args.begin() + p}), evaluate(g, {args.begin() + p, args.end()}));
    });
}

RelCochain rel_coface(const RelCochain& f, int i) {
    const int n = f.degree() + 1;
    if (i < 0 || i > n) throw Error(ErrorKind::index_out_of_range, "relative coface index " + std::to_string(i));
    return read_back(f.nerve(), n, [&](const std::vector<IncidencePair>& a) {
        std::vector<IncidenceElement> args = as_elements(a);
        if (i == 0) return inc_mul(args.front(), evaluate(f, {args.begin() + 1, args.end()}));
        if (i == n) return inc_mul(evaluate(f, {args.begin(), args.end() - 1}), args.back());
        const auto k = static_cast<std::size_t>(i);
        args[k - 1] = inc_mul(args[k - 1], args[k]);
        args.erase(args.begin() + i);
        return evaluate(f, args);
    });
}

RelCochain rel_codegeneracy(const RelCochain& f, int i) {
    const int n = f.degree();
    if (n < 2 || i < 0 || i > n - 1)
        throw Error(ErrorKind::index_out_of_range, "relative codegeneracy index " + std::to_string(i));
    return read_back(f.nerve(), n - 1, [&](const std::vector<IncidencePair>& a) {
        std::vector<IncidenceElement> args = as_elements(a);
        const Element vertex = i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)].lo : a.back().hi;
        args.insert(args.begin() + i, IncidenceElement(IncidencePair{vertex, vertex}));
        return evaluate(f, args);
    });
}

RelCochain iota(const Cochain& f) {
    if (f.degree() < 1) throw Error(ErrorKind::degree_mismatch, "relative cochains start in degree 1");
    return f.retag<RelCochainTag>();
}

Cochain iota_inverse(const RelCochain& f) { return f.retag<CochainTag>(); }

void FullCochain::add(const std::vector<IncidencePair>& args, const IncidenceElement& value) {
    if (static_cast<int>(args.size()) != degree_) throw Error(ErrorKind::degree_mismatch, "wrong argument count");
    auto& slot = values_[args];
    slot += value;
    if (slot.is_zero()) values_.erase(args);
}

IncidenceElement FullCochain::value(const std::vector<IncidencePair>& args) const {
    auto it = values_.find(args);
    return it == values_.end() ? IncidenceElement() : it->second;
}

IncidenceElement FullCochain::evaluate(const std::vector<IncidenceElement>& args) const {
    if (static_cast<int>(args.size()) != degree_) throw Error(ErrorKind::degree_mismatch, "wrong argument count");
    IncidenceElement out;
    for (const auto& [key, val] : values_) {
        Scalar prod(1);
        for (std::size_t j = 0; j < key.size() && !prod.is_zero(); ++j) prod *= args[j].coeff(key[j]);
        if (!prod.is_zero()) out += prod * val;
    }
    return out;
}

namespace {

void for_each_tuple(const std::vector<IncidencePair>& basis, int n,
                    const std::function<void(const std::vector<IncidencePair>&)>& visit) {
    std::vector<IncidencePair> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            visit(cur);
            return;
        }
        for (const auto& p : basis) {
            cur.push_back(p);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

FullCochain full_coboundary(const Poset& p, const FullCochain& f) {
    const int n = f.degree();
    const auto basis = incidence_basis(p);
    FullCochain out(n + 1);
    for_each_tuple(basis, n + 1, [&](const std::vector<IncidencePair>& a) {
        std::vector<IncidenceElement> args = as_elements(a);
        IncidenceElement v = inc_mul(args.front(), f.evaluate({args.begin() + 1, args.end()}));
        for (int i = 0; i < n; ++i) {
            std::vector<IncidenceElement> merged = args;
            merged[static_cast<std::size_t>(i)] = inc_mul(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i) + 1]);
            merged.erase(merged.begin() + i + 1);
            v += sign(i + 1) * f.evaluate(merged);
        }
        v += sign(n + 1) * inc_mul(f.evaluate({args.begin(), args.end() - 1}), args.back());
        out.add(a, v);
    });
    return out;
}

FullCochain embed_rel_to_full(const RelCochain& f) {
    FullCochain out(f.degree());
    for (const auto& [c, k] : f.support()) out.add(tensor_factors(c), IncidenceElement({c.front(), c.back()}, k));
    return out;
}

FullCochain identity_cochain(const Poset& p) {
    FullCochain out(1);
    for (const auto& q : incidence_basis(p)) out.add({q}, IncidenceElement(q));
    return out;
}

std::size_t full_cochain_dim(const Poset& p, int n) {
    const std::size_t d = incidence_basis(p).size();
    std::size_t dim = d;
    for (int k = 0; k < n; ++k) dim *= d;
    return dim;
}

SparseMatrix full_coboundary_matrix(const Poset& p, int n) {
    const auto basis = incidence_basis(p);
    const std::size_t d = basis.size();
    std::map<IncidencePair, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;
    SparseMatrix m(full_cochain_dim(p, n + 1), full_cochain_dim(p, n));

    // column/row index = (mixed-radix tuple index) * d + output pair index
    auto tuple_index = [&](const std::vector<std::size_t>& t) {
        std::size_t idx = 0;
        for (std::size_t x : t) idx = idx * d + x;
        return idx;
    };
    std::vector<std::size_t> tuple(static_cast<std::size_t>(n), 0);
    const std::size_t tuples = full_cochain_dim(p, n) / d;
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rest = t;
        for (int j = n - 1; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = rest % d;
            rest /= d;
        }
        for (std::size_t q = 0; q < d; ++q) {
            const std::size_t col = t * d + q;
            const IncidencePair out = basis[q];
            // a0 * f(a1..an)
            for (std::size_t a0 = 0; a0 < d; ++a0)
                if (auto prod = pair_mul(basis[a0], out)) {
                    std::vector<std::size_t> row = tuple;
                    row.insert(row.begin(), a0);
                    m.add(tuple_index(row) * d + index.at(*prod), col, Scalar(1));
                }
            // f(.., a_i a_{i+1}, ..): split the i-th argument (x, z) as (x, y)(y, z)
            for (int i = 0; i < n; ++i) {
                const IncidencePair target = basis[tuple[static_cast<std::size_t>(i)]];
                for (Element y = 0; y < static_cast<Element>(p.size()); ++y) {
                    if (!p.leq(target.lo, y) || !p.leq(y, target.hi)) continue;
                    std::vector<std::size_t> row = tuple;
                    row[static_cast<std::size_t>(i)] = index.at({target.lo, y});
                    row.insert(row.begin() + i + 1, index.at({y, target.hi}));
                    m.add(tuple_index(row) * d + q, col, sign(i + 1));
                }
            }
            // f(a0..a_{n-1}) * an
            for (std::size_t an = 0; an < d; ++an)
                if (auto prod = pair_mul(out, basis[an])) {
                    std::vector<std::size_t> row = tuple;
                    row.push_back(an);
                    m.add(tuple_index(row) * d + index.at(*prod), col, sign(n + 1));
                }
        }
    }
    return m;
}

BettiTable hh_betti(const Poset& p, int maxdeg, std::size_t cap, const FieldSpec& field) {
    for (int n = 0; n <= maxdeg; ++n) {
        const std::size_t needed = full_cochain_dim(p, n + 1);
        if (needed > cap)
            throw Error(ErrorKind::resource_limit, "degree " + std::to_string(n) + ": projected dimension " +
                                                       std::to_string(needed) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= maxdeg; ++n) ranks.push_back(rank(full_coboundary_matrix(p, n), field));
    BettiTable table;
    for (int n = 0; n <= maxdeg; ++n) {
        const std::size_t incoming = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1];
        table.degrees.emplace_back(n, full_cochain_dim(p, n) - ranks[static_cast<std::size_t>(n)] - incoming);
    }
    return table;
}

BettiTable nerve_cobetti(const NervePtr& nerve, int maxdeg, const FieldSpec& field) {
    // The coboundary C^n -> C^{n+1} is the transpose of the boundary of degree n+1.
    BettiTable table;
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= maxdeg; ++n) ranks.push_back(rank(boundary_matrix(*nerve, n + 1, false).transpose(), field));
    for (int n = 0; n <= maxdeg; ++n) {
        const std::size_t incoming = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1];
        table.degrees.emplace_back(n, nerve->basis(n).size() - ranks[static_cast<std::size_t>(n)] - incoming);
    }
    return table;
}

}  // namespace posetcomp
