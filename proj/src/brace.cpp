#include "posetcomp/brace.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace posetcomp {

namespace {

Scalar sign(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

template <class V>
void accumulate(std::optional<V>& acc, const V& term) {
    if (acc) *acc += term;
    else acc = term;
}

int total_degree_after_brace(const std::vector<int>& degrees) {
    int m = degrees.front();
    for (std::size_t k = 1; k < degrees.size(); ++k) m += degrees[k] - 1;
    return m;
}

}  // namespace

RelCochain hoch_brace(const RelCochain& x, const std::vector<RelCochain>& xs) {
    if (xs.empty()) return x;
    int m = x.degree();
    for (const auto& y : xs) m += y.degree() - 1;
    if (m < 1) throw Error(ErrorKind::degree_underflow, "brace result would have degree < 1");
    return read_back(x.nerve(), m, [&](const std::vector<IncidencePair>& a) {
        IncidenceElement total;
        std::vector<IncidenceElement> outer;
        // place x_k starting after `pos` inputs; sgn accumulates i_k (|x_k| - 1)
        std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int pos, int sgn) {
            if (k == xs.size()) {
                const std::size_t before = outer.size();
                for (int j = pos; j < m; ++j) outer.emplace_back(a[static_cast<std::size_t>(j)]);
                total += sign(sgn) * evaluate(x, outer);
                outer.resize(before);
                return;
            }
            const int len = xs[k].degree();
            for (int i = pos; i + len <= m; ++i) {
                const std::size_t before = outer.size();
                for (int j = pos; j < i; ++j) outer.emplace_back(a[static_cast<std::size_t>(j)]);
                IncidenceElement inner = evaluate(
                    xs[k], {a.begin() + i, a.begin() + i + len});
                if (!inner.is_zero()) {
                    outer.push_back(std::move(inner));
                    rec(k + 1, i + len, sgn + i * (len - 1));
                }
                outer.resize(before);
            }
        };
        rec(0, 0, 0);
        return total;
    });
}

const char* to_string(DeltaSign s) { return s == DeltaSign::printed ? "printed" : "desuspended"; }

DeltaSign parse_delta_sign(const std::string& text) {
    if (text == "printed") return DeltaSign::printed;
    if (text == "desuspended") return DeltaSign::desuspended;
    throw Error(ErrorKind::parse_error, "unknown delta sign rule: " + text);
}

namespace {

// Enumerates the terms of Delta_{1,r}(c). With `lengths`, only cuts whose k-th
// segment has degree lengths[k] are produced.
void for_each_delta_term(const Chain& c, int r, DeltaSign rule, const std::vector<int>* lengths,
                         const std::function<void(const DeltaTerm&)>& emit) {
    const int n = c.degree();
    std::vector<int> b(2 * static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int slot, int lower) {
        if (slot == 2 * r) {
            DeltaTerm t;
            int exponent = 0;
            Chain outer;
            int next = 0;  // first vertex not yet copied into the outer chain
            for (int k = 0; k < r; ++k) {
                const int lo = b[static_cast<std::size_t>(2 * k)];
                const int hi = b[static_cast<std::size_t>(2 * k + 1)];
                t.cuts.emplace_back(lo, hi);
                exponent += rule == DeltaSign::printed ? (hi - lo) * lo : (hi - lo - 1) * lo;
                for (int j = next; j <= lo; ++j) outer.v.push_back(c[static_cast<std::size_t>(j)]);
                outer.v.push_back(c[static_cast<std::size_t>(hi)]);
                next = hi + 1;
                t.segments.emplace_back(std::vector<Element>(c.v.begin() + lo, c.v.begin() + hi + 1));
            }
            for (int j = next; j <= n; ++j) outer.v.push_back(c[static_cast<std::size_t>(j)]);
            t.outer = std::move(outer);
            t.sign = (exponent % 2 + 2) % 2 == 0 ? 1 : -1;
            emit(t);
            return;
        }
        if (lengths && slot % 2 == 1) {
            const int hi = b[static_cast<std::size_t>(slot) - 1] + (*lengths)[static_cast<std::size_t>(slot / 2)];
            if (hi > n) return;
            b[static_cast<std::size_t>(slot)] = hi;
            rec(slot + 1, hi);
            return;
        }
        for (int v = lower; v <= n; ++v) {
            b[static_cast<std::size_t>(slot)] = v;
            rec(slot + 1, v);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<DeltaTerm> simp_delta_1r(const Chain& c, int r, DeltaSign rule) {
    if (r < 1) throw Error(ErrorKind::index_out_of_range, "Delta_{1,r} needs r >= 1");
    std::vector<DeltaTerm> out;
    for_each_delta_term(c, r, rule, nullptr, [&](const DeltaTerm& t) { out.push_back(t); });
    return out;
}

Cochain simp_brace(const Cochain& f, const std::vector<Cochain>& fs, DeltaSign rule) {
    if (fs.empty()) return f;
    std::vector<int> degrees{f.degree()};
    std::vector<int> lengths;
    for (const auto& g : fs) {
        degrees.push_back(g.degree());
        lengths.push_back(g.degree());
    }
    const int m = total_degree_after_brace(degrees);
    if (m < 0) throw Error(ErrorKind::degree_underflow, "brace result would have negative degree");
    Cochain out(f.nerve(), m);
    const auto& basis = out.basis();
    const int r = static_cast<int>(fs.size());
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        Scalar total;
        for_each_delta_term(basis[idx], r, rule, &lengths, [&](const DeltaTerm& t) {
            if (t.outer.degree() != f.degree()) return;
            Scalar prod = f[t.outer];
            for (int k = 0; k < r && !prod.is_zero(); ++k)
                prod *= fs[static_cast<std::size_t>(k)][t.segments[static_cast<std::size_t>(k)]];
            if (!prod.is_zero()) total += Scalar(t.sign) * prod;
        });
        out.at(idx) = total;
    }
    return out;
}

Cochain bdga_product(const Cochain& x, const Cochain& y) { return sign(x.degree() * y.degree()) * cup(x, y); }
Cochain bdga_differential(const Cochain& x) { return sign(x.degree() + 1) * coboundary(x); }
RelCochain bdga_product(const RelCochain& x, const RelCochain& y) {
    return sign(x.degree() * y.degree()) * rel_cup(x, y);
}
RelCochain bdga_differential(const RelCochain& x) { return sign(x.degree() + 1) * rel_coboundary(x); }

BraceStructure<RelCochain> hochschild_structure() {
    return {
        [](const RelCochain& x, const std::vector<RelCochain>& xs) { return hoch_brace(x, xs); },
        [](const RelCochain& x, const RelCochain& y) { return bdga_product(x, y); },
        [](const RelCochain& x) { return bdga_differential(x); },
    };
}

BraceStructure<Cochain> simplicial_structure(DeltaSign rule) {
    return {
        [rule](const Cochain& x, const std::vector<Cochain>& xs) { return simp_brace(x, xs, rule); },
        [](const Cochain& x, const Cochain& y) { return bdga_product(x, y); },
        [](const Cochain& x) { return bdga_differential(x); },
    };
}

template <class V>
V check_brace_relation(const BraceStructure<V>& s, const V& v, const std::vector<V>& vs, const std::vector<V>& ws) {
    const V lhs = s.brace(s.brace(v, vs), ws);
    const int m = static_cast<int>(vs.size());
    const int n = static_cast<int>(ws.size());
    std::optional<V> rhs;
    // 0 <= i_1 <= j_1 <= .. <= i_m <= j_m <= n
    std::vector<int> idx(2 * static_cast<std::size_t>(m));
    std::function<void(int, int)> rec = [&](int slot, int lower) {
        if (slot == 2 * m) {
            std::vector<V> args;
            int exponent = 0;
            int prev = 0;
            for (int k = 0; k < m; ++k) {
                const int i = idx[static_cast<std::size_t>(2 * k)];
                const int j = idx[static_cast<std::size_t>(2 * k + 1)];
                for (int l = prev; l < i; ++l) args.push_back(ws[static_cast<std::size_t>(l)]);
                args.push_back(s.brace(vs[static_cast<std::size_t>(k)], {ws.begin() + i, ws.begin() + j}));
                int shifted = 0;
                for (int l = 0; l < i; ++l) shifted += ws[static_cast<std::size_t>(l)].degree() - 1;
                exponent += (vs[static_cast<std::size_t>(k)].degree() - 1) * shifted;
                prev = j;
            }
            for (int l = prev; l < n; ++l) args.push_back(ws[static_cast<std::size_t>(l)]);
            accumulate(rhs, sign(exponent) * s.brace(v, args));
            return;
        }
        for (int x = lower; x <= n; ++x) {
            idx[static_cast<std::size_t>(slot)] = x;
            rec(slot + 1, x);
        }
    };
    rec(0, 0);
    return lhs - *rhs;
}

template <class V>
V check_distributivity(const BraceStructure<V>& s, const V& v, const V& w, const std::vector<V>& vs) {
    const V lhs = s.brace(s.product(v, w), vs);
    std::optional<V> rhs;
    const std::size_t n = vs.size();
    for (std::size_t k = 0; k <= n; ++k) {
        int shifted = 0;
        for (std::size_t p = 0; p < k; ++p) shifted += vs[p].degree() - 1;
        const V left = s.brace(v, {vs.begin(), vs.begin() + static_cast<long>(k)});
        const V right = s.brace(w, {vs.begin() + static_cast<long>(k), vs.end()});
        accumulate(rhs, sign(w.degree() * shifted) * s.product(left, right));
    }
    return lhs - *rhs;
}

template <class V>
V check_boundary_relation(const BraceStructure<V>& s, const V& v, const std::vector<V>& vs) {
    const int n = static_cast<int>(vs.size());
    if (n < 1) throw Error(ErrorKind::arity_mismatch, "boundary relation needs at least one argument");
    auto deg = [&](int i) { return vs[static_cast<std::size_t>(i)].degree(); };  // 0-based: |v_{i+1}|
    auto prefix = [&](int count) {
        int t = v.degree();
        for (int l = 0; l < count; ++l) t += deg(l);
        return t;
    };

    V lhs = s.differential(s.brace(v, vs)) - s.brace(s.differential(v), vs);
    for (int i = 1; i <= n; ++i) {
        std::vector<V> args = vs;
        args[static_cast<std::size_t>(i) - 1] = s.differential(vs[static_cast<std::size_t>(i) - 1]);
        lhs += sign(prefix(i - 1) - i + 1) * s.brace(v, args);
    }

    V rhs = sign(v.degree() * (deg(0) - 1)) * s.product(vs.front(), s.brace(v, {vs.begin() + 1, vs.end()}));
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<V> args(vs.begin(), vs.begin() + i - 1);
        args.push_back(s.product(vs[static_cast<std::size_t>(i) - 1], vs[static_cast<std::size_t>(i)]));
        args.insert(args.end(), vs.begin() + i + 1, vs.end());
        rhs -= sign(prefix(i) - i - 1) * s.brace(v, args);
    }
    rhs += sign(prefix(n - 1) - n) * s.product(s.brace(v, {vs.begin(), vs.end() - 1}), vs.back());
    return lhs - rhs;
}

template RelCochain check_brace_relation(const BraceStructure<RelCochain>&, const RelCochain&,
                                         const std::vector<RelCochain>&, const std::vector<RelCochain>&);
template Cochain check_brace_relation(const BraceStructure<Cochain>&, const Cochain&, const std::vector<Cochain>&,
                                      const std::vector<Cochain>&);
template RelCochain check_distributivity(const BraceStructure<RelCochain>&, const RelCochain&, const RelCochain&,
                                         const std::vector<RelCochain>&);
template Cochain check_distributivity(const BraceStructure<Cochain>&, const Cochain&, const Cochain&,
                                      const std::vector<Cochain>&);
template RelCochain check_boundary_relation(const BraceStructure<RelCochain>&, const RelCochain&,
                                            const std::vector<RelCochain>&);
template Cochain check_boundary_relation(const BraceStructure<Cochain>&, const Cochain&, const std::vector<Cochain>&);

RelCochain iota_brace_residual(const Cochain& f, const std::vector<Cochain>& fs, DeltaSign rule) {
    std::vector<RelCochain> rel;
    for (const auto& g : fs) rel.push_back(iota(g));
    return iota(simp_brace(f, fs, rule)) - hoch_brace(iota(f), rel);
}

namespace {

// All degree lists (|f|, |f_1|, .., |f_k|) with k <= max_args, ordered by
// total input degree, then lexicographically.
std::vector<std::vector<int>> degree_patterns(int max_degree, int max_args) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int args) {
        if (static_cast<int>(cur.size()) == args + 1) {
            out.push_back(cur);
            return;
        }
        for (int d = 1; d <= max_degree; ++d) {
            cur.push_back(d);
            rec(args);
            cur.pop_back();
        }
    };
    for (int k = 1; k <= max_args; ++k) rec(k);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        return sa != sb ? sa < sb : a.size() < b.size();
    });
    return out;
}

}  // namespace

BraceDiscrepancy localize_brace_discrepancy(const NervePtr& nerve, int max_degree, int max_args, DeltaSign rule) {
    BraceDiscrepancy report;
    for (const auto& degrees : degree_patterns(max_degree, max_args)) {
        const int m = total_degree_after_brace(degrees);
        if (m < 1) continue;
        // Enumerate all basis choices for (f, f_1, .., f_k).
        std::vector<const ChainBasis*> bases;
        for (int d : degrees) bases.push_back(&nerve->basis(d));
        std::vector<std::size_t> pick(degrees.size(), 0);
        bool pattern_fails = false;
        bool parity_explains = true;
        std::size_t instances = 0;
        std::function<void(std::size_t)> rec = [&](std::size_t slot) {
            if (slot < pick.size()) {
                for (std::size_t i = 0; i < bases[slot]->size(); ++i) {
                    pick[slot] = i;
                    rec(slot + 1);
                }
                return;
            }
            ++instances;
            const Cochain f = Cochain::basis_element(nerve, (*bases[0])[pick[0]]);
            std::vector<Cochain> fs;
            std::vector<RelCochain> rel;
            for (std::size_t k = 1; k < pick.size(); ++k) {
                fs.push_back(Cochain::basis_element(nerve, (*bases[k])[pick[k]]));
                rel.push_back(iota(fs.back()));
            }
            const RelCochain lhs = iota(simp_brace(f, fs, rule));
            const RelCochain rhs = hoch_brace(iota(f), rel);
            // Position-parity prediction: recompute the Hochschild side with the extra (-1)^{sum b'}.
            const RelCochain predicted = iota(simp_brace(f, fs, DeltaSign::desuspended));
            for (std::size_t k = 0; k < lhs.dim(); ++k) {
                if (lhs.at(k) == rhs.at(k)) continue;
                if (!(predicted.at(k) == rhs.at(k))) parity_explains = false;
                if (!pattern_fails) {
                    pattern_fails = true;
                    report.found = true;
                    report.degrees = degrees;
                    report.inputs.clear();
                    for (std::size_t s = 0; s < pick.size(); ++s) report.inputs.push_back((*bases[s])[pick[s]]);
                    report.at = lhs.basis()[k];
                    report.simplicial_value = lhs.at(k);
                    report.hochschild_value = rhs.at(k);
                }
            }
            // Check the parity explanation term by term too: the simplicial side with
            // the printed sign must equal (-1)^{sum b'} times the Hochschild term.
            if (!(predicted == rhs)) parity_explains = false;
        };
        rec(0);
        if (pattern_fails) {
            report.instances_checked = instances;
            report.explained_by_position_parity = parity_explains;
            return report;
        }
        report.instances_checked += instances;
    }
    return report;
}

}  // namespace posetcomp
