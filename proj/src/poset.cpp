#include "posetcomp/poset.hpp"

#include <algorithm>
#include <set>

#include "posetcomp/error.hpp"

namespace posetcomp {

bool Chain::is_strict() const {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] == v[i]) return false;
    return true;
}

std::size_t ChainHash::operator()(const Chain& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Element x : c.v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h ^ c.v.size();
}

Element Poset::id(const std::string& nm) const {
    auto it = std::find(labels_.begin(), labels_.end(), nm);
    if (it == labels_.end()) throw Error(ErrorKind::unknown_name, "unknown element: " + nm);
    return static_cast<Element>(it - labels_.begin());
}

std::vector<std::pair<Element, Element>> Poset::comparable_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    const auto n = static_cast<Element>(size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (leq(x, y)) out.emplace_back(x, y);
    return out;
}

bool Poset::is_chain(const Chain& c) const {
    if (c.v.empty()) return false;
    const auto n = static_cast<Element>(size());
    for (Element x : c.v)
        if (x < 0 || x >= n) return false;
    for (std::size_t i = 1; i < c.v.size(); ++i)
        if (!leq(c.v[i - 1], c.v[i])) return false;
    return true;
}

Poset poset_from_leq(std::vector<std::string> labels, std::vector<bool> leq) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::index_out_of_range, "poset needs at least one element");
    if (leq.size() != n * n) throw Error(ErrorKind::degree_mismatch, "relation matrix has wrong size");
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != n) throw Error(ErrorKind::unknown_name, "element names are not distinct");
    auto at = [&](std::size_t x, std::size_t y) { return leq[x * n + y]; };
    for (std::size_t x = 0; x < n; ++x) {
        if (!at(x, x)) throw Error(ErrorKind::antisymmetry_violation, "relation is not reflexive at " + labels[x]);
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && at(x, y) && at(y, x))
                throw Error(ErrorKind::antisymmetry_violation,
                            "antisymmetry violated: " + labels[x] + " <= " + labels[y] + " <= " + labels[x]);
            for (std::size_t z = 0; z < n; ++z)
                if (at(x, y) && at(y, z) && !at(x, z))
                    throw Error(ErrorKind::antisymmetry_violation, "relation is not transitive");
        }
    }
    Poset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(leq);
    return p;
}

Poset poset_from_relations(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = names.size();
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != n) throw Error(ErrorKind::unknown_name, "element names are not distinct");
    auto lookup = [&](const std::string& s) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) throw Error(ErrorKind::unknown_name, "unknown element: " + s);
        return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<bool> leq(n * n, false);
    for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = true;
    for (const auto& [a, b] : pairs) leq[lookup(a) * n + lookup(b)] = true;
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k * n + j]) leq[i * n + j] = true;
    return poset_from_leq(names, std::move(leq));
}

namespace {

bool contains(const std::vector<Element>& set, Element x) {
    return std::binary_search(set.begin(), set.end(), x);
}

std::vector<Element> set_union(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Element> set_intersection(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

FiniteTopology FiniteTopology::canonical() const {
    FiniteTopology t;
    t.points = points;
    std::set<std::vector<Element>> uniq;
    for (auto o : opens) {
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
        uniq.insert(std::move(o));
    }
    t.opens.assign(uniq.begin(), uniq.end());
    std::stable_sort(t.opens.begin(), t.opens.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return t;
}

bool FiniteTopology::is_valid() const {
    const FiniteTopology t = canonical();
    std::set<std::vector<Element>> family(t.opens.begin(), t.opens.end());
    const auto n = static_cast<Element>(points.size());
    std::vector<Element> whole;
    for (Element x = 0; x < n; ++x) whole.push_back(x);
    if (!family.count({}) || !family.count(whole)) return false;
    for (const auto& o : t.opens)
        for (Element x : o)
            if (x < 0 || x >= n) return false;
    for (const auto& a : t.opens)
        for (const auto& b : t.opens)
            if (!family.count(set_union(a, b)) || !family.count(set_intersection(a, b))) return false;
    return true;
}

Poset poset_from_topology(const FiniteTopology& t) {
    if (!t.is_valid()) throw Error(ErrorKind::not_t0, "family of opens is not a topology");
    const FiniteTopology c = t.canonical();
    const std::size_t n = t.points.size();
    std::vector<bool> leq(n * n, false);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            bool ok = true;
            for (const auto& o : c.opens)
                if (contains(o, static_cast<Element>(x)) && !contains(o, static_cast<Element>(y))) {
                    ok = false;
                    break;
                }
            leq[x * n + y] = ok;
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (leq[x * n + y] && leq[y * n + x])
                throw Error(ErrorKind::not_t0,
                            "points " + t.points[x] + " and " + t.points[y] + " have the same neighbourhoods");
    return poset_from_leq(t.points, std::move(leq));
}

FiniteTopology topology_from_poset(const Poset& p) {
    // Decide elements in order; x may join only if every element above it
    // that was already decided is in. Each up-set is produced exactly once.
    const auto n = static_cast<Element>(p.size());
    std::vector<Element> order(static_cast<std::size_t>(n));
    for (Element i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    // reverse linear extension: maximal elements first
    std::sort(order.begin(), order.end(), [&](Element a, Element b) {
        auto above = [&](Element x) {
            int count = 0;
            for (Element y = 0; y < n; ++y) count += p.leq(x, y);
            return count;
        };
        return above(a) != above(b) ? above(a) < above(b) : a < b;
    });
    FiniteTopology t;
    t.points = p.labels();
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            std::vector<Element> open;
            for (Element x = 0; x < n; ++x)
                if (in[static_cast<std::size_t>(x)]) open.push_back(x);
            t.opens.push_back(std::move(open));
            return;
        }
        const Element x = order[k];
        rec(k + 1);
        bool closed = true;
        for (Element y = 0; y < n; ++y)
            if (p.less(x, y) && !in[static_cast<std::size_t>(y)]) closed = false;
        if (closed) {
            in[static_cast<std::size_t>(x)] = true;
            rec(k + 1);
            in[static_cast<std::size_t>(x)] = false;
        }
    };
    rec(0);
    return t.canonical();
}

std::vector<Chain> chains(const Poset& p, int n) {
    std::vector<Chain> out;
    if (n < 0) return out;
    const auto size = static_cast<Element>(p.size());
    std::vector<Element> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.emplace_back(cur);
            return;
        }
        for (Element x = 0; x < size; ++x) {
            if (!cur.empty() && !p.leq(cur.back(), x)) continue;
            cur.push_back(x);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<Chain> strict_chains(const Poset& p, int n) {
    std::vector<Chain> out;
    for (auto& c : chains(p, n))
        if (c.is_strict()) out.push_back(std::move(c));
    return out;
}

namespace corpus {

namespace {
Poset named(Poset p, std::string nm) {
    p.name = std::move(nm);
    return p;
}
}  // namespace

Poset point() { return named(poset_from_relations({"a"}, {}), "PT"); }
Poset two_chain() { return named(poset_from_relations({"0", "1"}, {{"0", "1"}}), "P2"); }
Poset three_chain() { return named(poset_from_relations({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}), "P3"); }
Poset vee() { return named(poset_from_relations({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}), "V"); }

Poset circle() {
    return named(poset_from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}), "C4");
}

Poset b3() {
    const std::vector<std::string> names{"1", "2", "3", "12", "13", "23"};
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& small : {"1", "2", "3"})
        for (const auto& big : {"12", "13", "23"})
            if (std::string(big).find(small) != std::string::npos) rel.emplace_back(small, big);
    return named(poset_from_relations(names, rel), "B3");
}

std::vector<Poset> all() { return {point(), two_chain(), three_chain(), vee(), circle(), b3()}; }

}  // namespace corpus

}  // namespace posetcomp
