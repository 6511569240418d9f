#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace posetcomp {

using Element = int;

/// Weakly increasing sequence of poset elements; degree = length - 1.
/// One type serves as nerve simplex, relative tensor basis, and cochain index.
struct Chain {
    std::vector<Element> v;

    Chain() = default;
    Chain(std::initializer_list<Element> xs) : v(xs) {}
    explicit Chain(std::vector<Element> xs) : v(std::move(xs)) {}

    int degree() const { return static_cast<int>(v.size()) - 1; }
    Element front() const { return v.front(); }
    Element back() const { return v.back(); }
    Element operator[](std::size_t i) const { return v[i]; }
    bool is_strict() const;

    friend auto operator<=>(const Chain&, const Chain&) = default;
    friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainHash {
    std::size_t operator()(const Chain& c) const noexcept;
};

class Poset {
public:
    Poset() = default;

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element x) const { return labels_.at(static_cast<std::size_t>(x)); }
    Element id(const std::string& name) const;

    bool leq(Element x, Element y) const { return leq_[index(x, y)]; }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }

    /// Comparable pairs (x, y) with x <= y, lexicographic.
    std::vector<std::pair<Element, Element>> comparable_pairs() const;
    bool is_chain(const Chain& c) const;

    std::string name;  // corpus / file name, informational

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

    friend Poset poset_from_relations(const std::vector<std::string>&,
                                      const std::vector<std::pair<std::string, std::string>>&);
    friend Poset poset_from_leq(std::vector<std::string>, std::vector<bool>);

private:
    std::size_t index(Element x, Element y) const {
        return static_cast<std::size_t>(x) * labels_.size() + static_cast<std::size_t>(y);
    }

    std::vector<std::string> labels_;
    std::vector<bool> leq_;
};

/// Reflexive-transitive closure of the given pairs.
/// Throws unknown-name or antisymmetry-violation.
Poset poset_from_relations(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

/// From a full n*n relation matrix; validates the order axioms.
Poset poset_from_leq(std::vector<std::string> labels, std::vector<bool> leq);

/// Finite topology; each open set is a sorted list of point ids.
struct FiniteTopology {
    std::vector<std::string> points;
    std::vector<std::vector<Element>> opens;

    /// Checks the topology axioms (empty set, whole space, unions, intersections).
    bool is_valid() const;
    /// Canonical form: opens sorted and deduplicated.
    FiniteTopology canonical() const;
    friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;
};

/// Specialization order: x <= y iff every open containing x contains y.
/// Throws not-T0 if two points have the same open neighbourhoods.
Poset poset_from_topology(const FiniteTopology& t);

/// The up-set (Alexandrov) topology; opens in canonical order.
FiniteTopology topology_from_poset(const Poset& p);

/// All weakly increasing sequences of length n+1, lexicographic in element ids.
std::vector<Chain> chains(const Poset& p, int n);
std::vector<Chain> strict_chains(const Poset& p, int n);

namespace corpus {

Poset point();          // PT
Poset two_chain();      // P2: 0 <= 1
Poset three_chain();    // P3: 0 <= 1 <= 2
Poset vee();            // V: a, b <= c
Poset circle();         // C4: a, b <= c, d
Poset b3();             // proper nonempty subsets of {1,2,3}
std::vector<Poset> all();

}  // namespace corpus

}  // namespace posetcomp
