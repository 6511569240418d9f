// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "posetcomp/verify.hpp"

using namespace posetcomp;

namespace {

// pinned limits, seconds
constexpr double limit_c1 = 10, limit_c2 = 30, limit_c7 = 120, limit_c10 = 300;
constexpr int trials = 100;
constexpr std::uint64_t seed = 42;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back(what);
        }
    }
};

Poset by_name(const std::string& name) {
    for (auto& p : corpus::all())
        if (p.name == name) return p;
    throw std::runtime_error("no corpus poset " + name);
}

// Folds the named checks (all checks when `only` is empty) of a report into the outcome.
std::size_t absorb(Outcome& o, const SuiteReport& r, const std::vector<std::string>& only = {}) {
    std::size_t instances = 0;
    for (const auto& c : r.checks) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
        instances += c.trials;
        std::ostringstream os;
        os << r.poset << " " << r.suite << " / " << c.name << ": " << (c.trials - c.failures) << "/" << c.trials;
        if (!c.witnesses.empty()) os << "; witness " << c.witnesses.front().substr(0, 300);
        o.require(c.passed(), os.str());
        for (const auto& n : c.notes)
            if (!c.passed()) o.details.push_back("  " + n);
    }
    return instances;
}

VerifyOptions options(int max_degree, DeltaSign rule = DeltaSign::printed) {
    VerifyOptions o;
    o.max_degree = max_degree;
    o.trials = trials;
    o.seed = seed;
    o.delta_sign = rule;
    return o;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Outcome c1() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& p : corpus::all()) n += absorb(o, verify_simplicial(make_nerve(p), options(5)));
    o.summary = std::to_string(n) + " identity instances, degree <= 5, 6 posets";
    return o;
}

Outcome c2() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& p : corpus::all()) n += absorb(o, verify_complexes(make_nerve(p), options(4)));
    o.summary = std::to_string(n) + " instances (" + std::to_string(trials) + " seeded trials per random check)";
    return o;
}

Outcome c3() {
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<std::size_t>>> golden{
        {"PT", {1, 0, 0}}, {"P2", {1, 0, 0}}, {"P3", {1, 0, 0, 0}},
        {"V", {1, 0, 0}},  {"C4", {1, 1, 0}}, {"B3", {1, 1, 0}}};
    for (const auto& [name, expect] : golden) {
        const Poset p = by_name(name);
        const NervePtr nerve = make_nerve(p);
        const int top = static_cast<int>(expect.size()) - 1;
        for (std::uint64_t prime : {0ULL, 2ULL}) {
            const FieldSpec f = prime ? FieldSpec::gf(prime) : FieldSpec::rational();
            for (bool normalized : {false, true}) {
                const auto lib = nerve_betti(nerve, top, normalized, f).values();
                const auto ref = oracle::nerve_betti(p, top, normalized, static_cast<std::int64_t>(prime));
                const std::string tag = name + " over " + f.name() + (normalized ? " normalized" : " unnormalized");
                o.require(ref == expect, tag + ": oracle " + join(ref) + " != golden " + join(expect));
                o.require(lib == expect, tag + ": library " + join(lib) + " != golden " + join(expect));
            }
        }
    }
    o.summary = "6 posets x {Q, GF(2)} x {normalized, unnormalized}, library = oracle = golden";
    return o;
}

Outcome c4() {
    Outcome o;
    for (const auto& p : corpus::all())
        absorb(o, verify_cct(make_nerve(p), options(4)),
               {"chain_iso intertwines faces/degeneracies", "relative chain Betti = nerve Betti"});
    o.summary = "faces/degeneracies exhaustive to degree 4, Betti equal on 6 posets";
    return o;
}

Outcome c5() {
    Outcome o;
    for (const auto& p : corpus::all())
        absorb(o, verify_cct(make_nerve(p), options(3)),
               {"iota bijective on bases", "iota coboundary-compat", "iota cup-compat"});
    o.summary = "bijection exhaustive; " + std::to_string(trials) + " seeded pairs per poset, degrees <= 3";
    return o;
}

Outcome c6() {
    Outcome o;
    for (const auto& p : corpus::all())
        absorb(o, verify_cosimplicial(make_nerve(p), options(4)), {"F_i o iota = iota o F_i", "D_i o iota = iota o D_i"});
    o.summary = "exhaustive on bases, degrees <= 4, 6 posets";
    return o;
}

Outcome c7() {
    Outcome o;
    const auto p2 = hh_betti(corpus::two_chain(), 2).values();
    const auto p2_nerve = nerve_cobetti(make_nerve(corpus::two_chain()), 2).values();
    const auto pt = hh_betti(corpus::point(), 2).values();
    const auto v = hh_betti(corpus::vee(), 1).values();
    const std::vector<std::size_t> e3{1, 0, 0}, e2{1, 0};
    o.require(p2 == e3, "hh(P2) = " + join(p2));
    o.require(p2_nerve == e3, "nerve cobetti(P2) = " + join(p2_nerve));
    o.require(pt == e3, "hh(PT) = " + join(pt));
    o.require(v == e2, "hh(V) = " + join(v));
    o.summary = "hh(P2)=" + join(p2) + " cobetti(P2)=" + join(p2_nerve) + " hh(PT)=" + join(pt) + " hh(V)=" + join(v);
    return o;
}

Outcome c8() {
    Outcome o;
    for (const char* name : {"PT", "P2", "V"})
        absorb(o, verify_operad(make_nerve(by_name(name)), options(3)), {"operad_iso preserves o_i"});
    absorb(o, verify_operad(make_nerve(corpus::circle()), options(3)),
           {"End associativity", "End unit laws", "cochain operad associativity", "cochain operad unit laws",
            "operad_iso preserves gamma"});
    for (const auto& p : corpus::all()) absorb(o, verify_operad(make_nerve(p), options(3)), {"m o_1 m = m o_2 m"});
    o.summary = "o_i exhaustive to arity 3 on PT,P2,V; " + std::to_string(trials) + " axiom trials on C4; m o_1 m = m o_2 m on 6 posets";
    return o;
}

Outcome c9() {
    Outcome o;
    std::size_t negatives = 0;
    for (const auto& p : corpus::all()) {
        const SuiteReport r = verify_relative_operad(make_nerve(p), options(3));
        absorb(o, r);
        for (const auto& c : r.checks)
            if (c.name == "S-valued closure negative control detected" && c.trials > 0 && c.passed()) ++negatives;
    }
    o.require(negatives > 0, "no negative control ran");
    o.summary = std::to_string(trials) + " trials per poset; closure positive on 6 posets, negative control failing as required on " +
                std::to_string(negatives);
    return o;
}

Outcome c10() {
    Outcome o;
    for (const auto& p : corpus::all()) {
        const NervePtr nerve = make_nerve(p);
        absorb(o, verify_bdga(nerve, options(3)));
        absorb(o, verify_braces(nerve, options(3)), {"iota brace-compat"});
    }
    o.summary = "3 axiom families x 2 flavors + iota brace-compat, " + std::to_string(trials) +
                " instances each per poset, Delta_{1,r} sign rule printed";
    // The variant that restores the identities, reported for reference only.
    Outcome alt;
    for (const auto& p : corpus::all()) {
        const NervePtr nerve = make_nerve(p);
        absorb(alt, verify_bdga(nerve, options(3, DeltaSign::desuspended)));
        absorb(alt, verify_braces(nerve, options(3, DeltaSign::desuspended)), {"iota brace-compat"});
    }
    o.details.push_back(std::string("info: with the desuspended Delta_{1,r} sign rule the same checks ") +
                        (alt.pass ? "all pass" : "also fail"));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::function<Outcome()> run;
        double limit;  // 0 = no runtime bound
    };
    const std::vector<Criterion> criteria{
        {1, c1, limit_c1}, {2, c2, limit_c2}, {3, c3, 0}, {4, c4, 0},  {5, c5, 0},
        {6, c6, 0},        {7, c7, limit_c7}, {8, c8, 0}, {9, c9, 0}, {10, c10, limit_c10},
    };
    bool all = true;
    double total = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        if (c.limit > 0 && secs >= c.limit) o.require(false, "runtime " + std::to_string(secs) + " s over limit");
        char timing[64];
        if (c.limit > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit);
        else std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " [" << timing
                  << "]\n";
        for (const auto& d : o.details) std::cout << "    " << d << '\n';
        all = all && o.pass;
    }
    std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << " (" << total << " s)\n";
    return all ? 0 : 1;
}
