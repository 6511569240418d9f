#pragma once

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "posetcomp/brace.hpp"
#include "posetcomp/verify.hpp"

namespace testing {

using namespace posetcomp;

#define CHECK_ERROR_KIND(expr, expected)                      \
    do {                                                      \
        bool thrown_ = false;                                 \
        try {                                                 \
            (void)(expr);                                     \
        } catch (const ::posetcomp::Error& e_) {              \
            thrown_ = true;                                   \
            CHECK(e_.kind() == (expected));                   \
        }                                                     \
        CHECK_MESSAGE(thrown_, "expected an error: " #expr);  \
    } while (0)

// Random poset on n elements: a random DAG on 0..n-1 (edges go up) and its closure.
inline Poset random_poset(std::mt19937_64& rng, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rel;
    std::bernoulli_distribution edge(0.35);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) rel.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
    // declaration order unrelated to the order relation
    std::shuffle(names.begin(), names.end(), rng);
    Poset p = poset_from_relations(names, rel);
    p.name = "random";
    return p;
}

inline std::vector<std::size_t> betti_values(const BettiTable& t) { return t.values(); }

}  // namespace testing
