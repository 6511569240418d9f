#include "helpers.hpp"

using namespace testing;

namespace {

IncidenceElement random_element(const Poset& p, std::mt19937_64& rng) {
    IncidenceElement x;
    for (const auto& q : incidence_basis(p)) x.add(q, Scalar(static_cast<long>(rng() % 5) - 2));
    return x;
}

}  // namespace

TEST_SUITE("incidence") {

TEST_CASE("basis pairs multiply by concatenation") {
    CHECK(pair_mul({0, 1}, {1, 2}) == IncidencePair{0, 2});
    CHECK(!pair_mul({0, 1}, {0, 2}));
    CHECK(incidence_basis(corpus::circle()).size() == 8);
    CHECK_ERROR_KIND(checked_pair(corpus::vee(), 0, 1), ErrorKind::index_out_of_range);
}

TEST_CASE("incidence algebra is associative and unital") {
    std::mt19937_64 rng(5);
    for (const Poset& p : corpus::all()) {
        const IncidenceElement one = inc_unit(p);
        CHECK(one.is_diagonal());
        for (int t = 0; t < 20; ++t) {
            const auto x = random_element(p, rng), y = random_element(p, rng), z = random_element(p, rng);
            CHECK(inc_mul(inc_mul(x, y), z) == inc_mul(x, inc_mul(y, z)));
            CHECK(inc_mul(one, x) == x);
            CHECK(inc_mul(x, one) == x);
        }
    }
}

TEST_CASE("barycentric algebra is the tensor algebra over S") {
    for (const Poset& p : corpus::all()) {
        const NervePtr nerve = make_nerve(p);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (const Chain& u : nerve->basis(a).chains())
                    for (const Chain& v : nerve->basis(b).chains()) {
                        const auto uv = bi_mul(u, v);
                        const RelTensor prod = rel_tensor_mul(bi_tensor_iso(nerve, u), bi_tensor_iso(nerve, v));
                        if (uv) {
                            CHECK(u.back() == v.front());
                            CHECK(prod == bi_tensor_iso(nerve, *uv));
                            CHECK(bi_tensor_iso_inverse(prod) == *uv);
                        } else {
                            CHECK(prod.is_zero());
                        }
                    }
    }
}

TEST_CASE("tensor factors") {
    CHECK(tensor_factors(Chain{0, 1, 2}) == std::vector<IncidencePair>{{0, 1}, {1, 2}});
    CHECK(tensor_factors(Chain{3}) == std::vector<IncidencePair>{{3, 3}});
    CHECK(chain_from_factors({{0, 1}, {1, 2}}) == Chain{0, 1, 2});
    CHECK(!chain_from_factors({{0, 1}, {2, 2}}));
    CHECK(chain_from_factors({{3, 3}}, true) == Chain{3});
}

TEST_CASE("contraction and the retract onto consecutive tensors") {
    const NervePtr nerve = make_nerve(corpus::circle());
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 3; ++n) {
        RelTensor t(nerve, n);
        for (std::size_t i = 0; i < t.dim(); ++i) t.at(i) = Scalar(static_cast<long>(rng() % 5) - 2);
        CHECK(retract_project(nerve, retract_embed(t)) == t);
        IncidenceElement expect;
        for (const auto& [c, s] : t.support()) expect.add({c.front(), c.back()}, s);
        CHECK(contract(t) == expect);
    }
    FullTensor junk(2);
    junk.add({{0, 2}, {1, 3}}, Scalar(1));  // (a,c) (x) (b,d) is not consecutive
    CHECK(retract_project(nerve, junk).is_zero());
    CHECK_ERROR_KIND(contract(RelTensor(nerve, 0)), ErrorKind::degree_mismatch);
}

}
