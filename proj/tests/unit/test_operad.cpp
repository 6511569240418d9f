#include "helpers.hpp"

using namespace testing;

namespace {

Cochain random_cochain(const NervePtr& nerve, int degree, std::mt19937_64& rng) {
    Cochain f(nerve, degree);
    for (std::size_t i = 0; i < f.dim(); ++i) f.at(i) = Scalar(static_cast<long>(rng() % 5) - 2);
    return f;
}

RelCochain mu(const NervePtr& nerve, Chain c) { return RelCochain::basis_element(nerve, c); }

}  // namespace

TEST_SUITE("operad") {

TEST_CASE("partial composition on mu operators") {
    const NervePtr nerve = make_nerve(corpus::three_chain());
    CHECK(end_partial(mu(nerve, {0, 2}), 1, mu(nerve, {0, 1, 2})) == mu(nerve, {0, 1, 2}));
    CHECK(end_partial(mu(nerve, {0, 1, 2}), 2, mu(nerve, {1, 1, 2})) == mu(nerve, {0, 1, 1, 2}));
    CHECK(end_partial(mu(nerve, {0, 1, 2}), 1, mu(nerve, {0, 2})).is_zero());  // endpoint mismatch
    CHECK(end_partial(mu(nerve, {0, 1, 2}), 1, mu(nerve, {1, 1})).is_zero());
    CHECK_ERROR_KIND(end_partial(mu(nerve, {0, 1}), 2, mu(nerve, {0, 1})), ErrorKind::index_out_of_range);
    CHECK_ERROR_KIND(end_gamma(mu(nerve, {0, 1, 2}), {mu(nerve, {0, 1})}), ErrorKind::arity_mismatch);
}

TEST_CASE("partial composition agrees with composing the multilinear maps") {
    std::mt19937_64 rng(29);
    for (const Poset& p : {corpus::vee(), corpus::circle(), corpus::three_chain()}) {
        const NervePtr nerve = make_nerve(p);
        for (int t = 0; t < 20; ++t) {
            const int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 2);
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(a));
            const RelCochain x = iota(random_cochain(nerve, a, rng)), y = iota(random_cochain(nerve, b, rng));
            const RelCochain composed = end_partial(x, i, y);
            for (const Chain& c : nerve->basis(a + b - 1).chains()) {
                const auto args = tensor_factors(c);
                std::vector<IncidenceElement> outer(args.begin(), args.begin() + i - 1);
                outer.push_back(evaluate(y, {args.begin() + i - 1, args.begin() + i - 1 + b}));
                outer.insert(outer.end(), args.begin() + i - 1 + b, args.end());
                CHECK(evaluate(composed, {args.begin(), args.end()}) == evaluate(x, outer));
            }
            CHECK(relative_partial(RelOperadElement::from_cochain(x), i, RelOperadElement::from_cochain(y)).to_cochain() ==
                  composed);
        }
    }
}

TEST_CASE("cochain operad matches End under iota") {
    std::mt19937_64 rng(31);
    for (const Poset& p : {corpus::point(), corpus::two_chain(), corpus::vee()}) {
        const NervePtr nerve = make_nerve(p);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (const Chain& x : nerve->basis(a).chains())
                    for (const Chain& y : nerve->basis(b).chains())
                        for (int i = 1; i <= a; ++i) {
                            const Cochain fx = Cochain::basis_element(nerve, x), fy = Cochain::basis_element(nerve, y);
                            CHECK(operad_iso(cochain_partial(fx, i, fy)) ==
                                  end_partial(operad_iso(fx), i, operad_iso(fy)));
                        }
        CHECK(operad_iso(cochain_unit(nerve)) == end_unit(nerve));
        const Cochain f = random_cochain(nerve, 2, rng);
        CHECK(operad_iso_inverse(operad_iso(f)) == f);
        CHECK_ERROR_KIND(cochain_gamma(f, {f}), ErrorKind::arity_mismatch);
    }
}

TEST_CASE("gamma from iterated partials") {
    std::mt19937_64 rng(37);
    const NervePtr nerve = make_nerve(corpus::circle());
    for (int t = 0; t < 30; ++t) {
        const RelCochain x = iota(random_cochain(nerve, 2, rng));
        const RelCochain y1 = iota(random_cochain(nerve, 1 + static_cast<int>(rng() % 2), rng));
        const RelCochain y2 = iota(random_cochain(nerve, 1 + static_cast<int>(rng() % 2), rng));
        CHECK(end_gamma(x, {y1, y2}) == end_partial(end_partial(x, 2, y2), 1, y1));
        CHECK(end_gamma(x, {y1, y2}) == end_partial(end_partial(x, 1, y1), 1 + y1.degree(), y2));
        CHECK(operad_iso(cochain_gamma(iota_inverse(x), {iota_inverse(y1), iota_inverse(y2)})) == end_gamma(x, {y1, y2}));
    }
}

TEST_CASE("multiplication element") {
    for (const Poset& p : corpus::all()) {
        const NervePtr nerve = make_nerve(p);
        const RelCochain m = multiplication_element(nerve);
        CHECK(end_partial(m, 1, m) == end_partial(m, 2, m));
        CHECK(evaluate(m, {inc_unit(p), inc_unit(p)}) == inc_unit(p));
    }
}

TEST_CASE("relative operad elements and the bimodule contract") {
    const NervePtr nerve = make_nerve(corpus::vee());
    RelOperadElement bad(nerve, 1);
    const std::size_t ac = nerve->basis(1).index_of(Chain{0, 2});
    bad.set_value(ac, IncidenceElement({0, 0}));
    CHECK(bad.factorization_witness() == Chain{0, 2});
    CHECK_ERROR_KIND(bad.to_cochain(), ErrorKind::factorization_violation);
    CHECK_ERROR_KIND(relative_gamma(bad, {RelOperadElement::unit(nerve)}), ErrorKind::factorization_violation);
    CHECK_ERROR_KIND(relative_gamma(RelOperadElement::unit(nerve), {bad}), ErrorKind::factorization_violation);
    CHECK_ERROR_KIND(relative_gamma(RelOperadElement::unit(nerve), {}), ErrorKind::arity_mismatch);
    CHECK_ERROR_KIND(RelOperadElement(nerve, 0), ErrorKind::arity_mismatch);
    CHECK(RelOperadElement::unit(nerve).to_cochain() == end_unit(nerve));
}

TEST_CASE("diagonal-valued elements are closed under composition") {
    const NervePtr nerve = make_nerve(corpus::circle());
    std::vector<RelOperadElement> diag;
    for (int arity = 1; arity <= 2; ++arity) {
        RelCochain f(nerve, arity);
        for (Element x = 0; x < 4; ++x) f.add(Chain(std::vector<Element>(static_cast<std::size_t>(arity) + 1, x)), Scalar(x + 1));
        diag.push_back(RelOperadElement::from_cochain(f));
    }
    const ClosureReport ok = sdiag_valued_closure_check(diag);
    CHECK(ok.passed);
    CHECK(ok.compositions > 0);
    const ClosureReport bad = sdiag_valued_closure_check({RelOperadElement::unit(nerve)});
    CHECK(!bad.passed);
    CHECK(!bad.witness.empty());
}

}
