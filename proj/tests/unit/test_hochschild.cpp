#include "helpers.hpp"

using namespace testing;

namespace {

Cochain random_cochain(const NervePtr& nerve, int degree, std::mt19937_64& rng) {
    Cochain f(nerve, degree);
    for (std::size_t i = 0; i < f.dim(); ++i) f.at(i) = Scalar(static_cast<long>(rng() % 5) - 2);
    return f;
}

// V with its elements declared top first, so ids run against the order
Poset reversed_vee() {
    Poset p = poset_from_relations({"c", "b", "a"}, {{"a", "c"}, {"b", "c"}});
    p.name = "Vrev";
    return p;
}

}  // namespace

TEST_SUITE("hochschild") {

TEST_CASE("relative faces and degeneracies follow the nerve") {
    for (const Poset& p : corpus::all()) {
        const NervePtr nerve = make_nerve(p);
        for (int n = 0; n <= 3; ++n)
            for (const Chain& c : nerve->basis(n).chains()) {
                const RelTensor t = chain_iso(GradedVector::basis_element(nerve, c));
                for (int i = 0; i <= n; ++i) {
                    if (n >= 1) CHECK(rel_face(t, i) == chain_iso(GradedVector::basis_element(nerve, face(c, i))));
                    CHECK(rel_degeneracy(t, i) == chain_iso(GradedVector::basis_element(nerve, degeneracy(c, i))));
                }
                CHECK_ERROR_KIND(rel_degeneracy(t, n + 1), ErrorKind::index_out_of_range);
                if (n >= 1) CHECK_ERROR_KIND(rel_face(t, n + 1), ErrorKind::index_out_of_range);
            }
        CHECK(rel_chain_betti(nerve, 3) == nerve_betti(nerve, 3, false));
        CHECK(rel_chain_betti(nerve, 3, FieldSpec::gf(2)) == nerve_betti(nerve, 3, false, FieldSpec::gf(2)));
    }
}

TEST_CASE("mu operators evaluate to the endpoint pair") {
    const NervePtr nerve = make_nerve(corpus::three_chain());
    const RelCochain mu = RelCochain::basis_element(nerve, Chain{0, 1, 2});
    CHECK(evaluate(mu, {IncidencePair{0, 1}, IncidencePair{1, 2}}) == IncidenceElement({0, 2}));
    CHECK(evaluate(mu, {IncidencePair{0, 1}, IncidencePair{1, 1}}).is_zero());
    CHECK(mu_eval(mu, chain_iso(GradedVector::basis_element(nerve, Chain{0, 1, 2}))) == IncidenceElement({0, 2}));
    CHECK_ERROR_KIND(mu_eval(mu, RelTensor(nerve, 1)), ErrorKind::degree_mismatch);
    FullTensor t(2);
    t.add({{0, 1}, {1, 2}}, Scalar(3));
    t.add({{0, 1}, {2, 2}}, Scalar(5));
    CHECK(mu_eval(mu, t) == IncidenceElement({0, 2}, Scalar(3)));
}

TEST_CASE("read_back enforces the bimodule contract") {
    const NervePtr nerve = make_nerve(corpus::two_chain());
    CHECK_ERROR_KIND(read_back(nerve, 1, [](const std::vector<IncidencePair>&) { return IncidenceElement({0, 0}); }),
                     ErrorKind::factorization_violation);
    const RelCochain f = read_back(nerve, 1, [](const std::vector<IncidencePair>& a) {
        return IncidenceElement({a[0].lo, a[0].hi}, Scalar(2));
    });
    CHECK(f == Scalar(2) * end_unit(nerve));
}

TEST_CASE("relative coboundary is the restriction of the full one") {
    std::mt19937_64 rng(17);
    for (const Poset& p : {corpus::two_chain(), corpus::vee(), corpus::circle(), reversed_vee()}) {
        const NervePtr nerve = make_nerve(p);
        for (int n = 1; n <= 2; ++n) {
            const RelCochain f = iota(random_cochain(nerve, n, rng));
            CHECK(embed_rel_to_full(rel_coboundary(f)) == full_coboundary(p, embed_rel_to_full(f)));
            CHECK(rel_coboundary(rel_coboundary(f)).is_zero());
        }
    }
}

TEST_CASE("full coboundary matrix matches the dense bar differential") {
    for (const Poset& p : {corpus::point(), corpus::two_chain(), corpus::vee(), reversed_vee()})
        for (int n = 0; n <= 1; ++n) {
            const SparseMatrix m = full_coboundary_matrix(p, n);
            const oracle::Dense o = oracle::hochschild_differential(p, n);
            REQUIRE(m.rows() == o.size());
            REQUIRE(m.cols() == o[0].size());
            bool same = true;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) same = same && m.get(r, c) == Scalar(o[r][c]);
            CHECK_MESSAGE(same, p.name << " degree " << n);
        }
}

TEST_CASE("full coboundary on explicit cochains") {
    const Poset p = corpus::two_chain();
    // degree 0: delta x (a) = a x - x a; the unit is central
    FullCochain unit(0);
    unit.add({}, inc_unit(p));
    CHECK(full_coboundary(p, unit).values().empty());
    FullCochain x(0);
    x.add({}, IncidenceElement({0, 0}));
    const FullCochain dx = full_coboundary(p, x);
    CHECK(dx.value({{0, 1}}) == IncidenceElement({0, 1}, Scalar(-1)));
    const FullCochain id = identity_cochain(p);
    CHECK(full_coboundary(p, full_coboundary(p, id)).values().empty());
}

TEST_CASE("Hochschild cohomology of small posets") {
    CHECK(hh_betti(corpus::point(), 2).values() == std::vector<std::size_t>{1, 0, 0});
    CHECK(hh_betti(corpus::two_chain(), 2).values() == std::vector<std::size_t>{1, 0, 0});
    CHECK(hh_betti(corpus::vee(), 1).values() == std::vector<std::size_t>{1, 0});
    CHECK(hh_betti(corpus::two_chain(), 2).values() == nerve_cobetti(make_nerve(corpus::two_chain()), 2).values());
    for (const Poset& p : {corpus::point(), corpus::two_chain(), corpus::vee(), reversed_vee()}) {
        const int top = p.size() <= 2 ? 2 : 1;
        CHECK(hh_betti(p, top).values() == oracle::hh_betti(p, top));
        CHECK(hh_betti(p, top, default_hh_cap, FieldSpec::gf(2)).values() == oracle::hh_betti(p, top, 2));
    }
}

TEST_CASE("resource limit reports degree and projected dimension") {
    CHECK(full_cochain_dim(corpus::b3(), 3) == 20736);
    try {
        hh_betti(corpus::b3(), 3);
        FAIL("expected resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
        CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
        CHECK(std::string(e.what()).find("20736") != std::string::npos);
    }
    CHECK_NOTHROW(hh_betti(corpus::b3(), 1));
    CHECK_ERROR_KIND(hh_betti(corpus::vee(), 2, 100), ErrorKind::resource_limit);
}

TEST_CASE("iota on cochains") {
    std::mt19937_64 rng(23);
    const NervePtr nerve = make_nerve(corpus::circle());
    CHECK_ERROR_KIND(iota(random_cochain(nerve, 0, rng)), ErrorKind::degree_mismatch);
    for (int t = 0; t < 20; ++t) {
        const Cochain f = random_cochain(nerve, 1 + static_cast<int>(rng() % 2), rng);
        const Cochain g = random_cochain(nerve, 1 + static_cast<int>(rng() % 2), rng);
        CHECK(iota_inverse(iota(f)) == f);
        CHECK(iota(coboundary(f)) == rel_coboundary(iota(f)));
        CHECK(iota(cup(f, g)) == rel_cup(iota(f), iota(g)));
        for (int i = 0; i <= f.degree() + 1; ++i) CHECK(iota(coface(f, i)) == rel_coface(iota(f), i));
        if (f.degree() >= 2)
            for (int i = 0; i < f.degree(); ++i) CHECK(iota(codegeneracy(f, i)) == rel_codegeneracy(iota(f), i));
    }
    const RelCochain f = iota(random_cochain(nerve, 2, rng));
    CHECK_ERROR_KIND(rel_coface(f, 4), ErrorKind::index_out_of_range);
    CHECK_ERROR_KIND(rel_codegeneracy(f, 2), ErrorKind::index_out_of_range);
}

}
