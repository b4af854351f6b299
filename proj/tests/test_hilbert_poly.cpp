#include "doctest.h"

#include "higgs_lab/error.hpp"
#include "higgs_lab/hilbert_poly.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace higgs_lab;

namespace {

const HilbertPolynomial k{0, 1};

HilbertPolynomial poly(std::initializer_list<Rational> c) { return HilbertPolynomial(c); }

} // namespace

TEST_CASE("coefficients are normalized") {
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({}).degree() == -1);
    CHECK(poly({1, 0}) == HilbertPolynomial::constant(1));
    CHECK(HilbertPolynomial::monomial(3, 2) == poly({0, 0, 3}));
    CHECK(HilbertPolynomial::monomial(0, 5).is_zero());
    CHECK(poly({1, 2}).coeff(7) == 0);
    CHECK(poly({1, 2}).leading() == 2);
    CHECK(HilbertPolynomial{}.leading() == 0);
}

TEST_CASE("rendering") {
    CHECK(poly({Rational(-1, 2), 1, Rational(3, 2)}).to_string() == "3/2*k^2 + k - 1/2");
    CHECK(HilbertPolynomial{}.to_string() == "0");
    CHECK(poly({0, -1}).to_string() == "-k");
    CHECK(poly({-2, 2}).to_string() == "2*k - 2");
}

TEST_CASE("eventual order") {
    const HilbertPolynomial k2 = HilbertPolynomial::monomial(1, 2);
    CHECK(compare_eventual(k2, k2 + HilbertPolynomial::constant(1)) == EventualOrder::Precedes);
    CHECK(compare_eventual(poly({0, -100, 2}), poly({0, 1, 1})) == EventualOrder::Succeeds);
    CHECK(compare_eventual(poly({1, 1}), poly({1, 1})) == EventualOrder::Equal);
    CHECK(compare_eventual(HilbertPolynomial{}, poly({0, 0, -1})) == EventualOrder::Succeeds);

    CHECK(eventually_less(k, poly({1, 1})));
    CHECK(eventually_leq(k, poly({1, 1})));
    CHECK_FALSE(eventually_less(poly({1, 1}), poly({1, 1})));
    CHECK(eventually_leq(poly({1, 1}), poly({1, 1})));
    CHECK_FALSE(eventually_less(poly({3, 1}), poly({Rational(5, 2), 1})));
    CHECK_FALSE(eventually_leq(poly({3, 1}), poly({Rational(5, 2), 1})));
}

TEST_CASE("evaluate") {
    CHECK(evaluate(poly({5, 2}), 0) == 5);
    CHECK(evaluate(poly({5, 2}), 3) == 11);
    CHECK(evaluate(poly({Rational(-1, 2), 0, Rational(1, 2)}), 3) == 4);
    CHECK(evaluate(HilbertPolynomial{}, 12) == 0);
}

TEST_CASE("add and scale") {
    CHECK(add(poly({1, 1}), poly({-1, 1})) == poly({0, 2}));
    CHECK(scale(poly({4, 2}), Rational(1, 2)) == poly({2, 1}));
    const HilbertPolynomial p = poly({Rational(7, 3), -1, 4});
    CHECK(add(p, scale(p, -1)).is_zero());
    CHECK(scale(p, 0).is_zero());
    CHECK(-p + p == HilbertPolynomial{});
}

TEST_CASE("stabilization threshold against a scan") {
    const HilbertPolynomial p = poly({0, -100, 1});
    CHECK(oracle::scan_threshold(p.coeffs(), {}, 1, 200) == 101);
    CHECK(stabilization_threshold(p, HilbertPolynomial{}) == 101);
    CHECK(stabilization_threshold(poly({1, 1}), k) == 0);
    CHECK(stabilization_threshold(p, p) == 0);
}

TEST_CASE("random threshold and order laws") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4), deg(0, 3);
    auto draw = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rational(num(rng), den(rng));
        return HilbertPolynomial(c);
    };
    for (int trial = 0; trial < 300; ++trial) {
        const HilbertPolynomial p = draw(), q = draw(), r = draw();
        const EventualOrder o = compare_eventual(p, q);
        const int asym = o == EventualOrder::Succeeds ? 1 : (o == EventualOrder::Precedes ? -1 : 0);
        const auto t = static_cast<long>(stabilization_threshold(p, q));
        CHECK(oracle::scan_threshold(p.coeffs(), q.coeffs(), asym, t + 60) == t);

        CHECK((o == EventualOrder::Equal) == (p == q));
        if (eventually_less(p, q) && eventually_less(q, r)) CHECK(eventually_less(p, r));
        if (eventually_leq(p, q) && eventually_leq(q, p)) CHECK(p == q);
        CHECK(eventually_less(p, q) == eventually_less(p + r, q + r));
        CHECK((eventually_less(p, q) || eventually_less(q, p) || p == q));
    }
}
