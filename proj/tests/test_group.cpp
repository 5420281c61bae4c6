#include <doctest.h>

#include "ambiskew/errors.hpp"
#include "ambiskew/group.hpp"
#include "support.hpp"

using namespace ambiskew;

namespace {

Scalar rat(const Field& f, long n, long d = 1)
{
    return Scalar::rational(f, mpq_class(n, d));
}

} // namespace

TEST_CASE("weight group operations")
{
    auto usl2 = u_sl2();
    auto R = usl2->ring();
    auto f = usl2->field();
    Weight a(R, {rat(f, 2)});
    Weight b(R, {rat(f, 5, 3)});
    CHECK(weight_sum(a, b) == Weight(R, {rat(f, 11, 3)}));
    CHECK(weight_sum(a, zero_weight(R)) == a);
    CHECK(weight_inverse(Weight(R, {rat(f, 3)})) == Weight(R, {rat(f, -3)}));
    CHECK(underline(R, 4) == Weight(R, {rat(f, 4)}));
    CHECK(underline(R, 0) == zero_weight(R));
    CHECK(sigma_on_weight(a, 1) == Weight(R, {rat(f, 3)}));

    auto uq = uq_sl2();
    auto q = Scalar::parameter(uq->field(), "q");
    auto K = [&](const Scalar& x) { return Weight(uq->ring(), {x}); };
    CHECK(weight_sum(K(q), K(q.pow(3))) == K(q.pow(4)));
    CHECK(weight_inverse(K(q.pow(2))) == K(q.pow(-2)));
    CHECK(underline(uq->ring(), 3) == K(q.pow(6)));
    CHECK(sigma_on_weight(K(q), -1) == K(q.pow(-1)));
    CHECK(zero_weight(uq->ring()) == K(uq->scalar(1)));

    auto bq = downup_bq();
    auto qb = Scalar::parameter(bq->field(), "q");
    Weight m(bq->ring(), {rat(bq->field(), 2), qb.pow(2)});
    CHECK(weight_inverse(m) == Weight(bq->ring(), {rat(bq->field(), -2), qb.pow(-2)}));
    CHECK_THROWS_AS(Weight(uq->ring(), {Scalar(uq->field())}), InvalidArgument);
}

TEST_CASE("group laws on random weights")
{
    std::mt19937 rng(3);
    for (const auto& alg : testing_support::positive_presets()) {
        const Ring& R = alg->ring();
        for (int i = 0; i < 10; ++i) {
            auto a = testing_support::random_weight(R, rng);
            auto b = testing_support::random_weight(R, rng);
            auto c = testing_support::random_weight(R, rng);
            CHECK(weight_sum(weight_sum(a, b), c) == weight_sum(a, weight_sum(b, c)));
            CHECK(weight_sum(a, weight_inverse(a)) == zero_weight(R));
            const long x = static_cast<long>(rng() % 21) - 10;
            const long y = static_cast<long>(rng() % 21) - 10;
            CHECK(underline(R, x + y) == weight_sum(underline(R, x), underline(R, y)));
            CHECK(solve_underline(weight_sum(zero_weight(R), underline(R, x))) ==
                  (is_torsion_free(R) ? std::optional<long>(x) : solve_underline(underline(R, x))));
        }
    }
}

TEST_CASE("torsion")
{
    CHECK(is_torsion_free(u_sl2()->ring()));
    CHECK(is_torsion_free(uq_sl2()->ring()));
    CHECK_FALSE(is_torsion_free(heisenberg()->ring()));
    CHECK_FALSE(is_torsion_free(weyl()->ring()));
    CHECK_FALSE(is_torsion_free(uq_sl2(10)->ring()));
    CHECK(is_torsion_free(downup_bq()->ring()));
    CHECK_THROWS_AS(require_torsion_free(heisenberg()->ring()), MathRefusal);
    try {
        require_torsion_free(heisenberg()->ring());
    } catch (const MathRefusal& e) {
        CHECK(std::string(e.what()).find("c") != std::string::npos);
    }
}

TEST_CASE("classification of weights")
{
    auto usl2 = u_sl2();
    auto f = usl2->field();
    auto c0 = classify_weight(*usl2, Weight(usl2->ring(), {rat(f, 0)}));
    CHECK(c0.in_G0);
    CHECK_FALSE(c0.in_G12);
    CHECK(classify_weight(*usl2, Weight(usl2->ring(), {rat(f, 1, 2)})).in_G12);

    auto uq = uq_sl2();
    auto q = Scalar::parameter(uq->field(), "q");
    CHECK(classify_weight(*uq, Weight(uq->ring(), {q})).in_G12);
    CHECK(classify_weight(*uq, Weight(uq->ring(), {-uq->scalar(1)})).in_G0);
}

TEST_CASE("N and the h(1) invariants")
{
    auto n1 = compute_N(*u_sl2());
    CHECK(n1.xi_r1.is_one());
    CHECK_FALSE(n1.N);
    auto n2 = compute_N(*uq_sl2(10));
    CHECK(n2.N == 5);
    CHECK(n2.N_prime == 5);
    auto n3 = compute_N(*downup_bq());
    CHECK((-n3.xi_r1).is_one());
    CHECK_FALSE(n3.N);
    CHECK(compute_N(*uq_sl2(8)).N == 4);
    CHECK(compute_N(*uq_sl2(8)).N_prime == 2);
    CHECK(compute_N(*heisenberg()).h1_is_zero);
    CHECK_FALSE(compute_N(*u_sl2()).h1_is_zero);
}

TEST_CASE("h-function identities")
{
    std::mt19937 rng(17);
    for (const auto& alg : testing_support::positive_presets()) {
        const Ring& R = alg->ring();
        const auto info = compute_N(*alg);
        const auto& h = alg->h();
        CHECK(evaluate_at(h, zero_weight(R)).is_zero());
        for (int i = 0; i < 10; ++i) {
            auto m = testing_support::random_weight(R, rng);
            auto n = testing_support::random_weight(R, rng);
            CHECK(evaluate_at(h, weight_sum(m, n)) ==
                  evaluate_at(h, m) * evaluate_at(alg->r(), n) + evaluate_at(alg->l(), m) * evaluate_at(h, n));
            CHECK(evaluate_at(h, weight_inverse(m)) ==
                  -(evaluate_at(alg->r(), m) * evaluate_at(alg->l(), m)).inverse() * evaluate_at(h, m));
            for (long k = 1; k <= 10; ++k) {
                auto lhs = alg->xi().pow(k) * evaluate_at(h, sigma_on_weight(m, k)) +
                           alg->xi().pow(-k) * evaluate_at(h, sigma_on_weight(m, -k));
                auto rhs = (info.xi_r1.pow(k) + info.xi_r1.pow(-k)) * evaluate_at(h, m);
                CHECK(lhs == rhs);
            }
        }
    }
}
