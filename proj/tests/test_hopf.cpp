#include <doctest.h>

#include "ambiskew/errors.hpp"
#include "ambiskew/hopf.hpp"
#include "support.hpp"

using namespace ambiskew;

TEST_CASE("presets pass the Hopf conditions")
{
    for (const auto& alg : testing_support::positive_presets()) {
        CAPTURE(alg->name());
        auto rep = check_hopf(*alg);
        CHECK(rep.overall);
        CHECK(rep.failed().empty());
        CHECK(rep.conditions.size() == hopf_condition_ids.size());
        auto n = compute_N(*alg);
        CHECK((alg->xi() * alg->xi() * n.r1 * n.l1).is_one());
    }
    for (int order : {3, 5, 10, 12}) {
        CHECK(check_hopf(*uq_sl2(order)).overall);
    }
    CHECK(check_hopf(*downup_bq(6, 3, 0)).overall);
}

TEST_CASE("weyl has no counit")
{
    auto rep = check_hopf(*weyl());
    CHECK_FALSE(rep.overall);
    CHECK(rep.failed() == std::vector<std::string>{"counit"});
    CHECK(rep.condition("coproduct_h").status == ConditionStatus::skipped);
}

TEST_CASE("antipode coefficients")
{
    auto uq = uq_sl2();
    auto q = Scalar::parameter(uq->field(), "q");
    auto K = RingElement::generator(uq->ring(), "K");
    auto [sp, sm] = derive_antipode_coeffs(*uq);
    CHECK(sp == -(q * q) * K.inverse());

    auto [s1, s2] = derive_antipode_coeffs(*u_sl2());
    CHECK(s1 == -u_sl2()->one());
    CHECK(s2 == -u_sl2()->one());

    for (auto [rho, lambda] : {std::pair{3, 0}, std::pair{0, 3}, std::pair{3, 6}, std::pair{-3, 0}}) {
        {
            auto bq = downup_bq(6, rho, lambda);
            auto qb = Scalar::parameter(bq->field(), "q");
            auto w = RingElement::generator(bq->ring(), "w");
            auto [bp, bm] = derive_antipode_coeffs(*bq);
            CHECK(bp == -qb.pow(rho) * w.pow(-(rho + lambda)));
            CHECK(bm == -qb.pow(rho) * w.pow(rho + lambda));
        }
    }
}

TEST_CASE("perturbations break a condition")
{
    auto base = uq_sl2();
    auto R = base->ring();
    auto K = RingElement::generator(R, "K");
    const auto& d = base->hopf();
    std::vector<Algebra> variants = {
        AlgebraSpec::make("p", R, base->h(), base->xi(), {d.r_plus * K, d.r_minus, d.l_plus, d.l_minus}),
        AlgebraSpec::make("p", R, base->h(), base->xi(), {d.r_plus, d.r_minus * K, d.l_plus, d.l_minus}),
        AlgebraSpec::make("p", R, base->h(), base->xi(), {d.r_plus, d.r_minus, d.l_plus * K, d.l_minus}),
        AlgebraSpec::make("p", R, base->h(), base->xi(), {d.r_plus, d.r_minus, d.l_plus, d.l_minus * K}),
        AlgebraSpec::make("p", R, base->h() + base->one(), base->xi(), d),
        AlgebraSpec::make("p", R, base->h() * K, base->xi(), d),
        AlgebraSpec::make("p", R, base->h(), base->xi() * base->scalar(2), d),
    };
    for (const auto& v : variants) {
        CHECK_FALSE(check_hopf(*v).overall);
    }
    auto k2 = AlgebraSpec::make("p", R, base->h(), base->xi(), {K * K, d.r_minus, d.l_plus, d.l_minus});
    auto rep = check_hopf(*k2);
    CHECK(rep.condition("twist").status == ConditionStatus::fail);
    CHECK_FALSE(rep.condition("twist").witness.empty());
}

TEST_CASE("grouplike data is validated")
{
    auto base = uq_sl2();
    auto R = base->ring();
    auto K = RingElement::generator(R, "K");
    const auto& d = base->hopf();
    CHECK_THROWS_AS(AlgebraSpec::make("p", R, base->h(), base->xi(), {K * base->scalar(2), d.r_minus, d.l_plus, d.l_minus}),
                    InvalidArgument);
    CHECK_THROWS_AS(AlgebraSpec::make("p", R, base->h(), Scalar(base->field()), d), InvalidArgument);
}

TEST_CASE("h(1) diagnostic")
{
    auto heis = h1_diagnostic(*heisenberg());
    CHECK_FALSE(heis.generic);
    CHECK(heis.case_name == "[X+,X-]=h, [h,X±]=0");
    for (const auto& [name, ok] : heis.identities) {
        CHECK_MESSAGE(ok, name);
    }
    auto u = h1_diagnostic(*u_sl2());
    CHECK(u.generic);
    CHECK(u.h1.is_one());
    auto b = h1_diagnostic(*downup_bq());
    CHECK(b.generic);
    CHECK((-b.h1).is_one());
}

TEST_CASE("coproduct on A")
{
    auto uq = uq_sl2();
    auto Xp = AlgebraElement::xplus(uq);
    auto K = RingElement::generator(uq->ring(), "K");
    auto expected = TensorAlgebraElement::pure(Xp, AlgebraElement::from_ring(uq, K)) +=
        TensorAlgebraElement::pure(AlgebraElement::one(uq), Xp);
    CHECK(coproduct_on_A(Xp) == expected);
    CHECK(coproduct_on_A(AlgebraElement::one(uq)) == TensorAlgebraElement::one(uq));

    auto us = u_sl2();
    auto P = AlgebraElement::xplus(us);
    auto M = AlgebraElement::xminus(us);
    auto one = AlgebraElement::one(us);
    auto prod = TensorAlgebraElement::pure(P * M, one);
    prod += TensorAlgebraElement::pure(P, M);
    prod += TensorAlgebraElement::pure(M, P);
    prod += TensorAlgebraElement::pure(one, P * M);
    CHECK(coproduct_on_A(P * M) == prod);
}

TEST_CASE("Hopf axioms on generators")
{
    const auto id = [](const AlgebraElement& x) { return x; };
    for (const auto& alg : testing_support::positive_presets()) {
        CAPTURE(alg->name());
        const auto eps = [&](const AlgebraElement& x) {
            return AlgebraElement::from_ring(alg, RingElement::constant(alg->ring(), counit_on_A(x)));
        };
        const auto S = [](const AlgebraElement& x) { return antipode_on_A(x); };
        std::vector<AlgebraElement> gens = {AlgebraElement::xplus(alg), AlgebraElement::xminus(alg)};
        for (std::size_t i = 0; i < alg->ring()->size(); ++i) {
            gens.push_back(AlgebraElement::from_ring(alg, RingElement::generator(alg->ring(), i)));
        }
        for (const auto& x : gens) {
            auto D = coproduct_on_A(x);
            CHECK(D.contract(eps, id) == x);
            CHECK(D.contract(id, eps) == x);
            auto e = eps(x);
            CHECK(D.contract(S, id) == e);
            CHECK(D.contract(id, S) == e);
        }
        // Delta is multiplicative on the defining relations.
        auto P = coproduct_on_A(AlgebraElement::xplus(alg));
        auto M = coproduct_on_A(AlgebraElement::xminus(alg));
        auto t = P * M - (M * P) * TensorAlgebraElement::pure(AlgebraElement::one(alg), AlgebraElement::from_ring(alg, RingElement::constant(alg->ring(), alg->xi())));
        CHECK(t == coproduct_on_A(AlgebraElement::from_ring(alg, alg->h())));
        for (std::size_t i = 0; i < alg->ring()->size(); ++i) {
            auto g = AlgebraElement::from_ring(alg, RingElement::generator(alg->ring(), i));
            auto gp = AlgebraElement::from_ring(alg, apply_sigma(RingElement::generator(alg->ring(), i), 1));
            CHECK(P * coproduct_on_A(g) == coproduct_on_A(gp) * P);
        }
    }
}
