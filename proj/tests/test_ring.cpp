#include <doctest.h>

#include "ambiskew/errors.hpp"
#include "ambiskew/ring.hpp"
#include "support.hpp"

using namespace ambiskew;
using testing_support::random_ring_element;

TEST_CASE("ring arithmetic and sigma")
{
    auto usl2 = u_sl2();
    auto R = usl2->ring();
    auto H = RingElement::generator(R, "H");
    auto one = RingElement::integer(R, 1);
    CHECK((H + one).to_string() == "H + 1");
    CHECK(apply_sigma(H, 1).to_string() == "H - 1");
    CHECK(apply_sigma(H * H, 2).to_string() == "H^2 - 4*H + 4");
    CHECK(apply_sigma(apply_sigma(H * H * H, 3), -3) == H * H * H);
    CHECK_THROWS_AS(H.pow(-1), MathRefusal);

    auto uq = uq_sl2();
    auto K = RingElement::generator(uq->ring(), "K");
    CHECK((K * K.inverse()).is_constant());
    CHECK(apply_sigma(K, 1).to_string() == "(1)/(q^2)*K");
    CHECK((uq->h() + uq->h()).to_string() == (uq->h() * Scalar::integer(uq->field(), 2)).to_string());
    CHECK(uq->h().to_string() == "(q)/(q^2 - 1)*K + (-q)/(q^2 - 1)*K^-1");
}

TEST_CASE("hopf maps on generators")
{
    auto R = u_sl2()->ring();
    auto H = RingElement::generator(R, "H");
    CHECK(tensor_to_string(coproduct(H * H)) == "H^2 ⊗ 1 + 2*(H ⊗ H) + 1 ⊗ H^2");
    CHECK(counit(H).is_zero());
    CHECK(antipode(H) == -H);

    auto uq = uq_sl2();
    auto K = RingElement::generator(uq->ring(), "K");
    CHECK(tensor_to_string(coproduct(K)) == "K ⊗ K");
    CHECK(counit(K.pow(3)).is_one());
    CHECK(antipode(K.pow(2)) == K.pow(-2));
    CHECK(counit(uq->h()).is_zero());
    CHECK(antipode(uq->h()) == -uq->h());

    auto br = uq_sl2_breve();
    auto Kb = RingElement::generator(br->ring(), "K");
    auto q = Scalar::parameter(br->field(), "q");
    auto expected = (tensor(Kb.pow(2), Kb.pow(2)) - tensor(Kb.pow(-2), Kb.pow(-2))) * (q - q.inverse()).inverse();
    CHECK(coproduct(br->h()) == expected);
}

TEST_CASE("homomorphism and counit laws on random elements")
{
    std::mt19937 rng(11);
    for (const auto& alg : testing_support::positive_presets()) {
        const Ring& R = alg->ring();
        for (int i = 0; i < 8; ++i) {
            auto a = random_ring_element(R, rng);
            auto b = random_ring_element(R, rng);
            CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
            CHECK(coproduct(a + b) == coproduct(a) + coproduct(b));
            CHECK(counit(a * b) == counit(a) * counit(b));
            CHECK(antipode(a * b) == antipode(a) * antipode(b));
            CHECK(antipode(antipode(a)) == a);
            CHECK(apply_sigma(a * b, 2) == apply_sigma(a, 2) * apply_sigma(b, 2));
            CHECK(apply_sigma(apply_sigma(a, 1), -1) == a);
            auto D = coproduct(a);
            CHECK(counit_side(D, 0) == tensor_embed(a, 1));
            CHECK(counit_side(D, 1) == tensor_embed(a, 0));
            CHECK(apply_sigma_tensor(D, 1, 0) == coproduct(apply_sigma(a, 1)));
            CHECK(apply_sigma_tensor(D, 1, 1) == coproduct(apply_sigma(a, 1)));
            CHECK(antipode(apply_sigma(a, 1)) == apply_sigma(antipode(a), -1));
        }
    }
}

TEST_CASE("evaluation is compatible with the weight sum")
{
    std::mt19937 rng(5);
    for (const auto& alg : testing_support::positive_presets()) {
        const Ring& R = alg->ring();
        for (int i = 0; i < 6; ++i) {
            auto a = random_ring_element(R, rng);
            auto m = testing_support::random_weight(R, rng);
            auto n = testing_support::random_weight(R, rng);
            CHECK(evaluate_at(a, weight_sum(m, n)) == evaluate_tensor(coproduct(a), m.coords(), n.coords()));
            CHECK(evaluate_at(apply_sigma(a, 1), m) == evaluate_at(a, sigma_on_weight(m, -1)));
        }
    }
}

TEST_CASE("evaluation examples")
{
    auto uq = uq_sl2();
    auto q = Scalar::parameter(uq->field(), "q");
    Weight m(uq->ring(), {q.pow(2)});
    CHECK(evaluate_at(uq->h(), m) == q + q.inverse());
    auto usl2 = u_sl2();
    CHECK(evaluate_at(usl2->h(), Weight(usl2->ring(), {Scalar::rational(usl2->field(), mpq_class(3, 2))}))
              .to_string() == "3/2");
}

TEST_CASE("ring validation")
{
    auto f = FieldSpec::make({{"q", ParameterKind::transcendental, 0}});
    CHECK_THROWS_AS(RingSpec::make(f, {{"q", GeneratorKind::additive, Scalar::integer(f, 1)}}), InvalidArgument);
    CHECK_THROWS_AS(RingSpec::make(f, {{"K", GeneratorKind::multiplicative, Scalar(f)}}), InvalidArgument);
    CHECK_THROWS_AS(RingSpec::make(f, {{"K", GeneratorKind::multiplicative, Scalar::integer(f, 1)},
                                       {"K", GeneratorKind::additive, Scalar::integer(f, 1)}}),
                    InvalidArgument);
    auto a = RingElement::generator(u_sl2()->ring(), 0);
    auto b = RingElement::generator(uq_sl2()->ring(), 0);
    CHECK_THROWS_AS(a + b, InvalidArgument);
}
