#include "ambiskew/presets.hpp"

#include "ambiskew/errors.hpp"

namespace ambiskew {

namespace {

Field q_field(int q_order)
{
    if (q_order < 0) {
        throw InvalidArgument("q order must be nonnegative");
    }
    if (q_order == 0) {
        return FieldSpec::make({{"q", ParameterKind::transcendental, 0}});
    }
    return FieldSpec::make({{"q", ParameterKind::root_of_unity, q_order}});
}

HopfData trivial_hopf(const Ring& ring)
{
    const RingElement one = RingElement::integer(ring, 1);
    return {one, one, one, one};
}

RingElement mono(const Ring& ring, std::vector<int> exps)
{
    return RingElement::monomial(ring, std::move(exps), Scalar::integer(ring->field(), 1));
}

} // namespace

const std::vector<std::string>& preset_ids()
{
    static const std::vector<std::string> ids = {"heisenberg", "u_sl2",    "uq_sl2", "uq_sl2_breve",
                                                 "uq_fHK",     "downup_bq", "weyl"};
    return ids;
}

Algebra heisenberg()
{
    const Field f = FieldSpec::rationals();
    const Ring ring = RingSpec::make(f, {{"c", GeneratorKind::additive, Scalar::integer(f, 0)}});
    return AlgebraSpec::make("heisenberg", ring, RingElement::generator(ring, 0), Scalar::integer(f, 1),
                             trivial_hopf(ring));
}

Algebra u_sl2()
{
    const Field f = FieldSpec::rationals();
    const Ring ring = RingSpec::make(f, {{"H", GeneratorKind::additive, Scalar::integer(f, -1)}});
    return AlgebraSpec::make("u_sl2", ring, RingElement::generator(ring, 0), Scalar::integer(f, 1),
                             trivial_hopf(ring));
}

Algebra uq_sl2(int q_order)
{
    if (q_order == 1 || q_order == 2) {
        throw InvalidArgument("uq_sl2 requires q^2 != 1");
    }
    const Field f = q_field(q_order);
    const Scalar q = Scalar::parameter(f, "q");
    const Ring ring = RingSpec::make(f, {{"K", GeneratorKind::multiplicative, q.pow(-2)}});
    const RingElement K = RingElement::generator(ring, 0);
    const RingElement one = RingElement::integer(ring, 1);
    const RingElement h = (K - K.inverse()) * (q - q.inverse()).inverse();
    return AlgebraSpec::make("uq_sl2", ring, h, Scalar::integer(f, 1), {K, one, one, K.inverse()});
}

Algebra uq_sl2_breve(int q_order)
{
    if (q_order == 1 || q_order == 2 || q_order == 4) {
        throw InvalidArgument("uq_sl2_breve requires q^4 != 1");
    }
    const Field f = q_field(q_order);
    const Scalar q = Scalar::parameter(f, "q");
    const Ring ring = RingSpec::make(f, {{"K", GeneratorKind::multiplicative, q.inverse()}});
    const RingElement K = RingElement::generator(ring, 0);
    const RingElement h = (K.pow(2) - K.pow(-2)) * (q - q.inverse()).inverse();
    return AlgebraSpec::make("uq_sl2_breve", ring, h, Scalar::integer(f, 1), {K, K, K.inverse(), K.inverse()});
}

Algebra uq_fHK(const PresetParams& pp)
{
    const int m = pp.p - pp.s2;
    const int n = pp.r - pp.t2;
    const int m2 = pp.p2 - pp.s;
    const int n2 = pp.r2 - pp.t;
    if (pp.s - pp.t != pp.s2 - pp.t2) {
        throw InvalidArgument("uq_fHK constraint s - t = s' - t' violated");
    }
    if (pp.p - pp.r != pp.p2 - pp.r2) {
        throw InvalidArgument("uq_fHK constraint p - r = p' - r' violated");
    }
    const int M = pp.M.value_or(m - n);
    if (M != m - n || M != m2 - n2 || M != pp.p + pp.t - pp.r - pp.s) {
        throw InvalidArgument("uq_fHK constraint M = m - n = m' - n' = p + t - r - s violated");
    }
    if (pp.alpha == 0) {
        throw InvalidArgument("uq_fHK requires alpha != 0");
    }
    const Field f = q_field(pp.q_order);
    const Scalar q = Scalar::parameter(f, "q");
    // Generator order H, K.
    const Ring ring = RingSpec::make(f, {{"H", GeneratorKind::multiplicative, q.pow(2)},
                                         {"K", GeneratorKind::multiplicative, q.pow(-2)}});
    const RingElement h =
        (mono(ring, {n, m}) - mono(ring, {-n2, -m2})) * Scalar::rational(f, pp.alpha);
    HopfData d{mono(ring, {pp.r, pp.p}), mono(ring, {-pp.t2, -pp.s2}), mono(ring, {pp.t, pp.s}),
               mono(ring, {-pp.r2, -pp.p2})};
    return AlgebraSpec::make("uq_fHK", ring, h, Scalar::integer(f, 1), d);
}

Algebra downup_bq(int q_order, int rho, int lambda)
{
    if (q_order < 1) {
        throw InvalidArgument("downup_bq requires q to be a root of unity");
    }
    const Field f = q_field(q_order);
    const Scalar q = Scalar::parameter(f, "q");
    if (!(-q.pow(rho - lambda)).is_one()) {
        throw InvalidArgument("downup_bq constraint q^(rho - lambda) = -1 violated");
    }
    if (!q.pow(2 * rho).is_one()) {
        throw InvalidArgument("downup_bq constraint q^(2 rho) = 1 violated");
    }
    const Ring ring = RingSpec::make(f, {{"h", GeneratorKind::additive, Scalar::integer(f, 1)},
                                         {"w", GeneratorKind::multiplicative, q}});
    HopfData d{mono(ring, {0, rho}), mono(ring, {0, -rho}), mono(ring, {0, lambda}), mono(ring, {0, -lambda})};
    return AlgebraSpec::make("downup_bq", ring, RingElement::generator(ring, 0), Scalar::integer(f, -1), d);
}

Algebra weyl()
{
    const Field f = FieldSpec::rationals();
    const Ring ring = RingSpec::make(f, {});
    return AlgebraSpec::make("weyl", ring, RingElement::integer(ring, 1), Scalar::integer(f, 1), trivial_hopf(ring));
}

Algebra preset(std::string_view id, const PresetParams& params)
{
    if (id == "heisenberg") {
        return heisenberg();
    }
    if (id == "u_sl2") {
        return u_sl2();
    }
    if (id == "uq_sl2") {
        return uq_sl2(params.q_order);
    }
    if (id == "uq_sl2_breve") {
        return uq_sl2_breve(params.q_order);
    }
    if (id == "uq_fHK") {
        return uq_fHK(params);
    }
    if (id == "downup_bq") {
        return downup_bq(params.q_order == 0 ? 2 : params.q_order, params.rho, params.lambda);
    }
    if (id == "weyl") {
        return weyl();
    }
    throw InvalidArgument("unknown preset '" + std::string(id) + "'");
}

DownUpCheck downup_presentation_check(const Algebra& bq)
{
    const AlgebraElement d = AlgebraElement::xplus(bq);
    const AlgebraElement u = AlgebraElement::xminus(bq);
    DownUpCheck c;
    c.first = d * d * u - u * d * d - d;
    c.second = d * u * u - u * u * d - u;
    c.holds = c.first.is_zero() && c.second.is_zero();
    return c;
}

} // namespace ambiskew
