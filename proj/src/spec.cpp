#include "ambiskew/spec.hpp"

#include "ambiskew/errors.hpp"

namespace ambiskew {

namespace {

void check_grouplike(const Ring& ring, const RingElement& x, const char* label)
{
    if (x.is_zero() || !same_ring(x.ring(), ring)) {
        throw InvalidArgument(std::string(label) + " must be an element of the base ring");
    }
    if (!is_grouplike_monomial(x)) {
        throw InvalidArgument(std::string(label) + ": grouplike data must be coefficient-1 monomial in "
                                                   "multiplicative generators, got " + x.to_string());
    }
}

} // namespace

Algebra AlgebraSpec::make(std::string name, Ring ring, RingElement h, Scalar xi, HopfData hopf)
{
    if (!ring) {
        throw InvalidArgument("algebra requires a ring");
    }
    const auto lift = [&](RingElement& x) {
        if (!x.ring()) {
            x = x + RingElement(ring);
        }
    };
    lift(h);
    lift(hopf.r_plus);
    lift(hopf.r_minus);
    lift(hopf.l_plus);
    lift(hopf.l_minus);
    if (!same_ring(h.ring(), ring)) {
        throw InvalidArgument("h must be an element of the base ring");
    }
    xi = xi + Scalar(ring->field());
    if (xi.is_zero()) {
        throw InvalidArgument("xi must be nonzero");
    }
    check_grouplike(ring, hopf.r_plus, "r_plus");
    check_grouplike(ring, hopf.r_minus, "r_minus");
    check_grouplike(ring, hopf.l_plus, "l_plus");
    check_grouplike(ring, hopf.l_minus, "l_minus");

    std::shared_ptr<AlgebraSpec> a(new AlgebraSpec());
    a->name_ = std::move(name);
    a->ring_ = std::move(ring);
    a->h_ = std::move(h);
    a->xi_ = std::move(xi);
    a->hopf_ = std::move(hopf);
    return a;
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
{
    return a.name_ == b.name_ && same_ring(a.ring_, b.ring_) && a.h_ == b.h_ && a.xi_ == b.xi_ &&
           a.hopf_.r_plus == b.hopf_.r_plus && a.hopf_.r_minus == b.hopf_.r_minus &&
           a.hopf_.l_plus == b.hopf_.l_plus && a.hopf_.l_minus == b.hopf_.l_minus;
}

} // namespace ambiskew
