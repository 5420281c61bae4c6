#pragma once

#include <memory>
#include <string>

#include "ambiskew/ring.hpp"

namespace ambiskew {

// Delta(X+-) = X+- (x) r+- + l+- (x) X+-
struct HopfData {
    RingElement r_plus;
    RingElement r_minus;
    RingElement l_plus;
    RingElement l_minus;
};

class AlgebraSpec;
using Algebra = std::shared_ptr<const AlgebraSpec>;

/// A(R, sigma, h, xi) together with the grouplike data of its coproduct.
class AlgebraSpec {
public:
    static Algebra make(std::string name, Ring ring, RingElement h, Scalar xi, HopfData hopf);

    const std::string& name() const noexcept { return name_; }
    const Ring& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_->field(); }
    const RingElement& h() const noexcept { return h_; }
    const Scalar& xi() const noexcept { return xi_; }
    const HopfData& hopf() const noexcept { return hopf_; }

    // r = r+ r-, l = l+ l-
    RingElement r() const { return hopf_.r_plus * hopf_.r_minus; }
    RingElement l() const { return hopf_.l_plus * hopf_.l_minus; }

    RingElement one() const { return RingElement::integer(ring_, 1); }
    Scalar scalar(long v) const { return Scalar::integer(field(), v); }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

private:
    AlgebraSpec() = default;

    std::string name_;
    Ring ring_;
    RingElement h_;
    Scalar xi_;
    HopfData hopf_;
};

} // namespace ambiskew
