#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ambiskew/ring.hpp"

namespace ambiskew::detail {

/// Homomorphism from the field into Z/p: the root of unity goes to a
/// primitive root of the same order, transcendental parameters to fixed
/// pseudo-random residues. Undefined (nullopt) where a denominator vanishes.
/// A nonzero image proves the exact value nonzero.
class ModularImage {
public:
    explicit ModularImage(const Field& field);

    std::uint64_t prime() const noexcept { return p_; }

    std::optional<std::uint64_t> operator()(const Scalar& s) const;
    std::optional<std::uint64_t> operator()(const mpq_class& q) const;

    // Value of a at the point with the given coordinate images.
    std::optional<std::uint64_t> evaluate(const RingElement& a, const std::vector<std::uint64_t>& coords) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, long e) const; // a != 0 when e < 0
    std::uint64_t inv(std::uint64_t a) const;

private:
    std::optional<std::uint64_t> poly(const Poly& p) const;

    std::uint64_t p_ = 0;
    std::uint64_t root_ = 0; // image of zeta
    std::vector<std::uint64_t> vars_;
};

} // namespace ambiskew::detail
