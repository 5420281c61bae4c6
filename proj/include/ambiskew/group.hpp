#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ambiskew/spec.hpp"

namespace ambiskew {

/// A K-rational maximal ideal of R, given by the value of each generator.
class Weight {
public:
    Weight() = default;
    Weight(Ring ring, std::vector<Scalar> coords);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_.at(i); }

    friend bool operator==(const Weight& a, const Weight& b);
    friend bool operator<(const Weight& a, const Weight& b);

    // "{K: q^3}"-style text, for messages.
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Scalar> coords_;
};

Weight zero_weight(const Ring& ring);
Weight weight_sum(const Weight& m, const Weight& n);
Weight weight_inverse(const Weight& m);
Weight weight_difference(const Weight& m, const Weight& n);
Weight underline(const Ring& ring, long n);
Weight sigma_on_weight(const Weight& m, long n);

Scalar evaluate_at(const RingElement& a, const Weight& m);

// Description of why 1 has finite order in G, or nullopt when it does not.
std::optional<std::string> torsion_obstruction(const Ring& ring);
bool is_torsion_free(const Ring& ring);
// Throws MathRefusal naming the generators.
void require_torsion_free(const Ring& ring);

// n with m = underline(n), searching |n| <= bound when the answer is not forced
// by an additive coordinate.
std::optional<long> solve_underline(const Weight& m, long bound = 10000);

struct ClassifyResult {
    bool in_G0 = false;
    bool in_G12 = false;
    Scalar h_value;
    Scalar shifted_h_value; // h(m - 1)
};

ClassifyResult classify_weight(const AlgebraSpec& a, const Weight& m);

struct NInfo {
    Scalar r1;
    Scalar l1;
    Scalar xi_r1;
    std::optional<int> N;       // nullopt = infinite
    std::optional<int> N_prime; // nullopt = infinite
    bool h1_is_zero = false;
};

NInfo compute_N(const AlgebraSpec& a);

} // namespace ambiskew
