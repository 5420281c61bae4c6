#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ambiskew/algebra.hpp"

namespace ambiskew {

struct PresetParams {
    // Order of q as a primitive root of unity; 0 means q is transcendental.
    // downup_bq needs a root of unity and defaults to order 2.
    int q_order = 0;

    // uq_fHK
    mpq_class alpha = 1;
    std::optional<int> M;
    int p = 1, r = 0, s = 0, t = 0;
    int p2 = 1, r2 = 0, s2 = 0, t2 = 0; // p', r', s', t'

    // downup_bq
    int rho = 1;
    int lambda = 0;
};

const std::vector<std::string>& preset_ids();

// Throws InvalidArgument naming the violated constraint.
Algebra preset(std::string_view id, const PresetParams& params = {});

Algebra heisenberg();
Algebra u_sl2();
Algebra uq_sl2(int q_order = 0);
Algebra uq_sl2_breve(int q_order = 0);
Algebra uq_fHK(const PresetParams& params);
Algebra downup_bq(int q_order = 2, int rho = 1, int lambda = 0);
Algebra weyl();

struct DownUpCheck {
    AlgebraElement first;  // d^2 u - u d^2 - d
    AlgebraElement second; // d u^2 - u^2 d - u
    bool holds = false;
};

// d = X+, u = X-.
DownUpCheck downup_presentation_check(const Algebra& bq);

} // namespace ambiskew
