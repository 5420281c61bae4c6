#pragma once

#include <random>
#include <vector>

#include "ambiskew/algebra.hpp"
#include "ambiskew/group.hpp"
#include "ambiskew/presets.hpp"
#include "ambiskew/reps.hpp"

namespace testing_support {

using namespace ambiskew;

inline Scalar random_rational(const Field& f, std::mt19937& rng, int lo = -9, int hi = 9, int den = 4)
{
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> d(1, den);
    return Scalar::rational(f, mpq_class(num(rng), d(rng)));
}

// Random coordinate: rational for additive generators; for multiplicative ones
// a signed power of a parameter (when the field has one) times a small rational.
inline Weight random_weight(const Ring& ring, std::mt19937& rng)
{
    std::vector<Scalar> c;
    const Field& f = ring->field();
    std::uniform_int_distribution<int> ex(-6, 6);
    for (const auto& g : ring->generators()) {
        if (g.kind == GeneratorKind::additive) {
            c.push_back(random_rational(f, rng));
        } else {
            Scalar x = random_rational(f, rng, 1, 5, 3);
            if (rng() % 2) {
                x = -x;
            }
            if (!f->parameters().empty()) {
                x *= Scalar::parameter(f, 0).pow(ex(rng));
            }
            c.push_back(x);
        }
    }
    return Weight(ring, std::move(c));
}

inline RingElement random_ring_element(const Ring& ring, std::mt19937& rng, int terms = 3)
{
    RingElement a(ring);
    std::uniform_int_distribution<int> ex(0, 2);
    std::uniform_int_distribution<int> lex(-2, 2);
    for (int k = 0; k < terms; ++k) {
        RingElement::Monomial m;
        for (const auto& g : ring->generators()) {
            m.push_back(g.kind == GeneratorKind::additive ? ex(rng) : lex(rng));
        }
        Scalar c = random_rational(ring->field(), rng, -3, 3, 2);
        if (!ring->field()->parameters().empty() && rng() % 2) {
            c *= Scalar::parameter(ring->field(), 0);
        }
        a += RingElement::monomial(ring, m, c);
    }
    return a;
}

inline std::vector<Algebra> positive_presets()
{
    return {heisenberg(), u_sl2(), uq_sl2(), uq_sl2_breve(), uq_fHK({}), downup_bq()};
}

// Invertible integer matrix preserving the weight blocks of v.
inline Matrix random_block_change(const WeightModule& v, std::mt19937& rng)
{
    const auto& f = v.algebra()->field();
    std::uniform_int_distribution<int> e(-3, 3);
    Matrix p(f, v.dim(), v.dim());
    for (std::size_t b = 0; b < v.blocks().size(); ++b) {
        const auto d = v.blocks()[b].dim;
        const auto o = v.offset(b);
        Matrix blk(f, d, d);
        do {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    blk(i, j) = Scalar::integer(f, e(rng));
                }
            }
        } while (rank(blk) < d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                p(o + i, o + j) = blk(i, j);
            }
        }
    }
    return p;
}

} // namespace testing_support
