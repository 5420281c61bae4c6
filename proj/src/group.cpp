#include "ambiskew/group.hpp"

#include "ambiskew/errors.hpp"

namespace ambiskew {

Weight::Weight(Ring ring, std::vector<Scalar> coords) : ring_(std::move(ring)), coords_(std::move(coords))
{
    if (!ring_ || coords_.size() != ring_->size()) {
        throw InvalidArgument("weight needs one coordinate per generator");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += Scalar(ring_->field());
        if (ring_->generator(i).kind == GeneratorKind::multiplicative && coords_[i].is_zero()) {
            throw InvalidArgument("coordinate of multiplicative generator '" + ring_->generator(i).name +
                                  "' must be nonzero");
        }
    }
}

bool operator==(const Weight& a, const Weight& b)
{
    return same_ring(a.ring_, b.ring_) && a.coords_ == b.coords_;
}

bool operator<(const Weight& a, const Weight& b)
{
    for (std::size_t i = 0; i < a.coords_.size() && i < b.coords_.size(); ++i) {
        if (a.coords_[i] == b.coords_[i]) {
            continue;
        }
        return a.coords_[i].to_string() < b.coords_[i].to_string();
    }
    return a.coords_.size() < b.coords_.size();
}

std::string Weight::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += ring_->generator(i).name + ": " + coords_[i].to_string();
    }
    return s + "}";
}

Weight zero_weight(const Ring& ring)
{
    std::vector<Scalar> c;
    for (const auto& g : ring->generators()) {
        c.push_back(Scalar::integer(ring->field(), g.kind == GeneratorKind::multiplicative ? 1 : 0));
    }
    return Weight(ring, std::move(c));
}

Weight weight_sum(const Weight& m, const Weight& n)
{
    if (!same_ring(m.ring(), n.ring())) {
        throw InvalidArgument("weights belong to different rings");
    }
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < m.coords().size(); ++i) {
        if (m.ring()->generator(i).kind == GeneratorKind::multiplicative) {
            c.push_back(m[i] * n[i]);
        } else {
            c.push_back(m[i] + n[i]);
        }
    }
    return Weight(m.ring(), std::move(c));
}

Weight weight_inverse(const Weight& m)
{
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < m.coords().size(); ++i) {
        if (m.ring()->generator(i).kind == GeneratorKind::multiplicative) {
            c.push_back(m[i].inverse());
        } else {
            c.push_back(-m[i]);
        }
    }
    return Weight(m.ring(), std::move(c));
}

Weight weight_difference(const Weight& m, const Weight& n)
{
    return weight_sum(m, weight_inverse(n));
}

Weight underline(const Ring& ring, long n)
{
    std::vector<Scalar> c;
    for (const auto& g : ring->generators()) {
        if (g.kind == GeneratorKind::multiplicative) {
            c.push_back(g.sigma_action.pow(-n));
        } else {
            c.push_back(Scalar::integer(ring->field(), -n) * g.sigma_action);
        }
    }
    return Weight(ring, std::move(c));
}

Weight sigma_on_weight(const Weight& m, long n)
{
    return weight_sum(m, underline(m.ring(), n));
}

Scalar evaluate_at(const RingElement& a, const Weight& m)
{
    if (!a.is_zero() && !same_ring(a.ring(), m.ring())) {
        throw InvalidArgument("weight and ring element belong to different rings");
    }
    return evaluate(a, m.coords());
}

std::optional<std::string> torsion_obstruction(const Ring& ring)
{
    std::string names;
    for (const auto& g : ring->generators()) {
        if (g.kind == GeneratorKind::additive) {
            if (!g.sigma_action.is_zero()) {
                return std::nullopt;
            }
        } else if (!root_of_unity_order(g.sigma_action)) {
            return std::nullopt;
        }
        names += (names.empty() ? "" : ", ") + g.name;
    }
    if (names.empty()) {
        return "sigma is the identity on a ring without generators, so 1 has finite order";
    }
    return "sigma has finite order on every generator (" + names + "), so 1 is a torsion element of G";
}

bool is_torsion_free(const Ring& ring)
{
    return !torsion_obstruction(ring);
}

void require_torsion_free(const Ring& ring)
{
    if (auto why = torsion_obstruction(ring)) {
        throw MathRefusal("torsion: " + *why);
    }
}

std::optional<long> solve_underline(const Weight& m, long bound)
{
    const Ring& ring = m.ring();
    std::optional<long> forced;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        const auto& g = ring->generator(i);
        if (g.kind != GeneratorKind::additive) {
            continue;
        }
        if (g.sigma_action.is_zero()) {
            if (!m[i].is_zero()) {
                return std::nullopt;
            }
            continue;
        }
        auto q = (-m[i] / g.sigma_action).as_rational();
        if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p()) {
            return std::nullopt;
        }
        const long n = q->get_num().get_si();
        if (forced && *forced != n) {
            return std::nullopt;
        }
        forced = n;
    }
    if (forced) {
        if (underline(ring, *forced) == m) {
            return forced;
        }
        return std::nullopt;
    }
    // Multiplicative coordinates only: walk both directions.
    std::vector<std::size_t> mult;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (ring->generator(i).kind == GeneratorKind::multiplicative) {
            mult.push_back(i);
        }
    }
    std::vector<Scalar> up(ring->size());
    std::vector<Scalar> down(ring->size());
    std::vector<Scalar> step(ring->size());
    std::vector<Scalar> back(ring->size());
    for (std::size_t i : mult) {
        up[i] = down[i] = Scalar::integer(ring->field(), 1);
        step[i] = ring->generator(i).sigma_action.inverse();
        back[i] = ring->generator(i).sigma_action;
    }
    auto matches = [&](const std::vector<Scalar>& v) {
        for (std::size_t i : mult) {
            if (!(v[i] == m[i])) {
                return false;
            }
        }
        return true;
    };
    for (long n = 0; n <= bound; ++n) {
        if (matches(up)) {
            return n;
        }
        if (n > 0 && matches(down)) {
            return -n;
        }
        for (std::size_t i : mult) {
            up[i] *= step[i];
            down[i] *= back[i];
        }
    }
    return std::nullopt;
}

ClassifyResult classify_weight(const AlgebraSpec& a, const Weight& m)
{
    ClassifyResult r;
    r.h_value = evaluate_at(a.h(), m);
    r.shifted_h_value = evaluate_at(a.h(), sigma_on_weight(m, -1));
    r.in_G0 = r.h_value.is_zero();
    r.in_G12 = (r.shifted_h_value + a.xi() * r.h_value).is_zero();
    return r;
}

NInfo compute_N(const AlgebraSpec& a)
{
    NInfo info;
    const Weight one = underline(a.ring(), 1);
    info.r1 = evaluate_at(a.r(), one);
    info.l1 = evaluate_at(a.l(), one);
    info.xi_r1 = a.xi() * info.r1;
    if (!(a.xi() * a.xi() * info.r1 * info.l1).is_one()) {
        throw InvalidArgument("xi^2 r1 l1 = " + (a.xi() * a.xi() * info.r1 * info.l1).to_string() +
                              " is not 1; the Hopf data is inconsistent");
    }
    info.h1_is_zero = evaluate_at(a.h(), one).is_zero();
    if (!(info.xi_r1 * info.xi_r1).is_one()) {
        if (auto n = root_of_unity_order(info.xi_r1)) {
            info.N = *n;
            info.N_prime = *n % 2 == 1 ? *n : *n / 2;
        }
    }
    return info;
}

} // namespace ambiskew
