#include "ambiskew/hopf.hpp"

#include "ambiskew/errors.hpp"
#include "ambiskew/group.hpp"

namespace ambiskew {

const char* to_string(ConditionStatus s)
{
    switch (s) {
    case ConditionStatus::pass:
        return "pass";
    case ConditionStatus::fail:
        return "fail";
    case ConditionStatus::skipped:
        return "skipped";
    }
    return "?";
}

std::vector<std::string> HopfReport::failed() const
{
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (c.status == ConditionStatus::fail) {
            out.push_back(c.id);
        }
    }
    return out;
}

const ConditionRecord& HopfReport::condition(std::string_view id) const
{
    for (const auto& c : conditions) {
        if (c.id == id) {
            return c;
        }
    }
    throw InvalidArgument("no condition '" + std::string(id) + "'");
}

std::pair<RingElement, RingElement> derive_antipode_coeffs(const AlgebraSpec& a)
{
    const auto& d = a.hopf();
    RingElement sp = -(d.l_plus * apply_sigma(d.r_plus, 1)).inverse();
    RingElement sm = -(d.l_minus * apply_sigma(d.r_minus, -1)).inverse();
    return {sp, sm};
}

namespace {

void record(HopfReport& rep, const char* id, const char* statement, const std::vector<std::string>& witnesses)
{
    ConditionRecord c{id, statement, ConditionStatus::pass, {}};
    if (!witnesses.empty()) {
        c.status = ConditionStatus::fail;
        for (const auto& w : witnesses) {
            c.witness += (c.witness.empty() ? "" : "; ") + w;
        }
    }
    rep.conditions.push_back(std::move(c));
}

void skip(HopfReport& rep, const char* id, const char* statement, const char* reason)
{
    rep.conditions.push_back({id, statement, ConditionStatus::skipped, reason});
}

} // namespace

HopfReport check_hopf(const AlgebraSpec& a)
{
    HopfReport rep;
    const Ring& ring = a.ring();
    const auto& d = a.hopf();

    std::vector<std::string> w;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        const RingElement g = RingElement::generator(ring, i);
        const RingElement D = coproduct(g);
        const RingElement mid = coproduct(apply_sigma(g, 1));
        const RingElement left = apply_sigma_tensor(D, 1, 0) - mid;
        const RingElement right = apply_sigma_tensor(D, 1, 1) - mid;
        if (!left.is_zero()) {
            w.push_back(ring->generator(i).name + ": (σ⊗id)Δ - Δσ = " + tensor_to_string(left));
        }
        if (!right.is_zero()) {
            w.push_back(ring->generator(i).name + ": (id⊗σ)Δ - Δσ = " + tensor_to_string(right));
        }
    }
    record(rep, "sigma_coproduct", "(σ⊗id)Δ = Δσ = (id⊗σ)Δ on R", w);

    w.clear();
    for (std::size_t i = 0; i < ring->size(); ++i) {
        const RingElement g = RingElement::generator(ring, i);
        const RingElement diff = antipode(apply_sigma(g, 1)) - apply_sigma(antipode(g), -1);
        if (!diff.is_zero()) {
            w.push_back(ring->generator(i).name + ": Sσ - σ⁻¹S = " + diff.to_string());
        }
    }
    record(rep, "antipode_sigma", "Sσ = σ⁻¹S on R", w);

    const Scalar eps = counit(a.h());
    const bool counit_ok = eps.is_zero();
    const RingElement r = a.r();
    const RingElement l = a.l();
    if (counit_ok) {
        const RingElement diff = coproduct(a.h()) - tensor(a.h(), r) - tensor(l, a.h());
        record(rep, "coproduct_h", "Δ(h) = h ⊗ r₊r₋ + l₊l₋ ⊗ h",
               diff.is_zero() ? std::vector<std::string>{} : std::vector<std::string>{tensor_to_string(diff)});
    } else {
        skip(rep, "coproduct_h", "Δ(h) = h ⊗ r₊r₋ + l₊l₋ ⊗ h", "requires ε(h) = 0");
    }
    record(rep, "counit", "ε(h) = 0",
           counit_ok ? std::vector<std::string>{}
                     : std::vector<std::string>{"ε(h) = " + eps.to_string() +
                                                "; ε(1) = 1 would force ε of the defining relation to vanish"});
    if (counit_ok) {
        const RingElement diff = antipode(a.h()) + (l * r).inverse() * a.h();
        record(rep, "antipode_h", "S(h) = -(l₊l₋r₊r₋)⁻¹h",
               diff.is_zero() ? std::vector<std::string>{} : std::vector<std::string>{diff.to_string()});
    } else {
        skip(rep, "antipode_h", "S(h) = -(l₊l₋r₊r₋)⁻¹h", "requires ε(h) = 0");
    }

    w.clear();
    const std::pair<const char*, const RingElement*> data[] = {
        {"r_plus", &d.r_plus}, {"r_minus", &d.r_minus}, {"l_plus", &d.l_plus}, {"l_minus", &d.l_minus}};
    for (const auto& [name, x] : data) {
        const RingElement diff = coproduct(*x) - tensor(*x, *x);
        if (!diff.is_zero()) {
            w.push_back(std::string(name) + ": Δ(x) - x ⊗ x = " + tensor_to_string(diff));
        }
        if (!counit(*x).is_one()) {
            w.push_back(std::string(name) + ": ε(x) = " + counit(*x).to_string());
        }
    }
    record(rep, "grouplike", "r±, l± grouplike", w);

    w.clear();
    const std::tuple<const char*, const RingElement*, const RingElement*> pairs[] = {
        {"(l_plus, r_minus)", &d.l_plus, &d.r_minus}, {"(l_minus, r_plus)", &d.l_minus, &d.r_plus}};
    for (const auto& [label, lx, rx] : pairs) {
        const RingElement diff = tensor(apply_sigma(*lx, 1), apply_sigma(*rx, 1)) - a.xi() * tensor(*lx, *rx);
        if (!diff.is_zero()) {
            std::string m;
            auto lam = sigma_multiplier(*lx);
            auto rho = sigma_multiplier(*rx);
            if (lam && rho) {
                m = " (multiplier product " + (*lam * *rho).to_string() + ", ξ = " + a.xi().to_string() + ")";
            }
            w.push_back(std::string(label) + ": " + tensor_to_string(diff) + m);
        }
    }
    record(rep, "twist", "σ(l±) ⊗ σ(r∓) = ξ l± ⊗ r∓", w);

    w.clear();
    auto [sp, sm] = derive_antipode_coeffs(a);
    if (!(sp * d.l_plus * apply_sigma(d.r_plus, 1) + a.one()).is_zero()) {
        w.push_back("s_plus = " + sp.to_string());
    }
    if (!(sm * d.l_minus * apply_sigma(d.r_minus, -1) + a.one()).is_zero()) {
        w.push_back("s_minus = " + sm.to_string());
    }
    record(rep, "antipode_coeffs", "s±⁻¹ = -l± σ^{±1}(r±)", w);
    rep.s_plus = sp;
    rep.s_minus = sm;

    rep.overall = true;
    for (const auto& c : rep.conditions) {
        rep.overall = rep.overall && c.status == ConditionStatus::pass;
    }
    if (rep.overall) {
        rep.h1 = h1_diagnostic(a);
    }
    return rep;
}

H1Diagnostic h1_diagnostic(const AlgebraSpec& a)
{
    H1Diagnostic out;
    const Weight one = underline(a.ring(), 1);
    out.h1 = evaluate_at(a.h(), one);
    if (!out.h1.is_zero()) {
        out.generic = true;
        out.case_name = "generic";
        return out;
    }
    out.generic = false;
    const Scalar r1 = evaluate_at(a.r(), one);
    out.identities.emplace_back("xi^2 = 1", (a.xi() * a.xi()).is_one());
    out.identities.emplace_back("r1^2 = 1", (r1 * r1).is_one());
    out.identities.emplace_back("sigma(h) = r1 h", apply_sigma(a.h(), 1) == r1 * a.h());
    out.identities.emplace_back("sigma(r) = r1 r", apply_sigma(a.r(), 1) == r1 * a.r());
    out.identities.emplace_back("sigma(l) = r1 l", apply_sigma(a.l(), 1) == r1 * a.l());
    const bool xi_pos = a.xi().is_one();
    const bool xi_neg = (-a.xi()).is_one();
    const bool r_pos = r1.is_one();
    const bool r_neg = (-r1).is_one();
    if ((xi_pos || xi_neg) && (r_pos || r_neg)) {
        out.case_name = std::string(xi_pos ? "[X+,X-]=h" : "{X+,X-}=h") + ", " + (r_pos ? "[h,X±]=0" : "{h,X±}=0");
    } else {
        out.case_name = "inconsistent";
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Split {
    RingElement left;
    RingElement right;
};

std::vector<Split> split_tensor(const Ring& base, const RingElement& t)
{
    const std::size_t n = base->size();
    std::vector<Split> out;
    for (const auto& [m, c] : t.terms()) {
        RingElement::Monomial l(m.begin(), m.begin() + static_cast<long>(n));
        RingElement::Monomial r(m.begin() + static_cast<long>(n), m.end());
        out.push_back({RingElement::monomial(base, l, c), RingElement::monomial(base, r, Scalar::integer(base->field(), 1))});
    }
    return out;
}

class TensorLeft {
public:
    explicit TensorLeft(const Algebra& a) : alg_(a) { s_.emplace_back(a->ring()); }

    TensorAlgebraElement xplus(const TensorAlgebraElement& y, int side)
    {
        TensorAlgebraElement out(alg_);
        const int pi = 2 * side;
        for (const auto& [key, t] : y.terms()) {
            const int p = key[pi];
            auto k1 = key;
            k1[pi + 1] += 1;
            out.add_term(k1, apply_sigma_tensor(t, 1, side) * alg_->xi().pow(p));
            if (p > 0) {
                auto k2 = key;
                k2[pi] -= 1;
                out.add_term(k2, tensor_embed(s(p), side) * t);
            }
        }
        return out;
    }

    TensorAlgebraElement xminus(const TensorAlgebraElement& y, int side)
    {
        TensorAlgebraElement out(alg_);
        for (const auto& [key, t] : y.terms()) {
            auto k = key;
            k[2 * side] += 1;
            out.add_term(k, t);
        }
        return out;
    }

    TensorAlgebraElement ring(const RingElement& u, const TensorAlgebraElement& y)
    {
        TensorAlgebraElement out(alg_);
        for (const auto& [key, t] : y.terms()) {
            out.add_term(key, apply_sigma_tensor(apply_sigma_tensor(u, key[0], 0), key[2], 1) * t);
        }
        return out;
    }

private:
    const RingElement& s(int p)
    {
        while (static_cast<int>(s_.size()) <= p) {
            const int k = static_cast<int>(s_.size()) - 1;
            s_.push_back(apply_sigma(s_.back(), 1) + alg_->h() * alg_->xi().pow(k));
        }
        return s_[static_cast<std::size_t>(p)];
    }

    Algebra alg_;
    std::vector<RingElement> s_;
};

} // namespace

TensorAlgebraElement TensorAlgebraElement::one(Algebra algebra)
{
    TensorAlgebraElement x(algebra);
    x.add_term({0, 0, 0, 0}, tensor(algebra->one(), algebra->one()));
    return x;
}

TensorAlgebraElement TensorAlgebraElement::pure(const AlgebraElement& left, const AlgebraElement& right)
{
    TensorAlgebraElement x(left.algebra() ? left.algebra() : right.algebra());
    for (const auto& [kl, a] : left.terms()) {
        for (const auto& [kr, b] : right.terms()) {
            x.add_term({kl.first, kl.second, kr.first, kr.second}, tensor(a, b));
        }
    }
    return x;
}

void TensorAlgebraElement::add_term(const Key& k, const RingElement& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TensorAlgebraElement& TensorAlgebraElement::operator+=(const TensorAlgebraElement& rhs)
{
    if (!algebra_) {
        algebra_ = rhs.algebra_;
    }
    for (const auto& [k, t] : rhs.terms_) {
        add_term(k, t);
    }
    return *this;
}

TensorAlgebraElement operator-(const TensorAlgebraElement& a, const TensorAlgebraElement& b)
{
    TensorAlgebraElement r = a;
    for (const auto& [k, t] : b.terms_) {
        r.add_term(k, -t);
    }
    if (!r.algebra_) {
        r.algebra_ = b.algebra_;
    }
    return r;
}

bool operator==(const TensorAlgebraElement& a, const TensorAlgebraElement& b)
{
    return (a - b).is_zero();
}

std::vector<std::pair<AlgebraElement, AlgebraElement>> TensorAlgebraElement::pure_terms() const
{
    std::vector<std::pair<AlgebraElement, AlgebraElement>> out;
    for (const auto& [k, t] : terms_) {
        for (const auto& s : split_tensor(algebra_->ring(), t)) {
            out.emplace_back(AlgebraElement::term(algebra_, k[0], s.left, k[1]),
                             AlgebraElement::term(algebra_, k[2], s.right, k[3]));
        }
    }
    return out;
}

TensorAlgebraElement operator*(const TensorAlgebraElement& a, const TensorAlgebraElement& b)
{
    TensorAlgebraElement out(a.algebra_ ? a.algebra_ : b.algebra_);
    const auto pb = b.pure_terms();
    for (const auto& [l1, r1] : a.pure_terms()) {
        for (const auto& [l2, r2] : pb) {
            out += TensorAlgebraElement::pure(l1 * l2, r1 * r2);
        }
    }
    return out;
}

AlgebraElement TensorAlgebraElement::contract(const std::function<AlgebraElement(const AlgebraElement&)>& f,
                                              const std::function<AlgebraElement(const AlgebraElement&)>& g) const
{
    AlgebraElement out(algebra_);
    for (const auto& [l, r] : pure_terms()) {
        out += f(l) * g(r);
    }
    return out;
}

std::string TensorAlgebraElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [k, t] : terms_) {
        for (const auto& s : split_tensor(algebra_->ring(), t)) {
            std::string l = AlgebraElement::term(algebra_, k[0], s.left, k[1]).to_string();
            std::string r = AlgebraElement::term(algebra_, k[2], s.right, k[3]).to_string();
            std::string term = l + " ⊗ " + r;
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
    }
    return out;
}

TensorAlgebraElement coproduct_on_A(const AlgebraElement& x)
{
    const Algebra& alg = x.algebra();
    TensorAlgebraElement out(alg);
    if (!alg) {
        return out;
    }
    const auto& d = alg->hopf();
    const RingElement one = alg->one();
    const RingElement rp = tensor(one, d.r_plus);
    const RingElement lp = tensor(d.l_plus, one);
    const RingElement rm = tensor(one, d.r_minus);
    const RingElement lm = tensor(d.l_minus, one);
    TensorLeft tl(alg);
    for (const auto& [key, a] : x.terms()) {
        TensorAlgebraElement y = TensorAlgebraElement::one(alg);
        for (int k = 0; k < key.second; ++k) {
            TensorAlgebraElement t = tl.xplus(tl.ring(rp, y), 0);
            t += tl.xplus(tl.ring(lp, y), 1);
            y = std::move(t);
        }
        y = tl.ring(coproduct(a), y);
        for (int k = 0; k < key.first; ++k) {
            TensorAlgebraElement t = tl.xminus(tl.ring(rm, y), 0);
            t += tl.xminus(tl.ring(lm, y), 1);
            y = std::move(t);
        }
        out += y;
    }
    return out;
}

Scalar counit_on_A(const AlgebraElement& x)
{
    auto it = x.terms().find({0, 0});
    if (it == x.terms().end()) {
        return x.algebra() ? Scalar(x.algebra()->field()) : Scalar();
    }
    return counit(it->second);
}

AlgebraElement antipode_on_A(const AlgebraElement& x)
{
    const Algebra& alg = x.algebra();
    AlgebraElement out(alg);
    if (!alg) {
        return out;
    }
    auto [sp, sm] = derive_antipode_coeffs(*alg);
    const AlgebraElement Sp = AlgebraElement::from_ring(alg, sp) * AlgebraElement::xplus(alg);
    const AlgebraElement Sm = AlgebraElement::from_ring(alg, sm) * AlgebraElement::xminus(alg);
    for (const auto& [key, a] : x.terms()) {
        out += Sp.pow(key.second) * AlgebraElement::from_ring(alg, antipode(a)) * Sm.pow(key.first);
    }
    return out;
}

} // namespace ambiskew
