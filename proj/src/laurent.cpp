#include "daha/laurent.hpp"

#include <algorithm>

namespace daha {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(int n, const ParamScalar& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[ExpVec(n, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(const Weight& e, const ParamScalar& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[e.k] = c;
    return p;
}

void LaurentPoly::add_term(const ExpVec& e, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const ParamScalar& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
}

LaurentPoly LaurentPoly::times_monomial(const ExpVec& e, const ParamScalar& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [ee, cc] : terms_) {
        ExpVec ne = ee;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
        r.terms_[ne] = cc * c;
    }
    return r;
}

ParamScalar LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamScalar(0) : it->second;
}

ParamScalar LaurentPoly::constant_term() const {
    if (terms_.empty()) return ParamScalar(0);
    return coeff(ExpVec(terms_.begin()->first.size(), 0));
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        for (auto& v : ne) v = -v;
        r.terms_[ne] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const ParamSubMap& sub) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute(sub));
    return r;
}

ExpVec LaurentPoly::min_exponents() const {
    if (terms_.empty()) return {};
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string ev = "[";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) ev += ",";
            ev += std::to_string(e[i]);
        }
        ev += "]";
        s += "(" + ev + " ; " + c.str() + ")";
    }
    return s;
}

std::optional<LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (f.is_zero()) return LaurentPoly::zero();
    ExpVec mf = f.min_exponents();
    ExpVec mg = g.min_exponents();
    // Shift both to honest polynomials; exactness is preserved because
    // minimal exponents of products add componentwise.
    LaurentPoly fp, gp;
    {
        ExpVec nf = mf, ng = mg;
        for (auto& v : nf) v = -v;
        for (auto& v : ng) v = -v;
        fp = f.times_monomial(nf);
        gp = g.times_monomial(ng);
    }
    const auto& glead = *gp.terms().rbegin();
    LaurentPoly q;
    LaurentPoly r = fp;
    long guard = 0;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        ExpVec t = rlead.first;
        bool ok = true;
        for (size_t i = 0; i < t.size(); ++i) {
            t[i] -= glead.first[i];
            if (t[i] < 0) ok = false;
        }
        if (!ok) return std::nullopt;
        ParamScalar c = rlead.second / glead.second;
        q.add_term(t, c);
        r = r - gp.times_monomial(t, c);
        if (++guard > 2000000) throw Error("laurent_divide runaway");
    }
    ExpVec shift = mf;
    for (size_t i = 0; i < shift.size(); ++i) shift[i] -= mg[i];
    return q.times_monomial(shift);
}

ParamScalar ct_of_product(const LaurentPoly& a, const LaurentPoly& b) {
    ParamScalar s(0);
    for (const auto& [e, c] : a.terms()) {
        ExpVec ne = e;
        for (auto& v : ne) v = -v;
        ParamScalar bc = b.coeff(ne);
        if (!bc.is_zero()) s = s + c * bc;
    }
    return s;
}

LaurentPoly act(const RootDatum& rd, const GroupElt& g, const LaurentPoly& f) {
    LaurentPoly r;
    const RatVec t = g.t.to_rat();
    for (const auto& [e, c] : f.terms()) {
        Weight we = g.w.apply(Weight(e));
        Rational dexp = -rd.pairing(we.to_rat(), t);
        ParamScalar nc = c;
        if (dexp != 0) nc = nc * ParamScalar::delta_pow(dexp);
        r.add_term(we.k, nc);
    }
    return r;
}

LaurentPoly monomial_sym(const RootDatum& rd, const Weight& b) {
    if (!b.antidominant()) throw DomainError("monomial_sym expects an antidominant weight");
    LaurentPoly r;
    for (const auto& c : rd.orbit(b)) r.add_term(c.k, ParamScalar(1));
    return r;
}

ParamScalar evaluate_twisted(const RootDatum& rd, const LaurentPoly& f, const RatVec& dshift,
                             const Rational& qscale) {
    ParamScalar total(0);
    const auto& classes = rd.length_classes();
    for (const auto& [e, c] : f.terms()) {
        RatVec ev(e.size());
        for (size_t i = 0; i < e.size(); ++i) ev[i] = Rational(e[i]);
        ParamMonomial m;
        m.set(Param::Delta, rd.pairing(dshift, ev));
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            Rational qe = qscale * rd.pairing(rd.rho_nu(static_cast<int>(ci)), ev);
            m.set(rd.param_of_class(static_cast<int>(ci)), qe);
        }
        total = total + c * ParamScalar::monomial(m);
    }
    return total;
}

ParamScalar evaluate_at_rho_point(const RootDatum& rd, const LaurentPoly& f, const Weight& c, int sign) {
    return evaluate_twisted(rd, f, c.to_rat(), Rational(sign));
}

// ---------------------------------------------------------------------------
// RatFunX

RatFunX::RatFunX(const ParamScalar& c, int n)
    : num_(LaurentPoly::constant(n, c)), den_(LaurentPoly::constant(n, ParamScalar(1))) {}

RatFunX::RatFunX(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RatFunX RatFunX::from_poly(LaurentPoly p) {
    RatFunX r;
    if (p.is_zero()) {
        r.num_ = LaurentPoly::zero();
        r.den_ = LaurentPoly::constant(0, ParamScalar(1));
        return r;
    }
    int n = static_cast<int>(p.terms().begin()->first.size());
    r.num_ = std::move(p);
    r.den_ = LaurentPoly::constant(n, ParamScalar(1));
    return r;
}

bool RatFunX::den_poly_is_one() const {
    if (den_.size() != 1) return false;
    const auto& [e, c] = *den_.terms().begin();
    for (long v : e)
        if (v) return false;
    return c.is_one();
}

void RatFunX::normalize() {
    int n = static_cast<int>(den_.terms().begin()->first.size());
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(n, ParamScalar(1));
        return;
    }
    if (den_.size() == 1) {
        const auto& [e, c] = *den_.terms().begin();
        ExpVec ne = e;
        for (auto& v : ne) v = -v;
        num_ = num_.times_monomial(ne, c.inverse());
        den_ = LaurentPoly::constant(n, ParamScalar(1));
        return;
    }
    auto q = laurent_divide(num_, den_);
    if (q) {
        num_ = *q;
        den_ = LaurentPoly::constant(n, ParamScalar(1));
    }
}

RatFunX RatFunX::operator+(const RatFunX& o) const {
    if (den_poly_is_one() && o.den_poly_is_one()) return from_poly(num_ + o.num_);
    return RatFunX(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunX RatFunX::operator-(const RatFunX& o) const {
    if (den_poly_is_one() && o.den_poly_is_one()) return from_poly(num_ - o.num_);
    return RatFunX(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunX RatFunX::operator-() const {
    RatFunX r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunX RatFunX::operator*(const RatFunX& o) const {
    if (is_zero() || o.is_zero()) return from_poly(LaurentPoly::zero());
    if (den_poly_is_one() && o.den_poly_is_one()) return from_poly(num_ * o.num_);
    return RatFunX(num_ * o.num_, den_ * o.den_);
}

RatFunX RatFunX::operator/(const RatFunX& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunX(num_ * o.den_, den_ * o.num_);
}

RatFunX RatFunX::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunX(den_, num_);
}

bool RatFunX::operator==(const RatFunX& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<LaurentPoly> RatFunX::as_poly() const {
    if (den_poly_is_one()) return num_;
    return laurent_divide(num_, den_);
}

RatFunX RatFunX::substitute(const ParamSubMap& sub) const {
    LaurentPoly d = den_.substitute(sub);
    if (d.is_zero()) throw PoleError("denominator vanishes under specialization");
    return RatFunX(num_.substitute(sub), std::move(d));
}

ParamScalar RatFunX::evaluate_twisted(const RootDatum& rd, const RatVec& dshift, const Rational& qscale) const {
    ParamScalar d = daha::evaluate_twisted(rd, den_, dshift, qscale);
    if (d.is_zero()) throw PoleError("pole at evaluation point");
    return daha::evaluate_twisted(rd, num_, dshift, qscale) / d;
}

std::string RatFunX::str() const {
    if (den_poly_is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunX act(const RootDatum& rd, const GroupElt& g, const RatFunX& f) {
    return RatFunX(act(rd, g, f.num()), act(rd, g, f.den()));
}

ParamScalar value_at_diamond(const RootDatum& rd, const RatFunX& h) {
    if (h.is_zero()) return ParamScalar(0);
    // Grade monomials by (exponent, rho); the chamber limit keeps the
    // minimal-grade component only.
    auto grade = [&](const ExpVec& e) {
        RatVec ev(e.size());
        for (size_t i = 0; i < e.size(); ++i) ev[i] = Rational(e[i]);
        return rd.pairing(ev, rd.rho());
    };
    auto min_part = [&](const LaurentPoly& p, Rational& gmin) {
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            Rational g = grade(e);
            if (first || g < gmin) gmin = g;
            first = false;
        }
        LaurentPoly part;
        for (const auto& [e, c] : p.terms())
            if (grade(e) == gmin) part.add_term(e, c);
        return part;
    };
    Rational gn, gd;
    LaurentPoly nmin = min_part(h.num(), gn);
    LaurentPoly dmin = min_part(h.den(), gd);
    if (gn > gd) return ParamScalar(0);
    if (gn < gd) throw PoleError("coefficient has a pole at x = 0");
    // The limit exists only when the minimal components are proportional.
    ParamScalar ratio = nmin.terms().begin()->second / dmin.terms().begin()->second;
    if (nmin != dmin.scaled(ratio)) throw PoleError("coefficient has no chamber-independent limit at x = 0");
    return ratio;
}

// ---------------------------------------------------------------------------
// Generator-level application

LaurentPoly apply_s(const RootDatum& rd, int j, const LaurentPoly& f) {
    return act(rd, rd.affine_reflection(j), f);
}

namespace {

// x_{a_j} - 1 where a_0 = [-theta, 1] carries a delta level.
LaurentPoly dl_denominator(const RootDatum& rd, int j) {
    int n = rd.rank();
    LaurentPoly den;
    if (j > 0) {
        den.add_term(rd.simple_coroot(j - 1).k, ParamScalar(1));
    } else {
        Weight mtheta = -rd.theta_covector();
        den.add_term(mtheta.k, ParamScalar::delta_pow(Rational(1)));
    }
    den.add_term(ExpVec(n, 0), ParamScalar(Rational(-1)));
    return den;
}

ParamScalar q_half_node(const RootDatum& rd, int j, int sign) {
    return ParamScalar::param_pow(rd.param_of_node(j), rat(sign, 2));
}

}  // namespace

LaurentPoly apply_T(const RootDatum& rd, int j, const LaurentPoly& f) {
    LaurentPoly sf = apply_s(rd, j, f);
    LaurentPoly diff = sf - f;
    LaurentPoly result = sf.scaled(q_half_node(rd, j, +1));
    if (!diff.is_zero()) {
        auto quot = laurent_divide(diff, dl_denominator(rd, j));
        if (!quot) throw IdentityFailure("Demazure-Lusztig division failed");
        ParamScalar coeff = q_half_node(rd, j, +1) - q_half_node(rd, j, -1);
        result = result + quot->scaled(coeff);
    }
    return result;
}

LaurentPoly apply_T_inv(const RootDatum& rd, int j, const LaurentPoly& f) {
    // T^{-1} = T - q^{1/2} + q^{-1/2}
    ParamScalar coeff = q_half_node(rd, j, +1) - q_half_node(rd, j, -1);
    return apply_T(rd, j, f) - f.scaled(coeff);
}

LaurentPoly apply_pi(const RootDatum& rd, int r, const LaurentPoly& f) {
    return act(rd, rd.pi(r), f);
}

LaurentPoly apply_pi_inv(const RootDatum& rd, int r, const LaurentPoly& f) {
    return act(rd, rd.pi(r).inverse(), f);
}

LaurentPoly apply_y(const RootDatum& rd, const Weight& c, const LaurentPoly& f) {
    Weight cp = c.positive_part();
    Weight cm = c.negative_part();
    LaurentPoly cur = f;
    if (!cm.is_zero()) {
        // (pi T_{i_1} ... T_{i_l})^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1} pi^{-1},
        // so pi^{-1} acts first and the inverse letters follow in word order.
        ReducedWord w = reduced_word(rd, translation(cm));
        cur = apply_pi_inv(rd, w.r, cur);
        for (int j : w.letters) cur = apply_T_inv(rd, j, cur);
    }
    if (!cp.is_zero()) {
        ReducedWord w = reduced_word(rd, translation(cp));
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = apply_T(rd, *it, cur);
        cur = apply_pi(rd, w.r, cur);
    }
    return cur;
}

}  // namespace daha
