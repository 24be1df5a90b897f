#include "daha/param.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace daha {

namespace {

const Rational kZero(0);

Param kAxes[kParamCount] = {Param::Delta, Param::QLong, Param::QShort};

}  // namespace

// ---------------------------------------------------------------------------
// ParamMonomial

ParamMonomial ParamMonomial::power(Param p, const Rational& e) {
    ParamMonomial m;
    if (e != 0) m.exps_.emplace_back(p, e);
    return m;
}

const Rational& ParamMonomial::exponent(Param p) const {
    for (const auto& [pp, e] : exps_)
        if (pp == p) return e;
    return kZero;
}

void ParamMonomial::set(Param p, const Rational& e) {
    auto it = std::find_if(exps_.begin(), exps_.end(), [&](const auto& kv) { return kv.first == p; });
    if (it != exps_.end()) {
        if (e == 0)
            exps_.erase(it);
        else
            it->second = e;
    } else if (e != 0) {
        exps_.emplace_back(p, e);
        std::sort(exps_.begin(), exps_.end(),
                  [](const auto& a, const auto& b) { return static_cast<int>(a.first) < static_cast<int>(b.first); });
    }
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
    ParamMonomial m = *this;
    for (const auto& [p, e] : o.exps_) m.set(p, m.exponent(p) + e);
    return m;
}

ParamMonomial ParamMonomial::inverse() const {
    ParamMonomial m;
    for (const auto& [p, e] : exps_) m.exps_.emplace_back(p, -e);
    return m;
}

ParamMonomial ParamMonomial::pow(const Rational& e) const {
    ParamMonomial m;
    if (e == 0) return m;
    for (const auto& [p, ex] : exps_) m.exps_.emplace_back(p, ex * e);
    return m;
}

int ParamMonomial::cmp(const ParamMonomial& o) const {
    for (Param p : kAxes) {
        const Rational& a = exponent(p);
        const Rational& b = o.exponent(p);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_[ParamMonomial::one()] = c;
}

ParamPoly ParamPoly::monomial(const ParamMonomial& m, const Rational& c) {
    ParamPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

void ParamPoly::add_term(const ParamMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

ParamPoly ParamPoly::times_monomial(const ParamMonomial& m, const Rational& c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_[mm * m] = cc * c;
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

const std::pair<const ParamMonomial, Rational>& ParamPoly::leading() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.rbegin();
}

ParamMonomial ParamPoly::monomial_content() const {
    ParamMonomial m;
    if (terms_.empty()) return m;
    for (Param p : kAxes) {
        bool first = true;
        Rational mn = 0;
        for (const auto& [mm, c] : terms_) {
            const Rational& e = mm.exponent(p);
            if (first || e < mn) mn = e;
            first = false;
        }
        m.set(p, mn);
    }
    return m;
}

Rational ParamPoly::numeric_content() const {
    if (terms_.empty()) return Rational(0);
    Rational g = 0;
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    if (leading().second < 0) g = -g;
    return g;
}

ParamPoly ParamPoly::substitute(const ParamSubMap& sub) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        ParamMonomial nm;
        Rational nc = c;
        for (const auto& [p, e] : m.entries()) {
            auto it = sub.find(p);
            if (it == sub.end()) {
                nm.set(p, nm.exponent(p) + e);
                continue;
            }
            const ParamSub& s = it->second;
            if (s.coeff != 1) {
                if (!is_integer(e))
                    throw DomainError("fractional power of non-monic substitution target");
                nc *= rat_pow(s.coeff, to_long(e));
            }
            for (const auto& [tp, te] : s.target.entries()) nm.set(tp, nm.exponent(tp) + te * e);
        }
        r.add_term(nm, nc);
    }
    return r;
}

Rational ParamPoly::evaluate(const ParamPointMap& pt) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [p, e] : m.entries()) {
            auto it = pt.find(p);
            if (it == pt.end()) throw DomainError("evaluation point missing parameter");
            Rational scaled = e * it->second.root_order;
            if (!is_integer(scaled))
                throw DomainError("point root order too coarse for exponent " + e.get_str());
            v *= rat_pow(it->second.root_value, to_long(scaled));
        }
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------------------
// gcd / exact division machinery.  All internal routines assume exponents
// have already been rescaled to nonnegative integers.

namespace {

std::vector<Param> params_present(const ParamPoly& a, const ParamPoly& b) {
    std::vector<Param> out;
    for (Param p : kAxes) {
        bool found = false;
        for (const auto& [m, c] : a.terms())
            if (m.exponent(p) != 0) { found = true; break; }
        if (!found)
            for (const auto& [m, c] : b.terms())
                if (m.exponent(p) != 0) { found = true; break; }
        if (found) out.push_back(p);
    }
    return out;
}

// Per-parameter lcm of exponent denominators across both polynomials.
std::map<Param, long> exponent_scale(const ParamPoly& a, const ParamPoly& b) {
    std::map<Param, long> scale;
    for (Param p : kAxes) scale[p] = 1;
    auto absorb = [&](const ParamPoly& q) {
        for (const auto& [m, c] : q.terms())
            for (const auto& [p, e] : m.entries())
                scale[p] = lcm_long(scale[p], static_cast<long>(e.get_den().get_si()));
    };
    absorb(a);
    absorb(b);
    return scale;
}

ParamPoly rescale(const ParamPoly& q, const std::map<Param, long>& scale, bool inverse) {
    ParamPoly r;
    for (const auto& [m, c] : q.terms()) {
        ParamMonomial nm;
        for (const auto& [p, e] : m.entries()) {
            Rational f(scale.at(p));
            Rational val = inverse ? Rational(e / f) : Rational(e * f);
            nm.set(p, val);
        }
        r.add_term(nm, c);
    }
    return r;
}

// View of a polynomial as univariate in `v` with ParamPoly coefficients.
using UniView = std::map<long, ParamPoly>;

UniView uni_view(const ParamPoly& q, Param v) {
    UniView view;
    for (const auto& [m, c] : q.terms()) {
        long d = to_long(m.exponent(v));
        ParamMonomial rest = m;
        rest.set(v, Rational(0));
        view[d].add_term(rest, c);
    }
    for (auto it = view.begin(); it != view.end();) {
        if (it->second.is_zero())
            it = view.erase(it);
        else
            ++it;
    }
    return view;
}

ParamPoly from_uni(const UniView& view, Param v) {
    ParamPoly r;
    for (const auto& [d, coeff] : view) {
        ParamMonomial vm = ParamMonomial::power(v, Rational(d));
        for (const auto& [m, c] : coeff.terms()) r.add_term(m * vm, c);
    }
    return r;
}

long uni_deg(const UniView& view) { return view.empty() ? -1 : view.rbegin()->first; }

UniView uni_scale(const UniView& a, const ParamPoly& f) {
    UniView r;
    for (const auto& [d, c] : a) {
        ParamPoly p = c * f;
        if (!p.is_zero()) r[d] = p;
    }
    return r;
}

UniView uni_sub(const UniView& a, const UniView& b) {
    UniView r = a;
    for (const auto& [d, c] : b) {
        auto it = r.find(d);
        if (it == r.end()) {
            ParamPoly nc = -c;
            if (!nc.is_zero()) r[d] = nc;
        } else {
            it->second = it->second - c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

// b * v^k
UniView uni_shift(const UniView& b, long k) {
    UniView r;
    for (const auto& [d, c] : b) r[d + k] = c;
    return r;
}

ParamPoly gcd_scaled(const ParamPoly& a, const ParamPoly& b);

std::optional<ParamPoly> divide_scaled(const ParamPoly& a, const ParamPoly& b);

// Canonical associate: numeric content 1, positive leading coefficient.
ParamPoly make_canonical(const ParamPoly& p) {
    if (p.is_zero()) return p;
    Rational c = p.numeric_content();
    return p.scaled(Rational(1) / c);
}

// Pseudo-remainder of a by b in the variable v (up to powers of lc(b), which
// the primitive PRS strips afterwards anyway).
UniView pseudo_rem(UniView a, const UniView& b) {
    long db = uni_deg(b);
    const ParamPoly& lb = b.rbegin()->second;
    int guard = 0;
    while (!a.empty() && uni_deg(a) >= db) {
        long da = uni_deg(a);
        const ParamPoly la = a.rbegin()->second;
        a = uni_sub(uni_scale(a, lb), uni_shift(uni_scale(b, la), da - db));
        if (++guard > 100000) throw Error("pseudo_rem runaway");
    }
    return a;
}

ParamPoly uni_content(const UniView& view) {
    ParamPoly g;
    for (const auto& [d, c] : view) g = gcd_scaled(g, c);
    return g;
}

// Primitive part with the numeric content stripped as well; without this the
// pseudo-remainder chain explodes over Q.
UniView uni_primitive(const UniView& view, ParamPoly* content_out = nullptr) {
    if (content_out) *content_out = ParamPoly(Rational(1));
    if (view.empty()) return view;
    ParamPoly g = uni_content(view);
    if (content_out) *content_out = g;
    UniView r;
    if (g.is_zero() || g.is_one()) {
        r = view;
    } else {
        for (const auto& [d, c] : view) {
            auto q = divide_scaled(c, g);
            if (!q) throw Error("content division failed");
            r[d] = *q;
        }
    }
    Rational nc = 0;
    for (const auto& [d, c] : r) nc = rat_gcd(nc, c.numeric_content());
    if (nc != 0 && nc != 1) {
        Rational inv = Rational(1) / nc;
        for (auto& [d, c] : r) c = c.scaled(inv);
    }
    return r;
}

bool uni_constant_coeffs(const UniView& v) {
    for (const auto& [d, c] : v)
        if (!(c.is_monomial() && c.leading().first.is_one())) return false;
    return true;
}

// Monic Euclid for univariate polynomials over the rationals; coefficients
// stay bounded, unlike the pseudo-remainder chain.
UniView monic_euclid(UniView a, UniView b) {
    auto make_monic = [](UniView& v) {
        if (v.empty()) return;
        Rational lc = v.rbegin()->second.leading().second;
        if (lc == 1) return;
        Rational inv = Rational(1) / lc;
        for (auto& [d, c] : v) c = c.scaled(inv);
    };
    while (!b.empty()) {
        long db = uni_deg(b);
        make_monic(b);
        UniView r = a;
        while (!r.empty() && uni_deg(r) >= db) {
            long dr = uni_deg(r);
            ParamPoly lr = r.rbegin()->second;
            r = uni_sub(r, uni_shift(uni_scale(b, lr), dr - db));
        }
        a = b;
        b = r;
    }
    return a;
}

// gcd of polynomials with nonnegative integer exponents.
ParamPoly gcd_scaled(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return make_canonical(b);
    if (b.is_zero()) return make_canonical(a);

    // Split off the monomial part first.
    ParamMonomial ma = a.monomial_content();
    ParamMonomial mb = b.monomial_content();
    ParamMonomial gm;
    for (Param p : kAxes) gm.set(p, std::min(ma.exponent(p), mb.exponent(p), std::less<Rational>()));
    ParamPoly pa = a.times_monomial(ma.inverse());
    ParamPoly pb = b.times_monomial(mb.inverse());

    std::vector<Param> vars = params_present(pa, pb);
    ParamPoly g;
    if (vars.empty()) {
        g = ParamPoly(Rational(1));
    } else if (pa.is_monomial() || pb.is_monomial()) {
        // After content stripping a monomial is 1 up to scalar.
        g = ParamPoly(Rational(1));
    } else {
        Param v = vars.front();
        UniView ua = uni_view(pa, v);
        UniView ub = uni_view(pb, v);
        ParamPoly ca, cb;
        ua = uni_primitive(ua, &ca);
        ub = uni_primitive(ub, &cb);
        ParamPoly cg = gcd_scaled(ca, cb);
        if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);
        if (uni_constant_coeffs(ua) && uni_constant_coeffs(ub)) {
            ua = monic_euclid(std::move(ua), std::move(ub));
        } else {
            while (!ub.empty()) {
                UniView r = pseudo_rem(ua, ub);
                ua = ub;
                ub = uni_primitive(r);
            }
        }
        ParamPoly pp = from_uni(ua, v);
        g = make_canonical(pp * cg);
    }
    return make_canonical(g.times_monomial(gm));
}

// Exact division for nonnegative-integer-exponent polynomials.
std::optional<ParamPoly> divide_scaled(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return ParamPoly();
    ParamPoly r = a;
    ParamPoly q;
    const auto& lb = b.leading();
    int guard = 0;
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        // Componentwise divisibility of the leading monomials.
        ParamMonomial t;
        for (Param p : kAxes) {
            Rational d = lr.first.exponent(p) - lb.first.exponent(p);
            if (d < 0) return std::nullopt;
            t.set(p, d);
        }
        Rational c = lr.second / lb.second;
        q.add_term(t, c);
        r = r - b.times_monomial(t, c);
        if (++guard > 2000000) throw Error("divide runaway");
    }
    return q;
}

}  // namespace

ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b) {
    auto scale = exponent_scale(a, b);
    ParamPoly sa = rescale(a, scale, false);
    ParamPoly sb = rescale(b, scale, false);
    // Shift away negative exponents; they only contribute to the monomial
    // part, which gcd_scaled computes from contents anyway.
    ParamMonomial ca = sa.monomial_content();
    ParamMonomial cb = sb.monomial_content();
    ParamMonomial shift;
    for (Param p : kAxes) shift.set(p, std::min(std::min(ca.exponent(p), cb.exponent(p)), Rational(0)));
    sa = sa.times_monomial(shift.inverse());
    sb = sb.times_monomial(shift.inverse());
    ParamPoly g = gcd_scaled(sa, sb);
    return rescale(g.times_monomial(shift), scale, true);
}

std::optional<ParamPoly> param_divide(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return ParamPoly();
    auto scale = exponent_scale(a, b);
    ParamPoly sa = rescale(a, scale, false);
    ParamPoly sb = rescale(b, scale, false);
    ParamMonomial ma = sa.monomial_content();
    ParamMonomial mb = sb.monomial_content();
    sa = sa.times_monomial(ma.inverse());
    sb = sb.times_monomial(mb.inverse());
    auto q = divide_scaled(sa, sb);
    if (!q) return std::nullopt;
    ParamMonomial shift = ma * mb.inverse();
    return rescale(q->times_monomial(shift), scale, true);
}

// ---------------------------------------------------------------------------
// ParamScalar

ParamScalar::ParamScalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    normalize();
}

ParamScalar ParamScalar::from_poly(ParamPoly p) {
    ParamScalar s;
    s.num_ = std::move(p);
    s.den_ = ParamPoly(Rational(1));
    return s;
}

ParamScalar ParamScalar::monomial(const ParamMonomial& m, const Rational& c) {
    return from_poly(ParamPoly::monomial(m, c));
}

ParamScalar ParamScalar::delta_pow(const Rational& e) {
    return monomial(ParamMonomial::power(Param::Delta, e));
}

ParamScalar ParamScalar::param_pow(Param p, const Rational& e) {
    return monomial(ParamMonomial::power(p, e));
}

void ParamScalar::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    if (den_.is_monomial()) {
        // Fold a monomial denominator into the numerator.
        const auto& [m, c] = *den_.terms().begin();
        num_ = num_.times_monomial(m.inverse(), Rational(1) / c);
        den_ = ParamPoly(Rational(1));
        return;
    }
    // Joint monomial shift so both parts become genuine polynomials.
    ParamMonomial mN = num_.monomial_content();
    ParamMonomial mD = den_.monomial_content();
    ParamMonomial m;
    for (Param p : {Param::Delta, Param::QLong, Param::QShort})
        m.set(p, std::min(mN.exponent(p), mD.exponent(p)));
    if (!m.is_one()) {
        num_ = num_.times_monomial(m.inverse());
        den_ = den_.times_monomial(m.inverse());
    }
    ParamPoly g = param_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero() && !(g.is_monomial() && g.leading().first.is_one())) {
        auto qn = param_divide(num_, g);
        auto qd = param_divide(den_, g);
        if (qn && qd) {
            num_ = *qn;
            den_ = *qd;
        }
    }
    // Monic denominator fixes the representative uniquely.
    const Rational& lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.scaled(Rational(1) / lc);
        den_ = den_.scaled(Rational(1) / lc);
    }
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ + o.num_);
    return ParamScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ - o.num_);
    return ParamScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ * o.num_);
    return ParamScalar(num_ * o.num_, den_ * o.den_);
}

ParamScalar ParamScalar::operator/(const ParamScalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    return ParamScalar(num_ * o.den_, den_ * o.num_);
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return ParamScalar(den_, num_);
}

bool ParamScalar::operator==(const ParamScalar& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

ParamScalar ParamScalar::substitute(const ParamSubMap& sub) const {
    ParamPoly n = num_.substitute(sub);
    ParamPoly d = den_.substitute(sub);
    if (d.is_zero()) throw PoleError("denominator vanishes under specialization");
    return ParamScalar(std::move(n), std::move(d));
}

Rational ParamScalar::evaluate(const ParamPointMap& pt) const {
    Rational d = den_.evaluate(pt);
    if (d == 0) throw PoleError("denominator vanishes at evaluation point");
    return num_.evaluate(pt) / d;
}

// ---------------------------------------------------------------------------
// Serialization

std::string param_name(Param p, bool single_class) {
    switch (p) {
        case Param::Delta: return "d";
        case Param::QLong: return single_class ? "q" : "qL";
        case Param::QShort: return "qS";
    }
    return "?";
}

namespace {

std::string exponent_str(const Rational& e) {
    if (is_integer(e)) {
        return e.get_str();
    }
    return "(" + e.get_str() + ")";
}

std::string monomial_str(const ParamMonomial& m) {
    std::string s;
    for (const auto& [p, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += param_name(p);
        if (e != 1) s += "^" + exponent_str(e);
    }
    return s;
}

std::string poly_str(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string ms = monomial_str(m);
        if (ms.empty()) {
            s += a.get_str();
        } else if (a == 1) {
            s += ms;
        } else {
            s += a.get_str() + "*" + ms;
        }
        first = false;
    }
    return s;
}

}  // namespace

std::string ParamScalar::str() const {
    if (den_.is_one()) {
        if (num_.size() <= 1) return poly_str(num_);
        return "(" + poly_str(num_) + ")";
    }
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

std::string ParamPoly::str() const { return poly_str(*this); }

// ---------------------------------------------------------------------------
// Parser for the canonical serialization.

namespace {

struct Lexer {
    std::string text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        return text[pos++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::string s;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) s += text[pos++];
        if (s.empty()) throw ParseError("expected identifier at position " + std::to_string(pos));
        return s;
    }
    mpz_class integer() {
        skip_ws();
        std::string s;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) s += text[pos++];
        if (s.empty()) throw ParseError("expected integer at position " + std::to_string(pos));
        return mpz_class(s);
    }
};

struct Parser {
    Lexer lex;

    ParamScalar parse() {
        ParamScalar v = expr();
        if (!lex.eof()) throw ParseError("trailing input at position " + std::to_string(lex.pos));
        return v;
    }

    ParamScalar expr() {
        bool neg = lex.accept('-');
        ParamScalar v = term();
        if (neg) v = -v;
        while (true) {
            if (lex.accept('+'))
                v = v + term();
            else if (lex.accept('-'))
                v = v - term();
            else
                break;
        }
        return v;
    }

    ParamScalar term() {
        ParamScalar v = factor();
        while (true) {
            if (lex.accept('*'))
                v = v * factor();
            else if (lex.accept('/'))
                v = v / factor();
            else
                break;
        }
        return v;
    }

    Rational exponent() {
        if (lex.accept('(')) {
            bool neg = lex.accept('-');
            mpz_class n = lex.integer();
            mpz_class d = 1;
            if (lex.accept('/')) d = lex.integer();
            if (!lex.accept(')')) throw ParseError("expected ')' in exponent");
            Rational r(n, d);
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        bool neg = lex.accept('-');
        Rational r(lex.integer());
        return neg ? Rational(-r) : r;
    }

    ParamScalar power(const ParamScalar& base, const Rational& e) {
        if (is_integer(e)) {
            long n = to_long(e);
            ParamScalar r(1);
            ParamScalar b = n < 0 ? base.inverse() : base;
            for (long i = 0; i < (n < 0 ? -n : n); ++i) r = r * b;
            return r;
        }
        // Fractional powers only make sense for parameter monomials.
        if (base.den().is_one() && base.num().is_monomial()) {
            const auto& [m, c] = *base.num().terms().begin();
            if (c == 1) return ParamScalar::monomial(m.pow(e));
        }
        throw ParseError("fractional power of a non-monomial");
    }

    ParamScalar factor() {
        ParamScalar v = primary();
        if (lex.accept('^')) v = power(v, exponent());
        return v;
    }

    ParamScalar primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            ParamScalar v = expr();
            if (!lex.accept(')')) throw ParseError("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r(lex.integer());
            return ParamScalar(r);
        }
        std::string id = lex.ident();
        if (id == "d") return ParamScalar::param_pow(Param::Delta, Rational(1));
        if (id == "q" || id == "qL") return ParamScalar::param_pow(Param::QLong, Rational(1));
        if (id == "qS") return ParamScalar::param_pow(Param::QShort, Rational(1));
        throw ParseError("unknown symbol '" + id + "'");
    }
};

}  // namespace

ParamScalar parse_param_scalar(const std::string& text) {
    Parser p;
    p.lex.text = text;
    return p.parse();
}

}  // namespace daha
