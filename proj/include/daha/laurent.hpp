#pragma once

#include <map>
#include <optional>
#include <string>

#include "daha/root_datum.hpp"
#include "daha/weyl.hpp"

namespace daha {

using ExpVec = std::vector<long>;

// Laurent polynomial in x_1..x_n with exponents in the lattice B and
// coefficients in the parameter field.  The same container doubles as a
// polynomial in the dual variables y when produced by the Harish-Chandra map.
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, ParamScalar>;

    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(int n, const ParamScalar& c);
    static LaurentPoly monomial(const Weight& e, const ParamScalar& c = ParamScalar(1));

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const ParamScalar& c) const;
    LaurentPoly times_monomial(const ExpVec& e, const ParamScalar& c = ParamScalar(1)) const;

    ParamScalar coeff(const ExpVec& e) const;
    ParamScalar constant_term() const;
    // x_b -> x_{-b}
    LaurentPoly bar() const;

    LaurentPoly substitute(const ParamSubMap& sub) const;

    void add_term(const ExpVec& e, const ParamScalar& c);

    // Componentwise minimum exponent over the support.
    ExpVec min_exponents() const;

    std::string str() const;

private:
    Terms terms_;
};

// Exact division in the Laurent ring; nullopt when g does not divide f.
std::optional<LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g);

// Constant term of A*B without forming the product.
ParamScalar ct_of_product(const LaurentPoly& a, const LaurentPoly& b);

// Action of an extended-Weyl element: x_c -> x_{w(c)} delta^{-(w(c), t)}.
LaurentPoly act(const RootDatum& rd, const GroupElt& g, const LaurentPoly& f);

// Orbit sum m_b for antidominant b.
LaurentPoly monomial_sym(const RootDatum& rd, const Weight& b);

// Evaluation x_e -> delta^{(dshift, e)} prod_nu q_nu^{qscale * (e, rho_nu)}.
ParamScalar evaluate_twisted(const RootDatum& rd, const LaurentPoly& f, const RatVec& dshift,
                             const Rational& qscale);

// x_e -> delta^{(c,e)} prod_nu q_nu^{sign (e, rho_nu)}; sign=-1 with shift c
// is the point q^{-rho} delta^c.
ParamScalar evaluate_at_rho_point(const RootDatum& rd, const LaurentPoly& f, const Weight& c, int sign);

// Fraction of Laurent polynomials.  Kept only lightly normalized; equality
// goes through cross multiplication.
class RatFunX {
public:
    RatFunX() : num_(), den_(LaurentPoly::constant(0, ParamScalar(1))) {}
    RatFunX(const ParamScalar& c, int n);
    RatFunX(LaurentPoly num, LaurentPoly den);
    static RatFunX from_poly(LaurentPoly p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunX operator+(const RatFunX& o) const;
    RatFunX operator-(const RatFunX& o) const;
    RatFunX operator-() const;
    RatFunX operator*(const RatFunX& o) const;
    RatFunX operator/(const RatFunX& o) const;
    RatFunX inverse() const;
    bool operator==(const RatFunX& o) const;
    bool operator!=(const RatFunX& o) const { return !(*this == o); }

    bool is_polynomial() const { return den_poly_is_one(); }
    // Collapses the fraction; nullopt when the denominator does not divide.
    std::optional<LaurentPoly> as_poly() const;

    RatFunX substitute(const ParamSubMap& sub) const;
    ParamScalar evaluate_twisted(const RootDatum& rd, const RatVec& dshift, const Rational& qscale) const;

    std::string str() const;

private:
    void normalize();
    bool den_poly_is_one() const;

    LaurentPoly num_, den_;
};

RatFunX act(const RootDatum& rd, const GroupElt& g, const RatFunX& f);

// Limit of a rational coefficient along x -> 0 in the chamber graded by
// (., rho); throws PoleError when the limit does not exist or is infinite.
ParamScalar value_at_diamond(const RootDatum& rd, const RatFunX& h);

// Fast generator-level application of the Demazure-Lusztig operators and the
// diagram rotations.  These agree with the normal-form operators and are the
// workhorses for eigenproblems and pairings.
LaurentPoly apply_s(const RootDatum& rd, int j, const LaurentPoly& f);
LaurentPoly apply_T(const RootDatum& rd, int j, const LaurentPoly& f);
LaurentPoly apply_T_inv(const RootDatum& rd, int j, const LaurentPoly& f);
LaurentPoly apply_pi(const RootDatum& rd, int r, const LaurentPoly& f);
LaurentPoly apply_pi_inv(const RootDatum& rd, int r, const LaurentPoly& f);
// Y_c as a word in the generators (positive/negative parts).
LaurentPoly apply_y(const RootDatum& rd, const Weight& c, const LaurentPoly& f);

}  // namespace daha
