#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/rational.hpp"

namespace daha {

// Formal parameters of the coefficient field.  Delta is the modular
// parameter; QLong/QShort are the Hecke parameters attached to the root
// length classes (QLong for squared length 2, QShort for the shorter class
// when the system has two lengths).
enum class Param : int { Delta = 0, QLong = 1, QShort = 2 };

constexpr int kParamCount = 3;

// A parameter monomial delta^{e0} qL^{e1} qS^{e2} with exact rational
// exponents.  Zero exponents are never stored.
class ParamMonomial {
public:
    ParamMonomial() = default;

    static ParamMonomial one() { return ParamMonomial(); }
    static ParamMonomial power(Param p, const Rational& e);

    const Rational& exponent(Param p) const;
    bool is_one() const { return exps_.empty(); }

    ParamMonomial operator*(const ParamMonomial& o) const;
    ParamMonomial inverse() const;
    ParamMonomial pow(const Rational& e) const;

    bool operator==(const ParamMonomial& o) const { return exps_ == o.exps_; }

    // Exponent-vector lexicographic order over the fixed axis list
    // (Delta, QLong, QShort).  Translation invariant, so it doubles as the
    // monomial order for division.
    int cmp(const ParamMonomial& o) const;
    bool operator<(const ParamMonomial& o) const { return cmp(o) < 0; }

    const std::vector<std::pair<Param, Rational>>& entries() const { return exps_; }

    void set(Param p, const Rational& e);

private:
    // Sorted by Param, no zero exponents.
    std::vector<std::pair<Param, Rational>> exps_;
};

struct ParamMonomialLess {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const { return a.cmp(b) < 0; }
};

// Monomial substitution target: p -> coeff * (parameter monomial).
struct ParamSub {
    Rational coeff{1};
    ParamMonomial target;
};

// Numeric assignment for one parameter: the value of p^{1/root_order} as an
// exact positive rational, so that all fractional powers stay rational.
struct ParamPoint {
    long root_order = 1;
    Rational root_value{1};
};

using ParamSubMap = std::map<Param, ParamSub>;
using ParamPointMap = std::map<Param, ParamPoint>;

// Sparse polynomial (Laurent in the parameters: exponents may be negative
// rationals) with exact rational coefficients and deterministic term order.
class ParamPoly {
public:
    using Terms = std::map<ParamMonomial, Rational, ParamMonomialLess>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    static ParamPoly monomial(const ParamMonomial& m, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly scaled(const Rational& c) const;
    ParamPoly times_monomial(const ParamMonomial& m, const Rational& c = Rational(1)) const;
    ParamPoly pow(unsigned e) const;

    // Largest term in the monomial order.
    const std::pair<const ParamMonomial, Rational>& leading() const;

    // Componentwise minimum exponent per parameter over all terms (0 for a
    // parameter absent from some term).
    ParamMonomial monomial_content() const;
    // gcd of coefficients, carrying the sign of the leading coefficient.
    Rational numeric_content() const;

    ParamPoly substitute(const ParamSubMap& sub) const;
    Rational evaluate(const ParamPointMap& pt) const;

    void add_term(const ParamMonomial& m, const Rational& c);

    std::string str() const;

private:
    Terms terms_;
};

// Exact multivariate gcd (primitive PRS).  Inputs may have rational
// exponents; they are rescaled to integers internally.
ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b);

// Exact division; returns nullopt when b does not divide a.
std::optional<ParamPoly> param_divide(const ParamPoly& a, const ParamPoly& b);

// Element of the field C(delta^{1/*}, q^{1/2}): a normalized fraction of
// parameter polynomials.
class ParamScalar {
public:
    ParamScalar() : num_(), den_(Rational(1)) {}
    ParamScalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    ParamScalar(long c) : ParamScalar(Rational(c)) {}
    ParamScalar(ParamPoly num, ParamPoly den);
    static ParamScalar from_poly(ParamPoly p);
    static ParamScalar monomial(const ParamMonomial& m, const Rational& c = Rational(1));
    // delta^e, qnu^e shortcuts
    static ParamScalar delta_pow(const Rational& e);
    static ParamScalar param_pow(Param p, const Rational& e);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator-() const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator/(const ParamScalar& o) const;
    ParamScalar inverse() const;

    // Exact equality (cross multiplication; independent of normal form).
    bool operator==(const ParamScalar& o) const;
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    ParamScalar substitute(const ParamSubMap& sub) const;
    Rational evaluate(const ParamPointMap& pt) const;

    std::string str() const;

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

// Parses the canonical serialization (and ordinary arithmetic expressions in
// d, q, qL, qS) back into a field element.
ParamScalar parse_param_scalar(const std::string& text);

std::string param_name(Param p, bool single_class = false);

}  // namespace daha
