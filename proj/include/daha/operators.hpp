#pragma once

#include "daha/laurent.hpp"

namespace daha {

struct OpKey {
    Weight b;
    FiniteWeyl w;

    bool operator<(const OpKey& o) const {
        if (b != o.b) return b < o.b;
        return w < o.w;
    }
    bool operator==(const OpKey& o) const { return b == o.b && w == o.w; }
};

// Operator in the normal form sum_{b,w} h_{b,w} b' w with rational-function
// coefficients acting on Laurent polynomials.  Products move group parts past
// coefficients; the map order makes serialization canonical.
class NormalFormOperator {
public:
    explicit NormalFormOperator(const RootDatum& rd) : rd_(&rd) {}
    static NormalFormOperator identity(const RootDatum& rd);
    static NormalFormOperator multiplication(const RootDatum& rd, const LaurentPoly& f);
    static NormalFormOperator multiplication(const RootDatum& rd, const RatFunX& f);
    static NormalFormOperator group_element(const RootDatum& rd, const GroupElt& g);

    const RootDatum& datum() const { return *rd_; }
    const std::map<OpKey, RatFunX>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    NormalFormOperator operator+(const NormalFormOperator& o) const;
    NormalFormOperator operator-(const NormalFormOperator& o) const;
    NormalFormOperator operator*(const NormalFormOperator& o) const;
    NormalFormOperator scaled(const ParamScalar& c) const;
    // Multiplication by a rational function on the left.
    NormalFormOperator left_multiply(const RatFunX& f) const;
    bool operator==(const NormalFormOperator& o) const;
    bool operator!=(const NormalFormOperator& o) const { return !(*this == o); }

    RatFunX apply_rational(const LaurentPoly& f) const;
    RatFunX apply_rational(const RatFunX& f) const;
    // Application that must land back in the polynomial ring.
    LaurentPoly apply(const LaurentPoly& f) const;

    // [H]_dagger: drop the finite Weyl parts, summing coefficients per
    // translation.
    NormalFormOperator dagger() const;
    // [[H]] = sum of coefficients evaluated at q^{-rho}.
    ParamScalar bracket() const;
    // Difference Harish-Chandra map: sum h_{b,w}(diamond) y_b, returned as a
    // polynomial in the dual variables.
    LaurentPoly harish_chandra() const;

    NormalFormOperator substitute(const ParamSubMap& sub) const;

    void add_term(const Weight& b, const FiniteWeyl& w, const RatFunX& h);

    std::string str() const;

private:
    const RootDatum* rd_;
    std::map<OpKey, RatFunX> terms_;
};

// Generators of the polynomial representation.
NormalFormOperator op_s(const RootDatum& rd, int j);
NormalFormOperator op_T(const RootDatum& rd, int j);
NormalFormOperator op_T_inv(const RootDatum& rd, int j);
NormalFormOperator op_pi(const RootDatum& rd, int r);
NormalFormOperator op_X(const RootDatum& rd, const Weight& b);

// T_{pi_r w} along a reduced word; independent of the chosen word.
NormalFormOperator t_w_product(const RootDatum& rd, const GroupElt& g);
NormalFormOperator t_w_from_word(const RootDatum& rd, const ReducedWord& w);
NormalFormOperator t_w_inverse(const RootDatum& rd, const GroupElt& g);

// Y_b = prod Y_i^{k_i} with Y_i = T_{b_i}.
NormalFormOperator y_operator(const RootDatum& rd, const Weight& b);

// Generator table used by the relation checker; the corrupted variant drops
// delta from T_0 and serves as the negative control.
struct GeneratorSet {
    std::vector<NormalFormOperator> T;
    static GeneratorSet standard(const RootDatum& rd);
    static GeneratorSet corrupted_T0(const RootDatum& rd);
};

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
    std::string str() const;
};

RelationReport verify_relations(const RootDatum& rd, int height_bound);
RelationReport verify_relations(const RootDatum& rd, int height_bound, const GeneratorSet& gens);

// [[f,g]] = {f-bar(Y)(g)}(q^{-rho}); symmetric and bilinear.
ParamScalar fourier_pairing(const RootDatum& rd, const LaurentPoly& f, const LaurentPoly& g);

// A_n structure: the Gaussian multiplies the term at translation b by
// x_b delta^{-(b,b)/2}; tau is defined on generators and extended
// multiplicatively (tau(T_0) and tau(pi_r) through T_0 = Y_{theta^vee}
// T_{s_theta}^{-1} and pi_r = Y_{b_r} T_{omega_r}^{-1}).
NormalFormOperator gaussian_conjugate(const NormalFormOperator& op);
NormalFormOperator tau_of_X(const RootDatum& rd, const Weight& b);
NormalFormOperator tau_of_T(const RootDatum& rd, int j);
NormalFormOperator tau_of_Y(const RootDatum& rd, const Weight& b);
NormalFormOperator tau_of_pi(const RootDatum& rd, int r);

}  // namespace daha
