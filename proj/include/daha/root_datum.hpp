#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "daha/param.hpp"
#include "daha/rational.hpp"

namespace daha {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Lattice point of B in the basis of the fundamental coweights b_1..b_n.
struct Weight {
    std::vector<long> k;

    Weight() = default;
    explicit Weight(std::vector<long> kk) : k(std::move(kk)) {}
    static Weight zero(int n) { return Weight(std::vector<long>(n, 0)); }

    size_t size() const { return k.size(); }
    bool is_zero() const {
        for (long v : k)
            if (v) return false;
        return true;
    }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    bool operator==(const Weight& o) const { return k == o.k; }
    bool operator!=(const Weight& o) const { return k != o.k; }
    bool operator<(const Weight& o) const { return k < o.k; }

    bool dominant() const {
        for (long v : k)
            if (v < 0) return false;
        return true;
    }
    bool antidominant() const {
        for (long v : k)
            if (v > 0) return false;
        return true;
    }
    // Coordinatewise positive/negative parts (both dominant).
    Weight positive_part() const;
    Weight negative_part() const;

    RatVec to_rat() const;
    std::string str() const;
};

// Element of the finite Weyl group as an integer matrix on B (column i is the
// image of b_i in the b-basis).
struct FiniteWeyl {
    int n = 0;
    std::vector<long> m;  // row-major n x n

    static FiniteWeyl identity(int n);
    long at(int r, int c) const { return m[static_cast<size_t>(r) * n + c]; }
    long& at(int r, int c) { return m[static_cast<size_t>(r) * n + c]; }

    Weight apply(const Weight& w) const;
    RatVec apply(const RatVec& v) const;
    FiniteWeyl operator*(const FiniteWeyl& o) const;
    FiniteWeyl inverse() const;
    bool operator==(const FiniteWeyl& o) const { return n == o.n && m == o.m; }
    bool operator<(const FiniteWeyl& o) const { return m < o.m; }
    bool is_identity() const;
};

// Element of the extended affine Weyl group in the canonical form t' w
// (translation by t in B followed by a finite part), acting on [z, zeta] by
// [w(z), zeta - (w(z), t)].
struct GroupElt {
    Weight t;
    FiniteWeyl w;

    static GroupElt identity(int n) { return {Weight::zero(n), FiniteWeyl::identity(n)}; }
    GroupElt operator*(const GroupElt& o) const;
    GroupElt inverse() const;
    bool operator==(const GroupElt& o) const { return t == o.t && w == o.w; }
    bool operator!=(const GroupElt& o) const { return !(*this == o); }
    bool operator<(const GroupElt& o) const;
    bool is_identity() const { return t.is_zero() && w.is_identity(); }
};

// Affine root [alpha, level] with the finite part in b-coordinates.
struct AffineRoot {
    RatVec alpha;
    long level = 0;

    bool operator==(const AffineRoot& o) const { return level == o.level && alpha == o.alpha; }
    bool operator<(const AffineRoot& o) const {
        if (level != o.level) return level < o.level;
        return alpha < o.alpha;
    }
};

struct Root {
    RatVec b_coords;               // coordinates in the b-basis: ((alpha, a_j) * d_j)
    std::vector<long> alpha_coords;  // coordinates in the simple-root basis
    Rational nu;                   // squared length
    bool positive = true;
};

class RootDatum {
public:
    static RootDatum build(Family f, int rank);
    static RootDatum build(const std::string& type);  // "A1", "B2", ...

    Family family() const { return family_; }
    int rank() const { return n_; }
    std::string type_string() const;

    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const Rational& d(int i) const { return d_[i]; }    // (alpha_i, alpha_i)/2
    const Rational& nu(int i) const { return nu_[i]; }  // (alpha_i, alpha_i)

    // Exact euclidean form in b-coordinates.
    Rational pairing(const RatVec& u, const RatVec& v) const;
    Rational pairing(const Weight& u, const Weight& v) const;
    Rational pairing(const Weight& u, const RatVec& v) const;

    const RatVec& simple_root(int i) const { return alpha_b_[i]; }      // alpha_i
    const Weight& simple_coroot(int i) const { return coroot_b_[i]; }   // a_i = alpha_i^vee
    const std::vector<Root>& positive_roots() const { return pos_roots_; }
    const Root& highest_root() const { return pos_roots_[theta_index_]; }
    Weight theta_weight() const;         // theta in B (integral)
    Weight theta_covector() const;       // theta^vee in B (equals theta: theta is long)

    // Length class data.  Classes are listed long first.
    const std::vector<Rational>& length_classes() const { return classes_; }
    bool single_class() const { return classes_.size() == 1; }
    int class_index(const Rational& nu) const;
    Param param_of_class(int idx) const { return idx == 0 ? Param::QLong : Param::QShort; }
    Param param_of_nu(const Rational& nu) const { return param_of_class(class_index(nu)); }
    Rational delta_exp(const Rational& nu) const { return Rational(2) / nu; }  // delta_nu = delta^{2/nu}

    const RatVec& rho_nu(int class_idx) const { return rho_nu_[class_idx]; }
    const RatVec& rho() const { return rho_; }
    const Weight& r_nu(int class_idx) const { return r_nu_[class_idx]; }

    // Affine diagram: node 0 carries alpha_0 = [-theta, 1].
    long affine_cartan(int i, int j) const { return affine_cartan_[i][j]; }
    int braid_order(int i, int j) const;     // m_ij in {2,3,4,6}; 0 when unbounded
    Rational nu_node(int j) const;           // length class of alpha_j, j in 0..n
    Param param_of_node(int j) const { return param_of_nu(nu_node(j)); }

    const std::vector<int>& minuscule_indices() const { return ostar_; }  // O*
    const GroupElt& pi(int r) const;          // r in O (pi_0 = identity)
    const FiniteWeyl& omega(int r) const;     // r in O*
    int rstar(int r) const;                   // index with alpha_{r*} = pi_r^{-1}(alpha_0)
    const FiniteWeyl& longest_element() const { return w0_; }

    int diagram_constant_m() const { return m_; }
    long weyl_order() const { return weyl_order_; }
    long lattice_index() const { return lattice_index_; }  // |B/A| = det(Cartan)

    // Reflection action in b-coordinates.
    Weight reflect(int i, const Weight& z) const;
    RatVec reflect(int i, const RatVec& z) const;
    const FiniteWeyl& reflection_matrix(int i) const { return refl_[i]; }
    FiniteWeyl reflection_by_root(const Root& r) const;

    // Simple affine reflections as elements of W^b (s_0 = theta' s_theta).
    GroupElt affine_reflection(int j) const;

    // Affine action of a group element on an affine root.
    AffineRoot act_affine(const GroupElt& g, const AffineRoot& a) const;
    bool affine_positive(const AffineRoot& a) const;
    bool is_root(const RatVec& v) const;
    const Root& root_info(const RatVec& v) const;

    // Lattice membership.
    bool in_coroot_lattice(const Weight& b) const;           // b in A
    bool in_positive_coroot_cone(const Weight& b) const;     // b in A_+

    // Orbit of a vector under W (breadth-first closure under s_i).
    std::vector<RatVec> orbit(const RatVec& v) const;
    std::vector<Weight> orbit(const Weight& w) const;
    long orbit_size(const Weight& w) const;

private:
    RootDatum() = default;
    void construct();

    Family family_;
    int n_ = 0;
    std::vector<std::vector<long>> cartan_;
    RatVec d_, nu_;
    std::vector<RatVec> gram_;       // (b_i, b_j)
    std::vector<RatVec> alpha_b_;
    std::vector<Weight> coroot_b_;
    std::vector<Root> pos_roots_;
    std::map<RatVec, size_t> root_lookup_;  // both signs
    std::vector<Root> all_roots_;
    size_t theta_index_ = 0;
    std::vector<Rational> classes_;
    std::vector<RatVec> rho_nu_;
    RatVec rho_;
    std::vector<Weight> r_nu_;
    std::vector<std::vector<long>> affine_cartan_;
    std::vector<FiniteWeyl> refl_;
    FiniteWeyl w0_;
    std::vector<int> ostar_;
    std::map<int, GroupElt> pi_;
    std::map<int, FiniteWeyl> omega_;
    std::map<int, int> rstar_;
    int m_ = 1;
    long weyl_order_ = 0;
    long lattice_index_ = 1;
};

}  // namespace daha
