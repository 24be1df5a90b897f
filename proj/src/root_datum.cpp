#include "daha/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace daha {

// ---------------------------------------------------------------------------
// Weight / FiniteWeyl / GroupElt

Weight Weight::operator+(const Weight& o) const {
    if (k.size() != o.k.size()) throw DomainError("weight dimension mismatch");
    Weight r = *this;
    for (size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (k.size() != o.k.size()) throw DomainError("weight dimension mismatch");
    Weight r = *this;
    for (size_t i = 0; i < k.size(); ++i) r.k[i] -= o.k[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& v : r.k) v = -v;
    return r;
}

Weight Weight::positive_part() const {
    Weight r = *this;
    for (auto& v : r.k) v = v > 0 ? v : 0;
    return r;
}

Weight Weight::negative_part() const {
    Weight r = *this;
    for (auto& v : r.k) v = v < 0 ? -v : 0;
    return r;
}

RatVec Weight::to_rat() const {
    RatVec v(k.size());
    for (size_t i = 0; i < k.size(); ++i) v[i] = Rational(k[i]);
    return v;
}

std::string Weight::str() const {
    std::string s = "[";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + "]";
}

FiniteWeyl FiniteWeyl::identity(int n) {
    FiniteWeyl w;
    w.n = n;
    w.m.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) w.at(i, i) = 1;
    return w;
}

Weight FiniteWeyl::apply(const Weight& w) const {
    Weight r = Weight::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.k[i] += at(i, j) * w.k[j];
    return r;
}

RatVec FiniteWeyl::apply(const RatVec& v) const {
    RatVec r(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += Rational(at(i, j)) * v[j];
    return r;
}

FiniteWeyl FiniteWeyl::operator*(const FiniteWeyl& o) const {
    FiniteWeyl r;
    r.n = n;
    r.m.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

FiniteWeyl FiniteWeyl::inverse() const {
    // Weyl matrices have finite order; invert by rational elimination to stay
    // honest about integrality.
    int nn = n;
    std::vector<RatVec> aug(nn, RatVec(2 * nn, Rational(0)));
    for (int i = 0; i < nn; ++i) {
        for (int j = 0; j < nn; ++j) aug[i][j] = Rational(at(i, j));
        aug[i][nn + i] = 1;
    }
    for (int col = 0; col < nn; ++col) {
        int piv = -1;
        for (int r = col; r < nn; ++r)
            if (aug[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DomainError("singular Weyl matrix");
        std::swap(aug[col], aug[piv]);
        Rational p = aug[col][col];
        for (int j = 0; j < 2 * nn; ++j) aug[col][j] /= p;
        for (int r = 0; r < nn; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * nn; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    FiniteWeyl out;
    out.n = nn;
    out.m.assign(static_cast<size_t>(nn) * nn, 0);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            if (!is_integer(aug[i][nn + j])) throw DomainError("non-integral Weyl inverse");
            out.at(i, j) = to_long(aug[i][nn + j]);
        }
    return out;
}

bool FiniteWeyl::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
    // (t1 w1)(t2 w2) = (t1 + w1 t2)' (w1 w2)
    return {t + w.apply(o.t), w * o.w};
}

GroupElt GroupElt::inverse() const {
    FiniteWeyl wi = w.inverse();
    return {-wi.apply(t), wi};
}

bool GroupElt::operator<(const GroupElt& o) const {
    if (t != o.t) return t < o.t;
    return w < o.w;
}

// ---------------------------------------------------------------------------
// Rational linear algebra helpers

namespace {

Rational rat_det(std::vector<RatVec> m) {
    int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(m[col], m[piv]);
            det = -det;
        }
        det *= m[col][col];
        Rational p = m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / p;
            for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

std::vector<RatVec> rat_inverse(const std::vector<RatVec>& m) {
    int n = static_cast<int>(m.size());
    std::vector<RatVec> aug(n, RatVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DomainError("singular matrix");
        std::swap(aug[col], aug[piv]);
        Rational p = aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    std::vector<RatVec> out(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

std::optional<RatVec> rat_solve(std::vector<RatVec> m, RatVec rhs) {
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        Rational p = m[col][col];
        for (int j = 0; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

struct FamilyData {
    std::vector<std::vector<long>> cartan;
    RatVec d;
    std::vector<long> marks;
    long weyl_order;
};

FamilyData family_data(Family f, int n) {
    auto path_cartan = [&](int nn) {
        std::vector<std::vector<long>> c(nn, std::vector<long>(nn, 0));
        for (int i = 0; i < nn; ++i) c[i][i] = 2;
        for (int i = 0; i + 1 < nn; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        return c;
    };
    auto fact = [](long k) {
        long r = 1;
        for (long i = 2; i <= k; ++i) r *= i;
        return r;
    };
    FamilyData fd;
    switch (f) {
        case Family::A: {
            if (n < 1 || n > 8) throw DomainError("A_n supported for 1 <= n <= 8");
            fd.cartan = path_cartan(n);
            fd.d.assign(n, Rational(1));
            fd.marks.assign(n, 1);
            fd.weyl_order = fact(n + 1);
            break;
        }
        case Family::B: {
            if (n < 2 || n > 8) throw DomainError("B_n supported for 2 <= n <= 8");
            fd.cartan = path_cartan(n);
            fd.cartan[n - 2][n - 1] = -2;  // alpha_n short
            fd.d.assign(n, Rational(1));
            fd.d[n - 1] = rat(1, 2);
            fd.marks.assign(n, 2);
            fd.marks[0] = 1;
            fd.weyl_order = (1L << n) * fact(n);
            break;
        }
        case Family::C: {
            if (n < 2 || n > 8) throw DomainError("C_n supported for 2 <= n <= 8");
            fd.cartan = path_cartan(n);
            fd.cartan[n - 1][n - 2] = -2;  // alpha_n long, others short
            fd.d.assign(n, rat(1, 2));
            fd.d[n - 1] = Rational(1);
            fd.marks.assign(n, 2);
            fd.marks[n - 1] = 1;
            fd.weyl_order = (1L << n) * fact(n);
            break;
        }
        case Family::D: {
            if (n < 4 || n > 8) throw DomainError("D_n supported for 4 <= n <= 8");
            fd.cartan = path_cartan(n);
            // Detach node n from the path and hang it off node n-2.
            fd.cartan[n - 2][n - 1] = 0;
            fd.cartan[n - 1][n - 2] = 0;
            fd.cartan[n - 3][n - 1] = -1;
            fd.cartan[n - 1][n - 3] = -1;
            fd.d.assign(n, Rational(1));
            fd.marks.assign(n, 2);
            fd.marks[0] = fd.marks[n - 2] = fd.marks[n - 1] = 1;
            fd.weyl_order = (1L << (n - 1)) * fact(n);
            break;
        }
        case Family::E: {
            if (n < 6 || n > 8) throw DomainError("E_n supported for n in {6,7,8}");
            std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
            for (int i = 0; i < n; ++i) c[i][i] = 2;
            auto link = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (n >= 7) link(6, 7);
            if (n >= 8) link(7, 8);
            link(2, 4);
            fd.cartan = c;
            fd.d.assign(n, Rational(1));
            if (n == 6) {
                fd.marks = {1, 2, 2, 3, 2, 1};
                fd.weyl_order = 51840;
            } else if (n == 7) {
                fd.marks = {2, 2, 3, 4, 3, 2, 1};
                fd.weyl_order = 2903040;
            } else {
                fd.marks = {2, 3, 4, 6, 5, 4, 3, 2};
                fd.weyl_order = 696729600;
            }
            break;
        }
        case Family::F: {
            if (n != 4) throw DomainError("F requires rank 4");
            fd.cartan = path_cartan(4);
            fd.cartan[1][2] = -2;  // alpha_3, alpha_4 short
            fd.d = {Rational(1), Rational(1), rat(1, 2), rat(1, 2)};
            fd.marks = {2, 3, 4, 2};
            fd.weyl_order = 1152;
            break;
        }
        case Family::G: {
            if (n != 2) throw DomainError("G requires rank 2");
            fd.cartan = {{2, -1}, {-3, 2}};  // alpha_1 short, alpha_2 long
            fd.d = {rat(1, 3), Rational(1)};
            fd.marks = {3, 2};
            fd.weyl_order = 12;
            break;
        }
        default:
            throw DomainError("unknown family");
    }
    return fd;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootDatum

RootDatum RootDatum::build(Family f, int rank) {
    FamilyData fd = family_data(f, rank);
    RootDatum rd;
    rd.family_ = f;
    rd.n_ = rank;
    rd.cartan_ = fd.cartan;
    rd.d_ = fd.d;
    rd.weyl_order_ = fd.weyl_order;
    rd.nu_.resize(rank);
    for (int i = 0; i < rank; ++i) rd.nu_[i] = fd.d[i] * 2;

    // Symmetrizability sanity: A_ij d_j = A_ji d_i.
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (Rational(rd.cartan_[i][j]) * rd.d_[j] != Rational(rd.cartan_[j][i]) * rd.d_[i])
                throw IdentityFailure("Cartan table is not symmetrizable");

    rd.construct();

    // The tabulated highest root must agree with the enumerated one.
    const Root& theta = rd.pos_roots_[rd.theta_index_];
    if (theta.alpha_coords != fd.marks) throw IdentityFailure("highest root disagrees with marks table");
    return rd;
}

RootDatum RootDatum::build(const std::string& type) {
    if (type.size() < 2) throw DomainError("bad type string '" + type + "'");
    char f = type[0];
    if (f < 'A' || f > 'G') throw DomainError("bad family '" + type + "'");
    int rank = 0;
    for (size_t i = 1; i < type.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(type[i]))) throw DomainError("bad rank in '" + type + "'");
        rank = rank * 10 + (type[i] - '0');
    }
    return build(static_cast<Family>(f), rank);
}

std::string RootDatum::type_string() const {
    return std::string(1, static_cast<char>(family_)) + std::to_string(n_);
}

void RootDatum::construct() {
    int n = n_;
    // Gram matrix of simple roots, then of the dual base b_i.
    std::vector<RatVec> galpha(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) galpha[i][j] = Rational(cartan_[i][j]) * d_[j];
    gram_ = rat_inverse(galpha);

    lattice_index_ = to_long(rat_det(galpha) /* = det(C) * prod d */ / [&] {
        Rational p = 1;
        for (int i = 0; i < n; ++i) p *= d_[i];
        return p;
    }());

    // Simple roots and coroots in b-coordinates.
    alpha_b_.resize(n);
    coroot_b_.resize(n);
    for (int i = 0; i < n; ++i) {
        RatVec a(n);
        Weight co = Weight::zero(n);
        for (int j = 0; j < n; ++j) {
            a[j] = Rational(cartan_[j][i]) * d_[i];  // (alpha_i, alpha_j)
            co.k[j] = cartan_[j][i];
        }
        alpha_b_[i] = a;
        coroot_b_[i] = co;
    }

    // Reflection matrices s_i : z -> z - (z, alpha_i) alpha_i^vee.
    refl_.resize(n);
    for (int i = 0; i < n; ++i) {
        FiniteWeyl s = FiniteWeyl::identity(n);
        for (int r = 0; r < n; ++r) s.at(r, i) -= cartan_[r][i];
        refl_[i] = s;
    }

    // Enumerate all roots by closure under simple reflections in
    // simple-root coordinates.
    std::set<std::vector<long>> seen;
    std::deque<std::vector<long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    auto reflect_alpha = [&](std::vector<long> c, int i) {
        long pair = 0;
        for (int l = 0; l < n; ++l) pair += c[l] * cartan_[l][i];
        c[i] -= pair;
        return c;
    };
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            auto img = reflect_alpha(c, i);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }

    auto root_from_alpha = [&](const std::vector<long>& c) {
        Root r;
        r.alpha_coords = c;
        r.b_coords.assign(n, Rational(0));
        Rational norm = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) r.b_coords[j] += Rational(c[i]) * alpha_b_[i][j];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += Rational(c[i]) * Rational(c[j]) * galpha[i][j];
        r.nu = norm;
        r.positive = true;
        for (int i = n - 1; i >= 0; --i)
            if (c[i] != 0) {
                r.positive = c[i] > 0;
                break;
            }
        // Positivity for roots is all-coordinates-one-sign; use any nonzero.
        for (long v : c)
            if (v > 0) r.positive = true;
        for (long v : c)
            if (v < 0) r.positive = false;
        return r;
    };

    all_roots_.clear();
    pos_roots_.clear();
    long best_height = -1;
    for (const auto& c : seen) {
        Root r = root_from_alpha(c);
        all_roots_.push_back(r);
        if (r.positive) {
            long h = 0;
            for (long v : c) h += v;
            pos_roots_.push_back(r);
            if (h > best_height) {
                best_height = h;
                theta_index_ = pos_roots_.size() - 1;
            }
        }
    }
    for (size_t i = 0; i < all_roots_.size(); ++i) root_lookup_[all_roots_[i].b_coords] = i;
    if (pos_roots_[theta_index_].nu != 2) throw IdentityFailure("highest root is not long");

    // Length classes, long (nu = 2) first.
    std::set<Rational> cls;
    for (const auto& r : pos_roots_) cls.insert(r.nu);
    classes_.assign(cls.rbegin(), cls.rend());
    if (classes_.empty() || classes_[0] != 2) throw IdentityFailure("missing long class");
    if (classes_.size() > 2) throw IdentityFailure("more than two length classes");

    // rho_nu, r_nu.
    rho_nu_.assign(classes_.size(), RatVec(n, Rational(0)));
    r_nu_.assign(classes_.size(), Weight::zero(n));
    for (size_t ci = 0; ci < classes_.size(); ++ci) {
        for (int i = 0; i < n; ++i) {
            if (nu_[i] == classes_[ci]) {
                rho_nu_[ci][i] = classes_[ci] / 2;
                r_nu_[ci].k[i] = 1;
            }
        }
    }
    rho_.assign(n, Rational(0));
    for (const auto& rv : rho_nu_)
        for (int i = 0; i < n; ++i) rho_[i] += rv[i];
    // Cross-check rho_nu against the half-sum of positive roots of that class.
    for (size_t ci = 0; ci < classes_.size(); ++ci) {
        RatVec half(n, Rational(0));
        for (const auto& r : pos_roots_)
            if (r.nu == classes_[ci])
                for (int j = 0; j < n; ++j) half[j] += r.b_coords[j] / 2;
        if (half != rho_nu_[ci]) throw IdentityFailure("rho_nu mismatch against half-sum of positive roots");
    }

    // Affine Cartan data.
    const Root& theta = pos_roots_[theta_index_];
    affine_cartan_.assign(n + 1, std::vector<long>(n + 1, 0));
    affine_cartan_[0][0] = 2;
    for (int j = 1; j <= n; ++j) {
        // (alpha_0, alpha_j^vee) = -(theta, a_j),  (alpha_j, alpha_0^vee) = -(alpha_j, theta)
        Rational tj = pairing(RatVec(theta.b_coords), alpha_b_[j - 1]);
        Rational a0j = -tj * 2 / nu_[j - 1];
        Rational aj0 = -tj;  // theta^vee = theta
        if (!is_integer(a0j) || !is_integer(aj0)) throw IdentityFailure("non-integral affine Cartan entry");
        affine_cartan_[0][j] = to_long(a0j);
        affine_cartan_[j][0] = to_long(aj0);
        for (int i = 1; i <= n; ++i) affine_cartan_[i][j] = cartan_[i - 1][j - 1];
    }

    // Longest element by greedy descent from the regular dominant point.
    {
        Weight z(std::vector<long>(n, 1));
        FiniteWeyl u = FiniteWeyl::identity(n);
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < n; ++i) {
                if (z.k[i] > 0) {
                    z = refl_[i].apply(z);
                    u = refl_[i] * u;
                    moved = true;
                    break;
                }
            }
        }
        w0_ = u;
    }

    // Minuscule nodes: mark 1 in the highest root.
    ostar_.clear();
    for (int i = 0; i < n; ++i)
        if (theta.alpha_coords[i] == 1) ostar_.push_back(i + 1);

    pi_[0] = GroupElt::identity(n);
    for (int r : ostar_) {
        // omega_r = w0 w0^{(r)} with w0^{(r)} the longest element of the
        // stabilizer parabolic of b_r.
        Weight z = Weight::zero(n);
        for (int i = 0; i < n; ++i)
            if (i != r - 1) z.k[i] = 1;
        FiniteWeyl u = FiniteWeyl::identity(n);
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < n; ++i) {
                if (i == r - 1) continue;
                if (z.k[i] > 0) {
                    z = refl_[i].apply(z);
                    u = refl_[i] * u;
                    moved = true;
                    break;
                }
            }
        }
        FiniteWeyl om = w0_ * u;
        omega_[r] = om;
        Weight br = Weight::zero(n);
        br.k[r - 1] = 1;
        pi_[r] = GroupElt{br, om.inverse()};
    }

    // pi_r must send alpha_0 to alpha_r; locate r* with alpha_{r*} = pi_r^{-1}(alpha_0).
    RatVec neg_theta = theta.b_coords;
    for (auto& v : neg_theta) v = -v;
    AffineRoot alpha0{neg_theta, 1};
    for (int r : ostar_) {
        AffineRoot img = act_affine(pi_.at(r), alpha0);
        if (img.level != 0 || img.alpha != alpha_b_[r - 1])
            throw IdentityFailure("pi_r does not send alpha_0 to alpha_r");
        AffineRoot pre = act_affine(pi_.at(r).inverse(), alpha0);
        if (pre.level != 0) throw IdentityFailure("pi_r^{-1}(alpha_0) is not a finite simple root");
        int idx = -1;
        for (int i = 0; i < n; ++i)
            if (alpha_b_[i] == pre.alpha) idx = i + 1;
        if (idx < 0) throw IdentityFailure("pi_r^{-1}(alpha_0) is not simple");
        rstar_[r] = idx;
    }

    if (static_cast<long>(ostar_.size()) + 1 != lattice_index_)
        throw IdentityFailure("|O| does not match |B/A|");

    // Diagram constant m.
    if (family_ == Family::B) {
        m_ = 1;
    } else if (family_ == Family::C) {
        m_ = (n % 2 == 0) ? 1 : 2;
    } else if (family_ == Family::D && n % 2 == 0) {
        m_ = 2;
    } else {
        m_ = static_cast<int>(lattice_index_);
    }
}

Rational RootDatum::pairing(const RatVec& u, const RatVec& v) const {
    if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
        throw DomainError("pairing: dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < n_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n_; ++j) s += u[i] * gram_[i][j] * v[j];
    }
    return s;
}

Rational RootDatum::pairing(const Weight& u, const Weight& v) const { return pairing(u.to_rat(), v.to_rat()); }

Rational RootDatum::pairing(const Weight& u, const RatVec& v) const { return pairing(u.to_rat(), v); }

Weight RootDatum::theta_weight() const {
    const Root& th = pos_roots_[theta_index_];
    Weight w = Weight::zero(n_);
    for (int j = 0; j < n_; ++j) w.k[j] = to_long(th.b_coords[j]);
    return w;
}

Weight RootDatum::theta_covector() const { return theta_weight(); }

int RootDatum::class_index(const Rational& nu) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == nu) return static_cast<int>(i);
    throw DomainError("unknown length class " + nu.get_str());
}

int RootDatum::braid_order(int i, int j) const {
    long prod = affine_cartan_[i][j] * affine_cartan_[j][i];
    switch (prod) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

Rational RootDatum::nu_node(int j) const {
    if (j == 0) return Rational(2);
    return nu_[j - 1];
}

const GroupElt& RootDatum::pi(int r) const {
    auto it = pi_.find(r);
    if (it == pi_.end()) throw DomainError("index " + std::to_string(r) + " not in O");
    return it->second;
}

const FiniteWeyl& RootDatum::omega(int r) const {
    auto it = omega_.find(r);
    if (it == omega_.end()) throw DomainError("index " + std::to_string(r) + " not in O*");
    return it->second;
}

int RootDatum::rstar(int r) const {
    auto it = rstar_.find(r);
    if (it == rstar_.end()) throw DomainError("index " + std::to_string(r) + " not in O*");
    return it->second;
}

Weight RootDatum::reflect(int i, const Weight& z) const { return refl_[i].apply(z); }

RatVec RootDatum::reflect(int i, const RatVec& z) const { return refl_[i].apply(z); }

FiniteWeyl RootDatum::reflection_by_root(const Root& r) const {
    // z -> z - (z, alpha) alpha^vee ; (b_j, alpha) is the j-th simple-root
    // coordinate of alpha.
    FiniteWeyl s = FiniteWeyl::identity(n_);
    RatVec cov(n_);
    for (int j = 0; j < n_; ++j) {
        cov[j] = r.b_coords[j] * 2 / r.nu;
        if (!is_integer(cov[j])) throw IdentityFailure("coroot is not integral");
    }
    for (int col = 0; col < n_; ++col)
        for (int row = 0; row < n_; ++row) s.at(row, col) -= r.alpha_coords[col] * to_long(cov[row]);
    return s;
}

GroupElt RootDatum::affine_reflection(int j) const {
    if (j > 0) return GroupElt{Weight::zero(n_), refl_[j - 1]};
    // s_0 = (theta^vee)' s_theta
    return GroupElt{theta_covector(), reflection_by_root(pos_roots_[theta_index_])};
}

AffineRoot RootDatum::act_affine(const GroupElt& g, const AffineRoot& a) const {
    RatVec img = g.w.apply(a.alpha);
    Rational lvl = Rational(a.level) - pairing(img, g.t.to_rat());
    if (!is_integer(lvl)) throw DomainError("non-integral affine level");
    return AffineRoot{img, to_long(lvl)};
}

bool RootDatum::affine_positive(const AffineRoot& a) const {
    if (a.level != 0) return a.level > 0;
    return root_info(a.alpha).positive;
}

bool RootDatum::is_root(const RatVec& v) const { return root_lookup_.count(v) > 0; }

const Root& RootDatum::root_info(const RatVec& v) const {
    auto it = root_lookup_.find(v);
    if (it == root_lookup_.end()) throw DomainError("vector is not a root");
    return all_roots_[it->second];
}

bool RootDatum::in_coroot_lattice(const Weight& b) const {
    std::vector<RatVec> M(n_, RatVec(n_));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) M[j][i] = Rational(cartan_[j][i]);
    auto x = rat_solve(M, b.to_rat());
    if (!x) return false;
    for (const auto& v : *x)
        if (!is_integer(v)) return false;
    return true;
}

bool RootDatum::in_positive_coroot_cone(const Weight& b) const {
    std::vector<RatVec> M(n_, RatVec(n_));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) M[j][i] = Rational(cartan_[j][i]);
    auto x = rat_solve(M, b.to_rat());
    if (!x) return false;
    for (const auto& v : *x)
        if (!is_integer(v) || v < 0) return false;
    return true;
}

std::vector<RatVec> RootDatum::orbit(const RatVec& v) const {
    std::set<RatVec> seen{v};
    std::deque<RatVec> queue{v};
    while (!queue.empty()) {
        RatVec cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < n_; ++i) {
            RatVec img = reflect(i, cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return std::vector<RatVec>(seen.begin(), seen.end());
}

std::vector<Weight> RootDatum::orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < n_; ++i) {
            Weight img = reflect(i, cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

long RootDatum::orbit_size(const Weight& w) const { return static_cast<long>(orbit(w).size()); }

}  // namespace daha
