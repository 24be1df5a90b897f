#include "daha/weyl.hpp"

#include <algorithm>

namespace daha {

std::string ReducedWord::str() const {
    std::string s = "pi_" + std::to_string(r);
    for (int j : letters) s += " . s_" + std::to_string(j);
    return s;
}

GroupElt translation(const Weight& b) { return GroupElt{b, FiniteWeyl::identity(static_cast<int>(b.size()))}; }

AffineRoot simple_affine_root(const RootDatum& rd, int j) {
    if (j > 0) return AffineRoot{rd.simple_root(j - 1), 0};
    RatVec neg = rd.highest_root().b_coords;
    for (auto& v : neg) v = -v;
    return AffineRoot{neg, 1};
}

std::vector<long> length_vector(const RootDatum& rd, const GroupElt& g) {
    // For each finite root alpha the positive affine roots [alpha, k] have
    // k >= 0 (alpha > 0) or k >= 1 (alpha < 0).  The image under g = t'w is
    // [w(alpha), k - (w(alpha), t)], negative when the shifted level drops
    // below zero, or hits zero with a negative finite part.
    std::vector<long> counts(rd.length_classes().size(), 0);
    const RatVec t = g.t.to_rat();
    for (const auto& root : rd.positive_roots()) {
        for (int sign = 0; sign < 2; ++sign) {
            RatVec alpha = root.b_coords;
            if (sign) for (auto& v : alpha) v = -v;
            long kmin = sign ? 1 : 0;
            RatVec img = g.w.apply(alpha);
            Rational cr = rd.pairing(img, t);
            if (!is_integer(cr)) throw DomainError("non-integral root/coweight pairing");
            long c = to_long(cr);
            long cnt = std::max(0L, c - kmin);
            if (c >= kmin && !rd.root_info(img).positive) cnt += 1;
            counts[rd.class_index(root.nu)] += cnt;
        }
    }
    return counts;
}

long length(const RootDatum& rd, const GroupElt& g) {
    long total = 0;
    for (long v : length_vector(rd, g)) total += v;
    return total;
}

ReducedWord reduced_word(const RootDatum& rd, const GroupElt& g) {
    ReducedWord word;
    GroupElt cur = g;
    long len = length(rd, cur);
    std::vector<int> peeled;
    while (len > 0) {
        bool found = false;
        for (int j = 0; j <= rd.rank(); ++j) {
            GroupElt next = cur * rd.affine_reflection(j);
            long next_len = length(rd, next);
            if (next_len < len) {
                peeled.push_back(j);
                cur = next;
                len = next_len;
                found = true;
                break;
            }
        }
        if (!found) throw IdentityFailure("no descent found for positive-length element");
    }
    // cur is length zero, hence lies in Pi.
    word.r = -1;
    if (cur.is_identity()) word.r = 0;
    for (int r : rd.minuscule_indices())
        if (cur == rd.pi(r)) word.r = r;
    if (word.r < 0) throw IdentityFailure("length-zero element not in Pi");
    word.letters.assign(peeled.rbegin(), peeled.rend());
    return word;
}

GroupElt compose_word(const RootDatum& rd, const ReducedWord& w) {
    GroupElt g = rd.pi(w.r);
    for (int j : w.letters) g = g * rd.affine_reflection(j);
    return g;
}

std::vector<AffineRoot> lambda_set(const RootDatum& rd, const GroupElt& g) {
    ReducedWord word = reduced_word(rd, g);
    std::vector<AffineRoot> out;
    GroupElt acc = GroupElt::identity(rd.rank());
    for (int idx = static_cast<int>(word.letters.size()) - 1; idx >= 0; --idx) {
        out.push_back(rd.act_affine(acc, simple_affine_root(rd, word.letters[idx])));
        acc = acc * rd.affine_reflection(word.letters[idx]);
    }
    return out;
}

std::vector<AffineRoot> negative_set_brute(const RootDatum& rd, const GroupElt& g, long level_bound) {
    std::vector<AffineRoot> out;
    for (const auto& root : rd.positive_roots()) {
        for (int sign = 0; sign < 2; ++sign) {
            RatVec alpha = root.b_coords;
            if (sign) for (auto& v : alpha) v = -v;
            for (long k = sign ? 1 : 0; k <= level_bound; ++k) {
                AffineRoot a{alpha, k};
                if (!rd.affine_positive(a)) continue;
                if (!rd.affine_positive(rd.act_affine(g, a))) out.push_back(a);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ParamScalar q_length(const RootDatum& rd, const GroupElt& g) {
    std::vector<long> lv = length_vector(rd, g);
    ParamMonomial m;
    for (size_t ci = 0; ci < lv.size(); ++ci) {
        if (lv[ci] == 0) continue;
        Param p = rd.param_of_class(static_cast<int>(ci));
        m.set(p, rat(lv[ci], 2));
    }
    return ParamScalar::monomial(m);
}

}  // namespace daha
