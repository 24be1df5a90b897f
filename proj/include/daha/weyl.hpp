#pragma once

#include <vector>

#include "daha/root_datum.hpp"

namespace daha {

// Reduced decomposition g = pi_r . s_{letters[0]} . s_{letters[1]} ...
struct ReducedWord {
    int r = 0;
    std::vector<int> letters;

    std::string str() const;
};

GroupElt translation(const Weight& b);

// Length per length class (indexed like RootDatum::length_classes), computed
// by counting positive affine roots sent negative.
std::vector<long> length_vector(const RootDatum& rd, const GroupElt& g);
long length(const RootDatum& rd, const GroupElt& g);

// Greedy descent with lowest-index tie breaking; the leftover length-zero
// element must lie in Pi.
ReducedWord reduced_word(const RootDatum& rd, const GroupElt& g);

GroupElt compose_word(const RootDatum& rd, const ReducedWord& w);

// lambda(g): the affine roots alpha_{j_1}, s_{j_1}(alpha_{j_2}), ... built
// from a reduced word; equals {a in R^a_+ : g(a) < 0} as a set.
std::vector<AffineRoot> lambda_set(const RootDatum& rd, const GroupElt& g);

// Brute-force oracle: positive affine roots with |level| <= level_bound sent
// negative by g.  Used by tests to validate length_vector/lambda_set.
std::vector<AffineRoot> negative_set_brute(const RootDatum& rd, const GroupElt& g, long level_bound);

AffineRoot simple_affine_root(const RootDatum& rd, int j);

// l_q(g) = prod_nu q_nu^{l_nu(g)/2} as a field element.
ParamScalar q_length(const RootDatum& rd, const GroupElt& g);

}  // namespace daha
