#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posetsym/arith.hpp"
#include "posetsym/comb.hpp"
#include "posetsym/poset.hpp"
#include "posetsym/polynomial.hpp"
#include "posetsym/qsym.hpp"
#include "posetsym/sym.hpp"

namespace posetsym {

// Set partition of the ground set into antichains.
using StablePartition = std::vector<Mask>;

// Rows of a composition-shaped diagram filled with poset elements; row i is
// a linear extension of the subposet it spans.
struct PFilling {
  Composition shape;
  std::vector<std::vector<int>> rows;
};

// A permutation of the vertex set (perm[v] is the image of v) with its
// cycle type.
struct CycleTypedPermutation {
  std::vector<int> perm;
  Partition type;
};

// L_P in the M basis: sum over ordered set partitions (B_1, ..., B_k) of the
// ground set of zeta(B_1) ... zeta(B_k) M_(|B_1|, ..., |B_k|).
QsymElement linear_function(const Poset& p);
// Number of listings w such that alpha is compatible with w, counted
// directly over all |P|! listings. Throws WeightError.
std::uint64_t sigma_count(const Poset& p, const Composition& alpha);
// F-expansion from signed subset sums of the pluckings Comp(P, w), computed
// without any M -> F conversion.
QsymElement f_coefficients_direct(const Poset& p);

// (1, number of incomparable pairs): the p-coefficients of (1,...,1) and
// (2,1,...,1). Throws EmptyError for the empty poset.
std::pair<Rational, Rational> p_coeff_special(const Poset& p);

std::vector<StablePartition> stable_partitions(const Poset& p);
// Sum over stable partitions of the product of (|block| - 1)!. Throws
// NotApplicable unless P is (2+2)-free.
Integer zeta_22free(const Poset& p);

std::vector<CycleTypedPermutation> clique_cycle_permutations(const Graph& g);
// Sum of p_type(sigma) over clique-cycle permutations of inc(P). Throws
// NotApplicable unless P is (2+2)-free.
SymElement p_expansion_22free(const Poset& p);

std::vector<PFilling> p_tableaux(const Poset& p, const Partition& lambda);
std::uint64_t count_p_tableaux(const Poset& p, const Partition& lambda);
// Tableau counts as s-coefficients. Throws NotApplicable unless P is
// (2+1)-free.
SymElement s_expansion_21free(const Poset& p);
// s-coefficients by the alternating sum of P-filling counts over the
// Jacobi-Trudi permutations; valid for every poset.
SymElement s_coefficients_generic(const Poset& p);

SymElement e_expansion(const Poset& p);
// (sum of e-coefficients over partitions of length k, the signed binomial
// sum over F-coefficients at I_i = {i+1, ..., n-1}).
std::pair<Rational, Rational> e_levelsum_check(const Poset& p, int k);

// ps^1(L_P).
Polynomial linear_polynomial(const Poset& p);

}  // namespace posetsym
