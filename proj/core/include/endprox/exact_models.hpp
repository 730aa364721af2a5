#pragma once

#include <functional>
#include <map>
#include <vector>

#include "endprox/bigint.hpp"
#include "endprox/count_table.hpp"
#include "endprox/models.hpp"
#include "endprox/pfold.hpp"
#include "endprox/structure.hpp"

namespace endprox {

// Catalan and Motzkin numbers for sizes 0..nmax.
std::vector<BigInt> catalan_numbers(int nmax);
std::vector<BigInt> motzkin_numbers(int nmax);

// Dyck paths of semilength n by number of returns to zero, keyed {deg}.
ExactTable dyck_deg_counts(int n);

// Motzkin paths of length n keyed {deg, unp}. The table has O(n^2) entries;
// use for_each_motzkin_joint for large n.
ExactTable motzkin_joint_counts(int n);

// Streams every nonzero (deg, unp, count) of the Motzkin joint table in
// O(n) memory.
void for_each_motzkin_joint(
    int n, const std::function<void(int deg, int unp, const BigInt& count)>& fn);

// Exact first-helix / first-stem tables for {HEL, STM, StemHelices} under
// Dyck and Motzkin; kAbsent holds structures without pairs. A Dyck stem is
// always a single helix.
// Pfold HEL lives in pfold_hel_probs. Throws Error{UnsupportedCombination}.
ExactTable hel_stm_counts(Model model, int n, Stat stat);

// Every Dyck path of semilength n or Motzkin path of length n exactly once.
// Throws Error{SizeTooLarge} for n > 16, Error{UnsupportedCombination} for
// Pfold.
void enumerate_all(Model model, int n,
                   const std::function<void(const SecondaryStructure&)>& fn);
std::vector<SecondaryStructure> enumerate_all(Model model, int n);

// Exact law of a single statistic at size n, conditional on the size, as
// probabilities keyed by statistic value (kAbsent for undefined values).
// Supports DEG, UNP, CHN, LEN and the combinations of hel_stm_counts plus
// Pfold HEL. Throws Error{UnsupportedCombination}.
std::map<int, double> exact_marginal(Model model, int n, Stat stat,
                                     const PfoldParams& p = {});

// Exact counts of any count statistic, or of (DEG, UNP) for JOINT, over all
// structures of size n under a uniform model. Throws
// Error{UnsupportedCombination}.
ExactTable exact_counts(Model model, int n, Stat stat);

// The Pfold counterpart: probabilities conditional on length n.
RealTable pfold_table(int n, Stat stat, const PfoldParams& p = {});

}  // namespace endprox
