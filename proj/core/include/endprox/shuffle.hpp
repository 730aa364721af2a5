#pragma once

#include <string>
#include <string_view>

#include "endprox/rng.hpp"

namespace endprox {

// Uniformly random sequence with the same multiset of k-lets as s, drawn by
// the Euler-path method on the graph of (k-1)-mers. k = 1 is a uniform
// permutation. Throws Error{EmptySequence}, Error{KTooLarge} (k > length) and
// Error{InvalidArgument} (k = 0).
std::string klet_shuffle(std::string_view s, int k, Rng& rng);

// True iff a and b have equal multisets of length-k substrings.
bool validate_klets(std::string_view a, std::string_view b, int k);

}  // namespace endprox
