// Flagification: the minimal flag complex on the same ground set containing
// a given complex, i.e. the clique complex of its 1-skeleton.

#pragma once

#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

struct FlagificationResult {
    SimplicialComplex flag_complex;
    std::vector<Mask> added_faces;  // faces of K^f not in K, (size, lex) order
};

FlagificationResult flagify(const SimplicialComplex& K);

// True iff F is the minimal flag complex on [m] containing K, i.e. F equals
// flagify(K). Throws std::invalid_argument on a ground-set mismatch.
bool is_minimal_flag_extension(const SimplicialComplex& K, const SimplicialComplex& F);

}  // namespace polyprod
