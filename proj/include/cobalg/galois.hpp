#pragma once

#include <vector>

#include "cobalg/poly.hpp"

namespace cobalg {

using Permutation = std::vector<int>;  // images, 0-based

Permutation perm_identity(int n);
Permutation perm_compose(const Permutation& a, const Permutation& b);  // a after b
Permutation perm_inverse(const Permutation& a);

/// A splitting field of a squarefree polynomial over Q or F_p, with the full
/// root list and the automorphism group as root permutations.
struct SplittingField {
    FieldPtr base;                 // Q or F_p
    FieldPtr field;                // base itself, or an extension of base
    Polynomial primitive_modulus;  // minimal polynomial of the generator over base;
                                   // degree 1 means the trivial extension
    std::vector<Scalar> roots;     // distinct, in `field`, lexicographic coefficient order
    std::vector<Permutation> automorphisms;  // permutations of root indices, identity first
};

// u must be squarefree (call squarefree_part first); base Q or F_p.
// Over Q the degree guard is deg u <= 6.
SplittingField splitting_field(const Polynomial& u);

// The automorphism group of a splitting field, acting on root indices.
// Computed at construction; this accessor re-checks the group axioms.
std::vector<Permutation> automorphism_group(const SplittingField& s);

// Apply the automorphism with the given index to a field element.
Scalar apply_automorphism(const SplittingField& s, int auto_index, const Scalar& x);

}  // namespace cobalg
