#ifndef HDIFF_SYMMETRY_HPP
#define HDIFF_SYMMETRY_HPP

#include "hdiff/weyl.hpp"

namespace hdiff {

enum class SymKind { S, SPrime, QCheck, QCheckWeyl };

// Generator images of the elementary transposition-type symmetry at index i
// (acting on sites i, i+1; 0-based), extended to ring homomorphisms.
Element apply_symmetry(SymKind kind, int i, const Element& e);
WeylElement apply_symmetry_weyl(int i, const WeylElement& e);

// The braid-operator action exists only for symmetric polynomial potentials.
bool symmetry_admissible(SymKind kind, const SigmaSpec& sigma);

// Artin / braid relations on generators, plus the homomorphism property
// (defining relations map to identities).
Report group_relations_check(Element::Ctx ctx, SymKind kind);
Report group_relations_check_weyl(int n);

// tau_N(L^j_i) = sum_a x^{ja} dbar_{ia}
Element tau_generator(Element::Ctx ctx, int upper_j, int lower_i);

// reflection equation for the L-matrix and the symmetric-group action on it
Report tau_and_reflection_check(Element::Ctx ctx);

}  // namespace hdiff

#endif
