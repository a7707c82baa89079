#pragma once

// EL-labelling of NC(W) and of the delta-sequence lattice NC_(k)(W) u {1}.
// The natural edge labels are reflections; what is needed is a total order
// on T making every interval's unique rising chain lexicographically first.
// No fixed order is hard-coded: a valid order is found by search
// (rotation-seeded, falling back to lexicographic enumeration) and then
// verified exhaustively, so any order this module returns is a certificate.

#include <optional>

#include "coxcat/noncrossing.hpp"

namespace coxcat {

// does this total order on the reflections (order[r] = rank of reflection r)
// make the natural labelling of NC(W) an EL-labelling?
bool el_check_nc(const NCLattice& nc, const std::vector<int>& order);
// same for NC_(k)(W) u {1} with the lex-product labelling: covers of index i
// carry (i, rank), and the new top edges carry a label between the index-1
// and index-2 blocks
bool el_check_nck(const NCLattice& nc, const KDivisible& kd, const std::vector<int>& order);

// first order passing the NC check and the NC_(k) checks for every k in ks
std::optional<std::vector<int>> find_el_reflection_order(const NCLattice& nc,
                                                         const std::vector<int>& ks);

}  // namespace coxcat
