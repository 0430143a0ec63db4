#ifndef NCALG_IDENTITIES_HPP
#define NCALG_IDENTITIES_HPP

#include "ncalg/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ncalg {

/// Coordinates num/den with num in [-max_num, max_num], den in [1, max_den].
Element random_rational_element(const Algebra& algebra, std::mt19937_64& rng, long max_num = 5, long max_den = 4);

struct IdentityCheck {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/*
 * Seeded identity sweep over random rational elements:
 *   expand_square / expand_cube / expand_prod against products of linear factors,
 *   b^2 - a^2 split (both orientations), Viete templates (monic, vanish at
 *   both roots, all placements), the question polynomial vanishing at a,
 *   evaluation multiplicativity at central points, and the fixed
 *   non-multiplicativity witness p = jx - xj - 1, q = x - i, x0 = j (H only).
 * Requires an algebra with unit.
 */
IdentityReport run_identity_suite(const Algebra& algebra, std::size_t samples, std::uint64_t seed);

} // namespace ncalg

#endif
