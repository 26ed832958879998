#pragma once

#include <vector>

#include "nvs/hp.hpp"
#include "nvs/rational.hpp"
#include "nvs/words.hpp"

namespace nvs {

// M-truncated (star) multiple zeta value by iterated prefix sums,
// O(M * depth) ring operations; exact rationals.
Rational zeta_trunc(const ZWord& idx, long M, bool star);

// Same dynamic program in floating point.
HP zeta_trunc_hp(const ZWord& idx, long M, bool star);

// All truncations zeta^n(prefix) for n <= M of every prefix are computed in
// one pass; returns the full-word values zeta^n(idx) for the requested n's
// (ascending).  Used by asymptotic matching.
std::vector<HP> zeta_trunc_hp_at(const ZWord& idx, const std::vector<long>& ns,
                                 bool star);

}  // namespace nvs
