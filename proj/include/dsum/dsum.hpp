#pragma once

// Umbrella header: exact Dedekind sums, multiplier-permutation inversion
// counts, Jacobi symbols, continued-fraction statistics, and exhaustive
// verifiers for the congruence identities tying them together.

#include "dsum/continued_fraction.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/int128.hpp"
#include "dsum/numtheory.hpp"
#include "dsum/permutation.hpp"
#include "dsum/rational.hpp"
#include "dsum/render.hpp"
#include "dsum/scan.hpp"
#include "dsum/theorems.hpp"
#include "dsum/verify.hpp"

