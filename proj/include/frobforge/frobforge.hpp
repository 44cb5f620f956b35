#pragma once

#include "frobforge/arith/polynomial.hpp"
#include "frobforge/gb/ideal.hpp"
#include "frobforge/gb/regular_sequence.hpp"
#include "frobforge/mod/tor_ext.hpp"
#include "frobforge/inv/invariants.hpp"
#include "frobforge/frob/frobenius.hpp"
#include "frobforge/inv/random_complexes.hpp"
