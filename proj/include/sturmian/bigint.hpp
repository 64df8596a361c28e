#pragma once

// Exact integer/rational layer.  Everything combinatorial in this library is
// computed over GMP integers; floating point only enters through logarithms
// of exact integers (see log_int), so huge denominators never overflow.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sturmian {

using Int = mpz_class;
using Rat = mpq_class;

// Natural log of a positive big integer, accurate to double precision
// regardless of magnitude.
double log_int(const Int& z);

// Natural log of a positive rational.
double log_rat(const Rat& r);

// max(1, round(c * q^e)) evaluated with enough MPFR precision that the
// rounding to the nearest integer is exact (ties round to even).
// Used both when synthesizing entry lists and when validating them.
Int round_scaled_pow(double c, const Int& q, double e);

// ceil(c * q^e), same precision contract as round_scaled_pow.
Int ceil_scaled_pow(double c, const Int& q, double e);

std::string to_decimal(const Int& z);
Int from_decimal(const std::string& s);

// splitmix64: cheap deterministic per-sample seed derivation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace sturmian
