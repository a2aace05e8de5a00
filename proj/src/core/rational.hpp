#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fillprobe {

using Rational = mpq_class;

// Always "num/den", including integers ("3/1"), so machine-readable output
// never mixes two spellings of the same value.
std::string to_fraction_string(const Rational& q);

// Accepts "p/q" or a bare integer "p". Throws Error(kInvalidArgument).
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

mpz_class floor_of(const Rational& q);
mpz_class ceil_of(const Rational& q);

}  // namespace fillprobe
