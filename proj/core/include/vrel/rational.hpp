#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace vrel {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Always "num/den", including integers ("1/1"), so CSV columns parse uniformly.
inline std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace vrel
