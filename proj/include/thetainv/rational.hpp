#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace thetainv {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/* canonical "num/den" with positive reduced denominator, always including "/den" */
std::string rational_to_string(const Rational& q);

/* accepts "a" or "a/b"; throws std::invalid_argument on malformed input or b == 0 */
Rational rational_from_string(const std::string& s);

inline int rational_cmp(const Rational& a, const Rational& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace thetainv
