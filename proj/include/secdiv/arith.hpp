#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace secdiv {

using Integer = mpz_class;
using Rational = mpq_class;

/// k! for k >= 0; throws std::domain_error on negative input.
Integer factorial(long k);

/// 1/k! with the convention 1/k! = 0 for k < 0.
Rational inv_factorial(long k);

/// C(n,k); 0 when k < 0 or k > n.
Integer binomial(long n, long k);

// num/den reduced to lowest terms with positive denominator.
// Throws std::domain_error when den == 0.
Rational make_rational(Integer num, Integer den);

bool is_integer(const Rational& q);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& q);

// Ceiling of the factorial memo table (default 512); larger arguments
// are computed directly without caching.
void set_factorial_memo_bound(std::size_t bound);

}  // namespace secdiv
