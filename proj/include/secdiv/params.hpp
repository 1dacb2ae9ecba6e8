#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "secdiv/arith.hpp"

namespace secdiv {

/// Vanishing orders a_0 < a_1 < ... < a_r of a linear series at a point.
struct VanishingSequence {
  std::vector<long> entries;

  bool strictly_increasing() const;
  // sum of (a_i - i)
  long shift_sum() const;
  std::string str() const;  // "(0,1,3)"

  friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
};

/// Validated secant-divisor parameters. s and a are derived:
/// s = g - d + r and a = (0,...,t-1, n,...,n+r-t).
struct SecantParams {
  long g = 0;
  long r = 0;
  long d = 0;
  long t = 0;
  long n = 0;
  long s = 0;
  VanishingSequence a;

  std::string str() const;  // "(g=6, r=2, d=6, t=2, n=3)"

  friend bool operator==(const SecantParams&, const SecantParams&) = default;
};

/// Brill-Noether number g - (r+1)(g-d+r).
long rho(long g, long r, long d);

/// Pointed Brill-Noether number rho(g,r,d) - sum(a_i - i).
/// Throws on length mismatch between a and r+1.
long rho_pointed(long g, long r, long d, const VanishingSequence& a);

/// The staircase sequence (0,...,t-1, n,...,n+r-t).
VanishingSequence staircase_sequence(long r, long t, long n);

/// Checks ranges, the divisorial codimension condition
/// rho(g,r,d) = (n-t)(r+1-t) - 1, and s >= 1; derives s and a.
SecantParams validate(long g, long r, long d, long t, long n);

/// The unique d with rho(g,r,d) = (n-t)(r+1-t) - 1, when integral.
std::optional<long> solve_degree(long g, long r, long t, long n);

enum class NonemptyCondition { i, ii, iii, iv };

std::string nonempty_label(NonemptyCondition c);

/// The subset of the four nonemptiness conditions satisfied by p:
///   (i)   s = 1 and n >= (n-t)(r+1-t)
///   (ii)  s >= 1, n >= (n-t)(r+1-t) + r - t, and d >= 2n - 1
///   (iii) s >= 1 and n <= (n-t)(r+1-t)
///   (iv)  s >= 1 and t = r
std::set<NonemptyCondition> nonempty_conditions(const SecantParams& p);

struct EnumerationLimits {
  long r_max = 20;
  std::optional<long> d_max;  // defaults to 4g at the call site
};

/// Every (r,t,d) with r <= r_max, d <= d_max that validates for (g,n) and
/// satisfies at least one nonemptiness condition, sorted by (r,t,d).
std::vector<SecantParams> enumerate_params(long g, long n,
                                           const EnumerationLimits& limits = {});

struct ResidualTuple {
  long g = 0;
  long r = 0;
  long d = 0;
  long t = 0;
  long n = 0;

  friend bool operator==(const ResidualTuple&, const ResidualTuple&) = default;
};

/// Serre residuation for t = r: (g, r, d, r, n) -> (g, g-d+n-1, 2g-2-d+n, n-r, n).
/// Throws unless p.t == p.r.
ResidualTuple residual_params(const SecantParams& p);

}  // namespace secdiv
