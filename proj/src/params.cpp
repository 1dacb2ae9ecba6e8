#include "secdiv/params.hpp"

#include <algorithm>
#include <sstream>

#include "secdiv/errors.hpp"

namespace secdiv {

bool VanishingSequence::strictly_increasing() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] >= entries[i]) return false;
  return true;
}

long VanishingSequence::shift_sum() const {
  long sum = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    sum += entries[i] - static_cast<long>(i);
  return sum;
}

std::string VanishingSequence::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ",";
    out << entries[i];
  }
  out << ")";
  return out.str();
}

std::string SecantParams::str() const {
  std::ostringstream out;
  out << "(g=" << g << ", r=" << r << ", d=" << d << ", t=" << t << ", n=" << n << ")";
  return out.str();
}

long rho(long g, long r, long d) { return g - (r + 1) * (g - d + r); }

long rho_pointed(long g, long r, long d, const VanishingSequence& a) {
  if (static_cast<long>(a.entries.size()) != r + 1)
    throw ValidationError(ValidationKind::length_mismatch,
                          "vanishing sequence has " + std::to_string(a.entries.size()) +
                              " entries, expected " + std::to_string(r + 1));
  return rho(g, r, d) - a.shift_sum();
}

VanishingSequence staircase_sequence(long r, long t, long n) {
  VanishingSequence a;
  a.entries.reserve(static_cast<std::size_t>(r + 1));
  for (long i = 0; i < t; ++i) a.entries.push_back(i);
  for (long j = 0; j <= r - t; ++j) a.entries.push_back(n + j);
  return a;
}

SecantParams validate(long g, long r, long d, long t, long n) {
  if (g < 2) throw ValidationError(ValidationKind::range, "g must be >= 2");
  if (r < 1) throw ValidationError(ValidationKind::range, "r must be >= 1");
  if (d < 2) throw ValidationError(ValidationKind::range, "d must be >= 2");
  if (t < 1 || t > r)
    throw ValidationError(ValidationKind::range, "t must satisfy 1 <= t <= r");
  if (n < t + 1) throw ValidationError(ValidationKind::range, "n must be >= t + 1");

  const long target = (n - t) * (r + 1 - t) - 1;
  if (rho(g, r, d) != target)
    throw ValidationError(ValidationKind::codimension,
                          "rho(" + std::to_string(g) + "," + std::to_string(r) + "," +
                              std::to_string(d) + ") = " + std::to_string(rho(g, r, d)) +
                              " != " + std::to_string(target));

  const long s = g - d + r;
  if (s < 1)
    throw ValidationError(ValidationKind::nonpositive_s,
                          "s = g - d + r = " + std::to_string(s) + " must be >= 1");

  SecantParams p;
  p.g = g;
  p.r = r;
  p.d = d;
  p.t = t;
  p.n = n;
  p.s = s;
  p.a = staircase_sequence(r, t, n);
  return p;
}

std::optional<long> solve_degree(long g, long r, long t, long n) {
  // rho(g,r,d) is linear in d with slope r+1.
  const long target = (n - t) * (r + 1 - t) - 1;
  const long numer = target - g + (r + 1) * (g + r);
  if (numer % (r + 1) != 0) return std::nullopt;
  return numer / (r + 1);
}

std::string nonempty_label(NonemptyCondition c) {
  switch (c) {
    case NonemptyCondition::i: return "i";
    case NonemptyCondition::ii: return "ii";
    case NonemptyCondition::iii: return "iii";
    case NonemptyCondition::iv: return "iv";
  }
  return "?";
}

std::set<NonemptyCondition> nonempty_conditions(const SecantParams& p) {
  std::set<NonemptyCondition> out;
  const long box = (p.n - p.t) * (p.r + 1 - p.t);
  if (p.s == 1 && p.n >= box) out.insert(NonemptyCondition::i);
  if (p.s >= 1 && p.n >= box + p.r - p.t && p.d >= 2 * p.n - 1)
    out.insert(NonemptyCondition::ii);
  if (p.s >= 1 && p.n <= box) out.insert(NonemptyCondition::iii);
  if (p.s >= 1 && p.t == p.r) out.insert(NonemptyCondition::iv);
  return out;
}

std::vector<SecantParams> enumerate_params(long g, long n,
                                           const EnumerationLimits& limits) {
  std::vector<SecantParams> out;
  const long d_max = limits.d_max.value_or(4 * g);
  for (long r = 1; r <= limits.r_max; ++r) {
    for (long t = 1; t <= r && t + 1 <= n; ++t) {
      const auto d = solve_degree(g, r, t, n);
      if (!d || *d < 2 || *d > d_max) continue;
      SecantParams p;
      try {
        p = validate(g, r, *d, t, n);
      } catch (const ValidationError&) {
        continue;
      }
      if (nonempty_conditions(p).empty()) continue;
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const SecantParams& x, const SecantParams& y) {
    return std::tie(x.r, x.t, x.d) < std::tie(y.r, y.t, y.d);
  });
  return out;
}

ResidualTuple residual_params(const SecantParams& p) {
  if (p.t != p.r)
    throw ValidationError(ValidationKind::range, "residuation requires t = r");
  return ResidualTuple{p.g, p.g - p.d + p.n - 1, 2 * p.g - 2 - p.d + p.n, p.n - p.r, p.n};
}

}  // namespace secdiv
