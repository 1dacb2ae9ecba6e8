#include "secdiv/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace secdiv {

namespace {

std::mutex memo_mutex;
std::vector<Integer>& memo_table() {
  static std::vector<Integer> table{Integer(1)};
  return table;
}
std::size_t memo_bound = 512;

}  // namespace

void set_factorial_memo_bound(std::size_t bound) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo_bound = bound;
}

Integer factorial(long k) {
  if (k < 0) throw std::domain_error("factorial: negative argument");
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& table = memo_table();
    if (static_cast<std::size_t>(k) <= memo_bound) {
      while (table.size() <= static_cast<std::size_t>(k))
        table.push_back(table.back() * static_cast<long>(table.size()));
      return table[static_cast<std::size_t>(k)];
    }
  }
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Rational inv_factorial(long k) {
  if (k < 0) return Rational(0);
  return make_rational(Integer(1), factorial(k));
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  // 0 <= k <= n here, so n >= 0 and the factorial quotient is exact.
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string rational_str(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace secdiv
