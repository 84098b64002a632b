#include "circode/arith.hpp"

#include <algorithm>

#include "circode/errors.hpp"

namespace circode {

Elem gcd(Elem a, Elem b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Elem t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<Elem> divisors(Elem n) {
  if (n < 1) fail("invalid-input", "divisors of nonpositive integer");
  std::vector<Elem> low, high;
  for (Elem d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(Elem p) {
  if (p < 2) return false;
  for (Elem d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Elem ipow(Elem p, int e) {
  if (e < 0) fail("invalid-input", "negative exponent");
  Elem r = 1;
  for (int i = 0; i < e; ++i) {
    if (p != 0 && r > (INT64_MAX / p)) fail("invalid-input", "integer overflow in power");
    r *= p;
  }
  return r;
}

int log_exact(Elem x, Elem p) {
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return x == 1 ? e : -1;
}

std::vector<std::pair<Elem, int>> factorize(Elem n) {
  std::vector<std::pair<Elem, int>> f;
  for (Elem d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.emplace_back(d, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

int prime_nu(Elem n) { return static_cast<int>(factorize(n).size()); }

std::vector<Elem> square_free_divisors_coprime(Elem n, Elem p) {
  std::vector<Elem> primes;
  for (const auto& [q, e] : factorize(n))
    if (q != p) primes.push_back(q);
  std::vector<Elem> out{1};
  for (Elem q : primes) {
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * q);
  }
  std::sort(out.begin(), out.end());
  out.erase(out.begin());  // drop the unit divisor
  return out;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is integral at every step; r stays below cap, so the
    // product fits 64 bits for any modulus this library accepts
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r >= cap) return cap;
  }
  return r;
}

}  // namespace circode
