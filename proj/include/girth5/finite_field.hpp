#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "girth5/errors.hpp"

namespace girth5 {

// GF(p^k) with full addition/multiplication tables. Elements are indexed
// 0..q-1; index encodes the coefficient vector of the residue polynomial
// in base p (so 0 and 1 are the field's 0 and 1, and p is the generator x
// for extension fields).
struct FiniteField {
  int q = 0;
  int p = 0;
  int k = 0;
  std::vector<int> modulus;  // ascending-degree coefficients, length k+1
  std::vector<int> add_tab;  // q*q
  std::vector<int> mul_tab;  // q*q

  int add(int a, int b) const { return add_tab[a * q + b]; }
  int mul(int a, int b) const { return mul_tab[a * q + b]; }

  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return -1;
  }

  int inv(int a) const {
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return -1;
  }
};

namespace detail {

// Fixed irreducible modulus per supported extension order.
inline const std::vector<int>* extension_modulus(int q) {
  static const std::array<std::pair<int, std::vector<int>>, 7> table = {{
      {4, {1, 1, 1}},        // x^2 + x + 1 over GF(2)
      {8, {1, 1, 0, 1}},     // x^3 + x + 1 over GF(2)
      {9, {1, 0, 1}},        // x^2 + 1 over GF(3)
      {16, {1, 1, 0, 0, 1}},  // x^4 + x + 1 over GF(2)
      {25, {2, 0, 1}},       // x^2 + 2 over GF(5)
      {27, {1, 2, 0, 1}},    // x^3 + 2x + 1 over GF(3)
      {32, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1 over GF(2)
  }};
  for (const auto& [order, mod] : table)
    if (order == q) return &mod;
  return nullptr;
}

inline bool factor_prime_power(int q, int& p, int& k) {
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      int m = q, e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (m != 1) return false;
      p = d;
      k = e;
      return true;
    }
  }
  p = q;  // q itself is prime
  k = 1;
  return true;
}

}  // namespace detail

inline constexpr int kMaxFieldOrder = 32;

inline FiniteField make_field(int q) {
  if (q < 2) throw NotPrimePower("field order must be at least 2");
  int p = 0, k = 0;
  if (!detail::factor_prime_power(q, p, k))
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder)
    throw UnsupportedOrder("field order " + std::to_string(q) +
                           " exceeds built-in modulus table");
  FiniteField f;
  f.q = q;
  f.p = p;
  f.k = k;
  if (k == 1) {
    f.modulus = {0, 1};  // x - 0 placeholder; arithmetic is plain mod p
    f.modulus[0] = 0;
  } else {
    const auto* mod = detail::extension_modulus(q);
    if (!mod)
      throw UnsupportedOrder("no modulus polynomial for order " +
                             std::to_string(q));
    f.modulus = *mod;
  }

  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  };

  f.add_tab.resize(q * q);
  f.mul_tab.resize(q * q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_tab[a * q + b] = index(sum);

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // reduce modulo the modulus polynomial (monic of degree k)
      for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
          prod[d - k + i] = ((prod[d - k + i] - c * f.modulus[i]) % p + p * p) % p;
      }
      prod.resize(k);
      f.mul_tab[a * q + b] = index(prod);
    }
  }
  return f;
}

}  // namespace girth5
