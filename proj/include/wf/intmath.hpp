#pragma once
// Overflow-checked 64-bit integer helpers and exact rationals.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace wf {

using i64 = std::int64_t;
// Compare Rat only against Rat: mixed Rat/int == recurses forever under C++20
// rewritten comparison operators with this Boost version.
using Rat = boost::rational<i64>;
using Vec = std::vector<i64>;
using RVec = std::vector<Rat>;

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow") {}
};

// Thrown when an enumeration or group size exceeds its configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for malformed user input (unknown preset, bad rank, bad partition...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline i64 add_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline i64 sub_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline i64 mul_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 and x,y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    i64 q = a / b;
    i64 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

inline i64 factorial(int n) {
  i64 f = 1;
  for (int i = 2; i <= n; ++i) f = mul_ck(f, i);
  return f;
}

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r = mul_ck(r, b);
  return r;
}

inline std::string rat_str(const Rat& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

}  // namespace wf
