#pragma once

// Arithmetic in GF(q), q = p^k <= 32.
//
// An element is identified by an index in [0, q). The base-p digits of the
// index are the coefficients of a polynomial over GF(p), constant term first,
// reduced modulo a fixed monic irreducible of degree k. The modulus is the
// lexicographically least monic irreducible when coefficient vectors are
// compared constant-term first, so every object derived from a field is
// reproducible bit for bit.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ryser/error.hpp"

namespace ryser {

struct FieldElement {
  int index = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

using Poly = std::vector<int>;  // coefficients mod p, constant term first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over GF(p).
inline Poly poly_mod(Poly a, const Poly& m, int p) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    poly_trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `code`.
inline Poly monic_from_code(int code, int deg, int p) {
  Poly m(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    m[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  m.back() = 1;
  return m;
}

inline int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; d < deg; ++d) {
    for (int code = 0; code < ipow(p, d); ++code) {
      if (poly_mod(m, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

// Lexicographic compare with the constant term as the most significant key.
inline bool low_first_less(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace detail

class FieldSpec {
 public:
  static constexpr int kMaxOrder = 32;

  /// Builds GF(q). Throws NotPrimePower for q < 2 or a non prime power and
  /// UnsupportedOrder for q > kMaxOrder.
  static FieldSpec create(int q) {
    if (q < 2) throw Error(ErrorCode::NotPrimePower, "field order " + std::to_string(q) + " is below 2");
    if (q > kMaxOrder)
      throw Error(ErrorCode::UnsupportedOrder,
                  "field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");

    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;
    if (k > 1) {
      const int codes = detail::ipow(p, k);
      for (int code = 0; code < codes; ++code) {
        auto m = detail::monic_from_code(code, k, p);
        if (!detail::is_irreducible(m, p)) continue;
        if (f.modulus_.empty() || detail::low_first_less(m, f.modulus_)) f.modulus_ = m;
      }
    }
    f.build_tables();
    return f;
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  /// Coefficients of the modulus, constant term first, leading 1 included;
  /// empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(int index) const { return {index}; }

  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i) out.push_back({i});
    return out;
  }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[at(a, b)]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[at(a, b)]}; }
  FieldElement neg(FieldElement a) const { return {neg_[static_cast<std::size_t>(a.index)]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement inv(FieldElement a) const {
    if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    return {inv_[static_cast<std::size_t>(a.index)]};
  }

  FieldElement pow(FieldElement a, int e) const {
    FieldElement r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Polynomial form, e.g. "x^2+2" (prime fields print the integer).
  std::string to_string(FieldElement a) const {
    if (k_ == 1) return std::to_string(a.index);
    std::string s;
    const auto c = digits(a.index);
    for (int i = k_ - 1; i >= 0; --i) {
      const int ci = c[static_cast<std::size_t>(i)];
      if (ci == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(ci);
      } else {
        if (ci != 1) s += std::to_string(ci);
        s += i == 1 ? "x" : "x^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  FieldSpec() = default;

  std::size_t at(FieldElement a, FieldElement b) const {
    return static_cast<std::size_t>(a.index) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b.index);
  }

  detail::Poly digits(int index) const {
    detail::Poly c(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      c[static_cast<std::size_t>(i)] = index % p_;
      index /= p_;
    }
    return c;
  }

  int from_digits(const detail::Poly& c) const {
    int index = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) index = index * p_ + c[static_cast<std::size_t>(i)];
    return index;
  }

  void build_tables() {
    const auto n = static_cast<std::size_t>(q_);
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    for (int a = 0; a < q_; ++a) {
      const auto da = digits(a);
      detail::Poly dn(static_cast<std::size_t>(k_));
      for (int i = 0; i < k_; ++i) dn[static_cast<std::size_t>(i)] = (p_ - da[static_cast<std::size_t>(i)]) % p_;
      neg_[static_cast<std::size_t>(a)] = from_digits(dn);
      for (int b = 0; b < q_; ++b) {
        const auto db = digits(b);
        detail::Poly sum(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i)
          sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
        detail::Poly prod(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) {
            auto& slot = prod[static_cast<std::size_t>(i + j)];
            slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
          }
        if (k_ > 1) prod = detail::poly_mod(prod, modulus_, p_);
        prod.resize(static_cast<std::size_t>(k_), 0);
        const auto idx = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
        add_[idx] = from_digits(sum);
        mul_[idx] = from_digits(prod);
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
  }

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

inline FieldSpec field_new(int q) { return FieldSpec::create(q); }

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace ryser
