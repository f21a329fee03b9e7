#include "vqs/field.hpp"

#include <algorithm>
#include <cstddef>

namespace vqs {

namespace {

constexpr uint64_t kMaxFieldOrder = 1u << 16;  // refusal bound, not a tuning knob
constexpr uint64_t kMulTableLimit = 256;       // q*q table entries below this
constexpr uint64_t kSqrtScanLimit = 4096;      // exhaustive sqrt below, Tonelli-Shanks above

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // coefficients over GF(p), constant first

// strip leading zeros
void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a mod b over GF(p); b monic
Poly poly_rem(Poly a, const Poly& b, uint64_t p) {
  normalize(a);
  while (a.size() >= b.size()) {
    unsigned lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t t = static_cast<uint64_t>(lead) * b[i] % p;
      a[shift + i] = static_cast<unsigned>((a[shift + i] + p - t) % p);
    }
    normalize(a);
  }
  return a;
}

// monic irreducibility over GF(p) by trial division against all monic
// polynomials of degree <= deg/2
bool poly_irreducible(const Poly& f, uint64_t p) {
  size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (size_t k = 1; 2 * k <= deg; ++k) {
    // odometer over the p^k non-leading coefficients
    Poly g(k + 1, 0);
    g[k] = 1;
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t v = idx;
      for (size_t i = 0; i < k; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(uint64_t p, unsigned d) {
  // smallest monic irreducible of degree d in index order of the
  // non-leading coefficients
  Poly f(d + 1, 0);
  f[d] = 1;
  uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    if (poly_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for d >= 1
}

}  // namespace

FieldPtr Field::make(uint64_t p, unsigned d,
                     std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p))
    throw CompositeCharacteristic("characteristic " + std::to_string(p) +
                                  " is not prime");
  if (d < 1) throw Error("extension degree must be >= 1");

  uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw FieldTooLarge("field order exceeds the supported bound " +
                          std::to_string(kMaxFieldOrder));
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->d_ = d;
  f->q_ = q;

  if (modulus) {
    Poly m = *modulus;
    if (m.size() != d + 1 || m[d] != 1)
      throw ReducibleModulus("modulus must be monic of degree exactly " +
                             std::to_string(d));
    for (unsigned c : m)
      if (c >= p) throw ReducibleModulus("modulus coefficient out of range");
    if (!poly_irreducible(m, p))
      throw ReducibleModulus("supplied modulus is reducible over GF(" +
                             std::to_string(p) + ")");
    f->modulus_ = m;
  } else {
    f->modulus_ = default_modulus(p, d);
  }

  if (q <= kMulTableLimit && d > 1) {
    f->mul_tab_.resize(q * q);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b <= a; ++b) {
        uint32_t r = f->mul_poly(a, b);
        f->mul_tab_[a * q + b] = r;
        f->mul_tab_[b * q + a] = r;
      }
  }
  return f;
}

std::vector<unsigned> Field::coeffs_of(uint32_t a) const {
  std::vector<unsigned> c(d_);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = static_cast<unsigned>(a % p_);
    a = static_cast<uint32_t>(a / p_);
  }
  return c;
}

uint32_t Field::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() != d_) throw Error("coefficient list has wrong length");
  uint64_t idx = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw Error("coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return static_cast<uint32_t>(idx);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (d_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % p_);
  uint32_t r = 0;
  uint64_t mult = 1;
  for (unsigned i = 0; i < d_; ++i) {
    uint64_t ca = a % p_, cb = b % p_;
    a = static_cast<uint32_t>(a / p_);
    b = static_cast<uint32_t>(b / p_);
    r += static_cast<uint32_t>((ca + cb) % p_ * mult);
    mult *= p_;
  }
  return r;
}

uint32_t Field::neg(uint32_t a) const {
  if (d_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
  uint32_t r = 0;
  uint64_t mult = 1;
  for (unsigned i = 0; i < d_; ++i) {
    uint64_t c = a % p_;
    a = static_cast<uint32_t>(a / p_);
    r += static_cast<uint32_t>((c == 0 ? 0 : p_ - c) * mult);
    mult *= p_;
  }
  return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
  std::vector<unsigned> ca = coeffs_of(a), cb = coeffs_of(b);
  Poly prod(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j)
      prod[i + j] = static_cast<unsigned>(
          (prod[i + j] + static_cast<uint64_t>(ca[i]) * cb[j]) % p_);
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(d_, 0);
  return from_coeffs(r);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (d_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  if (!mul_tab_.empty()) return mul_tab_[static_cast<size_t>(a) * q_ + b];
  return mul_poly(a, b);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return pow(a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

bool Field::is_square(uint32_t a) const {
  if (p_ == 2) return true;  // Frobenius is bijective on a perfect field
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

uint32_t Field::sqrt(uint32_t a) const {
  if (p_ == 2) return pow(a, q_ / 2);
  if (!is_square(a)) throw NotASquare("element has no square root");
  if (a == 0) return 0;
  if (q_ <= kSqrtScanLimit) {
    for (uint32_t x = 1; x < q_; ++x)
      if (mul(x, x) == a) return x;  // ascending scan: smaller root first
    throw NotASquare("element has no square root");
  }
  // Tonelli-Shanks, generic over GF(q) with q odd
  uint64_t s = q_ - 1;
  unsigned t = 0;
  while ((s & 1) == 0) {
    s >>= 1;
    ++t;
  }
  uint32_t z = 0;
  for (uint32_t c = 1; c < q_; ++c)
    if (!is_square(c)) {
      z = c;
      break;
    }
  uint32_t m_exp = t;
  uint32_t c = pow(z, s);
  uint32_t r = pow(a, (s + 1) / 2);
  uint32_t u = pow(a, s);
  while (u != 1) {
    unsigned i = 0;
    uint32_t v = u;
    while (v != 1) {
      v = mul(v, v);
      ++i;
    }
    uint32_t b = c;
    for (unsigned j = 0; j + i + 1 < m_exp; ++j) b = mul(b, b);
    m_exp = i;
    c = mul(b, b);
    u = mul(u, c);
    r = mul(r, b);
  }
  return std::min(r, neg(r));
}

uint32_t Field::canonical_e() const {
  if (canonical_e_ >= 0) return static_cast<uint32_t>(canonical_e_);
  uint32_t e = 0;
  if (p_ != 2) {
    for (uint32_t c = 1; c < q_; ++c)
      if (!is_square(c)) {
        e = c;
        break;
      }
  } else {
    // smallest e for which x^2 + x + e has no root
    for (uint32_t cand = 0; cand < q_; ++cand) {
      bool has_root = false;
      for (uint32_t x = 0; x < q_ && !has_root; ++x)
        if (add(add(mul(x, x), x), cand) == 0) has_root = true;
      if (!has_root) {
        e = cand;
        break;
      }
    }
  }
  canonical_e_ = e;
  return e;
}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same_as(b)) throw MixedFields("operands belong to distinct fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.f_, *b.f_);
  return {a.f_, a.f_->add(a.idx_, b.idx_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.f_, *b.f_);
  return {a.f_, a.f_->sub(a.idx_, b.idx_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.f_, *b.f_);
  return {a.f_, a.f_->mul(a.idx_, b.idx_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.f_, *b.f_);
  if (b.idx_ == 0) throw DivisionByZero("division by zero");
  return {a.f_, a.f_->div(a.idx_, b.idx_)};
}

bool is_square(const FieldElement& a) { return a.field()->is_square(a.index()); }

FieldElement sqrt(const FieldElement& a) {
  return {a.field(), a.field()->sqrt(a.index())};
}

FieldElement find_canonical_e(const FieldPtr& f) {
  return {f, f->canonical_e()};
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& f) {
  std::vector<FieldElement> out;
  out.reserve(f->q());
  for (uint32_t i = 0; i < f->q(); ++i) out.emplace_back(f, i);
  return out;
}

}  // namespace vqs
