#include "ascurve/field.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "dense_poly.hpp"

namespace ascurve {

namespace {

constexpr unsigned kMaxDegree = 63;
using Coords = std::array<Code, kMaxDegree + 1>;
using Wide = unsigned __int128;

void decompose(Code a, Code radix, unsigned count, Coords& out) {
  for (unsigned i = 0; i < count; ++i) {
    out[i] = a % radix;
    a /= radix;
  }
}

Code compose(const Code* coords, Code radix, unsigned count) {
  Code value = 0;
  for (unsigned i = count; i-- > 0;) value = value * radix + coords[i];
  return value;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldPtr FiniteField::prime(std::uint32_t p) {
  require(is_prime(p), "characteristic " + std::to_string(p) + " is not prime");
  return std::make_shared<const FiniteField>(Token{}, p, nullptr, std::vector<Code>{0, 1});
}

FieldPtr FiniteField::over_prime(std::uint32_t p, std::vector<Code> modulus) {
  return extension(prime(p), std::move(modulus));
}

FieldPtr FiniteField::extension(FieldPtr base, std::vector<Code> modulus) {
  require(base != nullptr, "extension needs a base field");
  require(modulus.size() >= 2, "modulus must have degree >= 1");
  require(modulus.back() == 1, "modulus must be monic");
  for (Code c : modulus)
    require(base->contains(c), "modulus coefficient " + std::to_string(c) +
                                   " is not an element of " + base->describe());
  require(is_irreducible(*base, modulus), "modulus is not irreducible over " +
                                              base->describe());
  const std::uint32_t p = base->characteristic();
  return std::make_shared<const FiniteField>(Token{}, p, std::move(base), std::move(modulus));
}

FiniteField::FiniteField(Token, std::uint32_t p, FieldPtr base, std::vector<Code> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  base_size_ = base_ ? base_->size() : p_;
  abs_degree_ = base_ ? base_->absolute_degree() * degree_ : 1;

  const BigInt total = base_ ? ipow(BigInt(base_size_), degree_) : BigInt(p_);
  require(total < (BigInt(1) << 63),
          "field size " + total.str() + " exceeds the 2^63 encoding range");
  size_ = base_ ? static_cast<Code>(total) : p_;

  binary_ = base_ && base_->is_prime_field() && p_ == 2;
  if (binary_) {
    for (unsigned i = 0; i <= degree_; ++i)
      if (modulus_[i] != 0) modulus_bits_ |= Code{1} << i;
  }

  // trace of each F_p-basis element e_k (code p^k)
  trace_digits_.resize(abs_degree_);
  Code basis = 1;
  for (unsigned k = 0; k < abs_degree_; ++k) {
    const Code t = is_prime_field() ? basis : trace_by_orbit(basis);
    trace_digits_[k] = static_cast<std::uint32_t>(t);
    if (binary_ && t != 0) trace_mask_ |= Code{1} << k;
    if (k + 1 < abs_degree_) basis *= p_;
  }
}

Code FiniteField::add(Code a, Code b) const {
  if (binary_) return a ^ b;
  if (!base_) return (a + b) % p_;
  Coords ca, cb;
  decompose(a, base_size_, degree_, ca);
  decompose(b, base_size_, degree_, cb);
  for (unsigned i = 0; i < degree_; ++i) ca[i] = base_->add(ca[i], cb[i]);
  return compose(ca.data(), base_size_, degree_);
}

Code FiniteField::neg(Code a) const {
  if (binary_) return a;
  if (!base_) return a == 0 ? 0 : p_ - a;
  Coords ca;
  decompose(a, base_size_, degree_, ca);
  for (unsigned i = 0; i < degree_; ++i) ca[i] = base_->neg(ca[i]);
  return compose(ca.data(), base_size_, degree_);
}

Code FiniteField::sub(Code a, Code b) const {
  if (binary_) return a ^ b;
  return add(a, neg(b));
}

Code FiniteField::mul(Code a, Code b) const {
  if (!base_) return (a * b) % p_;
  if (binary_) return mul_binary(a, b);
  return mul_generic(a, b);
}

Code FiniteField::mul_binary(Code a, Code b) const {
  Wide product = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    product ^= static_cast<Wide>(a) << i;
    b &= b - 1;
  }
  for (int i = 2 * static_cast<int>(degree_) - 2; i >= static_cast<int>(degree_); --i) {
    if ((product >> i) & 1U)
      product ^= static_cast<Wide>(modulus_bits_) << (i - static_cast<int>(degree_));
  }
  return static_cast<Code>(product);
}

Code FiniteField::mul_generic(Code a, Code b) const {
  const FiniteField& B = *base_;
  Coords ca, cb;
  decompose(a, base_size_, degree_, ca);
  decompose(b, base_size_, degree_, cb);
  std::array<Code, 2 * kMaxDegree + 1> prod{};
  for (unsigned i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
  }
  for (unsigned k = 2 * degree_ - 1; k-- > degree_;) {
    const Code c = prod[k];
    if (c == 0) continue;
    const unsigned shift = k - degree_;
    for (unsigned j = 0; j < degree_; ++j)
      prod[shift + j] = B.sub(prod[shift + j], B.mul(c, modulus_[j]));
  }
  return compose(prod.data(), base_size_, degree_);
}

Code FiniteField::inv(Code a) const {
  if (a == 0) fail(ErrorCode::division_by_zero, "inverse of zero in " + describe());
  if (!base_) {
    // extended Euclid over the integers
    std::int64_t r0 = p_, r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    const std::int64_t p = p_;
    return static_cast<Code>(((s0 % p) + p) % p);
  }
  auto coords = coordinates(a);
  detail::trim(coords);
  auto inverse = detail::dense_inverse_mod(*base_, std::move(coords), modulus_);
  inverse.resize(degree_, 0);
  return from_coordinates(inverse);
}

Code FiniteField::pow(Code a, std::uint64_t exponent) const {
  Code result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, a);
    exponent >>= 1U;
    if (exponent != 0) a = mul(a, a);
  }
  return result;
}

Code FiniteField::frobenius(Code a, std::uint64_t k) const {
  k %= abs_degree_;
  for (std::uint64_t i = 0; i < k; ++i) a = binary_ ? mul_binary(a, a) : pow(a, p_);
  return a;
}

std::uint32_t FiniteField::trace(Code a) const {
  if (binary_) return static_cast<std::uint32_t>(std::popcount(a & trace_mask_) & 1);
  std::uint64_t sum = 0;
  for (unsigned k = 0; k < abs_degree_ && a != 0; ++k) {
    sum += (a % p_) * trace_digits_[k];
    a /= p_;
  }
  return static_cast<std::uint32_t>(sum % p_);
}

Code FiniteField::trace_by_orbit(Code a) const {
  Code sum = 0;
  for (unsigned i = 0; i < abs_degree_; ++i) {
    sum = add(sum, a);
    a = binary_ ? mul_binary(a, a) : pow(a, p_);
  }
  return sum;
}

std::vector<Code> FiniteField::coordinates(Code a) const {
  std::vector<Code> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = a % base_size_;
    a /= base_size_;
  }
  return out;
}

Code FiniteField::from_coordinates(std::span<const Code> coords) const {
  if (coords.size() != degree_)
    fail(ErrorCode::usage, "expected " + std::to_string(degree_) + " coordinates");
  return compose(coords.data(), base_size_, degree_);
}

std::vector<std::uint32_t> FiniteField::digits(Code a) const {
  std::vector<std::uint32_t> out(abs_degree_);
  for (unsigned i = 0; i < abs_degree_; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return out;
}

bool FiniteField::same_field(const FiniteField& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || modulus_ != other.modulus_) return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return base_->same_field(*other.base_);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  if (!base_) {
    os << "F_" << p_;
  } else if (base_->is_prime_field()) {
    os << "F_" << p_ << "^" << degree_;
  } else {
    os << "F_(" << base_->describe().substr(2) << ")^" << degree_;
  }
  return os.str();
}

bool is_irreducible(const FiniteField& K, std::span<const Code> monic) {
  using namespace detail;
  Dense f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  const Dense x = dense_mod(K, Dense{0, 1}, f);

  // frob[k] = x^(Q^k) mod f
  std::vector<Dense> frob(d + 1);
  frob[0] = x;
  for (unsigned k = 1; k <= d; ++k) frob[k] = dense_powmod(K, frob[k - 1], K.size(), f);
  if (frob[d] != x) return false;
  for (unsigned l : prime_divisors(d)) {
    const Dense g = dense_gcd(K, dense_sub(K, frob[d / l], x), f);
    if (g != Dense{1}) return false;
  }
  return true;
}

std::vector<Code> smallest_irreducible(const FiniteField& K, unsigned degree) {
  require(degree >= 1, "irreducible polynomial degree must be >= 1");
  const Code Q = K.size();
  std::vector<Code> poly(degree + 1, 0);
  poly[degree] = 1;
  for (std::uint64_t counter = 0;; ++counter) {
    std::uint64_t c = counter;
    for (unsigned i = 0; i < degree; ++i) {
      poly[i] = c % Q;
      c /= Q;
    }
    if (c != 0) break;  // exhausted (cannot happen: irreducibles exist)
    if (is_irreducible(K, poly)) return poly;
  }
  fail(ErrorCode::precondition, "no irreducible polynomial found");
}

std::vector<Code> find_irreducible(std::uint32_t p, unsigned n) {
  return smallest_irreducible(*FiniteField::prime(p), n);
}

FieldPtr make_field(std::uint32_t p, unsigned n) {
  return FiniteField::over_prime(p, find_irreducible(p, n));
}

FieldPtr extend_field(const FieldPtr& base, unsigned degree) {
  require(base != nullptr, "extend_field needs a base field");
  return FiniteField::extension(base, smallest_irreducible(*base, degree));
}

FieldSpec spec_of(const FiniteField& field) {
  if (field.is_prime_field()) return {field.characteristic(), 1, {0, 1}};
  require(field.base()->is_prime_field(), "field spec form only describes fields over F_p");
  return {field.characteristic(), field.degree(),
          std::vector<Code>(field.modulus().begin(), field.modulus().end())};
}

FieldPtr make_field(const FieldSpec& spec) {
  require(spec.modulus.size() == spec.n + 1,
          "modulus must have n + 1 = " + std::to_string(spec.n + 1) + " coefficients");
  return FiniteField::over_prime(spec.p, spec.modulus);
}

// FieldElement

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) fail(ErrorCode::usage, "field element without an owning field");
  if (!field_->contains(code_))
    fail(ErrorCode::usage, "code " + std::to_string(code_) + " is not an element of " +
                               field_->describe());
}

const FiniteField& FieldElement::common(const FieldElement& rhs) const {
  if (!field_->same_field(*rhs.field_))
    fail(ErrorCode::usage, "operands belong to different fields (" + field_->describe() +
                               " vs " + rhs.field_->describe() + ")");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  return {field_, common(rhs).add(code_, rhs.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return {field_, common(rhs).sub(code_, rhs.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  return {field_, common(rhs).mul(code_, rhs.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return {field_, common(rhs).div(code_, rhs.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return {field_, field_->pow(code_, exponent)};
}
FieldElement FieldElement::frobenius(std::uint64_t k) const {
  return {field_, field_->frobenius(code_, k)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
  return code_ == rhs.code_ && field_->same_field(*rhs.field_);
}

}  // namespace ascurve
