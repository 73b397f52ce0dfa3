#pragma once

// Arithmetic over GF(2)[x] and GF(2^A).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sg {

// Polynomial over GF(2). Bit k of the packed word vector is the coefficient
// of x^k. The word vector never carries zero words above the leading term,
// so the zero polynomial is the empty vector and has no degree.
class BinaryPolynomial {
 public:
  using Word = std::uint64_t;

  BinaryPolynomial() = default;

  static BinaryPolynomial one() { return from_mask(1); }
  static BinaryPolynomial monomial(std::size_t k);
  static BinaryPolynomial from_mask(std::uint64_t mask);
  static BinaryPolynomial from_words(std::vector<Word> words);
  // coeffs[k] != 0 sets x^k
  static BinaryPolynomial from_coefficients(std::span<const std::uint8_t> coeffs);

  // Accepts "x^5+x^4+x^3+x^2+1" (terms in any order, optional spaces, "0"
  // for the zero polynomial) or a hex mask "0x3D".
  static BinaryPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return words_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  bool coeff(std::size_t k) const noexcept;
  std::span<const Word> words() const noexcept { return words_; }

  // Low 64 coefficients; throws unless degree < 64.
  std::uint64_t mask() const;
  std::vector<std::uint8_t> coefficients() const;

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;
  friend std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b);

 private:
  explicit BinaryPolynomial(std::vector<Word> words);
  void trim() noexcept;

  std::vector<Word> words_;
};

BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

// Canonical text form, descending powers; "0" for the zero polynomial.
std::string to_string(const BinaryPolynomial& p);
std::string to_hex(const BinaryPolynomial& p);

BinaryPolynomial shift_left(const BinaryPolynomial& p, std::size_t k);
std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                     const BinaryPolynomial& m);
BinaryPolynomial mod(const BinaryPolynomial& a, const BinaryPolynomial& m);
BinaryPolynomial poly_mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                              const BinaryPolynomial& m);
BinaryPolynomial pow_mod(const BinaryPolynomial& a, std::uint64_t k, const BinaryPolynomial& m);
BinaryPolynomial pow(const BinaryPolynomial& a, std::uint64_t k);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);
// x^L p(1/x) for L = degree(p)
BinaryPolynomial reciprocal(const BinaryPolynomial& p);

// Largest degree accepted by the primitivity test (2^L - 1 is factored by
// trial division).
inline constexpr std::size_t kMaxPrimitiveDegree = 40;

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool poly_is_irreducible(const BinaryPolynomial& p);
bool poly_is_primitive(const BinaryPolynomial& p);

// (a * b) mod m without 64-bit overflow.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// v in [1, m-1] with u*v = 1 (mod m); the (1, m) case returns 1.
std::uint64_t mod_inverse(std::uint64_t u, std::uint64_t m);

struct CyclotomicCoset {
  std::uint64_t leader = 0;
  std::vector<std::uint64_t> exponents;  // sorted ascending

  std::size_t size() const noexcept { return exponents.size(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

CyclotomicCoset cyclotomic_coset(std::uint64_t n, unsigned field_degree);

// Element of GF(2)[x] / (modulus). The modulus is carried by value so that
// mixing elements of different fields is detected.
class FieldElement {
 public:
  FieldElement(BinaryPolynomial residue, BinaryPolynomial modulus);

  static FieldElement zero(const BinaryPolynomial& modulus);
  static FieldElement one(const BinaryPolynomial& modulus);
  // the class of x, a root of the modulus
  static FieldElement alpha(const BinaryPolynomial& modulus);

  const BinaryPolynomial& residue() const noexcept { return residue_; }
  const BinaryPolynomial& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_.is_zero(); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  BinaryPolynomial residue_;
  BinaryPolynomial modulus_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement field_pow(const FieldElement& e, std::uint64_t k);

// Horner evaluation of a GF(2) polynomial at a field element.
FieldElement evaluate(const BinaryPolynomial& p, const FieldElement& at);

// Minimal polynomial of alpha^n, alpha a root of the primitive polynomial
// pa, as the expanded product of (x + alpha^e) over the coset of n.
BinaryPolynomial coset_min_poly(std::uint64_t n, const BinaryPolynomial& pa);

struct LinearComplexity {
  std::size_t lc = 0;
  // characteristic polynomial x^L + c_{L-1} x^{L-1} + ... + c_0 of the
  // shortest recurrence s_{k+L} = sum c_i s_{k+i}
  BinaryPolynomial charpoly;
};

LinearComplexity berlekamp_massey(std::span<const std::uint8_t> bits);

}  // namespace sg
