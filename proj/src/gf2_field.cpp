#include <string>
#include <vector>

#include "sg/error.hpp"
#include "sg/gf2.hpp"

namespace sg {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorKind::InvalidArgument, "field elements over different moduli");
  }
}

}  // namespace

FieldElement::FieldElement(BinaryPolynomial residue, BinaryPolynomial modulus)
    : residue_(std::move(residue)), modulus_(std::move(modulus)) {
  const auto dm = modulus_.degree();
  if (!dm || *dm < 1) throw Error(ErrorKind::InvalidArgument, "field modulus must have degree >= 1");
  residue_ = mod(residue_, modulus_);
}

FieldElement FieldElement::zero(const BinaryPolynomial& modulus) { return {BinaryPolynomial{}, modulus}; }

FieldElement FieldElement::one(const BinaryPolynomial& modulus) {
  return {BinaryPolynomial::one(), modulus};
}

FieldElement FieldElement::alpha(const BinaryPolynomial& modulus) {
  return {BinaryPolynomial::monomial(1), modulus};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.residue() + b.residue(), a.modulus()};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {poly_mul_mod(a.residue(), b.residue(), a.modulus()), a.modulus()};
}

FieldElement field_pow(const FieldElement& e, std::uint64_t k) {
  return {pow_mod(e.residue(), k, e.modulus()), e.modulus()};
}

FieldElement evaluate(const BinaryPolynomial& p, const FieldElement& at) {
  FieldElement acc = FieldElement::zero(at.modulus());
  const auto d = p.degree();
  if (!d) return acc;
  const FieldElement one = FieldElement::one(at.modulus());
  for (std::size_t k = *d + 1; k-- > 0;) {
    acc = acc * at;
    if (p.coeff(k)) acc = acc + one;
  }
  return acc;
}

BinaryPolynomial coset_min_poly(std::uint64_t n, const BinaryPolynomial& pa) {
  if (!poly_is_primitive(pa)) {
    throw Error(ErrorKind::InvalidArgument, to_string(pa) + " is not primitive");
  }
  const auto field_degree = static_cast<unsigned>(*pa.degree());
  const std::uint64_t order = (std::uint64_t{1} << field_degree) - 1;
  if (n < 1 || n >= order) {
    if (!(order == 1 && n == 1)) {
      throw Error(ErrorKind::InvalidArgument, "coset representative must lie in [1, 2^A - 2]");
    }
  }
  const CyclotomicCoset coset = cyclotomic_coset(order == 1 ? 0 : n, field_degree);
  const FieldElement alpha = FieldElement::alpha(pa);

  // coefficients of the running product, index k = coefficient of x^k
  std::vector<FieldElement> prod{FieldElement::one(pa)};
  for (std::uint64_t e : coset.exponents) {
    const FieldElement root = field_pow(alpha, e);
    std::vector<FieldElement> next(prod.size() + 1, FieldElement::zero(pa));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = next[k + 1] + prod[k];
      next[k] = next[k] + root * prod[k];
    }
    prod = std::move(next);
  }

  std::vector<std::uint8_t> coeffs(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    const auto& r = prod[k].residue();
    if (r.is_zero()) {
      coeffs[k] = 0;
    } else if (r == BinaryPolynomial::one()) {
      coeffs[k] = 1;
    } else {
      throw Error(ErrorKind::ConventionMismatch,
                  "coset product has a coefficient outside GF(2) at x^" + std::to_string(k));
    }
  }
  return BinaryPolynomial::from_coefficients(coeffs);
}

}  // namespace sg
