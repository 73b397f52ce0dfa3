#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>

#include "sg/bitkernels.hpp"
#include "sg/error.hpp"
#include "sg/gf2.hpp"

namespace sg {

namespace {

constexpr std::size_t kBits = 64;

std::size_t words_for_degree(std::size_t deg) { return deg / kBits + 1; }

const BinaryPolynomial& require_modulus(const BinaryPolynomial& m) {
  if (m.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero modulus");
  return m;
}

// Reduces r in place modulo m (m nonzero).
void reduce_in_place(std::vector<BinaryPolynomial::Word>& r, const BinaryPolynomial& m) {
  const std::size_t dm = *m.degree();
  const auto mw = m.words();
  for (std::size_t i = r.size() * kBits; i-- > dm;) {
    if ((r[i / kBits] >> (i % kBits)) & 1U) {
      kernels::xor_shifted_into(r, mw, i - dm);
    }
  }
}

}  // namespace

BinaryPolynomial::BinaryPolynomial(std::vector<Word> words) : words_(std::move(words)) {
  trim();
}

void BinaryPolynomial::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t k) {
  std::vector<Word> w(words_for_degree(k), 0);
  w[k / kBits] = Word{1} << (k % kBits);
  return BinaryPolynomial(std::move(w));
}

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
  return BinaryPolynomial(std::vector<Word>{mask});
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<Word> words) {
  return BinaryPolynomial(std::move(words));
}

BinaryPolynomial BinaryPolynomial::from_coefficients(std::span<const std::uint8_t> coeffs) {
  std::vector<Word> w((coeffs.size() + kBits - 1) / kBits, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) w[k / kBits] |= Word{1} << (k % kBits);
  }
  return BinaryPolynomial(std::move(w));
}

std::optional<std::size_t> BinaryPolynomial::degree() const noexcept {
  if (words_.empty()) return std::nullopt;
  return (words_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coeff(std::size_t k) const noexcept {
  const std::size_t w = k / kBits;
  return w < words_.size() && ((words_[w] >> (k % kBits)) & 1U);
}

std::uint64_t BinaryPolynomial::mask() const {
  if (words_.size() > 1) throw Error(ErrorKind::UnsupportedSize, "polynomial degree exceeds 63");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::uint8_t> BinaryPolynomial::coefficients() const {
  const auto d = degree();
  if (!d) return {};
  std::vector<std::uint8_t> c(*d + 1);
  for (std::size_t k = 0; k <= *d; ++k) c[k] = coeff(k) ? 1 : 0;
  return c;
}

std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty polynomial");

  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    std::vector<Word> w;
    std::size_t bit = 0;
    for (std::size_t i = s.size(); i-- > 2;) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
      unsigned v = 0;
      if (c >= '0' && c <= '9') {
        v = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v = static_cast<unsigned>(c - 'a' + 10);
      } else {
        throw Error(ErrorKind::InvalidArgument, "bad hex digit in polynomial '" + s + "'");
      }
      if (bit % kBits == 0) w.push_back(0);
      w.back() |= Word{v} << (bit % kBits);
      bit += 4;
    }
    return BinaryPolynomial(std::move(w));
  }

  if (s == "0") return BinaryPolynomial{};

  std::vector<std::size_t> exps;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t plus = std::min(s.find('+', pos), s.size());
    const std::string_view term(s.data() + pos, plus - pos);
    std::size_t e = 0;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
      const auto digits = term.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw Error(ErrorKind::InvalidArgument, "bad exponent in term '" + std::string(term) + "'");
      }
      if (e > (1U << 20)) throw Error(ErrorKind::UnsupportedSize, "exponent too large");
    } else {
      throw Error(ErrorKind::InvalidArgument, "bad polynomial term '" + std::string(term) + "'");
    }
    if (std::find(exps.begin(), exps.end(), e) != exps.end()) {
      throw Error(ErrorKind::InvalidArgument, "repeated term in polynomial '" + s + "'");
    }
    exps.push_back(e);
    pos = plus + 1;
  }

  const std::size_t top = *std::max_element(exps.begin(), exps.end());
  std::vector<Word> w(words_for_degree(top), 0);
  for (std::size_t e : exps) w[e / kBits] |= Word{1} << (e % kBits);
  return BinaryPolynomial(std::move(w));
}

std::string to_string(const BinaryPolynomial& p) {
  const auto d = p.degree();
  if (!d) return "0";
  std::string out;
  for (std::size_t k = *d + 1; k-- > 0;) {
    if (!p.coeff(k)) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += '1';
    } else if (k == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(k);
    }
  }
  return out;
}

std::string to_hex(const BinaryPolynomial& p) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const auto d = p.degree();
  if (!d) return "0x0";
  std::string out;
  for (std::size_t nib = *d / 4 + 1; nib-- > 0;) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) v |= (p.coeff(nib * 4 + b) ? 1U : 0U) << b;
    out += kDigits[v];
  }
  return "0x" + out;
}

BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  const auto& big = a.words().size() >= b.words().size() ? a : b;
  const auto& small = &big == &a ? b : a;
  std::vector<BinaryPolynomial::Word> w(big.words().begin(), big.words().end());
  kernels::xor_into(w, small.words());
  return BinaryPolynomial::from_words(std::move(w));
}

BinaryPolynomial shift_left(const BinaryPolynomial& p, std::size_t k) {
  if (p.is_zero()) return p;
  std::vector<BinaryPolynomial::Word> w(words_for_degree(*p.degree() + k), 0);
  kernels::xor_shifted_into(w, p.words(), k);
  return BinaryPolynomial::from_words(std::move(w));
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t da = *a.degree();
  const std::size_t db = *b.degree();
  std::vector<BinaryPolynomial::Word> w(words_for_degree(da + db), 0);
  const auto& sparse = da <= db ? a : b;
  const auto& dense = &sparse == &a ? b : a;
  for (std::size_t k = 0; k <= std::min(da, db); ++k) {
    if (sparse.coeff(k)) kernels::xor_shifted_into(w, dense.words(), k);
  }
  return BinaryPolynomial::from_words(std::move(w));
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                     const BinaryPolynomial& m) {
  require_modulus(m);
  const auto da = a.degree();
  const std::size_t dm = *m.degree();
  if (!da || *da < dm) return {BinaryPolynomial{}, a};
  std::vector<BinaryPolynomial::Word> r(a.words().begin(), a.words().end());
  std::vector<BinaryPolynomial::Word> q(words_for_degree(*da - dm), 0);
  for (std::size_t i = *da + 1; i-- > dm;) {
    if ((r[i / kBits] >> (i % kBits)) & 1U) {
      kernels::xor_shifted_into(r, m.words(), i - dm);
      q[(i - dm) / kBits] |= BinaryPolynomial::Word{1} << ((i - dm) % kBits);
    }
  }
  return {BinaryPolynomial::from_words(std::move(q)), BinaryPolynomial::from_words(std::move(r))};
}

BinaryPolynomial mod(const BinaryPolynomial& a, const BinaryPolynomial& m) {
  require_modulus(m);
  const auto da = a.degree();
  if (!da || *da < *m.degree()) return a;
  std::vector<BinaryPolynomial::Word> r(a.words().begin(), a.words().end());
  reduce_in_place(r, m);
  return BinaryPolynomial::from_words(std::move(r));
}

BinaryPolynomial poly_mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                              const BinaryPolynomial& m) {
  require_modulus(m);
  return mod(mod(a, m) * mod(b, m), m);
}

BinaryPolynomial pow_mod(const BinaryPolynomial& a, std::uint64_t k, const BinaryPolynomial& m) {
  require_modulus(m);
  BinaryPolynomial result = mod(BinaryPolynomial::one(), m);
  BinaryPolynomial base = mod(a, m);
  while (k != 0) {
    if (k & 1U) result = poly_mul_mod(result, base, m);
    k >>= 1;
    if (k != 0) base = poly_mul_mod(base, base, m);
  }
  return result;
}

BinaryPolynomial pow(const BinaryPolynomial& a, std::uint64_t k) {
  BinaryPolynomial result = BinaryPolynomial::one();
  BinaryPolynomial base = a;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPolynomial reciprocal(const BinaryPolynomial& p) {
  const auto d = p.degree();
  if (!d) return p;
  std::vector<std::uint8_t> c = p.coefficients();
  std::reverse(c.begin(), c.end());
  return BinaryPolynomial::from_coefficients(c);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

void check_testable_degree(const BinaryPolynomial& p) {
  const auto d = p.degree();
  if (!d || *d < 1) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 1");
  if (*d > kMaxPrimitiveDegree) {
    throw Error(ErrorKind::UnsupportedSize,
                "degree " + std::to_string(*d) + " exceeds the factorization bound of " +
                    std::to_string(kMaxPrimitiveDegree));
  }
}

// x^(2^k) mod p
BinaryPolynomial frobenius_power(std::size_t k, const BinaryPolynomial& p) {
  BinaryPolynomial r = mod(BinaryPolynomial::monomial(1), p);
  for (std::size_t i = 0; i < k; ++i) r = poly_mul_mod(r, r, p);
  return r;
}

}  // namespace

// Rabin's test: x^(2^L) = x mod p, and x^(2^(L/q)) - x coprime to p for
// every prime q dividing L.
bool poly_is_irreducible(const BinaryPolynomial& p) {
  check_testable_degree(p);
  const std::size_t deg = *p.degree();
  const BinaryPolynomial x = mod(BinaryPolynomial::monomial(1), p);
  if (frobenius_power(deg, p) != x) return false;
  for (std::uint64_t q : prime_factors(deg)) {
    const BinaryPolynomial h = frobenius_power(deg / q, p) + x;
    if (gcd(p, h) != BinaryPolynomial::one()) return false;
  }
  return true;
}

bool poly_is_primitive(const BinaryPolynomial& p) {
  check_testable_degree(p);
  if (!p.coeff(0)) return false;
  if (!poly_is_irreducible(p)) return false;
  const std::size_t deg = *p.degree();
  const std::uint64_t order = (std::uint64_t{1} << deg) - 1;
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  const BinaryPolynomial one = BinaryPolynomial::one();
  if (pow_mod(x, order, p) != one) return false;
  for (std::uint64_t r : prime_factors(order)) {
    if (pow_mod(x, order / r, p) == one) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t u, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  std::int64_t old_r = static_cast<std::int64_t>(u % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NoInverse,
                std::to_string(u) + " has no inverse modulo " + std::to_string(m));
  }
  const std::int64_t sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % sm) + sm) % sm);
}

CyclotomicCoset cyclotomic_coset(std::uint64_t n, unsigned field_degree) {
  if (field_degree < 1 || field_degree > 62) {
    throw Error(ErrorKind::UnsupportedSize, "field degree out of range");
  }
  const std::uint64_t modulus = (std::uint64_t{1} << field_degree) - 1;
  if (modulus > 1 && n >= modulus) {
    throw Error(ErrorKind::InvalidArgument, "coset representative out of range");
  }
  CyclotomicCoset c;
  std::uint64_t e = modulus == 1 ? 0 : n;
  do {
    c.exponents.push_back(e);
    e = modulus == 1 ? 0 : (e * 2) % modulus;
  } while (e != c.exponents.front());
  std::sort(c.exponents.begin(), c.exponents.end());
  c.leader = c.exponents.front();
  return c;
}

}  // namespace sg
