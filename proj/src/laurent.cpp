#include "calex/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace calex {

namespace {

const mpz_class kZero = 0;

mpz_class abs_z(const mpz_class& x) { return x < 0 ? mpz_class(-x) : x; }

}  // namespace

LaurentPoly::LaurentPoly(mpz_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(long lowest, std::vector<mpz_class> coeffs)
    : low_(lowest), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::one() { return LaurentPoly(mpz_class(1)); }

LaurentPoly LaurentPoly::term(mpz_class coeff, long exponent) {
  if (coeff == 0) return {};
  LaurentPoly p;
  p.low_ = exponent;
  p.coeffs_.push_back(std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::t_power(long exponent) {
  return term(mpz_class(1), exponent);
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  std::size_t last = coeffs_.size();
  while (last > first && coeffs_[last - 1] == 0) --last;
  if (first == last) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<mpz_class>(coeffs_.begin() + first,
                                     coeffs_.begin() + last);
  }
  low_ += static_cast<long>(first);
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

long LaurentPoly::lowest_exponent() const {
  if (is_zero()) throw zero_polynomial_error("lowest_exponent of zero");
  return low_;
}

long LaurentPoly::degree() const {
  if (is_zero()) throw zero_polynomial_error("degree of zero");
  return low_ + static_cast<long>(coeffs_.size()) - 1;
}

const mpz_class& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw zero_polynomial_error("leading coefficient of zero");
  return coeffs_.back();
}

mpz_class LaurentPoly::coefficient(long exponent) const {
  long idx = exponent - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long exponent_delta) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += exponent_delta;
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) throw calex_error("negative power of a Laurent polynomial");
  LaurentPoly r = one();
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

mpz_class LaurentPoly::evaluate(const mpz_class& x) const {
  if (is_zero()) return 0;
  if (low_ < 0)
    throw calex_error("evaluate requires nonnegative lowest exponent");
  // Horner from the top, then multiply in the t^low_ factor.
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  for (long i = 0; i < low_; ++i) acc *= x;
  return acc;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long low = std::min(a.low_, b.low_);
  long high = std::max(a.low_ + static_cast<long>(a.coeffs_.size()),
                       b.low_ + static_cast<long>(b.coeffs_.size()));
  std::vector<mpz_class> out(static_cast<std::size_t>(high - low));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(a.low_ - low) + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(b.low_ - low) + i] += b.coeffs_[i];
  return LaurentPoly(low, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

namespace {

// Plain polynomial view for division/GCD internals: coeffs[0] is the
// constant term.
using Coeffs = std::vector<mpz_class>;

Coeffs to_coeffs(const LaurentPoly& p) {
  return p.coefficients();  // caller shifts so lowest exponent is 0
}

void strip_trailing_zeros(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Quotient of a by b in Z[t] when it exists.
std::optional<Coeffs> poly_exact_divide(Coeffs a, const Coeffs& b) {
  strip_trailing_zeros(a);
  if (a.empty()) return Coeffs{};
  if (a.size() < b.size()) return std::nullopt;
  Coeffs q(a.size() - b.size() + 1);
  const mpz_class& lead_b = b.back();
  while (true) {
    strip_trailing_zeros(a);
    if (a.empty()) break;
    if (a.size() < b.size()) return std::nullopt;
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), lead_b.get_mpz_t()))
      return std::nullopt;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), a.back().get_mpz_t(), lead_b.get_mpz_t());
    q[shift] = qc;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= qc * b[i];
  }
  return q;
}

mpz_class content(const Coeffs& c) {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Coeffs divide_by_constant(Coeffs c, const mpz_class& k) {
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return c;
}

// Pseudo-remainder: repeatedly kills the top term after scaling by lc(b).
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  strip_trailing_zeros(a);
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    strip_trailing_zeros(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a,
                                            const LaurentPoly& b) {
  if (b.is_zero())
    throw zero_polynomial_error("exact divide by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  long la = a.lowest_exponent();
  long lb = b.lowest_exponent();
  auto q = poly_exact_divide(to_coeffs(a.shifted(-la)),
                             to_coeffs(b.shifted(-lb)));
  if (!q) return std::nullopt;
  return LaurentPoly(la - lb, std::move(*q));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_exact_divide(a, b);
  if (!q)
    throw non_divisible_error("polynomial division left a nonzero remainder");
  return *q;
}

CanonicalForm canonicalize(const LaurentPoly& p) {
  if (p.is_zero())
    throw zero_polynomial_error("canonicalize of the zero polynomial");
  CanonicalForm c;
  c.t_shift = p.lowest_exponent();
  c.poly = p.shifted(-c.t_shift);
  if (c.poly.leading_coefficient() < 0) {
    c.sign = -1;
    c.poly = -c.poly;
  }
  return c;
}

LaurentPoly canonical_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return canonicalize(p).poly;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw zero_polynomial_error("gcd of two zero polynomials");
  if (a.is_zero()) return canonical_part(b);
  if (b.is_zero()) return canonical_part(a);

  Coeffs A = to_coeffs(a.shifted(-a.lowest_exponent()));
  Coeffs B = to_coeffs(b.shifted(-b.lowest_exponent()));
  mpz_class ca = content(A), cb = content(B);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  A = divide_by_constant(std::move(A), ca);
  B = divide_by_constant(std::move(B), cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    Coeffs r = pseudo_remainder(A, B);
    A = std::move(B);
    if (r.empty()) {
      B.clear();
    } else {
      B = divide_by_constant(std::move(r), content(r));
    }
  }
  LaurentPoly g(0, std::move(A));
  return canonical_part(g * LaurentPoly(cg));
}

namespace {

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw calex_error("euler_phi of a nonpositive integer");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime_power(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // n itself prime
}

LaurentPoly cyclotomic(long d) {
  if (d < 1) throw calex_error("cyclotomic index must be >= 1");
  static std::map<long, LaurentPoly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly result;
  if (d == 1) {
    result = LaurentPoly(0, {mpz_class(-1), mpz_class(1)});  // t - 1
  } else {
    // Phi_d = (1 + t + ... + t^(d-1)) / prod of Phi_e over proper
    // divisors e > 1.
    std::vector<mpz_class> ones(static_cast<std::size_t>(d), mpz_class(1));
    result = LaurentPoly(0, std::move(ones));
    for (long e : divisors_of(d)) {
      if (e == 1 || e == d) continue;
      result = exact_divide(result, cyclotomic(e));
    }
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(d, std::move(result)).first->second;
}

bool is_reciprocal(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  const auto& c = p.coefficients();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
    if (c[i] != c[j]) return false;
  return true;
}

long CyclotomicFactorization::multiplicity_of(long index) const {
  for (const auto& f : factors)
    if (f.index == index) return f.multiplicity;
  return 0;
}

long CyclotomicFactorization::root_count() const {
  long n = 0;
  for (const auto& f : factors) n += f.multiplicity * euler_phi(f.index);
  return n;
}

LaurentPoly CyclotomicFactorization::reconstruct() const {
  LaurentPoly p = LaurentPoly::term(mpz_class(sign), t_shift);
  for (const auto& f : factors)
    p = p * cyclotomic(f.index).pow(f.multiplicity);
  if (residual) p = p * *residual;
  return p;
}

std::string CyclotomicFactorization::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (t_shift != 0) os << "t^" << t_shift << " ";
  if (factors.empty() && !residual) os << "1";
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << " * ";
    first = false;
    os << "Phi_" << f.index;
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
  }
  if (residual) {
    if (!first) os << " * ";
    os << "[residual " << residual->to_string() << "]";
  }
  return os.str();
}

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p) {
  if (p.is_zero())
    throw zero_polynomial_error("factor_cyclotomic of the zero polynomial");
  CanonicalForm can = canonicalize(p);
  CyclotomicFactorization out;
  out.sign = can.sign;
  out.t_shift = can.t_shift;
  LaurentPoly work = can.poly;
  long deg0 = work.degree();
  long bound = 2 * deg0 * deg0 + 1;
  for (long d = 1; d <= bound && work.degree() > 0; ++d) {
    if (euler_phi(d) > work.degree()) continue;
    const LaurentPoly phi = cyclotomic(d);
    long mult = 0;
    while (true) {
      auto q = try_exact_divide(work, phi);
      if (!q) break;
      work = std::move(*q);
      ++mult;
      if (work.degree() == 0) break;
    }
    if (mult > 0) out.factors.push_back({d, mult});
  }
  if (!work.is_one()) out.residual = work;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    long e = low_ + i;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    mpz_class a = abs_z(c);
    if (a != 1 || e == 0) {
      os << a.get_str();
      if (e != 0) os << "*";
    }
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct TextCursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

long parse_long(TextCursor& c, const char* what) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start || (c.i == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start]))))
    throw syntax_error(std::string("expected ") + what, 1,
                       static_cast<int>(start) + 1);
  return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

LaurentPoly LaurentPoly::from_string(const std::string& text) {
  TextCursor c{text};
  LaurentPoly result;
  bool any = false;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      if (c.s[c.i] == '-') sign = -1;
      ++c.i;
    } else if (any) {
      throw syntax_error("expected '+' or '-' between terms", 1,
                         static_cast<int>(c.i) + 1);
    }
    c.skip_ws();
    if (c.i >= c.s.size())
      throw syntax_error("dangling sign", 1, static_cast<int>(c.i) + 1);
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      std::size_t start = c.i;
      while (c.i < c.s.size() &&
             std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
      coeff = mpz_class(c.s.substr(start, c.i - start));
      have_coeff = true;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
      }
    }
    long exponent = 0;
    if (c.i < c.s.size() && c.s[c.i] == 't') {
      ++c.i;
      exponent = 1;
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        exponent = parse_long(c, "exponent");
      }
    } else if (!have_coeff) {
      throw syntax_error("expected coefficient or 't'", 1,
                         static_cast<int>(c.i) + 1);
    }
    result = result + LaurentPoly::term(sign * coeff, exponent);
    any = true;
  }
  if (!any) throw syntax_error("empty polynomial text", 1, 1);
  return result;
}

}  // namespace calex
