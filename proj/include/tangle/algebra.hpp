#pragma once

// Exact arithmetic in Q(i)(vars): Gaussian-rational coefficients, sparse
// multivariate polynomials, and reduced rational functions.
//
// The invariant lives in Q(i)(s, w, x) with t := s^2. HOMFLY-PT values use a
// separate two-variable ring (l, m) so the two can never be mixed by accident;
// substitute() is the only bridge.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangle {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// re + im*i with both parts in lowest terms (mpq_class keeps them canonical).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3", "-1/2", "2i", "-i", "(1+2i)".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// ---------------------------------------------------------------------------
// Variable sets. Index order is the lexicographic monomial order.

struct SwxVars {
  static constexpr std::size_t count = 3;
  enum : std::size_t { x = 0, w = 1, s = 2 };
  /// Factor order inside a printed monomial: w*t*x.
  static constexpr std::array<std::size_t, count> print_order{w, s, x};
  /// Appends the printed factor for var^e (e > 0) to out.
  static void print_factor(std::string& out, std::size_t var, unsigned e);
};

struct HomflyVars {
  static constexpr std::size_t count = 2;
  enum : std::size_t { l = 0, m = 1 };
  static constexpr std::array<std::size_t, count> print_order{l, m};
  static void print_factor(std::string& out, std::size_t var, unsigned e);
};

template <class Vars>
using Exponents = std::array<unsigned, Vars::count>;

// ---------------------------------------------------------------------------

template <class Vars>
class Polynomial {
 public:
  using Monomial = Exponents<Vars>;
  // Descending lex order, so begin() is the leading term.
  using TermMap = std::map<Monomial, GaussianRational, std::greater<Monomial>>;

  Polynomial() = default;
  Polynomial(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
  }
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const Monomial& m, GaussianRational c = 1) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
  }
  static Polynomial variable(std::size_t var, unsigned power = 1) {
    Monomial m{};
    m[var] = power;
    return monomial(m);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_unit_monomial(terms_.begin()->first)); }
  bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const GaussianRational& leading_coefficient() const { return terms_.begin()->second; }
  GaussianRational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(mul(ma, mb), ca * cb);
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
  }
  Polynomial shifted(const Monomial& by) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mul(m, by), c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / d, or nullopt if d does not divide a.
  static std::optional<Polynomial> divide_exact(Polynomial a, const Polynomial& d);

  /// Largest monomial dividing every term.
  Monomial monomial_content() const {
    Monomial g{};
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first) {
        g = m;
        first = false;
      } else {
        for (std::size_t v = 0; v < Vars::count; ++v) g[v] = std::min(g[v], m[v]);
      }
    }
    return g;
  }

  /// Coefficients of powers of var (index = power), each free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    std::vector<Polynomial> out(degree(var) + 1);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest[var] = 0;
      out[m[var]].terms_.emplace(rest, c);
    }
    return out;
  }

  /// Polynomial with every coefficient conjugated and var negated (var -> -var).
  Polynomial conjugate_negate(std::optional<std::size_t> negate_var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      GaussianRational v = c.conj();
      if (negate_var && (m[*negate_var] % 2 == 1)) v = -v;
      r.terms_.emplace(m, v);
    }
    return r;
  }

  /// Monic associate (leading coefficient 1); zero stays zero.
  Polynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  std::string to_string() const;

  static bool is_unit_monomial(const Monomial& m) {
    for (auto e : m)
      if (e != 0) return false;
    return true;
  }
  static Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t v = 0; v < Vars::count; ++v) r[v] = a[v] + b[v];
    return r;
  }
  static bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t v = 0; v < Vars::count; ++v)
      if (d[v] > m[v]) return false;
    return true;
  }
  static Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial r;
    for (std::size_t v = 0; v < Vars::count; ++v) r[v] = m[v] - d[v];
    return r;
  }

 private:
  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

template <class Vars>
std::optional<Polynomial<Vars>> Polynomial<Vars>::divide_exact(Polynomial a, const Polynomial& d) {
  if (d.is_zero()) throw AlgebraError("polynomial division by zero");
  Polynomial q;
  const Monomial& ld = d.leading_monomial();
  GaussianRational inv = d.leading_coefficient().inverse();
  while (!a.is_zero()) {
    const Monomial& la = a.leading_monomial();
    if (!divides(ld, la)) return std::nullopt;
    Monomial qm = quotient(la, ld);
    GaussianRational qc = a.leading_coefficient() * inv;
    q.terms_.emplace(qm, qc);
    a -= d.shifted(qm).scaled(qc);
  }
  return q;
}

namespace detail {

template <class Vars>
Polynomial<Vars> exact_quotient(const Polynomial<Vars>& a, const Polynomial<Vars>& d) {
  auto q = Polynomial<Vars>::divide_exact(a, d);
  if (!q) throw AlgebraError("internal: inexact division in gcd");
  return *std::move(q);
}

template <class Vars>
Polynomial<Vars> from_coefficients(const std::vector<Polynomial<Vars>>& coeffs, std::size_t var) {
  Polynomial<Vars> r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    r += coeffs[k] * Polynomial<Vars>::variable(var, static_cast<unsigned>(k));
  }
  return r;
}

}  // namespace detail

template <class Vars>
Polynomial<Vars> gcd(const Polynomial<Vars>& a, const Polynomial<Vars>& b);

namespace detail {

// gcd of the coefficients of p viewed as a polynomial in var.
template <class Vars>
Polynomial<Vars> content_in(const Polynomial<Vars>& p, std::size_t var) {
  Polynomial<Vars> g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Scales p by a rational so its coefficients are Gaussian integers whose real
// and imaginary parts share no common factor. Keeps remainder sequences small.
template <class Vars>
Polynomial<Vars> numeric_primitive(const Polynomial<Vars>& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = c.re().get_num() * (l / c.re().get_den());
    mpz_class b = c.im().get_num() * (l / c.im().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
  }
  mpq_class f(l, g);
  f.canonicalize();
  return p.scaled(GaussianRational(f));
}

// lc(b)^(deg a - deg b + 1) * a reduced modulo b, in var (deg_var b > 0).
template <class Vars>
Polynomial<Vars> pseudo_remainder(Polynomial<Vars> a, const Polynomial<Vars>& b, std::size_t var) {
  const unsigned db = b.degree(var);
  const Polynomial<Vars> lb = b.coefficients_in(var).back();
  const unsigned da0 = a.degree(var);
  if (da0 < db) return a;
  unsigned steps = da0 - db + 1;
  while (!a.is_zero()) {
    unsigned da = a.degree(var);
    if (da < db) break;
    Polynomial<Vars> la = a.coefficients_in(var).back();
    a = lb * a - la * b * Polynomial<Vars>::variable(var, da - db);
    --steps;
  }
  for (; steps > 0 && !a.is_zero(); --steps) a *= lb;
  return a;
}

template <class Vars>
Polynomial<Vars> power(const Polynomial<Vars>& p, unsigned e) {
  Polynomial<Vars> r(1);
  for (unsigned k = 0; k < e; ++k) r *= p;
  return r;
}

template <class Vars>
Polynomial<Vars> primitive_part(const Polynomial<Vars>& p, std::size_t var) {
  return numeric_primitive(exact_quotient(p, content_in(p, var)));
}

// Last nonzero term of the subresultant sequence of f, g (primitive in var,
// deg f >= deg g > 0); its primitive part is gcd(f, g) up to a unit.
template <class Vars>
Polynomial<Vars> subresultant_gcd(Polynomial<Vars> f, Polynomial<Vars> g, std::size_t var) {
  using P = Polynomial<Vars>;
  P lead(1), h(1);
  while (true) {
    const unsigned delta = f.degree(var) - g.degree(var);
    P r = pseudo_remainder(f, g, var);
    if (r.is_zero()) return primitive_part(g, var);
    if (r.degree(var) == 0) return P(1);
    P divisor = lead * power(h, delta);
    f = std::move(g);
    g = exact_quotient(r, divisor);
    lead = f.coefficients_in(var).back();
    // h <- lead^delta / h^(delta - 1); unchanged when delta = 0
    if (delta > 0) h = exact_quotient(power(lead, delta), power(h, delta - 1));
  }
}

}  // namespace detail

/// Monic gcd over Q(i)[vars]: recursive content splitting plus subresultant
/// remainder sequences in the variable of least degree.
template <class Vars>
Polynomial<Vars> gcd(const Polynomial<Vars>& a, const Polynomial<Vars>& b) {
  using P = Polynomial<Vars>;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return P(1);

  // Monomial factors split off first; a lone monomial short-circuits.
  auto ma = a.monomial_content();
  auto mb = b.monomial_content();
  typename P::Monomial mg;
  for (std::size_t v = 0; v < Vars::count; ++v) mg[v] = std::min(ma[v], mb[v]);
  const P mono = P::monomial(mg);
  if (a.size() == 1 || b.size() == 1) return mono;
  P ra = detail::exact_quotient(a, P::monomial(ma));
  P rb = detail::exact_quotient(b, P::monomial(mb));
  if (ra.is_constant() || rb.is_constant()) return mono;
  if (rb.size() <= ra.size() && P::divide_exact(ra, rb)) return mono * rb.monic();
  if (ra.size() <= rb.size() && P::divide_exact(rb, ra)) return mono * ra.monic();

  // A variable present on one side only: the gcd divides the other side's content.
  for (std::size_t v = 0; v < Vars::count; ++v) {
    const unsigned da = ra.degree(v), db = rb.degree(v);
    if (da == 0 && db > 0) return (mono * gcd(ra, detail::content_in(rb, v))).monic();
    if (db == 0 && da > 0) return (mono * gcd(detail::content_in(ra, v), rb)).monic();
  }

  std::size_t var = Vars::count;
  for (std::size_t v = 0; v < Vars::count; ++v) {
    if (ra.degree(v) == 0) continue;
    if (var == Vars::count || std::max(ra.degree(v), rb.degree(v)) < std::max(ra.degree(var), rb.degree(var)))
      var = v;
  }

  P ca = detail::content_in(ra, var);
  P cb = detail::content_in(rb, var);
  P cg = gcd(ca, cb);
  P f = detail::numeric_primitive(detail::exact_quotient(ra, ca));
  P g = detail::numeric_primitive(detail::exact_quotient(rb, cb));
  if (f.degree(var) < g.degree(var)) std::swap(f, g);
  return (mono * cg * detail::subresultant_gcd(std::move(f), std::move(g), var)).monic();
}

// ---------------------------------------------------------------------------

template <class Vars>
class RationalFunction {
 public:
  using Poly = Polynomial<Vars>;

  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                           // NOLINT
  RationalFunction(GaussianRational c) : num_(std::move(c)), den_(1) {}    // NOLINT
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) { normalize(); }  // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable(std::size_t var, unsigned power = 1) {
    return RationalFunction(Poly::variable(var, power));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  // Sum and product cancel against the operands' factors before multiplying
  // out, so gcds run on the small pieces only.
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly da = detail::exact_quotient(a.den_, g);
    Poly db = detail::exact_quotient(b.den_, g);
    Poly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return {};
    Poly g2 = gcd(t, g);
    if (!g2.is_one()) {
      t = detail::exact_quotient(t, g2);
      g = detail::exact_quotient(g, g2);
    }
    return reduced(std::move(t), da * db * g);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    return reduced(detail::exact_quotient(a.num_, g1) * detail::exact_quotient(b.num_, g2),
                   detail::exact_quotient(a.den_, g2) * detail::exact_quotient(b.den_, g1));
  }
  RationalFunction inverse() const {
    if (is_zero()) throw AlgebraError("division by zero rational function");
    return reduced(den_, num_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(int e) const {
    if (e < 0) return RationalFunction(1) / pow(-e);
    RationalFunction r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  /// Structural equality of normalized forms.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  // Cancels the gcd and makes den monic; the result is unique per field element.
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = detail::exact_quotient(num_, g);
        den_ = detail::exact_quotient(den_, g);
      }
    }
    if (!den_.leading_coefficient().is_one()) {
      GaussianRational inv = den_.leading_coefficient().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  // num/den already coprime; only the unit is fixed.
  static RationalFunction reduced(Poly num, Poly den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) {
      r.den_ = Poly(1);
    } else if (!r.den_.leading_coefficient().is_one()) {
      GaussianRational inv = r.den_.leading_coefficient().inverse();
      r.num_ = r.num_.scaled(inv);
      r.den_ = r.den_.scaled(inv);
    }
    return r;
  }

  Poly num_;
  Poly den_;
};

using Rational = RationalFunction<SwxVars>;
using HomflyValue = RationalFunction<HomflyVars>;

/// Cross-multiplied equality; never depends on gcd normalization.
template <class Vars>
bool rf_equals(const RationalFunction<Vars>& a, const RationalFunction<Vars>& b) {
  return a.num() * b.den() == b.num() * a.den();
}

/// Ring homomorphism image: each variable of the source ring is replaced by a
/// rational function of the target ring.
template <class From, class To>
RationalFunction<To> substitute(const RationalFunction<From>& a,
                                const std::array<RationalFunction<To>, From::count>& image) {
  auto eval = [&](const Polynomial<From>& p) {
    std::array<std::vector<RationalFunction<To>>, From::count> powers;
    for (std::size_t v = 0; v < From::count; ++v) powers[v].push_back(RationalFunction<To>(1));
    RationalFunction<To> sum;
    for (const auto& [m, c] : p.terms()) {
      RationalFunction<To> term(c);
      for (std::size_t v = 0; v < From::count; ++v) {
        while (powers[v].size() <= m[v]) powers[v].push_back(powers[v].back() * image[v]);
        if (m[v] > 0) term *= powers[v][m[v]];
      }
      sum += term;
    }
    return sum;
  };
  RationalFunction<To> den = eval(a.den());
  if (den.is_zero()) throw AlgebraError("substitution maps the denominator to zero");
  return eval(a.num()) / den;
}

// ---------------------------------------------------------------------------
// Printing.

template <class Vars>
std::string Polynomial<Vars>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string factors;
    for (std::size_t v : Vars::print_order) {
      if (m[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      Vars::print_factor(factors, v, m[v]);
    }
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussianRational mag = negative ? -c : c;
    std::string coef = mag.to_string();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (factors.empty()) {
      out += coef;
    } else if (mag.is_one()) {
      out += factors;
    } else {
      out += coef + "*" + factors;
    }
    first = false;
  }
  return out;
}

namespace detail {
template <class Vars>
bool is_atom(const Polynomial<Vars>& p) {
  if (p.size() != 1) return false;
  const auto& [m, c] = *p.terms().begin();
  unsigned nonzero = 0;
  for (auto e : m) nonzero += e != 0 ? 1 : 0;
  if (nonzero == 0) return c.is_real() && (sgn(c.re()) >= 0) && c.re().get_den() == 1;
  return nonzero == 1 && c.is_one();
}
}  // namespace detail

template <class Vars>
std::string RationalFunction<Vars>::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!detail::is_atom(num_)) n = "(" + n + ")";
  if (!detail::is_atom(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Parsing: + - * / ^ (integer exponents, may be negative), parentheses,
// integers, the unit i, and ring variables.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Variable lookup for the parser: returns nullopt for unknown names.
template <class Vars>
std::optional<RationalFunction<Vars>> parse_variable(std::string_view name);

template <class Vars>
RationalFunction<Vars> parse_rational(std::string_view text);

Rational parse_swx(std::string_view text);
HomflyValue parse_homfly(std::string_view text);

// ---------------------------------------------------------------------------
// Invariant-specific helpers (t = s^2).

namespace vars {
Rational s();
Rational t();
Rational w();
Rational x();
Rational i();
HomflyValue l();
HomflyValue m();
}  // namespace vars

/// True iff a lies in Q(x, t, w): reduced num/den use only even powers of s and
/// real coefficients.
bool rf_is_t_expressible(const Rational& a);

/// Constants of the skein calculus, built from their two-term closed forms.
/// Names: DELTA_DIFF, DELTA_SAME, C_LOOP, C_BIGON_ANTIPAR, C_TRIANGLE_DOWN,
/// POS_SMOOTH, POS_VERTEX_MERGED, POS_VERTEX_KEPT, NEG_SMOOTH,
/// NEG_VERTEX_MERGED, NEG_VERTEX_KEPT. Unknown names throw AlgebraError.
const Rational& named_constant(std::string_view name);

}  // namespace tangle
