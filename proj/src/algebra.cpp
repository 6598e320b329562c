#include "tangle/algebra.hpp"

#include <cctype>
#include <mutex>
#include <unordered_map>

namespace tangle {

GaussianRational GaussianRational::inverse() const {
  mpq_class n = re_ * re_ + im_ * im_;
  if (sgn(n) == 0) throw AlgebraError("division by zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  auto imag = [](const mpq_class& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string im = imag(im_);
  if (im[0] != '-') im = "+" + im;
  return "(" + re_.get_str() + im + ")";
}

void SwxVars::print_factor(std::string& out, std::size_t var, unsigned e) {
  unsigned shown = e;
  switch (var) {
    case x: out += 'x'; break;
    case w: out += 'w'; break;
    default:
      if (e % 2 == 0) {
        out += 't';
        shown = e / 2;
      } else {
        out += 's';
      }
  }
  if (shown != 1) out += "^" + std::to_string(shown);
}

void HomflyVars::print_factor(std::string& out, std::size_t var, unsigned e) {
  out += var == l ? 'l' : 'm';
  if (e != 1) out += "^" + std::to_string(e);
}

template <>
std::optional<Rational> parse_variable<SwxVars>(std::string_view name) {
  if (name == "x") return Rational::variable(SwxVars::x);
  if (name == "w") return Rational::variable(SwxVars::w);
  if (name == "s") return Rational::variable(SwxVars::s);
  if (name == "t") return Rational::variable(SwxVars::s, 2);
  return std::nullopt;
}

template <>
std::optional<HomflyValue> parse_variable<HomflyVars>(std::string_view name) {
  if (name == "l") return HomflyValue::variable(HomflyVars::l);
  if (name == "m") return HomflyValue::variable(HomflyVars::m);
  return std::nullopt;
}

namespace {

// Recursive descent:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
//   factor := atom ('^' ['-'] integer)?
//   atom   := integer | 'i' | variable | '(' expr ')'
template <class Vars>
class Parser {
 public:
  using RF = RationalFunction<Vars>;
  explicit Parser(std::string_view text) : text_(text) {}

  RF parse() {
    RF v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  RF expr() {
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    RF v = term();
    if (neg) v = -v;
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  RF term() {
    RF v = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= factor();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        RF d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else if (starts_atom()) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  RF factor() {
    RF base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t at = pos_;
    long e = integer();
    if (e > 4096) throw ParseError("exponent too large", at);
    if (neg && base.is_zero()) throw ParseError("zero to a negative power", at);
    return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    if (pos_ - start > 9) throw ParseError("integer too long", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  RF atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RF v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return RF(GaussianRational(mpq_class(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      std::string_view name = text_.substr(start, 1);
      if (name == "i") return RF(GaussianRational::i());
      if (auto v = parse_variable<Vars>(name)) return *v;
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Vars>
RationalFunction<Vars> parse_rational(std::string_view text) {
  return Parser<Vars>(text).parse();
}

template Rational parse_rational<SwxVars>(std::string_view);
template HomflyValue parse_rational<HomflyVars>(std::string_view);

Rational parse_swx(std::string_view text) { return parse_rational<SwxVars>(text); }
HomflyValue parse_homfly(std::string_view text) { return parse_rational<HomflyVars>(text); }

namespace vars {
Rational s() { return Rational::variable(SwxVars::s); }
Rational t() { return Rational::variable(SwxVars::s, 2); }
Rational w() { return Rational::variable(SwxVars::w); }
Rational x() { return Rational::variable(SwxVars::x); }
Rational i() { return Rational(GaussianRational::i()); }
HomflyValue l() { return HomflyValue::variable(HomflyVars::l); }
HomflyValue m() { return HomflyValue::variable(HomflyVars::m); }
}  // namespace vars

bool rf_is_t_expressible(const Rational& a) {
  auto ok = [](const Polynomial<SwxVars>& p) {
    for (const auto& [m, c] : p.terms()) {
      if (m[SwxVars::s] % 2 != 0 || !c.is_real()) return false;
    }
    return true;
  };
  // den is monic, so a real even form is the only reduced form of a member of
  // Q(x, t, w).
  return ok(a.num()) && ok(a.den());
}

namespace {

std::unordered_map<std::string, Rational> build_constants() {
  using namespace vars;
  const Rational t_ = t(), w_ = w(), one(1);
  const Rational ti = one / t_, wi = one / w_;
  std::unordered_map<std::string, Rational> c;
  c["DELTA_DIFF"] = one / (w_ * x());
  c["DELTA_SAME"] = (t_ * w_ * w_ - one) / (w_ * (one - t_));
  c["C_LOOP"] = w_ / (one - t_) + wi / (one - ti);
  c["C_BIGON_ANTIPAR"] = w_ * ti / (one - t_) + wi * t_ / (one - ti);
  c["C_TRIANGLE_DOWN"] = w_ * ti * ti / (one - t_) + wi * t_ * t_ / (one - ti);
  // Crossing expansion: X = a*[smoothing, merged] + b*[vertex, merged] + c*[vertex].
  c["POS_SMOOTH"] = -w_ / (t_ + one);
  c["POS_VERTEX_MERGED"] = -w_ / (t_ + one);
  c["POS_VERTEX_KEPT"] = w_;
  c["NEG_SMOOTH"] = -t_ / (w_ * (t_ + one));
  c["NEG_VERTEX_MERGED"] = -t_ / (w_ * (t_ + one));
  c["NEG_VERTEX_KEPT"] = wi;
  return c;
}

}  // namespace

const Rational& named_constant(std::string_view name) {
  static const std::unordered_map<std::string, Rational> table = build_constants();
  auto it = table.find(std::string(name));
  if (it == table.end()) throw AlgebraError("unknown constant '" + std::string(name) + "'");
  return it->second;
}

}  // namespace tangle
