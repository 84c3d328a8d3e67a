#include "bsfold/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace bsfold {

namespace {

int monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic, highest first when iterating for division/printing.
bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Poly::Poly(int nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_[Monomial(static_cast<size_t>(nvars), 0)] = constant;
}

Poly Poly::variable(int nvars, int i, int power) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative power");
  Poly p(nvars);
  if (power == 0) return Poly(nvars, 1);
  Monomial m(static_cast<size_t>(nvars), 0);
  m[static_cast<size_t>(i - 1)] = power;
  p.terms_[m] = 1;
  return p;
}

Poly Poly::linear_form(const Root& r) {
  const int n = static_cast<int>(r.coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i)
    if (r.coeffs[i] != 0) {
      Monomial m(static_cast<size_t>(n), 0);
      m[static_cast<size_t>(i)] = 1;
      p.terms_[m] = Rational(r.coeffs[i]);
    }
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value on a nonconstant polynomial");
  return terms_.begin()->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != d) return false;
  return true;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rational& c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_dyadic() const {
  for (const auto& [m, c] : terms_)
    if (!bsfold::is_dyadic(c)) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("poly arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("poly arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("poly arity mismatch");
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly operator*(const Rational& c, Poly p) {
  if (c == 0) return Poly(p.nvars_);
  for (auto& [m, coef] : p.terms_) coef *= c;
  return p;
}

bool Poly::operator==(const Poly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Poly out(nvars_, 1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("eval: wrong point arity");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: wrong image count");
  const int out_vars = images.empty() ? nvars_ : images.front().nvars();
  Poly acc(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly term(out_vars, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    acc += term;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest grlex term first.
  std::vector<const std::pair<const Monomial, Rational>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::string out;
  for (auto* t : ordered) {
    const auto& [m, c] = *t;
    Rational a = c;
    if (out.empty()) {
      if (a < 0) { out += "-"; a = -a; }
    } else {
      out += a < 0 ? "-" : "+";
      if (a < 0) a = -a;
    }
    std::string vars;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "a" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += format_rational(a);
    } else {
      if (a != 1) out += format_rational(a) + "*";
      out += vars;
    }
  }
  return out;
}

Poly weyl_act(const WeylElt& w, const Poly& f) {
  if (static_cast<int>(w.action.rows()) != f.nvars())
    throw std::invalid_argument("weyl_act: rank mismatch");
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i)
    images.push_back(Poly::linear_form(Root(LVector(w.action.col(i)))));
  return f.substitute(images);
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("divide_exact: arity mismatch");
  if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  Poly rem = f;
  Poly quot(f.nvars());
  // Leading term of g in grlex order.
  Monomial glead;
  Rational gc;
  for (const auto& [m, c] : g.terms()) {
    if (glead.empty() || grlex_less(glead, m)) { glead = m; gc = c; }
  }
  while (!rem.is_zero()) {
    Monomial rlead;
    Rational rc;
    for (const auto& [m, c] : rem.terms())
      if (rlead.empty() || grlex_less(rlead, m)) { rlead = m; rc = c; }
    Monomial q(rlead);
    bool ok = true;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] -= glead[i];
      if (q[i] < 0) { ok = false; break; }
    }
    if (!ok) return std::nullopt;
    Rational qc = rc / gc;
    Poly qterm(f.nvars());
    qterm.add_term(q, qc);
    quot += qterm;
    rem -= qterm * g;
  }
  return quot;
}

namespace {

int pivot_index(const Root& alpha) {
  for (Eigen::Index i = 0; i < alpha.coeffs.size(); ++i)
    if (alpha.coeffs[i] != 0) return static_cast<int>(i);
  throw std::invalid_argument("zero linear form");
}

}  // namespace

LinearDivision divide_by_linear(const Poly& f, const Root& alpha) {
  const int n = f.nvars();
  if (static_cast<int>(alpha.coeffs.size()) != n)
    throw std::invalid_argument("divide_by_linear: arity mismatch");
  const int p = pivot_index(alpha);
  const Rational ap(alpha.coeffs[p]);

  // Collect f = sum_k c_k(y) x_p^k, then run synthetic division by
  // (a_p x_p + L): q_k = (c_{k+1} - q_{k+1} L) ... top down.
  int dmax = 0;
  for (const auto& [m, c] : f.terms()) dmax = std::max(dmax, m[static_cast<size_t>(p)]);
  std::vector<Poly> layers(static_cast<size_t>(dmax + 1), Poly(n));
  for (const auto& [m, c] : f.terms()) {
    Monomial stripped(m);
    int k = stripped[static_cast<size_t>(p)];
    stripped[static_cast<size_t>(p)] = 0;
    layers[static_cast<size_t>(k)].add_term(stripped, c);
  }
  Poly ell(n);  // alpha without the pivot term
  for (int i = 0; i < n; ++i)
    if (i != p && alpha.coeffs[i] != 0) {
      Monomial m(static_cast<size_t>(n), 0);
      m[static_cast<size_t>(i)] = 1;
      ell.add_term(m, Rational(alpha.coeffs[i]));
    }

  // With f = sum_k c_k(y) x_p^k and alpha = a_p x_p + L(y), matching the
  // x_p^k coefficients of f = q alpha + r gives q_{k-1} = (c_k - q_k L)/a_p
  // top down and r = c_0 - q_0 L.
  LinearDivision out{Poly(n), Poly(n)};
  Poly prev_q(n);
  for (int k = dmax; k >= 1; --k) {
    Poly qk = (Rational(1) / ap) * (layers[static_cast<size_t>(k)] - prev_q * ell);
    out.quotient += qk * Poly::variable(n, p + 1, k - 1);
    prev_q = qk;
  }
  out.remainder = layers[0] - prev_q * ell;
  return out;
}

bool divisible(const Poly& f, const Root& alpha, int m) {
  if (m < 0) throw std::invalid_argument("negative multiplicity");
  Poly cur = f;
  for (int t = 0; t < m; ++t) {
    if (cur.is_zero()) return true;
    LinearDivision d = divide_by_linear(cur, alpha);
    if (!d.remainder.is_zero()) return false;
    cur = d.quotient;
  }
  return true;
}

Poly quotient_by_linear_power(const Poly& f, const Root& alpha, int m) {
  Poly cur = f;
  for (int t = 0; t < m; ++t) {
    if (cur.is_zero()) return cur;
    LinearDivision d = divide_by_linear(cur, alpha);
    if (!d.remainder.is_zero())
      throw std::invalid_argument("quotient_by_linear_power: not divisible");
    cur = d.quotient;
  }
  return cur;
}

namespace {

// Tiny recursive-descent parser for the "c*a<i>^e" grammar.
class PolyParser {
 public:
  PolyParser(int nvars, const std::string& text) : n_(nvars), s_(text) {}

  Poly parse() {
    Poly acc(n_);
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw std::invalid_argument("expected '+' or '-' in polynomial");
      }
      acc += Rational(sign) * parse_term();
      skip_ws();
      first = false;
    }
    if (first) throw std::invalid_argument("empty polynomial literal");
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Poly parse_term() {
    Poly acc(n_, 1);
    bool any = false;
    for (;;) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        acc = parse_rational_factor() * acc;
      } else if (peek() == 'a') {
        acc = acc * parse_variable_factor();
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw std::invalid_argument("empty term in polynomial literal");
    return acc;
  }

  Rational parse_rational_factor() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) throw std::invalid_argument("missing denominator");
      num += "/" + s_.substr(dstart, pos_ - dstart);
    }
    return parse_rational(num);
  }

  Poly parse_variable_factor() {
    ++pos_;  // 'a'
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw std::invalid_argument("missing variable index after 'a'");
    int idx = std::stoi(s_.substr(start, pos_ - start));
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t estart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (estart == pos_) throw std::invalid_argument("missing exponent after '^'");
      power = std::stoi(s_.substr(estart, pos_ - estart));
    }
    return Poly::variable(n_, idx, power);
  }

  int n_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(int nvars, const std::string& text) {
  return PolyParser(nvars, text).parse();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("RatFunc: arity mismatch");
  if (num_.is_zero()) den_ = Poly(num_.nvars(), 1);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::operator==(const RatFunc& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

bool RatFunc::is_polynomial() const { return divide_exact(num_, den_).has_value(); }

Poly RatFunc::to_poly() const {
  auto q = divide_exact(num_, den_);
  if (!q) throw std::logic_error("RatFunc::to_poly: not a polynomial");
  return *q;
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero()) return RatFunc::zero(nvars());
  if (auto q = divide_exact(num_, den_)) return RatFunc(*q);
  // Normalize the denominator's leading coefficient to 1.
  Monomial lead;
  Rational lc;
  for (const auto& [m, c] : den_.terms()) {
    if (lead.empty() || grlex_less(lead, m)) { lead = m; lc = c; }
  }
  Rational inv = Rational(1) / lc;
  return RatFunc(inv * num_, inv * den_);
}

std::string RatFunc::to_string() const {
  RatFunc r = reduced();
  if (r.den_.is_constant() && r.den_.constant_value() == 1) return r.num_.to_string();
  return "(" + r.num_.to_string() + ")/(" + r.den_.to_string() + ")";
}

RatFunc weyl_act(const WeylElt& w, const RatFunc& f) {
  return RatFunc(weyl_act(w, f.num()), weyl_act(w, f.den()));
}

}  // namespace bsfold
