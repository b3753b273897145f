#include "ropelab/hpoly.hpp"

#include <cctype>
#include <sstream>

namespace ropelab {

namespace {

void same_field(const HomPoly& a, const HomPoly& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "polynomials over different fields");
}

// Univariate helpers on dehomogenized coefficient vectors, index = power of t.
using Uni = std::vector<Scalar>;

void trim(Uni& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Uni uni_mod(Uni a, const Uni& b) {
  trim(a);
  const Scalar lead_inv = scalar_inv(b.back());
  while (a.size() >= b.size()) {
    const Scalar q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int u_order(const HomPoly& f) {
  const auto& c = f.coeffs();
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (!c[i].is_zero()) return i;
  return 0;
}

}  // namespace

HomPoly::HomPoly(Field f, int deg, std::vector<Scalar> coeffs) : field_(f), deg_(deg), c_(std::move(coeffs)) {
  if (deg < 0) {
    if (!c_.empty()) fail(Errc::ShapeError, "negative degree with coefficients");
    deg_ = -1;
    return;
  }
  if (c_.size() != static_cast<std::size_t>(deg) + 1) fail(Errc::ShapeError, "coefficient count must be degree+1");
  for (const auto& s : c_)
    if (s.characteristic() != f.characteristic()) fail(Errc::FieldMismatch, "coefficient in wrong field");
  normalize();
}

void HomPoly::normalize() {
  for (const auto& s : c_)
    if (!s.is_zero()) return;
  c_.clear();
  deg_ = -1;
}

HomPoly HomPoly::constant(const Scalar& c) { return HomPoly(c.field(), 0, {c}); }

HomPoly HomPoly::monomial(const Scalar& c, int tdeg, int udeg) {
  Field f = c.field();
  std::vector<Scalar> v(tdeg + udeg + 1, Scalar::zero(f));
  v[udeg] = c;
  return HomPoly(f, tdeg + udeg, std::move(v));
}

Scalar HomPoly::coeff(int i) const {
  if (i < 0 || i > deg_) return Scalar::zero(field_);
  return c_[i];
}

HomPoly HomPoly::operator-() const {
  HomPoly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  same_field(a, b);
  return a.deg_ == b.deg_ && a.c_ == b.c_;
}

HomPoly hp_add(const HomPoly& f, const HomPoly& g) {
  same_field(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree()) fail(Errc::ShapeError, "adding polynomials of different degrees");
  std::vector<Scalar> c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
  return HomPoly(f.field(), f.degree(), std::move(c));
}

HomPoly hp_sub(const HomPoly& f, const HomPoly& g) { return hp_add(f, -g); }

HomPoly hp_mul(const HomPoly& f, const HomPoly& g) {
  same_field(f, g);
  if (f.is_zero() || g.is_zero()) return HomPoly(f.field());
  const int d = f.degree() + g.degree();
  std::vector<Scalar> c(d + 1, Scalar::zero(f.field()));
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) c[i + j] += f.coeffs()[i] * g.coeffs()[j];
  }
  return HomPoly(f.field(), d, std::move(c));
}

HomPoly hp_scale(const HomPoly& f, const Scalar& s) {
  if (s.characteristic() != f.field().characteristic()) fail(Errc::FieldMismatch, "scalar in wrong field");
  if (f.is_zero() || s.is_zero()) return HomPoly(f.field());
  std::vector<Scalar> c = f.coeffs();
  for (auto& x : c) x *= s;
  return HomPoly(f.field(), f.degree(), std::move(c));
}

HomPoly hp_pow(const HomPoly& f, unsigned e) {
  HomPoly r = HomPoly::constant(Scalar::one(f.field()));
  for (unsigned i = 0; i < e; ++i) r = hp_mul(r, f);
  return r;
}

namespace {
// Long division by lowest u-power first; returns false on nonzero remainder.
bool divide(const HomPoly& f, const HomPoly& g, HomPoly& q) {
  same_field(f, g);
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by zero polynomial");
  if (f.is_zero()) {
    q = HomPoly(f.field());
    return true;
  }
  const int dq = f.degree() - g.degree();
  if (dq < 0) return false;
  int lead = 0;
  while (g.coeffs()[lead].is_zero()) ++lead;
  const Scalar inv = scalar_inv(g.coeffs()[lead]);
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> qc(dq + 1, Scalar::zero(f.field()));
  for (int i = 0; i <= dq; ++i) {
    const Scalar c = rem[i + lead] * inv;
    qc[i] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) rem[i + j] -= c * g.coeffs()[j];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return false;
  q = HomPoly(f.field(), dq, std::move(qc));
  return true;
}
}  // namespace

HomPoly hp_divexact(const HomPoly& f, const HomPoly& g) {
  HomPoly q;
  if (!divide(f, g, q)) fail(Errc::InternalError, "inexact polynomial division");
  return q;
}

bool hp_divides(const HomPoly& g, const HomPoly& f) {
  HomPoly q;
  return divide(f, g, q);
}

HomPoly hp_monic(const HomPoly& f) {
  if (f.is_zero()) return f;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) return hp_scale(f, scalar_inv(c));
  return f;
}

HomPoly hp_gcd(const std::vector<HomPoly>& fs) {
  const HomPoly* first = nullptr;
  for (const auto& f : fs)
    if (!f.is_zero()) {
      first = &f;
      break;
    }
  if (!first) fail(Errc::AllZero, "gcd of zero polynomials");
  const Field fld = first->field();
  int upow = -1;
  Uni acc;
  bool started = false;
  for (const auto& f : fs) {
    same_field(f, *first);
    if (f.is_zero()) continue;
    const int e = u_order(f);
    upow = upow < 0 ? e : std::min(upow, e);
    // dehomogenize at u = 1: coefficient of t^(deg-i) goes to index deg-i
    Uni p(f.degree() + 1, Scalar::zero(fld));
    for (int i = 0; i <= f.degree(); ++i) p[f.degree() - i] = f.coeffs()[i];
    trim(p);
    acc = started ? uni_gcd(acc, p) : p;
    started = true;
  }
  trim(acc);
  const int tdeg = static_cast<int>(acc.size()) - 1;
  const Scalar inv = scalar_inv(acc.back());
  std::vector<Scalar> c(tdeg + upow + 1, Scalar::zero(fld));
  for (int j = 0; j <= tdeg; ++j) c[upow + tdeg - j] = acc[j] * inv;
  HomPoly g(fld, tdeg + upow, std::move(c));
  return hp_monic(g);
}

Scalar hp_eval(const HomPoly& f, const Scalar& t0, const Scalar& u0) {
  if (t0.characteristic() != f.field().characteristic() || u0.characteristic() != f.field().characteristic())
    fail(Errc::FieldMismatch, "evaluation point in wrong field");
  Scalar acc = Scalar::zero(f.field());
  if (f.is_zero()) return acc;
  Scalar upow = Scalar::one(f.field());
  std::vector<Scalar> tp(f.degree() + 1, Scalar::one(f.field()));
  for (int i = 1; i <= f.degree(); ++i) tp[i] = tp[i - 1] * t0;
  for (int i = 0; i <= f.degree(); ++i) {
    acc += f.coeffs()[i] * tp[f.degree() - i] * upow;
    upow *= u0;
  }
  return acc;
}

std::string HomPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= deg_; ++i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = field_.is_rational() && sgn(c.rational()) < 0;
    if (neg) cs = (-c).str();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const int a = deg_ - i, b = i;
    std::string mono;
    if (a > 0) mono += a == 1 ? "t" : "t^" + std::to_string(a);
    if (b > 0) {
      if (!mono.empty()) mono += "*";
      mono += b == 1 ? "u" : "u^" + std::to_string(b);
    }
    if (mono.empty()) os << cs;
    else if (cs == "1") os << mono;
    else os << cs << "*" << mono;
  }
  return os.str();
}

namespace {

struct Term {
  Scalar c;
  int a = 0, b = 0;
};

}  // namespace

HomPoly parse_hompoly(const Field& f, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(Errc::ParseError, "empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) { fail(Errc::ParseError, "polynomial '" + text + "': " + why); };
  auto read_int = [&]() {
    std::size_t st = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos) bad("expected exponent");
    return std::stoi(s.substr(st, pos - st));
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      bad("expected sign");
    }
    Term term{Scalar::one(f), 0, 0};
    bool any = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t st = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      term.c = parse_scalar(f, s.substr(st, pos - st));
      any = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
      else if (pos < s.size() && (s[pos] == 't' || s[pos] == 'u')) bad("missing '*'");
    }
    while (pos < s.size() && (s[pos] == 't' || s[pos] == 'u')) {
      const char v = s[pos++];
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_int();
      }
      (v == 't' ? term.a : term.b) += e;
      any = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (!any) bad("empty term");
    if (sign < 0) term.c = -term.c;
    terms.push_back(term);
  }
  HomPoly out(f);
  int deg = -1;
  for (const auto& tm : terms) {
    if (tm.c.is_zero()) continue;
    if (deg >= 0 && tm.a + tm.b != deg) bad("not homogeneous");
    deg = tm.a + tm.b;
    out = hp_add(out, HomPoly::monomial(tm.c, tm.a, tm.b));
  }
  return out;
}

}  // namespace ropelab
