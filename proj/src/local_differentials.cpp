#include "pqs/local_differentials.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "pqs/error.hpp"

namespace pqs {

SourceSection& SourceSection::add(int i, int j, const Rational& c)
{
  if (i < 0 || j < 0)
    throw ValidationError("negative exponent in source section");
  auto& slot = terms[{i, j}];
  slot += c;
  if (slot == 0)
    terms.erase({i, j});
  return *this;
}

PuiseuxDifferential& PuiseuxDifferential::add(const PuiseuxMonomial& mono, const Rational& c)
{
  if (!is_integer(2 * mono.p))
    throw ValidationError("mu1 exponent " + pqs::to_string(mono.p) + " is not a half-integer");
  auto& slot = terms_[mono];
  slot += c;
  if (slot == 0)
    terms_.erase(mono);
  return *this;
}

PuiseuxDifferential& PuiseuxDifferential::operator+=(const PuiseuxDifferential& rhs)
{
  for (const auto& [mono, c] : rhs.terms_)
    add(mono, c);
  return *this;
}

PuiseuxDifferential operator*(const PuiseuxDifferential& a, const PuiseuxDifferential& b)
{
  PuiseuxDifferential out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add({ma.p + mb.p, ma.q + mb.q, ma.alpha + mb.alpha, ma.beta + mb.beta}, ca * cb);
  return out;
}

std::optional<int> PuiseuxDifferential::degree() const
{
  std::optional<int> deg;
  for (const auto& [mono, c] : terms_) {
    int d = mono.alpha + mono.beta;
    if (deg && *deg != d)
      return std::nullopt;
    deg = d;
  }
  return deg;
}

bool invariance_check(const SourceSection& s)
{
  for (const auto& [ij, c] : s.terms)
    if ((ij.first + ij.second) % 2 != 0)
      return false;
  return true;
}

PuiseuxDifferential gamma_pullback(const SourceSection& s, SingularityType chart)
{
  if (chart != SingularityType{2, 1})
    throw UnsupportedError("local chart only implemented for 1/2(1,1), got 1/" +
                           std::to_string(chart.n) + "(1," + std::to_string(chart.a) + ")");
  if (s.m < 1)
    throw ValidationError("tensor power m must be positive");

  const Rational half = make_rational(1, 2);

  // dz1 = 1/2 mu1^{-1/2} dmu1
  PuiseuxDifferential dz1;
  dz1.add({-half, 0, 1, 0}, half);
  // dz2 = 1/2 mu1^{-1/2} mu2 dmu1 + mu1^{1/2} dmu2
  PuiseuxDifferential dz2;
  dz2.add({-half, 1, 1, 0}, half);
  dz2.add({half, 0, 0, 1}, 1);

  PuiseuxDifferential frame;
  frame.add({0, 0, 0, 0}, 1);
  for (int k = 0; k < s.m; ++k)
    frame = frame * dz1 * dz2;

  PuiseuxDifferential out;
  for (const auto& [ij, c] : s.terms) {
    // z1^i z2^j = mu1^{(i+j)/2} mu2^j
    PuiseuxDifferential coeff;
    coeff.add({make_rational(ij.first + ij.second, 2), ij.second, 0, 0}, c);
    out += coeff * frame;
  }
  return out;
}

bool is_holomorphic(const PuiseuxDifferential& d)
{
  for (const auto& [mono, c] : d.terms())
    if (!is_integer(mono.p) || mono.p < 0)
      return false;
  return true;
}

std::optional<Rational> vanishing_order(const SourceSection& s)
{
  std::optional<Rational> best;
  for (const auto& [ij, c] : s.terms) {
    auto ord = make_rational(ij.first + ij.second, 2);
    if (!best || ord < *best)
      best = ord;
  }
  return best;
}

Rational vanishing_conditions(int m, int k)
{
  if (m < 1 || k < 0)
    throw ValidationError("vanishing_conditions needs m >= 1 and k >= 0");
  // (1 + 2 + ... + 2m) / 2 per node
  return make_rational(static_cast<long long>(k) * m * (2LL * m + 1), 2);
}

Rational bigness_lower_bound(int m, const Rational& K2, long long chi, int k)
{
  if (m < 2)
    throw ValidationError("plurigenus formula needs m >= 2");
  return Rational(chi) + make_rational(static_cast<long long>(m) * (m - 1), 2) * K2 -
         vanishing_conditions(m, k);
}

std::optional<BignessCertificate> bigness_certificate(const Rational& K2, long long chi, int k,
                                                      int m_max)
{
  for (int m = 2; m <= m_max; ++m) {
    auto v = bigness_lower_bound(m, K2, chi, k);
    if (v > 0)
      return BignessCertificate{m, v};
  }
  return std::nullopt;
}

namespace {

class SectionParser
{
public:
  explicit SectionParser(std::string_view text) : text_(text) {}

  SourceSection parse(int m)
  {
    SourceSection s;
    s.m = m;
    skip();
    if (at_end())
      fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(s, sign);
      skip();
    }
    return s;
  }

private:
  void parse_term(SourceSection& s, int sign)
  {
    Rational coeff = sign;
    int i = 0;
    int j = 0;
    bool any = false;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (peek() == 'z') {
        ++pos_;
        int which = parse_int();
        if (which != 1 && which != 2)
          fail("unknown variable z" + std::to_string(which));
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = parse_int();
        }
        (which == 1 ? i : j) += e;
      } else {
        fail("expected a coefficient or z1/z2");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any)
      fail("empty term");
    s.add(i, j, coeff);
  }

  Rational parse_number()
  {
    long long num = parse_int();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      long long den = parse_int();
      if (den == 0)
        fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  int parse_int()
  {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000)
        fail("number too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  void skip()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError(1, "section \"" + std::string(text_) + "\" at column " +
                            std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string power(const char* var, const Rational& e)
{
  if (e == 1)
    return var;
  auto s = pqs::to_string(e);
  return std::string(var) + "^" + (is_integer(e) && e >= 0 ? s : "(" + s + ")");
}

} // namespace

SourceSection parse_section(std::string_view text, int m)
{
  return SectionParser(text).parse(m);
}

std::string to_string(const PuiseuxDifferential& d)
{
  if (d.is_zero())
    return "0";
  std::vector<std::pair<PuiseuxMonomial, Rational>> terms(d.terms().begin(), d.terms().end());
  // dmu1^{2m} first, then by mu1 exponent
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return x.first.beta < y.first.beta;
  });
  std::string out;
  for (const auto& [mono, c] : terms) {
    std::string term = pqs::to_string(c < 0 ? Rational(-c) : c);
    if (mono.p != 0)
      term += "*" + power("mu1", mono.p);
    if (mono.q != 0)
      term += "*" + power("mu2", mono.q);
    if (mono.alpha != 0)
      term += "*" + power("dmu1", mono.alpha);
    if (mono.beta != 0)
      term += "*" + power("dmu2", mono.beta);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

} // namespace pqs
