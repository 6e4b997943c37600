#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <tuple>

#include "pqs/rational.hpp"
#include "pqs/singularities.hpp"

namespace pqs {

/*
 * Local model at a node 1/2(1,1) of X. Upstairs coordinates (z1, z2), with
 * the stabilizer acting by (-z1, -z2); the resolution chart is
 *
 *   z1 = mu1^{1/2},  z2 = mu1^{1/2} mu2,
 *
 * and the exceptional curve is {mu1 = 0}.
 */

/// a(z1, z2) (dz1 ^ dz2)^{m}, a = sum a_ij z1^i z2^j.
struct SourceSection
{
  int m = 1;
  std::map<std::pair<int, int>, Rational> terms; // (i, j) -> a_ij, no zeros

  SourceSection& add(int i, int j, const Rational& c);
};

struct PuiseuxMonomial
{
  Rational p; // exponent of mu1, denominator 1 or 2
  int q = 0;  // exponent of mu2
  int alpha = 0; // power of dmu1
  int beta = 0;  // power of dmu2

  friend bool operator==(const PuiseuxMonomial&, const PuiseuxMonomial&) = default;
  friend bool operator<(const PuiseuxMonomial& x, const PuiseuxMonomial& y)
  {
    if (x.p != y.p)
      return x.p < y.p;
    return std::tie(x.q, x.alpha, x.beta) < std::tie(y.q, y.alpha, y.beta);
  }
};

/// sum c mu1^p mu2^q dmu1^alpha dmu2^beta in the symmetric algebra.
class PuiseuxDifferential
{
public:
  const std::map<PuiseuxMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PuiseuxDifferential& add(const PuiseuxMonomial& mono, const Rational& c);
  PuiseuxDifferential& operator+=(const PuiseuxDifferential& rhs);
  friend PuiseuxDifferential operator+(PuiseuxDifferential a, const PuiseuxDifferential& b)
  {
    return a += b;
  }
  friend PuiseuxDifferential operator*(const PuiseuxDifferential& a, const PuiseuxDifferential& b);
  friend bool operator==(const PuiseuxDifferential&, const PuiseuxDifferential&) = default;

  /// Total symmetric degree alpha + beta, or nullopt if terms disagree or empty.
  std::optional<int> degree() const;

private:
  std::map<PuiseuxMonomial, Rational> terms_;
};

/// True iff a_ij = 0 whenever i + j is odd.
bool invariance_check(const SourceSection& s);

/// Gamma: substitute the chart into a dz1^m dz2^m, term by term.
/// Only the 1/2(1,1) chart exists; other types throw UnsupportedError.
PuiseuxDifferential gamma_pullback(const SourceSection& s,
                                   SingularityType chart = SingularityType{2, 1});

/// No fractional and no negative mu1 exponents.
bool is_holomorphic(const PuiseuxDifferential& d);

/// Order of vanishing of a o phi along {mu1 = 0}; nullopt for a = 0.
std::optional<Rational> vanishing_order(const SourceSection& s);

/// Conditions a_ij = 0 (i + j < 2m, i + j even) over k nodes: k m (2m + 1) / 2.
Rational vanishing_conditions(int m, int k);

/// chi + m(m-1)/2 K^2 - vanishing_conditions(m, k), valid for m >= 2.
Rational bigness_lower_bound(int m, const Rational& K2, long long chi, int k);

struct BignessCertificate
{
  int m = 0;
  Rational value;
};

/// Smallest m in [2, m_max] with a positive lower bound.
std::optional<BignessCertificate> bigness_certificate(const Rational& K2, long long chi, int k,
                                                      int m_max = 100);

/// Parses "z1*z2 + 3*z1^2 - 1/2*z2^4" (integer or p/q coefficients).
SourceSection parse_section(std::string_view text, int m);

std::string to_string(const PuiseuxDifferential& d);

} // namespace pqs
