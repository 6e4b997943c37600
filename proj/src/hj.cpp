#include "pqs/hj.hpp"

#include <cstdlib>

#include "pqs/error.hpp"

namespace pqs {

std::vector<int> hj_expand(int n, int a)
{
  auto t = SingularityType::make(n, a);
  std::vector<int> b;
  long long num = t.n;
  long long den = t.a;
  while (den > 0) {
    long long bk = (num + den - 1) / den; // ceil
    b.push_back(static_cast<int>(bk));
    long long next = bk * den - num;
    num = den;
    den = next;
  }
  return b;
}

std::vector<int> hj_expand(SingularityType t)
{
  return hj_expand(t.n, t.a);
}

Rational hj_evaluate(std::span<const int> b)
{
  if (b.empty())
    throw ValidationError("empty Hirzebruch-Jung string");
  for (int x : b)
    if (x < 2)
      throw ValidationError("Hirzebruch-Jung entries must be >= 2");
  Rational acc(b.back());
  for (auto k = b.size() - 1; k-- > 0;)
    acc = Rational(b[k]) - 1 / acc;
  return acc;
}

long long string_determinant(std::span<const int> b)
{
  // D_k = -b_k D_{k-1} - D_{k-2}, D_0 = 1, D_{-1} = 0
  long long before = 0;
  long long det = 1;
  for (int bk : b) {
    long long next = -bk * det - before;
    before = det;
    det = next;
  }
  return det;
}

HJString make_hj_string(SingularityType t)
{
  HJString s{hj_expand(t), t};
  if (std::llabs(string_determinant(s.b)) != t.n)
    throw InconsistencyError("string determinant does not match n for 1/" +
                             std::to_string(t.n) + "(1," + std::to_string(t.a) + ")");
  return s;
}

IntMatrix string_intersection_matrix(const HJString& s)
{
  const auto l = s.length();
  IntMatrix m(l, std::vector<long long>(l, 0));
  for (std::size_t k = 0; k < l; ++k) {
    m[k][k] = -s.b[k];
    if (k + 1 < l)
      m[k][k + 1] = m[k + 1][k] = 1;
  }
  return m;
}

std::size_t string_length(SingularityType t)
{
  return hj_expand(t).size();
}

std::vector<StringRay> string_rays(SingularityType t)
{
  const auto b = hj_expand(t);
  std::vector<StringRay> rays;
  StringRay prev{0, t.n};
  StringRay cur{1, t.a};
  for (int bk : b) {
    rays.push_back(cur);
    StringRay next{bk * cur.alpha - prev.alpha, bk * cur.beta - prev.beta};
    prev = cur;
    cur = next;
  }
  if (cur.alpha != t.n || cur.beta != 0)
    throw InconsistencyError("toric rays of the string do not close up");
  return rays;
}

} // namespace pqs
