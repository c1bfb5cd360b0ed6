#include "eig33/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace eig33::oracle {

RatMat3 RatMat3::from(const Mat3& a) {
  RatMat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.e[k] = ExactScalar(a.e[k]);
  return r;
}

ExactScalar trace(const RatMat3& a) { return a.e[0] + a.e[4] + a.e[8]; }

RatMat3 dev(const RatMat3& a) {
  const ExactScalar m = trace(a) / 3;
  RatMat3 s = a;
  s.e[0] -= m;
  s.e[4] -= m;
  s.e[8] -= m;
  return s;
}

RatMat3 matmul(const RatMat3& a, const RatMat3& b) {
  RatMat3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return c;
}

RatMat3 transpose(const RatMat3& a) {
  RatMat3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = a(j, i);
  return t;
}

RatMat3 cofactor(const RatMat3& a) {
  RatMat3 c;
  c.e[0] = a.e[4] * a.e[8] - a.e[5] * a.e[7];
  c.e[1] = a.e[5] * a.e[6] - a.e[3] * a.e[8];
  c.e[2] = a.e[3] * a.e[7] - a.e[4] * a.e[6];
  c.e[3] = a.e[2] * a.e[7] - a.e[1] * a.e[8];
  c.e[4] = a.e[0] * a.e[8] - a.e[2] * a.e[6];
  c.e[5] = a.e[1] * a.e[6] - a.e[0] * a.e[7];
  c.e[6] = a.e[1] * a.e[5] - a.e[2] * a.e[4];
  c.e[7] = a.e[2] * a.e[3] - a.e[0] * a.e[5];
  c.e[8] = a.e[0] * a.e[4] - a.e[1] * a.e[3];
  return c;
}

ExactScalar det(const RatMat3& a) {
  return a.e[0] * (a.e[4] * a.e[8] - a.e[5] * a.e[7]) -
         a.e[1] * (a.e[3] * a.e[8] - a.e[5] * a.e[6]) +
         a.e[2] * (a.e[3] * a.e[7] - a.e[4] * a.e[6]);
}

RatMat3 inverse(const RatMat3& a) {
  const ExactScalar d = det(a);
  if (d == 0) throw SingularMatrix{};
  RatMat3 inv = transpose(cofactor(a));
  for (auto& x : inv.e) x /= d;
  return inv;
}

ExactScalar frobenius_sq(const RatMat3& a) {
  ExactScalar s = 0;
  for (const auto& x : a.e) s += x * x;
  return s;
}

ExactInvariants invariants_exact(const RatMat3& a) {
  ExactInvariants r;
  r.i1 = trace(a);
  const RatMat3 s = dev(a);
  r.j2 = trace(matmul(s, s)) / 2;
  r.j3 = det(s);
  r.disc = 4 * r.j2 * r.j2 * r.j2 - 27 * r.j3 * r.j3;
  return r;
}

ExactInvariants invariants_exact(const Mat3& a) { return invariants_exact(RatMat3::from(a)); }

namespace {

// Monic cubic x^3 + c2 x^2 + c1 x + c0 over the rationals.
struct Cubic {
  ExactScalar c2, c1, c0;

  ExactScalar operator()(const ExactScalar& x) const { return ((x + c2) * x + c1) * x + c0; }
  ExactScalar dp(const ExactScalar& x) const { return (3 * x + 2 * c2) * x + c1; }
};

// Characteristic polynomial p(x) = x^3 - I1 x^2 + I2 x - I3.
Cubic char_poly(const RatMat3& a) {
  Cubic p;
  p.c2 = -trace(a);
  p.c1 = a.e[0] * a.e[4] - a.e[1] * a.e[3] + a.e[0] * a.e[8] - a.e[2] * a.e[6] +
         a.e[4] * a.e[8] - a.e[5] * a.e[7];
  p.c0 = -det(a);
  return p;
}

int sgn(const ExactScalar& x) { return x.sign(); }

// Rational with the smallest denominator in the closed interval [lo, hi]
// (Stern-Brocot descent via the continued-fraction expansion of the
// endpoints).  Any rational a/b distinct from a root r = p/q satisfies
// |a/b - r| >= 1/(bq), so once a bracket around a rational root is narrower
// than 1/q^2 the simplest rational it contains is the root itself.
ExactScalar simplest_in(const ExactScalar& lo, const ExactScalar& hi) {
  if (lo.sign() <= 0 && hi.sign() >= 0) return 0;
  if (hi.sign() < 0) return -simplest_in(-hi, -lo);
  // 0 < lo <= hi from here on.
  const ExactScalar fl{numerator(lo) / denominator(lo)};  // floor: operands positive
  const ExactScalar ceil_lo = (fl == lo) ? fl : fl + 1;
  if (ceil_lo <= hi) return ceil_lo;
  // No integer inside: recurse on the flipped fractional parts.
  return fl + 1 / simplest_in(1 / (hi - fl), 1 / (lo - fl));
}

// Narrow a sign-change bracket [lo, hi] (p(lo) and p(hi) of opposite nonzero
// sign) until its width is at most tol.  Returns the final bracket; an exact
// hit collapses it to a point, and the simplest rational inside the final
// bracket is probed so rational roots of moderate denominator come out exact.
std::pair<ExactScalar, ExactScalar> bisect(const Cubic& p, ExactScalar lo, ExactScalar hi,
                                           const ExactScalar& tol) {
  int slo = sgn(p(lo));
  while (hi - lo > tol) {
    const ExactScalar mid = (lo + hi) / 2;
    const int sm = sgn(p(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const ExactScalar probe = simplest_in(lo, hi);
  if (p(probe) == 0) return {probe, probe};
  return {lo, hi};
}

BigScalar midpoint(const std::pair<ExactScalar, ExactScalar>& br) {
  return BigScalar(br.first + br.second) / 2;
}

// Cauchy bound: every root of p lies strictly inside (-R, R).
ExactScalar root_bound(const Cubic& p) {
  ExactScalar r = abs(p.c2);
  if (abs(p.c1) > r) r = abs(p.c1);
  if (abs(p.c0) > r) r = abs(p.c0);
  return r + 1;
}

// Exact discriminant of a monic cubic: 18 a b c - 4 a^3 c + a^2 b^2 - 4 b^3 - 27 c^2
// with (a, b, c) = (c2, c1, c0).
ExactScalar cubic_disc(const Cubic& p) {
  const ExactScalar &a = p.c2, &b = p.c1, &c = p.c0;
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

// Rational point q with p(q) > 0 strictly between the two smallest of three
// distinct real roots, found by driving a bisection toward the local maximum
// of p (the smaller root of p') until the polynomial goes positive there.
// Mirrored logic (want_sign = -1) finds a point below the local minimum.
ExactScalar separating_point(const Cubic& p, ExactScalar lo, ExactScalar hi, int want_sign) {
  // Bracket of a root of p': dp(lo) and dp(hi) have opposite signs by choice
  // of the caller.  Any probe with the wanted p-sign separates the roots.
  const int slo = sgn(p.dp(lo));
  for (;;) {
    const ExactScalar mid = (lo + hi) / 2;
    if (sgn(p(mid)) == want_sign) return mid;
    const int sm = sgn(p.dp(mid));
    if (sm == 0) {
      // mid is the exact critical point; with distinct roots the extremum
      // value has the wanted sign, so the branch above must have returned.
      throw std::logic_error("separating_point: critical value of unexpected sign");
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

struct RationalRoots {
  // Exact multiplicity-resolved roots when disc == 0.
  std::array<ExactScalar, 3> r;
};

// Multiple-root case: gcd(p, p') over Q via a two-step Euclid.  A repeated
// root of a rational cubic is itself rational, so the result is exact.
RationalRoots repeated_roots(const Cubic& p) {
  // rem = p mod p', degree <= 1.  Divide 27 p by p' (leading coeff 3) to stay
  // in small rationals: quotient (3x + q0).
  // p  = x^3 + a x^2 + b x + c, p' = 3x^2 + 2a x + b.
  const ExactScalar &a = p.c2, &b = p.c1, &c = p.c0;
  // Long division: x^3 + a x^2 + b x + c = (x/3 + a/9)(3x^2 + 2a x + b) + rem
  // rem = (2b/3 - 2a^2/9) x + (c - ab/9).
  const ExactScalar r1 = ExactScalar(2) * b / 3 - ExactScalar(2) * a * a / 9;
  const ExactScalar r0 = c - a * b / 9;
  if (r1 == 0 && r0 == 0) {
    // p' divides p: triple root at -a/3.
    const ExactScalar t = -a / 3;
    return {{t, t, t}};
  }
  assert(r1 != 0);  // deg(rem) = 0 would contradict a vanishing discriminant
  const ExactScalar dbl = -r0 / r1;  // the repeated root divides both p and p'
  assert(p(dbl) == 0 && p.dp(dbl) == 0);
  const ExactScalar simple = -a - 2 * dbl;  // root sum is -a
  std::array<ExactScalar, 3> roots{dbl, dbl, simple};
  std::sort(roots.begin(), roots.end());
  return {roots};
}

struct IsolatedBrackets {
  std::array<std::pair<ExactScalar, ExactScalar>, 3> br;
};

// Three distinct real roots: separate them with probe points around the
// critical points of p, then return sign-change brackets in ascending order.
IsolatedBrackets isolate_distinct(const Cubic& p) {
  const ExactScalar r = root_bound(p);
  const ExactScalar center = -p.c2 / 3;  // p'(center) = -J2 < 0 when disc > 0
  const ExactScalar lo = separating_point(p, -r, center, +1);
  const ExactScalar hi = separating_point(p, center, r, -1);
  return {{std::pair{-r, lo}, std::pair{lo, hi}, std::pair{hi, r}}};
}

}  // namespace

SpectrumRef spectrum_reference(const Mat3& a, double abs_tol) {
  if (!(abs_tol >= 1e-60)) throw std::invalid_argument("abs_tol must be at least 1e-60");
  const RatMat3 ar = RatMat3::from(a);
  const Cubic p = char_poly(ar);
  const ExactScalar disc = cubic_disc(p);
  const ExactScalar tol{abs_tol};

  SpectrumRef out;
  out.imag = {BigScalar(0), BigScalar(0), BigScalar(0)};

  if (disc > 0) {
    const IsolatedBrackets ib = isolate_distinct(p);
    for (int k = 0; k < 3; ++k) out.value[k] = midpoint(bisect(p, ib.br[k].first, ib.br[k].second, tol));
    return out;
  }
  if (disc == 0) {
    const RationalRoots rr = repeated_roots(p);
    for (int k = 0; k < 3; ++k) out.value[k] = BigScalar(rr.r[k]);
    return out;
  }

  // Negative discriminant: one real root, one conjugate pair.  Bisect the
  // lone real root, then deflate synthetically in big-float arithmetic.
  out.complex_pair = true;
  const ExactScalar r = root_bound(p);
  const BigScalar real_root = midpoint(bisect(p, -r, r, tol));
  const BigScalar q1 = BigScalar(p.c2) + real_root;
  const BigScalar q0 = BigScalar(p.c1) + q1 * real_root;
  const BigScalar re = -q1 / 2;
  BigScalar imsq = q0 - re * re;
  if (imsq < 0) imsq = 0;
  const BigScalar im = sqrt(imsq);

  if (real_root <= re) {
    out.value = {real_root, re, re};
    out.imag = {BigScalar(0), im, im};
  } else {
    out.value = {re, re, real_root};
    out.imag = {im, im, BigScalar(0)};
  }
  return out;
}

std::array<BigScalar, 3> eig_reference(const Mat3& a, double abs_tol) {
  const SpectrumRef s = spectrum_reference(a, abs_tol);
  if (s.complex_pair) throw ComplexSpectrum{};
  return s.value;
}

BoundSet bounds(const Mat3& a, double kappa2) {
  const ExactScalar eps{eps_mach};
  const RatMat3 ar = RatMat3::from(a);
  const RatMat3 dv = dev(ar);
  const ExactScalar n2_dev = frobenius_sq(dv);

  const RatMat3 cd = cofactor(dv);
  const ExactScalar n2_dcd = frobenius_sq(dev(cd));

  const ExactInvariants ex = invariants_exact(ar);
  const ExactScalar s2 = 12 * ex.j2 * ex.j2;
  const ExactScalar s3 = 54 * ex.j3;
  RatMat3 m = transpose(ar);
  for (std::size_t k = 0; k < 9; ++k) m.e[k] = s2 * m.e[k] - s3 * cd.e[k];
  const ExactScalar n2_m = frobenius_sq(dev(m));

  BoundSet b;
  b.bound_j2 = (BigScalar(n2_dev * eps)).convert_to<double>();
  b.bound_j3 = (sqrt(BigScalar(n2_dcd * n2_dev)) * BigScalar(eps)).convert_to<double>();
  b.bound_disc = (sqrt(BigScalar(n2_m * n2_dev)) * BigScalar(eps)).convert_to<double>();
  b.bound_eig =
      (BigScalar(kappa2) * sqrt(BigScalar(frobenius_sq(ar))) * BigScalar(eps)).convert_to<double>();
  return b;
}

double kappa2(const Mat3& u) {
  const RatMat3 ur = RatMat3::from(u);
  if (det(ur) == 0) throw SingularMatrix{};
  const RatMat3 g = matmul(transpose(ur), ur);
  const Cubic p = char_poly(g);
  const ExactScalar disc = cubic_disc(p);

  // Gram matrices have real nonnegative spectra, so disc >= 0 always holds.
  std::array<BigScalar, 3> sigma_sq;
  if (disc == 0) {
    const RationalRoots rr = repeated_roots(p);
    for (int k = 0; k < 3; ++k) sigma_sq[k] = BigScalar(rr.r[k]);
  } else {
    const IsolatedBrackets ib = isolate_distinct(p);
    const ExactScalar tol{1e-50};
    for (int k = 0; k < 3; ++k)
      sigma_sq[k] = midpoint(bisect(p, ib.br[k].first, ib.br[k].second, tol));
  }
  return sqrt(sigma_sq[2] / sigma_sq[0]).convert_to<double>();
}

std::string decimal_string(const BigScalar& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string decimal_string(const ExactScalar& x, unsigned digits) {
  return decimal_string(BigScalar(x), digits);
}

}  // namespace eig33::oracle
