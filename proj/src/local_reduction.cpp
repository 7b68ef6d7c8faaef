#include "kodaira/local_reduction.hpp"

#include <array>
#include <cassert>

namespace kodaira {

namespace {

// ---- arithmetic mod p on exact integers ----

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ClassificationError("internal: non-invertible element mod " + m.get_str());
  return r;
}

bool div_by(const Integer& a, const Integer& m) {
  return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t());
}

long val(const Integer& n, const Integer& p) {
  if (n == 0) return std::numeric_limits<long>::max() / 2;  // effectively infinite
  Integer tmp;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer pow_int(const Integer& p, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Is a a square mod an odd prime p?  (a may be any integer.)
bool is_square_mod(const Integer& a, const Integer& p) {
  Integer am = mod(a, p);
  if (am == 0) return true;
  return mpz_legendre(am.get_mpz_t(), p.get_mpz_t()) == 1;
}

// Does alpha Y^2 + beta Y + gamma have a root in F_p (alpha != 0 mod p)?
bool quadratic_has_root(const Integer& alpha, const Integer& beta, const Integer& gamma,
                        const Integer& p) {
  if (p == 2) {
    for (long y = 0; y < 2; ++y)
      if (div_by(alpha * y * y + beta * y + gamma, p)) return true;
    return false;
  }
  return is_square_mod(beta * beta - 4 * alpha * gamma, p);
}

// Number of distinct roots in F_p of a separable monic cubic
// T^3 + b T^2 + c T + d.
long cubic_root_count(const Integer& b, const Integer& c, const Integer& d, const Integer& p) {
  if (p < 100) {
    long count = 0;
    long pl = static_cast<long>(p.get_si());
    for (long t = 0; t < pl; ++t) {
      Integer tt(t);
      if (div_by(((tt + b) * tt + c) * tt + d, p)) ++count;
    }
    return count;
  }
  // deg gcd(T^p - T, P): compute T^p mod P by square and multiply, with
  // degree-<3 residues represented by coefficient triples.
  using Poly = std::array<Integer, 3>;  // low to high
  auto redc = [&](Integer x) { return mod(x, p); };
  auto mulmod = [&](const Poly& f, const Poly& g) {
    // Multiply then reduce modulo T^3 + b T^2 + c T + d.
    std::array<Integer, 5> prod{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) prod[i + j] += f[i] * g[j];
    for (int k = 4; k >= 3; --k) {
      Integer lead = redc(prod[k]);
      if (lead != 0) {
        prod[k - 1] -= lead * b;
        prod[k - 2] -= lead * c;
        prod[k - 3] -= lead * d;
      }
      prod[k] = 0;
    }
    return Poly{redc(prod[0]), redc(prod[1]), redc(prod[2])};
  };
  Poly base{0, 1, 0};  // T
  Poly result{1, 0, 0};
  Integer e = p;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  // g = T^p - T mod P
  Poly g = result;
  g[1] = redc(g[1] - 1);
  // gcd(P, g) where P is the monic cubic; P is separable here, so the gcd
  // degree equals the number of distinct F_p-roots.
  std::array<Integer, 4> f{mod(d, p), mod(c, p), mod(b, p), 1};
  std::array<Integer, 4> h{g[0], g[1], g[2], 0};
  auto deg = [](const std::array<Integer, 4>& q) {
    for (int i = 3; i >= 0; --i)
      if (q[i] != 0) return i;
    return -1;
  };
  while (deg(h) >= 0) {
    // f mod h
    int dh = deg(h);
    Integer inv = invmod(h[dh], p);
    std::array<Integer, 4> r = f;
    for (int df = deg(r); df >= dh; df = deg(r)) {
      Integer q = mod(r[df] * inv, p);
      for (int i = 0; i <= dh; ++i) r[df - dh + i] = mod(r[df - dh + i] - q * h[i], p);
      if (r[df] != 0) throw ClassificationError("internal: poly division");
    }
    f = h;
    h = r;
  }
  return deg(f) < 0 ? 0 : deg(f);
}

// ---- model bookkeeping on integral coefficients ----

struct IntModel {
  Integer a1, a2, a3, a4, a6;

  void invariants(Integer& b2, Integer& b4, Integer& b6, Integer& b8, Integer& c4,
                  Integer& c6, Integer& delta) const {
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    delta = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  }
};

// Applies an integral (u, r, s, t) change in place and composes it into acc.
void transform(IntModel& m, CoordinateChange& acc, const Integer& u, const Integer& r,
               const Integer& s, const Integer& t) {
  Integer u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Integer a1 = m.a1 + 2 * s;
  Integer a2 = m.a2 - s * m.a1 + 3 * r - s * s;
  Integer a3 = m.a3 + r * m.a1 + 2 * t;
  Integer a4 = m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t;
  Integer a6 = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1;
  if (!div_by(a1, u) || !div_by(a2, u2) || !div_by(a3, u3) || !div_by(a4, u4) ||
      !div_by(a6, u6))
    throw ClassificationError("internal: non-integral transform");
  m = IntModel{a1 / u, a2 / u2, a3 / u3, a4 / u4, a6 / u6};
  CoordinateChange step;
  step.u = Rational(u);
  step.r = Rational(r);
  step.s = Rational(s);
  step.t = Rational(t);
  acc = acc.then(step);
}

// Translates the singular point of the reduced curve to (0, 0) mod p.
// Pre: p | delta.  After this, p | a3, a4, a6.
void move_singular_point(IntModel& m, CoordinateChange& acc, const Integer& p) {
  Integer b2, b4, b6, b8, c4, c6, delta;
  m.invariants(b2, b4, b6, b8, c4, c6, delta);
  Integer r, t;
  if (p == 2) {
    bool found = false;
    for (long x = 0; x < 2 && !found; ++x)
      for (long y = 0; y < 2 && !found; ++y) {
        Integer xx(x), yy(y);
        Integer f = yy * yy + m.a1 * xx * yy + m.a3 * yy - xx * xx * xx - m.a2 * xx * xx -
                    m.a4 * xx - m.a6;
        Integer fx = m.a1 * yy - 3 * xx * xx - 2 * m.a2 * xx - m.a4;
        Integer fy = 2 * yy + m.a1 * xx + m.a3;
        if (div_by(f, p) && div_by(fx, p) && div_by(fy, p)) {
          r = xx;
          t = yy;
          found = true;
        }
      }
    if (!found) throw ClassificationError("internal: no singular point mod 2");
  } else {
    // Completed square: the singular x is a multiple root of
    // x^3 + (b2/4) x^2 + (b4/2) x + b6/4 mod p.  3C - B^2 = -c4/16, so the
    // root is triple exactly when p | c4.
    Integer inv4 = invmod(Integer(4), p);
    Integer B = mod(b2 * inv4, p);
    Integer C = mod(b4 * invmod(Integer(2), p), p);
    Integer D = mod(b6 * inv4, p);
    Integer x = mod(3 * C - B * B, p);
    if (x == 0) {
      if (p == 3)
        r = mod(-D, p);  // cube root is the identity on F_3
      else
        r = mod(-B * invmod(Integer(3), p), p);
    } else {
      r = mod((B * C - 9 * D) * invmod(2 * x, p), p);
    }
    t = mod(-(m.a1 * r + m.a3) * invmod(Integer(2), p), p);
  }
  transform(m, acc, 1, r, 0, t);
}

// Achieves p | a1, a2; p^2 | a3, a4; p^3 | a6 (Tate's step-6 normalization).
// Pre: singular point at origin and additive reduction, with v(a6) >= 2,
// v(b8) >= 3, v(b6) >= 3.
void normalize_step6(IntModel& m, CoordinateChange& acc, const Integer& p) {
  if (p == 2) {
    // Existence is guaranteed; the search space is tiny.
    for (long s = 0; s < 8; ++s)
      for (long r = 0; r < 8; ++r)
        for (long t = 0; t < 8; ++t) {
          IntModel trial = m;
          CoordinateChange dummy;
          transform(trial, dummy, 1, Integer(r), Integer(s), Integer(t));
          if (div_by(trial.a1, 2) && div_by(trial.a2, 2) && div_by(trial.a3, 4) &&
              div_by(trial.a4, 4) && div_by(trial.a6, 8)) {
            transform(m, acc, 1, Integer(r), Integer(s), Integer(t));
            return;
          }
        }
    throw ClassificationError("internal: step-6 normalization failed at p = 2");
  }
  Integer p2 = p * p;
  Integer s = mod(-m.a1 * invmod(Integer(2), p), p);
  transform(m, acc, 1, 0, s, 0);
  Integer t = mod(-m.a3 * invmod(Integer(2), p2), p2);
  transform(m, acc, 1, 0, 0, t);
  if (!(div_by(m.a1, p) && div_by(m.a2, p) && div_by(m.a3, p2) && div_by(m.a4, p2) &&
        div_by(m.a6, p2 * p)))
    throw ClassificationError("internal: step-6 normalization failed");
}

}  // namespace

KodairaType kodaira_from_valuations(const Valuation& v_c4, long v_delta) {
  if (v_delta < 0) throw ClassificationError("kodaira_from_valuations: negative v(Delta)");
  if (v_delta == 0) return KodairaType::I0();
  if (v_c4 == Valuation(0)) return KodairaType::In(v_delta);
  // Additive: v(c4) >= 1 (possibly infinite).
  auto fail = [&] {
    throw ClassificationError("kodaira_from_valuations: inconsistent pair (v_c4 = " +
                              v_c4.str() + ", v_delta = " + std::to_string(v_delta) +
                              "); non-minimal or corrupt input");
  };
  if (v_delta >= 12 && v_c4 >= Valuation(4)) fail();  // non-minimal
  switch (v_delta) {
    case 2: return KodairaType::II();
    case 3: return KodairaType::III();
    case 4: return KodairaType::IV();
    case 6:
      if (v_c4 < Valuation(2)) fail();
      return KodairaType::I0star();
    case 8:
      if (v_c4 == Valuation(2)) return KodairaType::Instar(2);
      if (v_c4 >= Valuation(3)) return KodairaType::IVstar();
      fail();
    case 9:
      if (v_c4 == Valuation(2)) return KodairaType::Instar(3);
      if (v_c4 == Valuation(3)) return KodairaType::IIIstar();
      fail();
    case 10:
      if (v_c4 == Valuation(2)) return KodairaType::Instar(4);
      if (v_c4 >= Valuation(4)) return KodairaType::IIstar();
      fail();
    default:
      // v_delta in {1, 5} or >= 7: only In*(v_delta - 6) is possible.
      if (v_delta >= 7 && v_c4 == Valuation(2)) return KodairaType::Instar(v_delta - 6);
      fail();
  }
  fail();
  return KodairaType::I0();  // unreachable
}

LocalReductionData tate_local_data(const WeierstrassModel& input, const Integer& p) {
  if (!is_prime(p)) throw std::domain_error("tate_local_data: p is not prime");

  auto [integral, change0] = integral_model(input);
  if (compute_invariants(integral).delta == 0) throw SingularModelError();

  IntModel m{integral.a1.get_num(), integral.a2.get_num(), integral.a3.get_num(),
             integral.a4.get_num(), integral.a6.get_num()};
  CoordinateChange acc = change0;

  LocalReductionData out;
  out.p = p;

  const long kMaxRestarts = 10000;  // v(Delta) drops by 12 per restart
  for (long restart = 0; restart < kMaxRestarts; ++restart) {
    Integer b2, b4, b6, b8, c4, c6, delta;
    m.invariants(b2, b4, b6, b8, c4, c6, delta);
    long n = val(delta, p);

    // Step 1: good reduction.
    if (n == 0) {
      out.kodaira = KodairaType::I0();
      out.conductor_exponent = 0;
      out.tamagawa = 1;
      break;
    }

    move_singular_point(m, acc, p);
    m.invariants(b2, b4, b6, b8, c4, c6, delta);

    // Step 2: multiplicative reduction.
    if (val(c4, p) == 0) {
      out.kodaira = KodairaType::In(n);
      out.conductor_exponent = 1;
      // Split iff the tangent quadratic T^2 + a1 T - a2 has roots in F_p.
      bool split = quadratic_has_root(1, m.a1, -m.a2, p);
      out.tamagawa = split ? n : (n % 2 == 0 ? 2 : 1);
      break;
    }

    // Step 3.
    if (val(m.a6, p) < 2) {
      out.kodaira = KodairaType::II();
      out.conductor_exponent = n;
      out.tamagawa = 1;
      break;
    }
    // Step 4.
    if (val(b8, p) < 3) {
      out.kodaira = KodairaType::III();
      out.conductor_exponent = n - 1;
      out.tamagawa = 2;
      break;
    }
    // Step 5.
    if (val(b6, p) < 3) {
      out.kodaira = KodairaType::IV();
      out.conductor_exponent = n - 2;
      out.tamagawa = quadratic_has_root(1, m.a3 / p, -(m.a6 / (p * p)), p) ? 3 : 1;
      break;
    }

    // Step 6: normalize, then classify by the cubic
    // P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) mod p.
    normalize_step6(m, acc, p);
    Integer p2 = p * p, p3 = p2 * p;
    Integer B = m.a2 / p, C = m.a4 / p2, D = m.a6 / p3;
    Integer disc = 27 * D * D - B * B * C * C + 4 * B * B * B * D - 18 * B * C * D +
                   4 * C * C * C;  // -disc(P)
    Integer xq = 3 * C - B * B;

    if (!div_by(disc, p)) {
      // Distinct roots: I0*.
      out.kodaira = KodairaType::I0star();
      out.conductor_exponent = n - 4;
      out.tamagawa = 1 + cubic_root_count(B, C, D, p);
      break;
    }

    if (!div_by(xq, p)) {
      // Step 7: double root; type In* for some nu >= 1.
      Integer r2;
      if (p == 2)
        r2 = mod(C, p);
      else
        r2 = mod((B * C - 9 * D) * invmod(2 * xq, p), p);
      transform(m, acc, 1, p * r2, 0, 0);

      long nu = 1;
      bool done = false;
      while (!done) {
        if (nu > n)
          throw ClassificationError("internal: In* loop exceeded v(Delta) at p = " +
                                    p.get_str());
        if (nu % 2 == 1) {
          long k = (nu + 3) / 2;
          Integer pk = pow_int(p, k);
          Integer a3k = m.a3 / pk, a62k = m.a6 / (pk * pk);
          Integer qd = a3k * a3k + 4 * a62k;
          if (!div_by(qd, p)) {
            out.kodaira = KodairaType::Instar(nu);
            out.conductor_exponent = n - 4 - nu;
            out.tamagawa = quadratic_has_root(1, a3k, -a62k, p) ? 4 : 2;
            done = true;
          } else {
            Integer y0 = (p == 2) ? mod(a62k, p) : mod(-a3k * invmod(Integer(2), p), p);
            transform(m, acc, 1, 0, 0, pk * y0);
            ++nu;
          }
        } else {
          long k = nu / 2 + 2;
          Integer pk = pow_int(p, k);
          Integer alpha = m.a2 / p, beta = m.a4 / pk, gamma = m.a6 / pow_int(p, nu + 3);
          Integer qd = beta * beta - 4 * alpha * gamma;
          if (!div_by(qd, p)) {
            out.kodaira = KodairaType::Instar(nu);
            out.conductor_exponent = n - 4 - nu;
            out.tamagawa = quadratic_has_root(alpha, beta, gamma, p) ? 4 : 2;
            done = true;
          } else {
            Integer x0 = (p == 2) ? mod(gamma, p)
                                  : mod(-beta * invmod(2 * alpha, p), p);
            transform(m, acc, 1, pow_int(p, nu / 2 + 1) * x0, 0, 0);
            ++nu;
          }
        }
      }
      break;
    }

    // Steps 8-10: triple root.
    {
      Integer r2;
      if (p == 2)
        r2 = mod(B, p);
      else if (p == 3)
        r2 = mod(-D, p);
      else
        r2 = mod(-B * invmod(Integer(3), p), p);
      transform(m, acc, 1, p * r2, 0, 0);

      Integer p4 = p2 * p2;
      Integer a32 = m.a3 / p2, a64 = m.a6 / p4;
      Integer qd = a32 * a32 + 4 * a64;
      if (!div_by(qd, p)) {
        out.kodaira = KodairaType::IVstar();
        out.conductor_exponent = n - 6;
        out.tamagawa = quadratic_has_root(1, a32, -a64, p) ? 3 : 1;
        break;
      }
      Integer y0 = (p == 2) ? mod(a64, p) : mod(-a32 * invmod(Integer(2), p), p);
      transform(m, acc, 1, 0, 0, p2 * y0);

      // Step 9.
      if (val(m.a4, p) < 4) {
        out.kodaira = KodairaType::IIIstar();
        out.conductor_exponent = n - 7;
        out.tamagawa = 2;
        break;
      }
      // Step 10.
      if (val(m.a6, p) < 6) {
        out.kodaira = KodairaType::IIstar();
        out.conductor_exponent = n - 8;
        out.tamagawa = 1;
        break;
      }
      // Step 11: not minimal; rescale by u = p and restart.
      transform(m, acc, p, 0, 0, 0);
    }
  }

  out.minimal_model = WeierstrassModel{Rational(m.a1), Rational(m.a2), Rational(m.a3),
                                       Rational(m.a4), Rational(m.a6)};
  out.change = acc;
  StandardInvariants inv = compute_invariants(out.minimal_model);
  out.v_delta_min = val(inv.delta.get_num(), p);
  out.v_c4_min = padic_valuation(inv.c4, p);
  out.reduction = reduction_class(out, inv.j ? *inv.j : Rational(0));
  return out;
}

ReductionClass reduction_class(const LocalReductionData& d, const Rational& j) {
  ReductionClass rc;
  switch (d.kodaira.kind()) {
    case TypeKind::I0: rc.kind = ReductionKind::GOOD; break;
    case TypeKind::In: rc.kind = ReductionKind::MULTIPLICATIVE; break;
    default: rc.kind = ReductionKind::ADDITIVE; break;
  }
  Valuation vj = padic_valuation(j, d.p);
  rc.potential = vj >= Valuation(0) ? PotentialKind::POTENTIALLY_GOOD
                                    : PotentialKind::POTENTIALLY_MULTIPLICATIVE;
  return rc;
}

std::pair<WeierstrassModel, CoordinateChange> minimal_model_at(const WeierstrassModel& m,
                                                               const Integer& p) {
  LocalReductionData d = tate_local_data(m, p);
  return {d.minimal_model, d.change};
}

}  // namespace kodaira
