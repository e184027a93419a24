#include "toroidal/generators.hpp"

#include <algorithm>
#include <numeric>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

ExpVec m_power(std::int64_t a, std::int64_t b, std::int64_t k) { return ExpVec{a * k, b * k, 0}; }

/// Random unit series g(x^a y^b, z) with 0-2 nonconstant terms.
TruncSeries::Terms unit_in_m_z(Rng& rng, std::int64_t a, std::int64_t b) {
  TruncSeries::Terms t;
  t[ExpVec{0, 0, 0}] = rng.nonzero_rational();
  for (std::int64_t n = rng.uniform(0, 2); n > 0; --n) {
    std::int64_t i = rng.uniform(0, 2), j = rng.uniform(0, 2);
    if (i + j == 0) j = 1;
    t[ExpVec{a * i, b * i, j}] += rng.nonzero_rational();
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  if (!t.count(ExpVec{0, 0, 0})) t[ExpVec{0, 0, 0}] = 1;
  return t;
}

SubMatrix random_elementary(Rng& rng) {
  switch (rng.uniform(0, 2)) {
    case 0: {
      int keep = static_cast<int>(rng.uniform(0, 2));
      int other = static_cast<int>(rng.uniform(0, 1));
      if (other >= keep) ++other;
      SubMatrix s = SubMatrix::identity();
      s(other, keep) = 1;
      return s;
    }
    case 1: {
      int keep = static_cast<int>(rng.uniform(0, 2));
      SubMatrix s = SubMatrix::identity();
      for (int j = 0; j < 3; ++j)
        if (j != keep) s(j, keep) = 1;
      return s;
    }
    default: {
      std::array<int, 3> perm{0, 1, 2};
      for (int i = 2; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform(0, i))]);
      return SubMatrix::permutation(perm);
    }
  }
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) fail(ErrorCode::InvalidArgument, "empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::nonzero_rational() {
  std::int64_t p = uniform(1, 5) * (coin() ? 1 : -1);
  std::int64_t q = uniform(1, 4);
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Germ random_toroidal(Rng& rng, int form, std::int64_t trunc) {
  (void)trunc;
  Germ g;
  auto pos = [&] { return rng.uniform(1, 4); };
  auto nonneg = [&] { return rng.uniform(0, 4); };
  switch (form) {
    case 1: {
      g.target_kind = g.domain_kind = PointKind::ThreePoint;
      ExpVec u, v, w;
      do {
        u = ExpVec{nonneg(), nonneg(), nonneg()};
        v = ExpVec{nonneg(), nonneg(), nonneg()};
        w = ExpVec{nonneg(), nonneg(), nonneg()};
      } while (det3(u, v, w) == 0);
      g.payloads = {Payload::monomial(u), Payload::monomial(v), Payload::monomial(w)};
      break;
    }
    case 2: {
      g.target_kind = PointKind::ThreePoint;
      g.domain_kind = PointKind::TwoPoint;
      std::int64_t a, b, d, e;
      do {
        a = nonneg(), b = nonneg(), d = nonneg(), e = nonneg();
      } while (a * e - b * d == 0);
      Rational alpha = rng.nonzero_rational();
      g.payloads = {Payload::monomial(ExpVec{a, b, 0}), Payload::monomial(ExpVec{d, e, 0}),
                    Payload::with_series(ExpVec{nonneg(), nonneg(), 0},
                                         TruncSeries::translated_axis(2, alpha))};
      g.constants["alpha"] = alpha;
      break;
    }
    case 3: {
      g.target_kind = PointKind::ThreePoint;
      g.domain_kind = PointKind::OnePoint;
      Rational alpha = rng.nonzero_rational(), beta = rng.nonzero_rational();
      g.payloads = {Payload::monomial(ExpVec{pos(), 0, 0}),
                    Payload::with_series(ExpVec{pos(), 0, 0}, TruncSeries::translated_axis(1, alpha)),
                    Payload::with_series(ExpVec{pos(), 0, 0}, TruncSeries::translated_axis(2, beta))};
      g.constants["alpha"] = alpha;
      g.constants["beta"] = beta;
      break;
    }
    case 4: {
      g.target_kind = g.domain_kind = PointKind::TwoPoint;
      std::int64_t a, b, d, e;
      do {
        a = nonneg(), b = nonneg(), d = nonneg(), e = nonneg();
      } while (a * e - b * d == 0);
      g.payloads = {Payload::monomial(ExpVec{a, b, 0}), Payload::monomial(ExpVec{d, e, 0}),
                    Payload::monomial(ExpVec{0, 0, 1})};
      break;
    }
    case 5: {
      g.target_kind = PointKind::TwoPoint;
      g.domain_kind = PointKind::OnePoint;
      Rational alpha = rng.nonzero_rational();
      g.payloads = {Payload::monomial(ExpVec{pos(), 0, 0}),
                    Payload::with_series(ExpVec{pos(), 0, 0}, TruncSeries::translated_axis(1, alpha)),
                    Payload::monomial(ExpVec{0, 0, 1})};
      g.constants["alpha"] = alpha;
      break;
    }
    case 6: {
      g.target_kind = g.domain_kind = PointKind::OnePoint;
      g.payloads = {Payload::monomial(ExpVec{pos(), 0, 0}), Payload::monomial(ExpVec{0, 1, 0}),
                    Payload::monomial(ExpVec{0, 0, 1})};
      break;
    }
    default:
      fail(ErrorCode::InvalidArgument, "toroidal forms are numbered 1 to 6");
  }
  g.form_tag = static_cast<FormTag>(static_cast<int>(FormTag::Toroidal1) + form - 1);
  return g;
}

std::string_view excluded_shape_name(ExcludedShape s) noexcept {
  switch (s) {
    case ExcludedShape::PerturbedW2: return "PerturbedW2";
    case ExcludedShape::PerturbedW3: return "PerturbedW3";
    case ExcludedShape::PerturbedW1: return "PerturbedW1";
    case ExcludedShape::PerturbedV: return "PerturbedV";
  }
  return "?";
}

const std::vector<ExcludedShape>& excluded_shapes() {
  static const std::vector<ExcludedShape> all = {ExcludedShape::PerturbedW2,
                                                 ExcludedShape::PerturbedW3,
                                                 ExcludedShape::PerturbedW1,
                                                 ExcludedShape::PerturbedV};
  return all;
}

ExcludedInstance random_excluded(Rng& rng, ExcludedShape shape, std::int64_t trunc) {
  ExcludedInstance inst;
  inst.shape = shape;
  std::int64_t a, b;
  do {
    a = rng.uniform(1, 3);
    b = rng.uniform(1, 3);
  } while (std::gcd(a, b) != 1);
  std::int64_t c, d;
  do {
    c = rng.uniform(0, 3);
    d = rng.uniform(0, 3);
  } while (a * d - b * c == 0);
  inst.c = c;
  inst.d = d;
  std::int64_t window = std::max(trunc, c + d + 1);
  std::int64_t k = rng.uniform(1, 3);
  Germ& g = inst.germ;
  g.domain_kind = PointKind::TwoPoint;
  auto g_plus_cd = [&] {
    TruncSeries::Terms t = unit_in_m_z(rng, a, b);
    t[ExpVec{c, d, 0}] += 1;
    return TruncSeries(t, window);
  };
  switch (shape) {
    case ExcludedShape::PerturbedW2:
    case ExcludedShape::PerturbedW3: {
      bool three = shape == ExcludedShape::PerturbedW3;
      g.target_kind = three ? PointKind::ThreePoint : PointKind::TwoPoint;
      Rational alpha = rng.nonzero_rational();
      std::int64_t t = rng.uniform(1, 3);
      std::int64_t s = three ? rng.uniform(0, 2) : 0;
      g.payloads = {Payload::monomial(m_power(a, b, k)),
                    Payload::with_series(m_power(a, b, t), TruncSeries::translated_axis(2, alpha)),
                    Payload::with_series(m_power(a, b, s), g_plus_cd())};
      g.constants["alpha"] = alpha;
      break;
    }
    case ExcludedShape::PerturbedW1:
      g.target_kind = PointKind::OnePoint;
      g.payloads = {Payload::monomial(m_power(a, b, k)), Payload::monomial(ExpVec{0, 0, 1}),
                    Payload::with_series(ExpVec{0, 0, 0}, g_plus_cd())};
      break;
    case ExcludedShape::PerturbedV:
      g.target_kind = PointKind::TwoPoint;
      g.payloads = {Payload::monomial(m_power(a, b, k)),
                    Payload::with_series(m_power(a, b, rng.uniform(0, 2)), g_plus_cd()),
                    Payload::monomial(ExpVec{0, 0, 1})};
      break;
  }
  g.form_tag = classify(g);
  return inst;
}

Germ one_point_over_three_point(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
             const Rational& alpha, const Rational& beta,
             const std::vector<std::pair<ExpVec, Rational>>& gamma_terms, std::int64_t trunc) {
  Germ g;
  g.target_kind = PointKind::ThreePoint;
  g.domain_kind = PointKind::OnePoint;
  TruncSeries::Terms t;
  t[ExpVec{0, 0, 0}] = beta;
  for (const auto& [e, q] : gamma_terms) t[e] += q;
  t[ExpVec{d, 0, 1}] += 1;
  std::int64_t window = gamma_terms.empty() ? TruncSeries::kExact : std::max(trunc, d + 2);
  g.payloads = {Payload::monomial(ExpVec{a, 0, 0}),
                Payload::with_series(ExpVec{b, 0, 0}, TruncSeries::translated_axis(1, alpha)),
                Payload::with_series(ExpVec{c, 0, 0}, TruncSeries(t, window))};
  g.constants["alpha"] = alpha;
  g.constants["beta"] = beta;
  g.form_tag = classify(g);
  return g;
}

Germ one_point_over_two_point(std::int64_t a, std::int64_t b, std::int64_t c, const Rational& alpha,
             const std::vector<std::pair<ExpVec, Rational>>& g_terms) {
  Germ g;
  g.target_kind = PointKind::TwoPoint;
  g.domain_kind = PointKind::OnePoint;
  TruncSeries::Terms t;
  for (const auto& [e, q] : g_terms) t[e] += q;
  t[ExpVec{c, 0, 1}] += 1;
  g.payloads = {Payload::monomial(ExpVec{a, 0, 0}),
                Payload::with_series(ExpVec{b, 0, 0}, TruncSeries::translated_axis(1, alpha)),
                Payload::with_series(ExpVec{0, 0, 0}, TruncSeries(t, TruncSeries::kExact))};
  g.constants["alpha"] = alpha;
  g.form_tag = classify(g);
  return g;
}

ThreePointGerm random_three_point(Rng& rng, PointKind target) {
  ThreePointGerm t;
  t.target_kind = target;
  auto vec = [&](std::int64_t hi) {
    return ExpVec{rng.uniform(0, hi), rng.uniform(0, hi), rng.uniform(0, hi)};
  };
  do {
    t.u_exp = vec(9);
    t.v_exp = vec(9);
  } while (rank_of({t.u_exp, t.v_exp}) != 2);
  // Nonnegative integer points of the rational span of u and v.
  std::vector<ExpVec> span;
  for (std::int64_t den = 1; den <= 3; ++den)
    for (std::int64_t p = -3; p <= 3; ++p)
      for (std::int64_t q = -3; q <= 3; ++q) {
        ExpVec s = t.u_exp.scaled(p) + t.v_exp.scaled(q);
        bool ok = true;
        ExpVec m(3);
        for (std::size_t i = 0; i < 3 && ok; ++i) {
          ok = s[i] % den == 0 && s[i] >= 0;
          m[i] = ok ? s[i] / den : 0;
        }
        if (ok && !m.is_zero() && std::find(span.begin(), span.end(), m) == span.end())
          span.push_back(m);
      }
  std::sort(span.begin(), span.end());
  std::int64_t count = rng.uniform(0, 4);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ExpVec> ms;
    if (count > 0) {
      ExpVec m0 = rng.pick(span);
      ms.push_back(m0);
      for (std::int64_t i = 1; i < count; ++i) {
        ExpVec m = target == PointKind::ThreePoint ? m0 + rng.pick(span) : rng.pick(span);
        if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
      }
    }
    ExpVec n = vec(6);
    if (target == PointKind::ThreePoint && !ms.empty()) n = n + ms.front();
    if (std::any_of(ms.begin(), ms.end(), [&](const ExpVec& m) { return n.divides(m); })) {
      auto axis = static_cast<std::size_t>(rng.uniform(0, 2));
      std::int64_t top = 0;
      for (const auto& m : ms) top = std::max(top, m[axis]);
      n[axis] = top + rng.uniform(1, 3);
    }
    if (rank_of({t.u_exp, t.v_exp, n}) != 3) continue;
    t.n_exp = n;
    t.series_terms.clear();
    for (const auto& m : ms) t.series_terms.emplace_back(rng.nonzero_rational(), m);
    t.sort_terms();
    return t;
  }
  fail(ErrorCode::InvalidArgument, "could not draw exponent data");
}

SubMatrix random_chart_chain(Rng& rng, int length) {
  SubMatrix m = SubMatrix::identity();
  for (int i = 0; i < length; ++i) m = m.then(random_elementary(rng));
  return m;
}

FanInput random_fan_instance(Rng& rng, int pre_subdivisions, int count, std::int64_t max_coef) {
  SmoothFan fan = SmoothFan::octant();
  for (int i = 0; i < pre_subdivisions; ++i) {
    if (rng.uniform(0, 2) == 0) {
      fan = star_subdivide_3cone(fan, static_cast<int>(rng.uniform(
                                          0, static_cast<std::int64_t>(fan.cones().size()) - 1)));
    } else {
      std::vector<Face> faces;
      for (const auto& [f, incident] : fan.faces()) faces.push_back(f);
      fan = star_subdivide_2cone(fan, rng.pick(faces));
    }
  }
  FanInput in{SmoothFan(fan.rays(), fan.cones()), {}};
  for (int k = 0; k < count; ++k) {
    Divisor d;
    for (std::size_t r = 0; r < fan.rays().size(); ++r) d.push_back(rng.uniform(0, max_coef));
    in.divisors.divisors.push_back(std::move(d));
  }
  return in;
}

}  // namespace toroidal
