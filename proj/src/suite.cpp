#include "toroidal/suite.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "toroidal/blowup.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/jacobian.hpp"
#include "toroidal/principalize.hpp"
#include "toroidal/relations.hpp"
#include "toroidal/tau.hpp"

namespace toroidal {

namespace {

constexpr std::size_t kMaxFailures = 5;

struct Collector {
  CriterionResult r;

  Collector(std::string id, std::string title) {
    r.id = std::move(id);
    r.title = std::move(title);
    r.pass = true;
  }
  void failure(const std::string& msg) {
    r.pass = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(msg);
  }
  void check(bool ok, const std::string& msg) {
    if (!ok) failure(msg);
  }
};

std::string describe(const ThreePointGerm& g) { return to_json(g).dump(); }

ThreePointGerm swapped_uv(const ThreePointGerm& g) {
  ThreePointGerm s = g;
  std::swap(s.u_exp, s.v_exp);
  return s;
}

const std::vector<std::array<int, 3>>& all_permutations() {
  static const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return perms;
}

/// Nonnegative unimodular subs of every monomial domain chart of the 2-curve
/// and 3-point blow-ups at a 3-point.
std::vector<Chart> monomial_domain_charts() {
  std::vector<Chart> out;
  const std::array<bool, 3> boundary{true, true, true};
  for (const auto& axes : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}})
    for (const auto& ch : blowup_charts(Side::Domain, CenterKind::TwoCurve, axes, boundary, {}))
      out.push_back(ch);
  for (const auto& ch :
       blowup_charts(Side::Domain, CenterKind::ThreePoint, {0, 1, 2}, boundary, {}))
    out.push_back(ch);
  return out;
}

Int minor_det(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Int term = m[0][j] * minor_det(sub);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

using IVec = std::array<Int, 3>;

struct Hermite {
  std::vector<std::pair<IVec, std::size_t>> rows;  // (row, pivot column)

  explicit Hermite(std::span<const ExpVec> gens) {
    std::vector<IVec> m;
    for (const auto& g : gens) m.push_back(IVec{Int(static_cast<long>(g[0])),
                                                Int(static_cast<long>(g[1])),
                                                Int(static_cast<long>(g[2]))});
    std::size_t r = 0;
    for (std::size_t col = 0; col < 3 && r < m.size(); ++col) {
      while (true) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
          if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col])))
            best = i;
        if (best == m.size()) break;
        std::swap(m[r], m[best]);
        bool done = true;
        for (std::size_t i = r + 1; i < m.size(); ++i) {
          if (m[i][col] == 0) continue;
          Int q = m[i][col] / m[r][col];
          for (std::size_t k = 0; k < 3; ++k) m[i][k] -= q * m[r][k];
          if (m[i][col] != 0) done = false;
        }
        if (done) {
          if (m[r][col] < 0)
            for (auto& x : m[r]) x = -x;
          rows.emplace_back(m[r], col);
          ++r;
          break;
        }
      }
    }
  }

  IVec reduce(IVec v) const {
    for (const auto& [row, col] : rows) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), row[col].get_mpz_t());
      for (std::size_t k = 0; k < 3; ++k) v[k] -= q * row[k];
    }
    return v;
  }
};

std::string key_of(const IVec& v) {
  return v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str();
}

bool lex_less(const OmegaValue& a, const OmegaValue& b) { return a < b; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

namespace oracle {

std::vector<Int> determinantal_invariant_factors(const IntMatrix& m) {
  std::vector<Int> out;
  std::size_t n = std::min(m.rows(), m.cols());
  Int prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        Int d = minor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::optional<Int> coset_index(std::span<const ExpVec> h, std::span<const ExpVec> a,
                               std::size_t cap) {
  for (auto vs : {h, a})
    for (const auto& v : vs)
      if (v.size() != 3) fail(ErrorCode::InvalidArgument, "coset enumeration needs rank-3 vectors");
  if (rank_of(h) != rank_of(a)) return std::nullopt;
  Hermite basis(a);
  std::set<std::string> seen;
  std::deque<IVec> queue;
  IVec zero{Int(0), Int(0), Int(0)};
  seen.insert(key_of(zero));
  queue.push_back(zero);
  while (!queue.empty()) {
    IVec cur = queue.front();
    queue.pop_front();
    for (const auto& g : h)
      for (int sign : {1, -1}) {
        IVec next = cur;
        for (std::size_t k = 0; k < 3; ++k) next[k] += sign * Int(static_cast<long>(g[k]));
        next = basis.reduce(next);
        if (seen.insert(key_of(next)).second) {
          if (seen.size() > cap) return std::nullopt;
          queue.push_back(next);
        }
      }
  }
  return Int(static_cast<unsigned long>(seen.size()));
}

}  // namespace oracle

Json CriterionResult::to_json() const {
  return Json{{"id", id},   {"title", title},       {"pass", pass},
              {"cases", cases}, {"failures", failures}, {"metrics", metrics}};
}

bool SuiteReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass; });
}

Json provenance(std::uint64_t seed, std::int64_t trunc) {
  return Json{{"tool", "toroidal"}, {"version", TOROIDAL_VERSION}, {"seed", seed},
              {"trunc_degree", trunc}};
}

Json SuiteReport::to_json() const {
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& c : criteria) {
    arr.push_back(c.to_json());
    passed += c.pass;
  }
  return Json{{"provenance", provenance(config.seed, config.trunc)},
              {"criteria", arr},
              {"summary", {{"passed", passed}, {"failed", criteria.size() - passed}}}};
}

CriterionResult check_tau_invariance(const SuiteConfig& cfg) {
  Collector col("tau_invariance", "tau is invariant under unimodular charts, u/v swap and axis permutations");
  Rng rng(derive_seed(cfg.seed, 1));
  std::map<std::string, std::int64_t> histogram;
  std::int64_t evaluations = 0;
  for (int i = 0; i < 500; ++i) {
    PointKind target = i % 2 == 0 ? PointKind::TwoPoint : PointKind::ThreePoint;
    ThreePointGerm g = random_three_point(rng, target);
    try {
      TauValue base = tau_of(g);
      ++histogram[base.to_string()];
      for (int c = 0; c < 20; ++c) {
        SubMatrix sub = random_chart_chain(rng, static_cast<int>(rng.uniform(1, 6)));
        TauValue t = tau_of(apply_domain_sub(g, sub));
        ++evaluations;
        col.check(t == base, "chain " + sub.to_string() + " changes tau of " + describe(g) +
                                 " from " + base.to_string() + " to " + t.to_string());
      }
      TauValue sw = tau_of(swapped_uv(g));
      ++evaluations;
      col.check(sw == base, "u/v swap changes tau of " + describe(g));
      for (const auto& perm : all_permutations()) {
        TauValue t = tau_of(apply_domain_sub(g, SubMatrix::permutation(perm)));
        ++evaluations;
        col.check(t == base, "axis permutation changes tau of " + describe(g));
      }
    } catch (const Error& e) {
      col.failure(std::string(e.what()) + " on " + describe(g));
    }
    ++col.r.cases;
  }
  col.r.metrics = Json{{"germs", col.r.cases}, {"tau_evaluations", evaluations},
                       {"tau_histogram", histogram}};
  return col.r;
}

CriterionResult check_tau_blowups(const SuiteConfig& cfg) {
  Collector col("tau_blowups", "tau is unchanged by monomial domain charts and 2-point target charts");
  Rng rng(derive_seed(cfg.seed, 2));
  auto charts = monomial_domain_charts();
  std::int64_t transforms = 0;
  for (int i = 0; i < 300; ++i) {
    PointKind target = i % 2 == 0 ? PointKind::TwoPoint : PointKind::ThreePoint;
    ThreePointGerm g = random_three_point(rng, target);
    try {
      for (const auto& ch : charts) {
        auto [before, after] = tau_preserved_under(g, ch.sub);
        ++transforms;
        col.check(before == after, "chart " + ch.label + " changes tau of " + describe(g));
      }
      if (target == PointKind::TwoPoint) {
        TauValue base = tau_of(g);
        for (bool mirror : {false, true}) {
          TauValue t = tau_of(apply_target_chart(g, mirror));
          ++transforms;
          col.check(t == base, std::string("target chart ") + (mirror ? "v" : "u") +
                                   " changes tau of " + describe(g));
        }
      }
    } catch (const Error& e) {
      col.failure(std::string(e.what()) + " on " + describe(g));
    }
    ++col.r.cases;
  }
  col.r.metrics = Json{{"germs", col.r.cases},
                       {"domain_charts", charts.size()},
                       {"transforms", transforms}};
  return col.r;
}

CriterionResult check_resolver_sweep(const SuiteConfig& cfg) {
  Collector col("resolver_sweep",
                "every 3-point pre-relation with |a|,|b|,|c| <= 12 resolves with a descending certificate");
  Rng rng(derive_seed(cfg.seed, 3));
  constexpr int kBound = 12;
  constexpr int kBudget = 200;
  int max_steps = 0, max_depth = 0;
  std::int64_t resolved = 0, exited = 0;
  for (int a = -kBound; a <= kBound; ++a)
    for (int b = -kBound; b <= kBound; ++b)
      for (int c = -kBound; c <= kBound; ++c) {
        ThreePointPreRel r{a, b, c, rng.nonzero_rational()};
        if (!r.violations().empty()) continue;
        ++col.r.cases;
        try {
          ResolveResult res = resolve3(r, kBudget);
          max_steps = std::max(max_steps, res.steps);
          max_depth = std::max(max_depth, res.tree.depth());
          for (const auto& e : res.certificate)
            col.check(e.descends(), "certificate step " + e.case_tag + " at node " +
                                        std::to_string(e.node) + " does not descend for " +
                                        r.to_string());
          for (int leaf : res.tree.leaves()) {
            const ChartNode& n = res.tree.node(leaf);
            bool done = n.status == "Resolved" || n.status == "Exited";
            resolved += n.status == "Resolved";
            exited += n.status == "Exited";
            col.check(done, "leaf " + std::to_string(leaf) + " of " + r.to_string() +
                                " has status " + n.status);
            ExpVec replay = res.tree.composite_sub(leaf).apply(r.exponents());
            const Json& rel = n.data.at("relation");
            ExpVec stored{rel.at("a").get<std::int64_t>(), rel.at("b").get<std::int64_t>(),
                          rel.at("c").get<std::int64_t>()};
            col.check(replay == stored, "replaying the charts to leaf " + std::to_string(leaf) +
                                            " of " + r.to_string() + " disagrees");
            bool mixed = std::any_of(stored.begin(), stored.end(), [](auto x) { return x > 0; }) &&
                         std::any_of(stored.begin(), stored.end(), [](auto x) { return x < 0; });
            col.check(!mixed, "leaf of " + r.to_string() + " still has mixed signs");
          }
        } catch (const Error& e) {
          col.failure(std::string(e.what()) + " for " + r.to_string());
        }
      }
  col.r.metrics = Json{{"prerelations", col.r.cases}, {"budget", kBudget},
                       {"max_steps", max_steps},      {"max_depth", max_depth},
                       {"resolved_leaves", resolved}, {"exited_leaves", exited}};
  return col.r;
}

namespace {

void check_principalize_run(Collector& col, const FanInput& in, const PrincipalizeResult& res,
                            Rng& rng, const std::string& what) {
  col.check(res.principal, what + ": final state is not locally principal");
  col.check(res.fan.is_smooth(), what + ": final fan is not smooth");
  col.check(res.fan.is_simplicial_complex(), what + ": final fan is not a simplicial complex");
  for (std::size_t i = 0; i < res.history.size(); ++i) {
    const auto& rec = res.history[i];
    col.check(rec.smooth, what + ": fan not smooth after round " + std::to_string(rec.round));
    col.check(rec.confined, what + ": a center of round " + std::to_string(rec.round) +
                                " lies outside the non-principal support");
    if (i > 0 && res.history[i - 1].stage == rec.stage)
      col.check(lex_less(rec.omega_bar, res.history[i - 1].omega_bar),
                what + ": omega_bar " + rec.omega_bar.to_string() + " does not drop below " +
                    res.history[i - 1].omega_bar.to_string());
  }
  for (int s = 0; s < 20; ++s) {
    std::array<Rational, 3> p;
    for (auto& x : p) x = Rational(static_cast<long>(rng.uniform(0, 20)), static_cast<long>(rng.uniform(1, 7)));
    bool inside = in.fan.contains(p);
    col.check(res.fan.contains(p) == inside, what + ": support changed");
  }
}

}  // namespace

CriterionResult check_principalization(const SuiteConfig& cfg) {
  Collector col("principalization",
                "omega descent principalizes pairs and triples of divisors on smooth fans");
  Rng rng(derive_seed(cfg.seed, 4));
  std::size_t max_rounds = 0, max_rays = 0;
  for (int i = 0; i < 100; ++i) {
    FanInput in = random_fan_instance(rng, static_cast<int>(rng.uniform(0, 5)), 2, 10);
    std::string what = "pair instance " + std::to_string(i);
    try {
      auto res = principalize_pair(in.fan, in.divisors.divisors[0], in.divisors.divisors[1]);
      check_principalize_run(col, in, res, rng, what);
      max_rounds = std::max(max_rounds, res.history.size());
      max_rays = std::max(max_rays, res.fan.rays().size());
    } catch (const Error& e) {
      col.failure(what + ": " + e.what());
    }
    ++col.r.cases;
  }
  std::size_t max_rounds_many = 0;
  for (int i = 0; i < 50; ++i) {
    FanInput in = random_fan_instance(rng, static_cast<int>(rng.uniform(0, 5)), 3, 10);
    std::string what = "triple instance " + std::to_string(i);
    try {
      auto res = principalize_many(in.fan, in.divisors);
      check_principalize_run(col, in, res, rng, what);
      max_rounds_many = std::max(max_rounds_many, res.history.size());
      max_rays = std::max(max_rays, res.fan.rays().size());
    } catch (const Error& e) {
      col.failure(what + ": " + e.what());
    }
    ++col.r.cases;
  }
  col.r.metrics = Json{{"pair_instances", 100},        {"triple_instances", 50},
                       {"max_rounds_pair", max_rounds}, {"max_rounds_triple", max_rounds_many},
                       {"max_rays", max_rays}};
  return col.r;
}

CriterionResult check_jacobian(const SuiteConfig& cfg) {
  Collector col("jacobian", "lambda = 1 on toroidal forms and lambda != 1 on the excluded forms");
  Rng rng(derive_seed(cfg.seed, 5));
  Json per_form = Json::object();
  for (int form = 1; form <= 6; ++form) {
    std::int64_t ok = 0;
    FormTag tag = static_cast<FormTag>(static_cast<int>(FormTag::Toroidal1) + form - 1);
    for (int i = 0; i < 100; ++i) {
      Germ g = random_toroidal(rng, form, cfg.trunc);
      std::string what = std::string(form_tag_name(tag)) + " instance " + to_json(g).dump();
      try {
        col.check(classify(g) == tag, what + " is classified as " +
                                          std::string(form_tag_name(classify(g))));
        LambdaReport rep = lambda_of(g);
        bool all_one = rep.all_one();
        col.check(all_one, what + " has a component with lambda != 1");
        ClassifyVerdict v = classify_by_lambda(g);
        col.check(v.kind == ClassifyVerdict::Kind::Toroidal && v.tag == tag,
                  what + " is not recognized as toroidal: " + v.reason);
        ok += all_one;
      } catch (const Error& e) {
        col.failure(what + ": " + e.what());
      }
      ++col.r.cases;
    }
    per_form[std::string(form_tag_name(tag))] = ok;
  }
  const std::map<ExcludedShape, FormTag> expected_tag = {
      {ExcludedShape::PerturbedW2, FormTag::TF22},
      {ExcludedShape::PerturbedW3, FormTag::TF22},
      {ExcludedShape::PerturbedW1, FormTag::TF02},
      {ExcludedShape::PerturbedV, FormTag::Prep2c}};
  for (ExcludedShape eq : excluded_shapes()) {
    std::int64_t witnessed = 0;
    for (int i = 0; i < 100; ++i) {
      ExcludedInstance inst = random_excluded(rng, eq, cfg.trunc);
      std::string what = std::string(excluded_shape_name(eq)) + " instance " + to_json(inst.germ).dump();
      try {
        col.check(classify(inst.germ) == expected_tag.at(eq),
                  what + " is classified as " + std::string(form_tag_name(classify(inst.germ))));
        LambdaReport rep = lambda_of(inst.germ);
        bool identities = rep.components.size() == 2 && rep.components[0].lambda == 1 - inst.c &&
                          rep.components[1].lambda == 1 - inst.d;
        col.check(identities, what + " violates lambda(E) = 1 - c, lambda(E') = 1 - d");
        ClassifyVerdict v = classify_by_lambda(inst.germ);
        bool witness = v.kind == ClassifyVerdict::Kind::Counterexample;
        col.check(witness, what + " has lambda = 1 on every component");
        witnessed += witness;
      } catch (const Error& e) {
        col.failure(what + ": " + e.what());
      }
      ++col.r.cases;
    }
    per_form[std::string(excluded_shape_name(eq))] = witnessed;
  }
  col.r.metrics = Json{{"lambda_one_or_witnessed", per_form}};
  return col.r;
}

CriterionResult check_lattice(const SuiteConfig& cfg) {
  Collector col("lattice", "Smith normal form and lattice index agree with brute-force oracles");
  Rng rng(derive_seed(cfg.seed, 6));
  for (int i = 0; i < 200; ++i) {
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Int(static_cast<long>(rng.uniform(-9, 9)));
    try {
      SnfResult snf = smith_normal_form(m);
      col.check(snf.U * m * snf.V == snf.D, "U M V != D for " + m.to_string());
      col.check(abs(snf.U.det()) == 1 && abs(snf.V.det()) == 1,
                "transforms are not unimodular for " + m.to_string());
      bool diagonal = true;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (r != c && snf.D(r, c) != 0) diagonal = false;
      col.check(diagonal, "D is not diagonal for " + m.to_string());
      col.check(snf.invariant_factors() == oracle::determinantal_invariant_factors(m),
                "invariant factors disagree with the minors oracle for " + m.to_string());
    } catch (const Error& e) {
      col.failure(std::string(e.what()) + " on " + m.to_string());
    }
    ++col.r.cases;
  }
  int index_cases = 0, infinite_cases = 0, redraws = 0;
  while (index_cases < 200) {
    std::vector<ExpVec> h, a;
    for (std::int64_t k = rng.uniform(1, 4); k > 0; --k)
      h.push_back(ExpVec{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)});
    for (std::int64_t k = rng.uniform(1, 4); k > 0; --k) {
      ExpVec v(3);
      for (const auto& g : h) v = v + g.scaled(rng.uniform(-3, 3));
      a.push_back(v);
    }
    bool finite = rank_of(h) == rank_of(a);
    std::optional<Int> expected;
    if (finite) {
      expected = oracle::coset_index(h, a);
      if (!expected) {
        ++redraws;
        continue;
      }
    }
    ++index_cases;
    ++col.r.cases;
    std::string what = "H rank " + std::to_string(rank_of(h)) + ", A rank " +
                       std::to_string(rank_of(a));
    try {
      LatticeIndex idx = lattice_index(h, a);
      if (!finite) {
        ++infinite_cases;
        col.check(idx.is_infinite(), "finite index for " + what);
      } else {
        col.check(!idx.is_infinite() && *idx.order == *expected,
                  "index " + idx.to_string() + " but coset enumeration gives " +
                      expected->get_str() + " for " + what);
      }
    } catch (const Error& e) {
      col.failure(std::string(e.what()) + " for " + what);
    }
  }
  col.r.metrics = Json{{"snf_cases", 200},
                       {"index_cases", index_cases},
                       {"infinite_index_cases", infinite_cases},
                       {"oracle_redraws", redraws}};
  return col.r;
}

CriterionResult check_descent(const SuiteConfig& cfg) {
  (void)cfg;
  Collector col("descent", "A(C) descent ends within A rounds at invertible point ideals");
  std::int64_t states_one = 0, states_two = 0, max_rounds = 0;
  auto run = [&](DescentState s) {
    std::int64_t budget = s.invariant();
    std::int64_t rounds = 0;
    std::string start = s.to_string();
    try {
      while (true) {
        ++rounds;
        std::optional<DescentState> next;
        for (const auto& [chart, child] : a_descent_step(s, Rational(1))) {
          if (const auto* r = std::get_if<Resolved>(&child)) {
            col.check(ideal_invertible({r->u, r->v, r->w}),
                      start + ": leaf " + chart.label + " is not invertible");
          } else {
            next = std::get<DescentState>(child);
            col.check(next->invariant() < s.invariant(),
                      start + ": A does not drop in chart " + chart.label);
          }
        }
        if (!next) break;
        if (rounds > budget) {
          col.failure(start + ": more than A rounds");
          break;
        }
        s = *next;
      }
    } catch (const Error& e) {
      col.failure(start + ": " + e.what());
    }
    max_rounds = std::max(max_rounds, rounds);
    col.check(rounds <= budget, start + ": " + std::to_string(rounds) + " rounds exceed A = " +
                                    std::to_string(budget));
    ++col.r.cases;
  };
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t d = 0; d <= 8; ++d) {
        auto s = DescentState::at_one_point(a, b, d);
        if (!s.violations().empty()) continue;
        ++states_one;
        run(s);
      }
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t c = 0; c <= 8; ++c)
        for (std::int64_t d = 0; d <= 8; ++d)
          for (std::int64_t g = 0; g <= 8; ++g)
            for (std::int64_t h = 0; h <= 8; ++h) {
              auto s = DescentState::at_two_point(a, b, c, d, g, h);
              if (!s.violations().empty()) continue;
              ++states_two;
              run(s);
            }
  col.r.metrics = Json{{"one_point_states", states_one},
                       {"two_point_states", states_two},
                       {"max_rounds", max_rounds}};
  return col.r;
}

namespace {

const std::vector<CriterionInfo>& property_criteria() {
  static const std::vector<CriterionInfo> list = {
      {"tau_invariance", check_tau_invariance}, {"tau_blowups", check_tau_blowups},
      {"resolver_sweep", check_resolver_sweep}, {"principalization", check_principalization},
      {"jacobian", check_jacobian},             {"lattice", check_lattice},
      {"descent", check_descent}};
  return list;
}

std::string serialize(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(r.to_json());
  return arr.dump();
}

CriterionResult compare_runs(const std::vector<CriterionResult>& first,
                             const std::vector<CriterionResult>& second) {
  Collector col("determinism", "two runs with the same seed give byte-identical reports");
  std::string a = serialize(first), b = serialize(second);
  col.r.cases = static_cast<std::int64_t>(first.size());
  for (std::size_t i = 0; i < first.size() && i < second.size(); ++i)
    col.check(first[i].to_json().dump() == second[i].to_json().dump(),
              "criterion " + first[i].id + " differs between runs");
  col.check(a == b, "serialized reports differ");
  col.r.metrics = Json{{"report_bytes", a.size()}, {"compared_criteria", first.size()}};
  return col.r;
}

CriterionResult timed(const CriterionInfo& info, const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = info.run(cfg);
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

CriterionResult check_determinism(const SuiteConfig& cfg) {
  std::vector<CriterionResult> first, second;
  for (const auto& c : property_criteria()) first.push_back(c.run(cfg));
  for (const auto& c : property_criteria()) second.push_back(c.run(cfg));
  return compare_runs(first, second);
}

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = [] {
    auto l = property_criteria();
    l.push_back({"determinism", check_determinism});
    return l;
  }();
  return list;
}

SuiteReport run_suite(const SuiteConfig& cfg, const std::vector<std::string>& only,
                      const std::function<void(const CriterionResult&)>& on_result) {
  auto wanted = [&](const std::string& id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };
  SuiteReport rep;
  rep.config = cfg;
  std::vector<CriterionResult> first;
  bool all_properties = true;
  for (const auto& c : property_criteria()) {
    if (!wanted(c.id)) {
      all_properties = false;
      continue;
    }
    first.push_back(timed(c, cfg));
    rep.criteria.push_back(first.back());
    if (on_result) on_result(first.back());
  }
  if (wanted("determinism")) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult det;
    if (all_properties) {
      std::vector<CriterionResult> second;
      for (const auto& c : property_criteria()) second.push_back(c.run(cfg));
      det = compare_runs(first, second);
    } else {
      det = check_determinism(cfg);
    }
    det.seconds = seconds_since(t0);
    rep.criteria.push_back(det);
    if (on_result) on_result(det);
  }
  return rep;
}

}  // namespace toroidal
