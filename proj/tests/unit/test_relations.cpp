#include "doctest.h"

#include <numeric>
#include <regex>
#include <sstream>
#include <variant>

#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/relations.hpp"

using namespace toroidal;

namespace {

ExpVec exps(std::int64_t a, std::int64_t b, std::int64_t c) { return ExpVec{a, b, c}; }

/// Strict transform of F = x^lead - coef x^rest under a monomial chart,
/// computed by substituting both terms and dividing out their common factor.
struct Binomial {
  ExpVec p, q;
  Rational coef;
};

Binomial strict_transform(const SurfaceForm& f, const SubMatrix& sub) {
  ExpVec p = sub.apply(f.lead), q = sub.apply(f.rest);
  ExpVec g = ExpVec::min(p, q);
  return {p - g, q - g, f.coef};
}

bool same_surface(const Binomial& b, const SurfaceForm& f) {
  if (b.p == f.lead && b.q == f.rest) return b.coef == f.coef;
  if (b.p == f.rest && b.q == f.lead) return 1 / b.coef == f.coef;
  return false;
}

}  // namespace

TEST_CASE("surface forms") {
  SurfaceForm f = f_form(ThreePointPreRel{-1, -1, 2, Rational(3)});
  CHECK(f.lead == exps(0, 0, 2));
  CHECK(f.rest == exps(1, 1, 0));
  CHECK(f.coef == 3);
  CHECK(f.to_string() == "F = w^2 - 3*u*v");

  SurfaceForm g = f_form(ThreePointPreRel{2, -1, 3, Rational(2)});
  CHECK(g.lead == exps(0, 1, 0));
  CHECK(g.rest == exps(2, 0, 3));
  CHECK(g.coef == Rational(1, 2));

  SurfaceForm unit = f_form(TwoPointPreRel{3, -1, -2, Rational(1)});
  CHECK(unit.is_unit);
  CHECK_FALSE(f_form(TwoPointPreRel{3, 1, -2, Rational(1)}).is_unit);
  CHECK(f_form(TwoPointPreRel::degenerate()).lead == exps(0, 0, 1));
}

TEST_CASE("pre-relation invariants") {
  CHECK(ThreePointPreRel{1, 1, -3, 1}.violations().empty());
  CHECK_FALSE(ThreePointPreRel{2, 2, -4, 1}.violations().empty());
  CHECK_FALSE(ThreePointPreRel{1, 2, 3, 1}.violations().empty());
  CHECK_FALSE(ThreePointPreRel{1, -1, 0, 0}.violations().empty());
  CHECK(TwoPointPreRel{2, 1, 1, 1}.violations().empty());
  CHECK_FALSE(TwoPointPreRel{2, 2, 4, 1}.violations().empty());
  CHECK_FALSE(TwoPointPreRel{1, 1, 1, 1}.violations().empty());
}

TEST_CASE("normal forms") {
  NormalForm3 a = normalize3(ThreePointPreRel{1, 1, -3, 2});
  CHECK(a.abar == 1);
  CHECK(a.bbar == 1);
  CHECK(a.cbar == 3);
  CHECK(a.lambda == Rational(1, 2));

  NormalForm3 b = normalize3(ThreePointPreRel{0, 1, -1, 1});
  CHECK(b.abar == 0);
  CHECK(b.bbar == 1);
  CHECK(b.cbar == 1);
  CHECK(b.side_condition());

  NormalForm3 c = normalize3(ThreePointPreRel{5, -1, -1, 1});
  CHECK(c.abar == 1);
  CHECK(c.bbar == 1);
  CHECK(c.cbar == 5);
  CHECK(c.role_map[2] == 0);

  SUBCASE("side condition swap") {
    NormalForm3 raw = normalize3_raw(ThreePointPreRel{-2, 0, 3, 1});
    CHECK(raw.abar == 2);
    CHECK(raw.bbar == 0);
    CHECK(raw.cbar == 3);
    CHECK_FALSE(raw.side_condition());
    NormalForm3 canon = canonicalize(raw);
    CHECK(canon.side_condition());
    CHECK(canon.abar == 3);
    CHECK(canon.cbar == 2);
  }
  SUBCASE("normal forms describe the same relation") {
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c) {
          ThreePointPreRel r{a, b, c, Rational(2, 3)};
          if (!r.violations().empty()) continue;
          NormalForm3 nf = normalize3(r);
          CHECK(nf.side_condition());
          ThreePointPreRel back = relation_of(nf);
          bool same = back == r ||
                      (back == ThreePointPreRel{-a, -b, -c, 1 / r.lambda});
          CHECK(same);
        }
  }
}

TEST_CASE("single resolution steps") {
  SUBCASE("a + b < c") {
    ResolveStep s = resolve3_step(normalize3(ThreePointPreRel{1, 1, -3, 1}));
    CHECK(s.case_tag == "a+b<c");
    REQUIRE(s.children.size() == 2);
    std::vector<std::int64_t> cbars;
    for (const auto& ch : s.children) {
      REQUIRE(ch.normal);
      cbars.push_back(ch.normal->cbar);
    }
    std::sort(cbars.begin(), cbars.end());
    CHECK(cbars == std::vector<std::int64_t>{1, 2});
  }
  SUBCASE("a >= c with b = 0") {
    ResolveStep s = resolve3_step(normalize3(ThreePointPreRel{-3, 0, 2, 1}));
    CHECK(s.case_tag == "a>=c");
    int exits = 0, continuing = 0;
    for (const auto& ch : s.children) {
      if (ch.kind == LeafKind::Exited) ++exits;
      if (ch.normal) {
        ++continuing;
        CHECK(ch.raw->cbar == 2);
        CHECK(ch.raw->abar == 1);
      }
    }
    CHECK(exits == 1);
    CHECK(continuing == 1);
  }
  SUBCASE("final case") {
    ResolveStep s = resolve3_step(normalize3(ThreePointPreRel{2, 2, -3, 1}));
    CHECK(s.case_tag == "a,b<c<=a+b");
    for (const auto& ch : s.children) {
      REQUIRE(ch.normal);
      CHECK(ch.normal->cbar < 3);
    }
  }
}

TEST_CASE("resolution trees") {
  SUBCASE("(1, 1, -3)") {
    ResolveResult r = resolve3(ThreePointPreRel{1, 1, -3, 1}, 100);
    CHECK(r.tree.depth() == 6);
    for (int leaf : r.tree.leaves()) {
      const auto& st = r.tree.node(leaf).status;
      CHECK((st == "Resolved" || st == "Exited"));
      const Json& rel = r.tree.node(leaf).data.at("relation");
      ThreePointPreRel lr{rel.at("a").get<std::int64_t>(), rel.at("b").get<std::int64_t>(),
                          rel.at("c").get<std::int64_t>(), 1};
      CHECK_FALSE(lr.exponents().is_zero());
      bool mixed = std::min({lr.a, lr.b, lr.c}) < 0 && std::max({lr.a, lr.b, lr.c}) > 0;
      CHECK_FALSE(mixed);
    }
    for (const auto& e : r.certificate) CHECK(e.descends());
  }
  SUBCASE("(0, 1, -1) resolves in one step") {
    ResolveResult r = resolve3(ThreePointPreRel{0, 1, -1, 1});
    CHECK(r.steps == 1);
    CHECK(r.tree.depth() == 1);
  }
  SUBCASE("(5, -1, -1)") {
    ResolveResult r = resolve3(ThreePointPreRel{5, -1, -1, Rational(-2)});
    for (const auto& e : r.certificate) CHECK(e.descends());
    for (int leaf : r.tree.leaves()) CHECK(r.tree.node(leaf).status != "open");
  }
  SUBCASE("invalid input and budget") {
    CHECK_THROWS_AS(resolve3(ThreePointPreRel{0, 0, 1, 1}), Error);
    try {
      resolve3(ThreePointPreRel{1, 1, -12, 1}, 2);
      FAIL("budget ignored");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StepBudgetExceeded);
    }
  }
  SUBCASE("replaying recorded charts reproduces every node") {
    ThreePointPreRel input{-7, 3, 5, Rational(5, 2)};
    ResolveResult r = resolve3(input);
    for (const auto& n : r.tree.nodes()) {
      ExpVec replay = r.tree.composite_sub(n.id).apply(input.exponents());
      const Json& rel = n.data.at("relation");
      CHECK(replay == exps(rel.at("a").get<std::int64_t>(), rel.at("b").get<std::int64_t>(),
                           rel.at("c").get<std::int64_t>()));
    }
  }
}

TEST_CASE("resolution tree as DOT") {
  ResolveResult r = resolve3(ThreePointPreRel{1, 1, -3, 1});
  std::string dot = r.tree.to_dot("resolve3");
  CHECK(dot.rfind("digraph resolve3 {", 0) == 0);
  std::regex node_re(R"(n(\d+) \[label="chart:([^\\"]+))");
  std::regex edge_re(R"(n(\d+) -> n(\d+) \[label="([^"]+)\"\])");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_search(line, m, edge_re)) {
      ++edges;
      int child = std::stoi(m[2]);
      CHECK(r.tree.node(child).parent == std::stoi(m[1]));
      CHECK(m[3] == r.tree.node(child).chart->substitution());
    } else if (std::regex_search(line, m, node_re)) {
      int id = std::stoi(m[1]);
      const auto& n = r.tree.node(id);
      CHECK(m[2] == (n.chart ? n.chart->label : std::string("root")));
      ++nodes;
    }
  }
  CHECK(nodes == r.tree.nodes().size());
  CHECK(edges + 1 == nodes);
}

TEST_CASE("transforms of pre-relations") {
  SUBCASE("3-point relation under u = u1, v = u1 v1") {
    auto charts = target_charts(ThreePointPreRel{-1, -1, 2, 1}, 2);
    bool found = false;
    for (const auto& [chart, out] : charts) {
      if (chart.substitution() != "u=u1, v=u1*v1, w=w1") continue;
      found = true;
      const auto* t = std::get_if<ThreePointPreRel>(&out);
      REQUIRE(t != nullptr);
      CHECK(t->exponents() == exps(-2, -1, 2));
    }
    CHECK(found);
  }
  SUBCASE("2-point relation under the point center") {
    auto charts = target_charts(TwoPointPreRel{2, 1, 1, Rational(3)}, 1);
    bool found = false;
    for (const auto& [chart, out] : charts) {
      if (chart.sub(0, 0) != 1 || chart.sub(1, 0) != 1 || chart.sub(2, 0) != 1) continue;
      if (const auto* t = std::get_if<TwoPointPreRel>(&out)) {
        found = true;
        CHECK(t->e == 2);
        CHECK(*t->a == 0);
        CHECK(*t->b == 1);
        CHECK(t->lambda == 3);
      }
    }
    CHECK(found);
  }
  SUBCASE("2-curve center on a 2-point relation") {
    auto charts = target_charts(TwoPointPreRel{3, 1, 2, Rational(5)}, 2);
    REQUIRE(charts.size() == 2);
    for (const auto& [chart, out] : charts) {
      const auto* t = std::get_if<TwoPointPreRel>(&out);
      REQUIRE(t != nullptr);
      CHECK(t->e == 3);
      CHECK(t->lambda == 5);
      if (chart.substitution() == "u=u1, v=u1*v1, w=w1") {
        CHECK(*t->a == 3);
        CHECK(*t->b == 2);
      } else {
        CHECK(chart.substitution() == "u=u1*v1, v=v1, w=w1");
        CHECK(*t->a == 1);
        CHECK(*t->b == 3);
      }
    }
  }
  SUBCASE("the degenerate relation is unchanged") {
    for (const auto& [chart, out] : target_charts(TwoPointPreRel::degenerate(), 2)) {
      const auto* t = std::get_if<TwoPointPreRel>(&out);
      REQUIRE(t != nullptr);
      CHECK(t->is_degenerate());
    }
  }
  SUBCASE("point charts are rejected for 3-point relations") {
    CHECK_THROWS_AS(target_charts(ThreePointPreRel{-1, -1, 2, 1}, 1), Error);
  }
}

TEST_CASE("transforms agree with substituting the surface equation") {
  Rng rng(23);
  int checked = 0;
  while (checked < 200) {
    ThreePointPreRel r{rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6),
                       rng.nonzero_rational()};
    if (!r.violations().empty()) continue;
    int form = rng.coin() ? 2 : 3;
    for (const auto& [chart, out] : target_charts(r, form)) {
      Binomial b = strict_transform(f_form(r), chart.sub);
      if (std::holds_alternative<Dropped>(out)) {
        CHECK((b.p.is_zero() || b.q.is_zero()));
      } else {
        CHECK(same_surface(b, f_form(std::get<ThreePointPreRel>(out))));
      }
    }
    ++checked;
  }
}
