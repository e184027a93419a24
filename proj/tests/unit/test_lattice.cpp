#include "doctest.h"

#include <vector>

#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/suite.hpp"

using namespace toroidal;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

void check_decomposition(const IntMatrix& m) {
  SnfResult r = smith_normal_form(m);
  CHECK(r.U * m * r.V == r.D);
  CHECK(r.U.det() * r.U.det() == 1);
  CHECK(r.V.det() * r.V.det() == 1);
  auto f = r.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("diagonal 2 and 3") {
    IntMatrix m{{2, 0}, {0, 3}};
    CHECK(smith_normal_form(m).invariant_factors() == ints({1, 6}));
    check_decomposition(m);
  }
  SUBCASE("gcd of entries first") {
    IntMatrix m{{2, 4}, {6, 8}};
    CHECK(smith_normal_form(m).invariant_factors() == ints({2, 4}));
    check_decomposition(m);
  }
  SUBCASE("identity") {
    IntMatrix m = IntMatrix::identity(3);
    CHECK(smith_normal_form(m).D == IntMatrix::identity(3));
  }
  SUBCASE("rank deficient and rectangular") {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}};
    CHECK(smith_normal_form(m).rank() == 1);
    check_decomposition(m);
    check_decomposition(IntMatrix(2, 3));
  }
}

TEST_CASE("smith normal form agrees with the determinantal oracle") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Int(static_cast<long>(rng.uniform(-6, 6)));
    CHECK(smith_normal_form(m).invariant_factors() == oracle::determinantal_invariant_factors(m));
    check_decomposition(m);
  }
}

TEST_CASE("lattice index") {
  std::vector<ExpVec> h{{1, 0}, {0, 1}};
  std::vector<ExpVec> a{{2, 0}, {0, 3}};
  CHECK(*lattice_index(h, a).order == 6);
  CHECK(*lattice_index(a, a).order == 1);

  std::vector<ExpVec> h2{{2, 0}, {1, 1}};
  std::vector<ExpVec> a2{{2, 0}, {0, 2}};
  CHECK(*lattice_index(h2, a2).order == 2);
  std::vector<ExpVec> h3{{2, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  std::vector<ExpVec> a3d{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  CHECK(*oracle::coset_index(h3, a3d) == 2);
  CHECK_THROWS_AS(oracle::coset_index(h2, a2), Error);

  std::vector<ExpVec> a3{{2, 0}};
  CHECK(lattice_index(h, a3).is_infinite());

  std::vector<ExpVec> even{{2, 0}, {0, 2}};
  std::vector<ExpVec> odd{{1, 0}};
  CHECK_THROWS_AS(lattice_index(even, odd), Error);
  try {
    lattice_index(even, odd);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASublattice);
  }
}

TEST_CASE("rank and determinants") {
  CHECK(rank_of({ExpVec{2, 0, 2}, ExpVec{0, 2, 2}, ExpVec{3, 0, 1}}) == 3);
  CHECK(det3(ExpVec{2, 0, 2}, ExpVec{0, 2, 2}, ExpVec{3, 0, 1}) == -8);
  CHECK(rank_of({ExpVec{1, 0, 0}, ExpVec{2, 0, 0}}) == 1);
  CHECK(det3(SubMatrix::identity()) == 1);
}

TEST_CASE("substitution matrices") {
  SubMatrix chart = SubMatrix::identity();
  chart(1, 0) = 1;  // y = x1 * y1
  CHECK(chart.apply(ExpVec{1, 2, 0}) == ExpVec{3, 2, 0});
  CHECK(chart.is_unimodular());

  SUBCASE("composition is substitution in sequence") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      SubMatrix p = random_chart_chain(rng, 2), q = random_chart_chain(rng, 2),
                r = random_chart_chain(rng, 2);
      ExpVec v{rng.uniform(0, 9), rng.uniform(0, 9), rng.uniform(0, 9)};
      CHECK(p.then(q).apply(v) == q.apply(p.apply(v)));
      CHECK(p.then(q).then(r) == p.then(q.then(r)));
      CHECK(p.then(q).is_nonnegative());
      CHECK(p.then(q).is_unimodular());
    }
  }
}
