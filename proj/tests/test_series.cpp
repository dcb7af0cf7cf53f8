#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctlab/series.hpp"

using namespace ctlab;

namespace {

using RS = LaurentSeries<Rational>;

ExponentVector ev(std::initializer_list<int32_t> e) { return ExponentVector(e); }

RS term(std::vector<std::string> vars, ExponentVector e, Rational c) {
  return RS::monomial(std::move(vars), e, std::move(c));
}

FactorSpec int_factor(ExponentVector m, long e) {
  FactorSpec f;
  f.monomial = m;
  f.kind = FactorKind::IntegerPower;
  f.int_exponent = e;
  return f;
}

FactorSpec log_factor(ExponentVector m, long order) {
  FactorSpec f;
  f.monomial = m;
  f.kind = FactorKind::Logarithm;
  f.order = order;
  return f;
}

}  // namespace

TEST_CASE("expand_factor: integer, log, formal") {
  std::vector<std::string> xy = {"x", "y"};

  RS sq = expand_factor<Rational>(int_factor(ev({1, -1}), 2), xy);
  RS want = term(xy, ev({0, 0}), 1) + term(xy, ev({1, -1}), -2) +
            term(xy, ev({2, -2}), 1);
  CHECK(sq == want);

  RS lg = expand_factor<Rational>(log_factor(ev({1, -1}), 2), xy);
  RS lgw = term(xy, ev({1, -1}), -1) + term(xy, ev({2, -2}), rat(-1, 2));
  CHECK(lg == lgw);

  FactorSpec fu;
  fu.monomial = ev({1, 0});
  fu.kind = FactorKind::FormalU;
  fu.order = 2;
  LaurentSeries<UniPoly> s = expand_factor<UniPoly>(fu, xy);
  UniPoly u = UniPoly::var();
  CHECK(s.coeff(ev({0, 0})) == UniPoly(1));
  CHECK(s.coeff(ev({1, 0})) == -u);
  CHECK(s.coeff(ev({2, 0})) == (u * u - u) / 2);
  CHECK(s.term_count() == 3);

  CHECK_THROWS_AS(expand_factor<Rational>(log_factor(ev({1, -1}), 0), xy),
                  std::invalid_argument);

  // shifted formal exponent: (1 - x)^(u + 1)
  FactorSpec fs;
  fs.monomial = ev({1, 0});
  fs.kind = FactorKind::FormalU;
  fs.int_exponent = 1;
  fs.order = 1;
  LaurentSeries<UniPoly> shifted = expand_factor<UniPoly>(fs, xy);
  CHECK(shifted.coeff(ev({0, 0})) == UniPoly(1));
  CHECK(shifted.coeff(ev({1, 0})) == -(UniPoly::var() + UniPoly(1)));
}

TEST_CASE("window arity mismatch is rejected") {
  std::vector<std::string> xy = {"x", "y"};
  RS a = expand_factor<Rational>(int_factor(ev({1, -1}), 1), xy);
  CHECK_THROWS_AS(a.mul(a, Window::box(3, -1, 1)), std::invalid_argument);
}

TEST_CASE("windowed products") {
  std::vector<std::string> xy = {"x", "y"};
  RS a = expand_factor<Rational>(int_factor(ev({1, -1}), 1), xy);
  RS b = expand_factor<Rational>(int_factor(ev({-1, 1}), 1), xy);

  RS prod = a.mul(b);
  RS want = term(xy, ev({0, 0}), 2) + term(xy, ev({1, -1}), -1) +
            term(xy, ev({-1, 1}), -1);
  CHECK(prod == want);

  // restricting to the zero monomial keeps only the constant term
  RS only_ct = a.mul(b, Window::box(2, 0, 0));
  CHECK(only_ct == term(xy, ev({0, 0}), 2));

  RS x = term(xy, ev({1, 0}), 1);
  RS xinv = term(xy, ev({-1, 0}), 1);
  CHECK(x.mul(xinv, Window::box(2, -3, 3)) == RS::one(xy));

  CHECK_THROWS_AS(a.mul(RS::one({"x"})), std::invalid_argument);
}

TEST_CASE("degree-zero-only window flag") {
  std::vector<std::string> xs = {"x"};
  RS f = expand_factor<Rational>(int_factor(ev({1}), 1), xs);    // 1 - x
  RS g = expand_factor<Rational>(int_factor(ev({-1}), 1), xs);   // 1 - 1/x
  Window w = Window::unbounded(1);
  w.degree_zero_only = true;
  CHECK(f.mul(g, w) == term(xs, ev({0}), 2));
}

TEST_CASE("constant term") {
  std::vector<std::string> xy = {"x", "y"};
  RS a = expand_factor<Rational>(int_factor(ev({1, -1}), 1), xy);
  RS b = expand_factor<Rational>(int_factor(ev({-1, 1}), 1), xy);
  CHECK(a.mul(b).constant_term() == 2);  // Dyson n=2, a=(1,1) -> 2!/1!1!
  CHECK(RS::zero(xy).constant_term() == 0);
}

TEST_CASE("log-Dyson style product by hand has constant term 1") {
  // Delta(X) (x1 x2 x3)^-1 log(1 - x2/x1), logs truncated at order 3
  std::vector<std::string> xyz = {"x1", "x2", "x3"};
  RS delta = vandermonde(xyz);
  RS pref = term(xyz, ev({-1, -1, -1}), 1);
  RS lg = expand_factor<Rational>(log_factor(ev({-1, 1, 0}), 3), xyz);
  RS prod = delta.mul(pref).mul(lg);
  CHECK(prod.constant_term() == 1);
}

TEST_CASE("substitute") {
  std::vector<std::string> xy = {"x", "y"};
  RS f = term(xy, ev({1, -1}), 1);  // x/y
  std::vector<ExponentVector> inv = {ev({-1, 0}), ev({0, -1})};
  CHECK(f.substitute(inv) == term(xy, ev({-1, 1}), 1));

  std::vector<ExponentVector> ident = {ev({1, 0}), ev({0, 1})};
  RS g = term(xy, ev({2, -1}), rat(3, 7)) + term(xy, ev({0, 1}), -2);
  CHECK(g.substitute(ident) == g);
}

TEST_CASE("dehomogenize") {
  std::vector<std::string> xy = {"x", "y"};
  RS f = term(xy, ev({0, 0}), 2) + term(xy, ev({1, -1}), -1) +
         term(xy, ev({-1, 1}), -1);
  RS d = f.dehomogenize();
  CHECK(d.var_count() == 1);
  CHECK(d.coeff(ev({0})) == 2);
  CHECK(d.coeff(ev({1})) == -1);
  CHECK(d.coeff(ev({-1})) == -1);

  CHECK(RS::zero(xy).dehomogenize().is_zero());

  RS bad = term(xy, ev({1, 0}), 1);
  CHECK_THROWS_AS(bad.dehomogenize(), std::domain_error);

  // constant term commutes with dehomogenization
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    RS h = RS::zero(xy);
    for (int t = 0; t < 6; ++t) {
      int32_t d0 = e(rng);
      h = h + term(xy, ev({d0, -d0}), c(rng));
    }
    CHECK(h.dehomogenize().constant_term() == h.constant_term());
  }
}

TEST_CASE("vandermonde product") {
  RS v2 = vandermonde({"x1", "x2"});
  CHECK(v2 == term({"x1", "x2"}, ev({1, 0}), 1) +
                  term({"x1", "x2"}, ev({0, 1}), -1));

  RS v3 = vandermonde({"x1", "x2", "x3"});
  CHECK(v3.term_count() == 6);
  for (const auto& [e, c] : v3.terms()) CHECK((c == 1 || c == -1));

  RS v1 = vandermonde({"x"});
  CHECK(v1 == RS::one({"x"}));

  // skew-symmetry under a transposition
  std::vector<ExponentVector> swap12 = {ev({0, 1, 0}), ev({1, 0, 0}),
                                        ev({0, 0, 1})};
  CHECK(v3.substitute(swap12) == -v3);
}

TEST_CASE("skew-symmetrized polynomials have vanishing constant term") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  std::vector<std::string> vars = {"x1", "x2", "x3"};
  std::vector<ExponentVector> swap12 = {ev({0, 1, 0}), ev({1, 0, 0}),
                                        ev({0, 0, 1})};
  for (int trial = 0; trial < 50; ++trial) {
    RS f = RS::zero(vars);
    for (int t = 0; t < 8; ++t) {
      ExponentVector m(3);
      for (int i = 0; i < 3; ++i) m[i] = e(rng);
      f = f + term(vars, m, c(rng));
    }
    RS g = f - f.substitute(swap12);  // s(g) = -g
    CHECK(g.substitute(swap12) == -g);
    CHECK(g.constant_term() == 0);
  }
}

TEST_CASE("constant term is invariant under variable permutations") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
    RS f = RS::zero(vars);
    for (int t = 0; t < 10; ++t) {
      ExponentVector m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = e(rng);
      f = f + term(vars, m, c(rng));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<ExponentVector> images;
      for (std::size_t i = 0; i < n; ++i) {
        ExponentVector im(n);
        im[perm[i]] = 1;
        images.push_back(im);
      }
      CHECK(f.substitute(images).constant_term() == f.constant_term());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("window exactness for Laurent polynomial kernels") {
  // once the window contains the support, the constant term is stable
  std::vector<std::string> xy = {"x", "y"};
  RS a = expand_factor<Rational>(int_factor(ev({1, -1}), 2), xy);
  RS b = expand_factor<Rational>(int_factor(ev({-1, 1}), 2), xy);
  Rational ct_small = a.mul(b, Window::box(2, -2, 2)).constant_term();
  Rational ct_big = a.mul(b, Window::box(2, -4, 4)).constant_term();
  Rational ct_huge = a.mul(b, Window::box(2, -8, 8)).constant_term();
  CHECK(ct_small == ct_big);
  CHECK(ct_big == ct_huge);
}

TEST_CASE("mul is associative and commutative under a degree-zero window") {
  // The window must contain the intermediate supports for reordering to
  // be harmless; with a wide degree-zero-restricted box the filter
  // commutes with any association order.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(-2, 2), c(-4, 4);
  std::vector<std::string> vars = {"x", "y"};
  Window w = Window::box(2, -12, 12);
  w.degree_zero_only = true;
  for (int trial = 0; trial < 30; ++trial) {
    auto rand_series = [&] {
      RS f = RS::zero(vars);
      for (int t = 0; t < 5; ++t) {
        int32_t d = e(rng);
        f = f + term(vars, ev({d, -d}), c(rng));
      }
      return f;
    };
    RS f = rand_series(), g = rand_series(), h = rand_series();
    CHECK(f.mul(g, w) == g.mul(f, w));
    CHECK(f.mul(g, w).mul(h, w) == f.mul(g.mul(h, w), w));
    CHECK(f.mul(g, w).mul(h, w) == f.mul(g).mul(h));
  }
}

TEST_CASE("mul is window-monotone: shrinking the window only removes terms") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  std::vector<std::string> vars = {"x", "y"};
  for (int trial = 0; trial < 30; ++trial) {
    auto rand_series = [&] {
      RS f = RS::zero(vars);
      for (int t = 0; t < 6; ++t) {
        ExponentVector m(2);
        m[0] = e(rng);
        m[1] = e(rng);
        f = f + term(vars, m, c(rng));
      }
      return f;
    };
    RS f = rand_series(), g = rand_series();
    Window small = Window::box(2, -2, 2), big = Window::box(2, -6, 6);
    RS with_small = f.mul(g, small);
    RS with_big = f.mul(g, big);
    for (const auto& [m, coeff] : with_small.terms()) {
      CHECK(small.contains(m));
      CHECK(with_big.coeff(m) == coeff);
    }
    for (const auto& [m, coeff] : with_big.terms())
      if (small.contains(m)) CHECK(with_small.coeff(m) == coeff);
  }
}

TEST_CASE("infer_log_window bounds and oracle") {
  std::vector<std::string> xy = {"x", "y"};
  // poly part with x-exponents spanning [-3, 3]
  RS poly = term(xy, ev({-3, 3}), 1) + term(xy, ev({3, -3}), 2) +
            term(xy, ev({1, -1}), rat(1, 2));
  auto lw = infer_log_window(poly.per_var_range(), {ev({-1, 1})});
  REQUIRE(lw.orders.size() == 1);
  CHECK(lw.orders[0] <= 6);

  // oracle: recompute the constant term at order + 5 and compare
  RS lg = expand_factor<Rational>(log_factor(ev({-1, 1}), lw.orders[0] ? lw.orders[0] : 1), xy);
  RS lg_more = expand_factor<Rational>(log_factor(ev({-1, 1}), lw.orders[0] + 5), xy);
  CHECK(poly.mul(lg).constant_term() == poly.mul(lg_more).constant_term());

  // empty-ish poly part: the log alone contributes nothing at exponent 0
  auto lw0 = infer_log_window({{0, 0}, {0, 0}}, {ev({-1, 1})});
  CHECK(lw0.orders[0] == 0);
  RS one = RS::one(xy);
  RS lg1 = expand_factor<Rational>(log_factor(ev({-1, 1}), 4), xy);
  CHECK(one.mul(lg1).constant_term() == 0);
}

TEST_CASE("log order inference is exact on a log-Morris style kernel") {
  // Delta(X) prod x_i^-1 prod_{i != j} (1 - x_i/x_j) with one log factor
  std::vector<std::string> v = {"x1", "x2", "x3"};
  RS finite = vandermonde(v).mul(term(v, ev({-1, -1, -1}), 1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      ExponentVector m(3);
      m[i] = 1;
      m[j] = -1;
      finite = finite.mul(expand_factor<Rational>(int_factor(m, 1), v));
    }
  auto lw = infer_log_window(finite.per_var_range(), {ev({-1, 1, 0})});
  RS at_bound = finite.mul(
      expand_factor<Rational>(log_factor(ev({-1, 1, 0}), lw.orders[0]), v));
  RS at_12 = finite.mul(expand_factor<Rational>(log_factor(ev({-1, 1, 0}), 12), v));
  RS at_17 = finite.mul(expand_factor<Rational>(log_factor(ev({-1, 1, 0}), 17), v));
  CHECK(at_bound.constant_term() == at_12.constant_term());
  CHECK(at_12.constant_term() == at_17.constant_term());
}

TEST_CASE("dump format") {
  std::vector<std::string> xy = {"x", "y"};
  RS f = term(xy, ev({1, -1}), rat(-1, 2)) + term(xy, ev({0, 0}), 2);
  CHECK(f.dump() == "0 0 : 2\n1 -1 : -1/2\n");
}
