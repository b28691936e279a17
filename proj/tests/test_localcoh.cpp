#include "modinv/localcoh.hpp"

#include <numeric>

#include "doctest.h"
#include "modinv/steenrod.hpp"

using namespace modinv;

namespace {

std::shared_ptr<const Group> make_group(const PolyRingPtr& ring,
                                        std::vector<MatrixGF> gens) {
  return std::make_shared<const Group>(Group::close(ring, std::move(gens)));
}

std::shared_ptr<KoszulEngine> variable_engine(const PolyRingPtr& ring) {
  IdealSpec ideal;
  for (int i = 0; i < ring->nvars(); ++i)
    ideal.generators.push_back(Polynomial::variable(ring, i));
  return std::make_shared<KoszulEngine>(make_group(ring, trivial_generators()),
                                        std::move(ideal));
}

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// C(-a, r) mod p as a field code.
FieldCode neg_binom(const FieldSpecPtr& F, int a, int r) {
  FieldCode c = F->from_int(binomial_mod_p(a + r - 1, r, F->p()));
  return r % 2 == 0 ? c : F->neg(c);
}

// Window-basis coordinates of the top class represented by the Laurent
// monomial with denominator exponents a (all positive).
std::vector<FieldCode> laurent_class(KoszulEngine& eng,
                                     const GradedCohomologyWindow& w,
                                     const std::vector<int>& a) {
  const PolyRingPtr& ring = eng.group().ring();
  int n = -std::accumulate(a.begin(), a.end(), 0);
  auto h = eng.cohomology(w.index(), w.truncation(), n);
  REQUIRE(h.layout.subsets.size() == 1);
  Exponents e(ring->nvars());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = w.truncation() - a[i];
  Polynomial num = Polynomial::monomial(ring, e, ring->field()->one());
  const InvariantSpace& sp = eng.cache().get(num.total_degree());
  std::vector<FieldCode> coords = sp.coords_of(num);
  MatrixGF v(ring->field(), h.layout.total, 1);
  for (int r = 0; r < sp.dim(); ++r) v.set(r, 0, coords[r]);
  auto cc = eng.class_coords(h, v);
  REQUIRE(cc.has_value());
  return cc->column(0);
}

void axpy(const FieldSpecPtr& F, std::vector<FieldCode>& acc, FieldCode c,
          const std::vector<FieldCode>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    acc[i] = F->add(acc[i], F->mul(c, v[i]));
}

// Compositions of r into `parts` nonnegative entries.
void compositions(int r, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= r; ++i) {
    cur.push_back(i);
    compositions(r - i, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Q^r on a top Laurent class from the expansion Q(x^-a) = P(x)^-a: the ksi^r
// coefficient of prod_i x_i^-a_i (1 + x_i^(q-1) ksi)^-a_i, dropping terms whose
// exponents leave the strictly negative range.
std::vector<FieldCode> laurent_induced_q(KoszulEngine& eng,
                                         const GradedCohomologyWindow& w,
                                         const std::vector<int>& a, int r) {
  const FieldSpecPtr& F = eng.group().ring()->field();
  int q = static_cast<int>(F->q());
  int n = -std::accumulate(a.begin(), a.end(), 0);
  int m = n + r * (q - 1);
  std::vector<FieldCode> acc(w.dim(m), F->zero());
  std::vector<std::vector<int>> splits;
  std::vector<int> cur;
  compositions(r, static_cast<int>(a.size()), cur, splits);
  for (const auto& rs : splits) {
    std::vector<int> shifted(a.size());
    bool alive = true;
    FieldCode coeff = F->one();
    for (std::size_t i = 0; i < a.size(); ++i) {
      shifted[i] = a[i] - rs[i] * (q - 1);
      if (shifted[i] < 1) alive = false;
      coeff = F->mul(coeff, neg_binom(F, a[i], rs[i]));
    }
    if (!alive || coeff == F->zero()) continue;
    axpy(F, acc, coeff, laurent_class(eng, w, shifted));
  }
  return acc;
}

// Q^r(s.c) must equal sum_{i+j=r} P^i(s).Q^j(c) in window coordinates.
void check_cartan_on_class(const GradedCohomologyWindow& w, const Polynomial& s,
                           int n, const std::vector<FieldCode>& coords, int r) {
  const FieldSpecPtr& F = s.ring()->field();
  ClassVector sc = w.multiply(s, n, coords);
  REQUIRE(sc.status == ClassOpStatus::ok);
  ClassVector lhs = w.induced_q(r, sc.degree, sc.coords);
  REQUIRE(lhs.status == ClassOpStatus::ok);
  std::vector<FieldCode> acc(lhs.coords.size(), F->zero());
  for (int i = 0; i <= r; ++i) {
    Polynomial pis = steenrod_power(static_cast<std::size_t>(i), s);
    if (pis.is_zero()) continue;
    ClassVector qjc = w.induced_q(r - i, n, coords);
    REQUIRE(qjc.status == ClassOpStatus::ok);
    ClassVector term = w.multiply(pis, qjc.degree, qjc.coords);
    REQUIRE(term.status == ClassOpStatus::ok);
    REQUIRE(term.degree == lhs.degree);
    axpy(F, acc, F->one(), term.coords);
  }
  CHECK(lhs.coords == acc);
}

}  // namespace

TEST_SUITE_BEGIN("localcoh");

TEST_CASE("one-variable Koszul cohomology matches the quotient oracle") {
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = PolyRing::create(FieldSpec::create(p, 1), 1);
    auto eng = variable_engine(ring);
    for (int t = 1; t <= 6; ++t) {
      for (int n = -8; n <= 3; ++n) {
        CHECK(eng->cohomology(0, t, n).dim == 0);
        int expect = n >= -t && n <= -1 ? 1 : 0;
        CHECK(eng->cohomology(1, t, n).dim == expect);
      }
    }
  }
}

TEST_CASE("transitions commute with the differential") {
  auto ring = PolyRing::create(FieldSpec::create(3, 1), 2);
  auto eng = variable_engine(ring);
  for (int t : {1, 2, 3}) {
    for (int n : {-4, -3, 0, 2}) {
      for (int level : {0, 1}) {
        auto from = eng->layout(level, t, n);
        auto from_up = eng->layout(level + 1, t, n);
        MatrixGF lhs = eng->level_transition(from_up) * eng->differential(from);
        auto shifted = eng->layout(level, t + 1, n);
        MatrixGF rhs = eng->differential(shifted) * eng->level_transition(from);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("window dimensions follow the Laurent expansion") {
  struct Case {
    std::uint32_t p;
    int d, lo, hi, t_max;
  };
  for (const Case& c : {Case{2, 1, -6, 2, 8}, Case{3, 1, -6, 2, 8},
                        Case{2, 2, -5, 0, 7}, Case{3, 2, -5, 0, 7},
                        Case{2, 3, -5, -1, 6}}) {
    auto ring = PolyRing::create(FieldSpec::create(c.p, 1), c.d);
    auto eng = variable_engine(ring);
    for (int i = 0; i < c.d; ++i) {
      auto low = colimit_window(eng, i, c.lo, c.hi, c.t_max);
      CHECK(low.all_zero());
      CHECK(low.all_stabilized());
    }
    auto top = colimit_window(eng, c.d, c.lo, c.hi, c.t_max);
    CHECK(top.all_stabilized());
    for (int n = c.lo; n <= c.hi; ++n) {
      long long expect = n < 0 ? binom_ll(-n - 1, c.d - 1) : 0;
      CHECK(top.dim(n) == expect);
      CHECK(static_cast<int>(top.report(n).dim_history.size()) == c.t_max);
    }
  }
}

TEST_CASE("Laurent monomial classes form a basis of the top window") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng = variable_engine(ring);
  auto w = colimit_window(eng, 2, -5, -1, 7);
  for (int k = 2; k <= 5; ++k) {
    std::vector<std::vector<FieldCode>> cols;
    for (int a = 1; a < k; ++a) cols.push_back(laurent_class(*eng, w, {a, k - a}));
    MatrixGF m = MatrixGF::from_columns(ring->field(), w.dim(-k), cols);
    CHECK(m.rank() == w.dim(-k));
    CHECK(m.rank() == k - 1);
  }
}

TEST_CASE("deeper windows refine shallow zero readings") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 1);
  auto eng = variable_engine(ring);
  auto shallow = colimit_window(eng, 1, -5, -5, 4);
  CHECK(shallow.dim(-5) == 0);
  CHECK(shallow.report(-5).dim_history == std::vector<int>{0, 0, 0, 0});
  // The flag only certifies the transitions at the reporting truncation, so a
  // window too shallow to see the class still reads as stabilized at zero.
  CHECK(shallow.stabilized(-5));
  auto deep = colimit_window(eng, 1, -5, -5, 8);
  CHECK(deep.dim(-5) == 1);
  CHECK(deep.stabilized(-5));
  CHECK(deep.report(-5).dim_history == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1});
}

TEST_CASE("a non-Artinian window never stabilizes") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  IdealSpec ideal{{Polynomial::variable(ring, 0)}};
  auto eng = std::make_shared<KoszulEngine>(make_group(ring, trivial_generators()),
                                            std::move(ideal));
  auto w = colimit_window(eng, 1, -2, 1, 5);
  for (int n = -2; n <= 1; ++n) {
    CHECK_FALSE(w.stabilized(n));
    const auto& hist = w.report(n).dim_history;
    CHECK(hist.back() > hist.front());
  }
  std::vector<FieldCode> unit(w.dim(-2), ring->field()->zero());
  unit[0] = ring->field()->one();
  auto res = w.multiply(Polynomial::variable(ring, 1), -2, unit);
  CHECK(res.status == ClassOpStatus::not_stabilized);
}

TEST_CASE("radical-equal generator lists give the same window") {
  auto field = FieldSpec::create(2, 1);
  auto algebra = dickson_by_roots(field, 2);
  const PolyRingPtr& ring = algebra.ring;
  auto group = make_group(ring, trivial_generators());
  auto eng_vars = variable_engine(ring);
  auto eng_dickson =
      std::make_shared<KoszulEngine>(group, IdealSpec{algebra.generators});
  for (int i = 1; i <= 2; ++i) {
    auto a = colimit_window(eng_vars, i, -5, -2, 7);
    auto b = colimit_window(eng_dickson, i, -5, -2, 7);
    auto cmp = compare_windows(a, b);
    CHECK(cmp.agree);
    CHECK(cmp.differing_degrees.empty());
  }
  auto w = colimit_window(eng_vars, 2, -5, -2, 7);
  auto v = colimit_window(eng_dickson, 1, -5, -2, 7);
  CHECK_THROWS_AS(compare_windows(w, colimit_window(eng_dickson, 2, -5, -3, 7)),
                  std::invalid_argument);
  CHECK(v.all_zero());
}

TEST_CASE("invariant-ring window over GL(2,2) matches the free-algebra oracle") {
  auto field = FieldSpec::create(2, 1);
  auto algebra = dickson_by_roots(field, 2);
  const PolyRingPtr& ring = algebra.ring;
  auto group = make_group(ring, full_gl_generators(field, 2));
  auto eng =
      std::make_shared<KoszulEngine>(group, IdealSpec{algebra.generators});
  auto low = colimit_window(eng, 1, -9, -4, 5);
  CHECK(low.all_zero());
  CHECK(low.all_stabilized());
  auto top = colimit_window(eng, 2, -9, -4, 5);
  CHECK(top.all_stabilized());
  // dim at n counts (a, b) with a, b >= 1 and 3a + 2b = -n.
  std::map<int, int> expect{{-9, 1}, {-8, 1}, {-7, 1}, {-6, 0}, {-5, 1}, {-4, 0}};
  for (const auto& [n, dim] : expect) CHECK(top.dim(n) == dim);
}

TEST_CASE("representatives rebuild their own classes") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng = variable_engine(ring);
  auto w = colimit_window(eng, 2, -4, -2, 7);
  for (int n = -4; n <= -2; ++n) {
    auto h = eng->cohomology(2, w.truncation(), n);
    for (int k = 0; k < w.dim(n); ++k) {
      auto rep = w.representative(n, k);
      REQUIRE(rep.size() == 1);
      CHECK(rep[0].degree() == n);
      CHECK(rep[0].base() == Polynomial::variable(ring, 0) *
                                 Polynomial::variable(ring, 1));
      Polynomial pushed = rep[0].num() * rep[0].base().pow(static_cast<unsigned>(
                              w.truncation() - rep[0].exp()));
      const InvariantSpace& sp = eng->cache().get(pushed.total_degree());
      std::vector<FieldCode> coords = sp.coords_of(pushed);
      MatrixGF v(ring->field(), h.layout.total, 1);
      for (int r = 0; r < sp.dim(); ++r) v.set(r, 0, coords[r]);
      auto cc = eng->class_coords(h, v);
      REQUIRE(cc.has_value());
      std::vector<FieldCode> unit(w.dim(n), ring->field()->zero());
      unit[k] = ring->field()->one();
      CHECK(cc->column(0) == unit);
    }
  }
}

TEST_CASE("multiplication acts like the Laurent module structure") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng = variable_engine(ring);
  auto w = colimit_window(eng, 2, -5, -1, 7);
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);
  for (int k = 3; k <= 5; ++k) {
    for (int a = 1; a < k; ++a) {
      std::vector<int> exps{a, k - a};
      auto cls = laurent_class(*eng, w, exps);
      auto rx = w.multiply(x, -k, cls);
      REQUIRE(rx.status == ClassOpStatus::ok);
      std::vector<FieldCode> expect(w.dim(-k + 1), ring->field()->zero());
      if (a - 1 >= 1) expect = laurent_class(*eng, w, {a - 1, k - a});
      CHECK(rx.coords == expect);
      auto rxy = w.multiply(x * y, -k, cls);
      REQUIRE(rxy.status == ClassOpStatus::ok);
      auto ry_after = w.multiply(y, -k + 1, rx.coords);
      REQUIRE(ry_after.status == ClassOpStatus::ok);
      CHECK(rxy.coords == ry_after.coords);
    }
  }
  auto off = w.multiply(x.pow(6), -5, laurent_class(*eng, w, {2, 3}));
  CHECK(off.status == ClassOpStatus::outside_window);
}

TEST_CASE("induced operations match the negative-binomial expansion") {
  struct Case {
    std::uint32_t p;
    int d, lo, hi, t_max;
    std::vector<std::vector<int>> denominators;
    std::vector<int> rs;
  };
  std::vector<Case> cases{
      {2, 2, -5, -1, 7,
       {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}, {1, 4}, {2, 3}},
       {1, 2}},
      {3, 1, -5, 0, 8, {{1}, {2}, {3}, {4}, {5}}, {1, 2}},
      {3, 2, -6, 0, 8, {{1, 2}, {2, 2}, {2, 3}, {1, 4}, {4, 1}, {3, 3}}, {1}},
  };
  for (const auto& c : cases) {
    auto ring = PolyRing::create(FieldSpec::create(c.p, 1), c.d);
    auto eng = variable_engine(ring);
    auto w = colimit_window(eng, c.d, c.lo, c.hi, c.t_max);
    int q = static_cast<int>(ring->field()->q());
    for (const auto& a : c.denominators) {
      int n = -std::accumulate(a.begin(), a.end(), 0);
      auto cls = laurent_class(*eng, w, a);
      auto r0 = w.induced_q(0, n, cls);
      REQUIRE(r0.status == ClassOpStatus::ok);
      CHECK(r0.coords == cls);
      for (int r : c.rs) {
        int m = n + r * (q - 1);
        auto got = w.induced_q(r, n, cls);
        if (!w.in_window(m)) {
          CHECK(got.status == ClassOpStatus::outside_window);
          continue;
        }
        REQUIRE(got.status == ClassOpStatus::ok);
        CHECK(got.degree == m);
        CHECK(got.coords == laurent_induced_q(*eng, w, a, r));
      }
    }
  }
}

TEST_CASE("induced q1 has rank two from degree -4 over GF(2)") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng = variable_engine(ring);
  auto w = colimit_window(eng, 2, -5, -1, 7);
  std::vector<std::vector<FieldCode>> cols;
  for (int k = 0; k < w.dim(-4); ++k) {
    std::vector<FieldCode> unit(w.dim(-4), ring->field()->zero());
    unit[k] = ring->field()->one();
    auto r = w.induced_q(1, -4, unit);
    REQUIRE(r.status == ClassOpStatus::ok);
    cols.push_back(r.coords);
    auto rr = w.induced_q(1, -3, r.coords);
    REQUIRE(rr.status == ClassOpStatus::ok);
    for (FieldCode cc : rr.coords) CHECK(cc == ring->field()->zero());
  }
  MatrixGF m = MatrixGF::from_columns(ring->field(), w.dim(-3), cols);
  CHECK(m.rank() == 2);
  CHECK(m.kernel_basis().cols() == 1);
}

TEST_CASE("induced operations satisfy the Cartan axiom on classes") {
  auto ring2 = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng2 = variable_engine(ring2);
  auto w2 = colimit_window(eng2, 2, -6, -1, 8);
  Polynomial x = Polynomial::variable(ring2, 0);
  Polynomial y = Polynomial::variable(ring2, 1);
  for (const Polynomial& s : {x, x + y, x * y}) {
    for (int k = 0; k < w2.dim(-6); ++k) {
      std::vector<FieldCode> unit(w2.dim(-6), ring2->field()->zero());
      unit[k] = ring2->field()->one();
      for (int r = 1; r <= 2; ++r) check_cartan_on_class(w2, s, -6, unit, r);
    }
  }

  auto ring3 = PolyRing::create(FieldSpec::create(3, 1), 1);
  auto eng3 = variable_engine(ring3);
  auto w3 = colimit_window(eng3, 1, -6, 0, 9);
  Polynomial z = Polynomial::variable(ring3, 0);
  for (int n : {-6, -5}) {
    auto cls = laurent_class(*eng3, w3, {-n});
    for (int r = 1; r <= 2; ++r) check_cartan_on_class(w3, z, n, cls, r);
  }
}

TEST_CASE("window annihilator separates killed and surviving multipliers") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 1);
  auto eng = variable_engine(ring);
  Polynomial x = Polynomial::variable(ring, 0);

  auto deep = colimit_window(eng, 1, -6, -1, 8);
  auto ann_deep = window_annihilator(deep, 4);
  CHECK_FALSE(ann_deep.window_all_zero());
  CHECK(ann_deep.trivial());
  for (int e = 0; e <= 4; ++e) CHECK(ann_deep.piece(e).coords.cols() == 0);
  CHECK_FALSE(ann_deep.contains(x.pow(2)));
  CHECK(ann_deep.contains(Polynomial::zero(ring)));
  CHECK(ann_deep.piece(4).skipped.size() == 4);

  auto shallow = colimit_window(eng, 1, -3, -1, 8);
  auto ann = window_annihilator(shallow, 4);
  CHECK_FALSE(ann.trivial());
  CHECK(ann.piece(1).coords.cols() == 0);
  CHECK(ann.piece(2).coords.cols() == 0);
  // Every degree-3 product leaves the window, so the piece is unconstrained.
  CHECK(ann.piece(3).coords.cols() == 1);
  CHECK(ann.piece(3).skipped.size() == 3);
  CHECK(ann.piece(3).constraints == 0);
  CHECK(ann.contains(x.pow(3)));
  CHECK_THROWS_AS(ann.piece(5), std::invalid_argument);
}

TEST_CASE("annihilator pieces are closed under the Steenrod components") {
  auto ring1 = PolyRing::create(FieldSpec::create(2, 1), 1);
  auto eng1 = variable_engine(ring1);
  auto shallow = colimit_window(eng1, 1, -3, -1, 8);
  auto ann1 = window_annihilator(shallow, 6);
  auto rep1 = pstar_closure_check(ann1);
  CHECK(rep1.pass);
  CHECK(rep1.violations.empty());
  CHECK(rep1.checked > 0);

  auto ring2 = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng2 = variable_engine(ring2);
  auto vac = colimit_window(eng2, 1, -5, -1, 6);
  auto ann2 = window_annihilator(vac, 5);
  CHECK(ann2.window_all_zero());
  auto rep2 = pstar_closure_check(ann2);
  CHECK(rep2.pass);
  CHECK(rep2.skipped > 0);
}

TEST_CASE("annihilator pieces are closed under invariant multiplication") {
  auto ring1 = PolyRing::create(FieldSpec::create(2, 1), 1);
  auto eng1 = variable_engine(ring1);
  auto shallow = colimit_window(eng1, 1, -3, -1, 8);
  auto ann1 = window_annihilator(shallow, 6);
  auto rep1 = invariant_closure_check(ann1);
  CHECK(rep1.pass);
  CHECK(rep1.violations.empty());
  // Nonzero pieces start at degree 3, so the products x^c * x^e with
  // 3 <= e <= 5 and e + c <= 6 are the checked pairs.
  CHECK(rep1.checked == 6);

  auto ring2 = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto eng2 = variable_engine(ring2);
  auto vac = colimit_window(eng2, 1, -5, -1, 6);
  auto ann2 = window_annihilator(vac, 5);
  auto rep2 = invariant_closure_check(ann2);
  CHECK(rep2.pass);
  CHECK(rep2.checked > 0);
}

TEST_CASE("containment probe reports the honest statuses") {
  auto field = FieldSpec::create(2, 1);
  auto algebra2 = dickson_by_roots(field, 2);

  // Top cohomology of the one-variable ring: nothing annihilates.
  auto algebra1 = dickson_by_roots(field, 1);
  auto eng1 = variable_engine(algebra1.ring);
  auto deep = colimit_window(eng1, 1, -6, -1, 8);
  auto ann1 = window_annihilator(deep, 4);
  auto probe1 = dickson_containment_probe(ann1, algebra1, 1);
  CHECK(probe1.status == ProbeStatus::hypothesis_not_met);
  CHECK(probe1.generators.empty());

  // Below-depth window of a Cohen-Macaulay ring: vacuous containment.
  auto eng2 = variable_engine(algebra2.ring);
  auto vac = colimit_window(eng2, 1, -5, -1, 6);
  auto ann2 = window_annihilator(vac, 6);
  auto probe2 = dickson_containment_probe(ann2, algebra2, 2);
  CHECK(probe2.status == ProbeStatus::vacuous_pass);
  REQUIRE(probe2.generators.size() == 2);
  for (const auto& g : probe2.generators) {
    CHECK(g.status == ContainmentStatus::contained);
    CHECK(g.witness_power == 1);
  }

  // Shallow window: x^3 only kills what the window can see.
  auto shallow = colimit_window(eng1, 1, -3, -1, 8);
  auto ann3 = window_annihilator(shallow, 4);
  auto probe3 = dickson_containment_probe(ann3, algebra1, 1);
  CHECK(probe3.status == ProbeStatus::checked);
  REQUIRE(probe3.generators.size() == 1);
  CHECK(probe3.generators[0].status == ContainmentStatus::contained);
  CHECK(probe3.generators[0].witness_power == 3);
  CHECK_FALSE(ann3.piece(3).skipped.empty());

  // A short power bound refutes containment without reaching the cap.
  auto probe4 = dickson_containment_probe(ann3, algebra1, 1, 2);
  CHECK(probe4.status == ProbeStatus::checked);
  CHECK(probe4.generators[0].status == ContainmentStatus::not_contained);

  // A generator too big for the cap comes back inconclusive.
  auto shallow2 = colimit_window(eng2, 2, -3, -1, 7);
  auto ann5 = window_annihilator(shallow2, 2);
  CHECK_FALSE(ann5.trivial());
  auto probe5 = dickson_containment_probe(ann5, algebra2, 2);
  CHECK(probe5.status == ProbeStatus::checked);
  REQUIRE(probe5.generators.size() == 2);
  CHECK(probe5.generators[0].status == ContainmentStatus::inconclusive);
  CHECK(probe5.generators[1].status == ContainmentStatus::contained);
  CHECK(probe5.generators[1].witness_power == 1);
}

TEST_CASE("depth probe certifies and refutes regular sequences") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto group = make_group(ring, trivial_generators());
  InvariantBasisCache cache(group);
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);

  auto ok = depth_probe({x, y}, cache, 8);
  CHECK(ok.regular);
  REQUIRE(ok.steps.size() == 2);
  CHECK(ok.steps[1].tested_up_to == 7);

  auto repeat = depth_probe({x, x}, cache, 8);
  CHECK_FALSE(repeat.regular);
  CHECK(repeat.steps[0].regular);
  CHECK_FALSE(repeat.steps[1].regular);
  CHECK(repeat.steps[1].violation_degree == 0);
  REQUIRE(repeat.steps[1].witness.has_value());
  CHECK(*repeat.steps[1].witness == Polynomial::constant(ring, 1));

  auto mixed = depth_probe({x * y, x * x}, cache, 8);
  CHECK_FALSE(mixed.regular);
  CHECK(mixed.steps[1].violation_degree == 1);
  CHECK(*mixed.steps[1].witness == y);

  CHECK_THROWS_AS(depth_probe({Polynomial::zero(ring)}, cache, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(depth_probe({x + Polynomial::constant(ring, 1)}, cache, 4),
                  std::invalid_argument);
}

TEST_CASE("depth probe passes the Dickson system over GL(2,2)") {
  auto field = FieldSpec::create(2, 1);
  auto algebra = dickson_by_roots(field, 2);
  auto group = make_group(algebra.ring, full_gl_generators(field, 2));
  InvariantBasisCache cache(group);
  auto rep = depth_probe({algebra.generators[1], algebra.generators[0]}, cache, 10);
  CHECK(rep.regular);
  auto rev = depth_probe({algebra.generators[0], algebra.generators[1]}, cache, 10);
  CHECK(rev.regular);
  auto bad = depth_probe({algebra.generators[1], algebra.generators[1]}, cache, 10);
  CHECK_FALSE(bad.regular);
}

TEST_CASE("engine and window inputs are validated") {
  auto ring = PolyRing::create(FieldSpec::create(2, 1), 2);
  auto group = make_group(ring, trivial_generators());
  Polynomial x = Polynomial::variable(ring, 0);
  CHECK_THROWS_AS(KoszulEngine(group, IdealSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(KoszulEngine(group, IdealSpec{{Polynomial::zero(ring)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      KoszulEngine(group, IdealSpec{{x + Polynomial::constant(ring, 1)}}),
      std::invalid_argument);
  auto gl = make_group(ring, full_gl_generators(ring->field(), 2));
  CHECK_THROWS_AS(KoszulEngine(gl, IdealSpec{{x}}), std::invalid_argument);

  auto eng = variable_engine(ring);
  CHECK_THROWS_AS(colimit_window(eng, 2, -3, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(colimit_window(eng, 2, -1, -3, 5), std::invalid_argument);
  auto w = colimit_window(eng, 2, -3, -2, 5);
  CHECK_THROWS_AS(w.report(0), std::invalid_argument);
  CHECK_THROWS_AS(w.representative(-2, 5), std::invalid_argument);
  std::vector<FieldCode> wrong(3, 0);
  CHECK_THROWS_AS(w.multiply(x, -2, wrong), std::invalid_argument);

  auto h = eng->cohomology(1, 3, -2);
  MatrixGF bad(ring->field(), h.layout.total, 1);
  bad.set(0, 0, ring->field()->one());
  CHECK_THROWS_AS(eng->class_coords(h, bad), std::logic_error);
}

TEST_SUITE_END();
