#include "civar/cohomology.hpp"
#include "civar/errors.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace civar;
using corpus::hpoly;
using corpus::poly;
using corpus::quotient;

namespace {

Matrix scalar(const PrimeField& f, Scalar v) {
  Matrix m(f, 1, 1);
  m(0, 0) = v;
  return m;
}

void check_operator_identity(const Resolution& res, const EisenbudOperators& ops) {
  const RingSpec& spec = *res.ring();
  for (int i = 0; i < ops.levels(); ++i) {
    PolyMatrix lhs = res.d(i + 1) * res.d(i + 2);
    for (std::size_t j = 0; j < spec.codim(); ++j)
      lhs = lhs - ops.lifted[static_cast<std::size_t>(i)][j].scaled(spec.ci[j]);
    CHECK(lhs.is_zero());
  }
}

void check_commuting(const ExtKModule& e) {
  for (int i = 0; i + 4 <= e.top(); ++i)
    for (std::size_t a = 0; a < e.c; ++a)
      for (std::size_t b = a + 1; b < e.c; ++b) {
        const std::size_t ii = static_cast<std::size_t>(i);
        CHECK(e.actions[ii + 2][a] * e.actions[ii][b] == e.actions[ii + 2][b] * e.actions[ii][a]);
      }
}

VarietyIdeal ideal(const RingSpecPtr& r, std::vector<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(hpoly(r, g));
  return VarietyIdeal(r->h, ps);
}

}  // namespace

TEST_CASE("operators for k over F101[x]/(x^2)") {
  auto r2 = corpus::r2();
  auto res = resolve_min(residue_field(r2), 6);
  auto ops = eisenbud_operators(res);
  CHECK(ops.levels() == 5);
  for (int i = 0; i < ops.levels(); ++i) CHECK(ops.t(i, 0)(0, 0) == poly(r2, "1"));
  check_operator_identity(res, ops);
  auto e = ext_k_module(res, ops);
  for (int i = 0; i < 5; ++i) CHECK(e.actions[static_cast<std::size_t>(i)][0] == scalar(e.field, 1));
}

TEST_CASE("operators for A/(x) over R1") {
  auto r1 = corpus::r1();
  auto res = resolve_min(quotient(r1, {"x"}), 6);
  auto ops = eisenbud_operators(res);
  for (int i = 0; i < ops.levels(); ++i) {
    CHECK(ops.t(i, 0)(0, 0) == poly(r1, "1"));
    CHECK(ops.t(i, 1)(0, 0).is_zero());
  }
  auto e = ext_k_module(res, ops);
  for (std::size_t i = 0; i < e.actions.size(); ++i) {
    CHECK(e.actions[i][0] == scalar(e.field, 1));
    CHECK(e.actions[i][1].is_zero());
  }
}

TEST_CASE("operators of a free module vanish") {
  auto r1 = corpus::r1();
  auto res = resolve_min(free_module(r1, {0}), 4);
  auto ops = eisenbud_operators(res);
  auto e = ext_k_module(res, ops);
  CHECK(e.dims == std::vector<std::size_t>{1, 0, 0, 0, 0});
  for (const auto& level : e.actions)
    for (const auto& a : level) CHECK(a.is_zero());
}

TEST_CASE("operator identity and commutation on corpus modules (property)") {
  for (const auto& r : {corpus::r1(), corpus::r3(), corpus::r4()}) {
    std::vector<ModulePresentation> mods{residue_field(r), quotient(r, {"x"}),
                                         quotient(r, {"x + y"}), syzygy_module(residue_field(r), 1)};
    for (const auto& m : mods) {
      auto res = resolve_min(m, r->codim() == 3 ? 9 : 10);
      auto ops = eisenbud_operators(res);
      check_operator_identity(res, ops);
      check_commuting(ext_k_module(res, ops));
    }
  }
}

TEST_CASE("annihilator windows") {
  auto r2 = corpus::r2();
  auto res = resolve_min(residue_field(r2), 8);
  auto e = ext_k_module(res, eisenbud_operators(res));
  auto a = annihilator_window(e, 4, r2->h);
  CHECK(a.basis().empty());
  CHECK(a.dimension() == 1);
  CHECK_THROWS_AS(annihilator_window(e, 5, r2->h), InputError);

  auto r1 = corpus::r1();
  auto res1 = resolve_min(quotient(r1, {"x"}), 8);
  auto a1 = annihilator_window(ext_k_module(res1, eisenbud_operators(res1)), 4, r1->h);
  REQUIRE(a1.basis().size() == 1);
  CHECK(a1.basis()[0] == hpoly(r1, "chi2"));

  auto zero = resolve_min(free_module(r1, {}), 8);
  auto az = annihilator_window(ext_k_module(zero, eisenbud_operators(zero)), 4, r1->h);
  CHECK(az.unit());
  CHECK(az.is_trivial());
}

TEST_CASE("support varieties of corpus modules") {
  auto r1 = corpus::r1();
  auto vk = support_variety(residue_field(r1));
  CHECK(vk.variety.basis().empty());
  CHECK(vk.variety.dimension() == 2);
  CHECK(vk.complexity == 2);

  auto vq = support_variety(free_module(r1, {0}));
  CHECK(vq.variety.is_trivial());
  CHECK(vq.variety.dimension() == 0);

  auto vm = support_variety(quotient(r1, {"x"}));
  CHECK(variety_equal(vm.variety, ideal(r1, {"chi2"})));
  CHECK(vm.variety.dimension() == 1);

  auto vy = support_variety(quotient(r1, {"y"}));
  CHECK(variety_equal(vy.variety, ideal(r1, {"chi1"})));
  auto vxy = support_variety(quotient(r1, {"x + y"}));
  CHECK(vxy.variety.dimension() == 1);
  CHECK(variety_equal(vxy.variety, ideal(r1, {"chi1 + chi2"})));

  auto r3 = corpus::r3();
  auto vk3 = support_variety(residue_field(r3));
  CHECK(vk3.variety.dimension() == 3);
  CHECK(vk3.variety.basis().empty());
}

TEST_CASE("syzygy invariance of varieties") {
  auto r1 = corpus::r1();
  for (const auto& m : {residue_field(r1), quotient(r1, {"x"}), quotient(r1, {"x + y"})}) {
    auto v0 = support_variety(m).variety;
    auto v1 = support_variety(syzygy_module(m, 1)).variety;
    CHECK(variety_equal(v0, v1));
  }
}

TEST_CASE("variety predicates") {
  auto r1 = corpus::r1();
  auto a = ideal(r1, {"chi1"}), b = ideal(r1, {"chi2"});
  auto u = variety_union(a, b);
  CHECK(variety_equal(u, ideal(r1, {"chi1*chi2"})));
  auto i = variety_intersect(a, b);
  CHECK(i.is_trivial());
  CHECK(variety_equal(i, ideal(r1, {"chi1", "chi2"})));
  CHECK(variety_equal(b, ideal(r1, {"chi2^2"})));
  auto zero = VarietyIdeal::full_space(r1->h);
  CHECK_FALSE(zero.is_trivial());
  CHECK(zero.dimension() == 2);
  CHECK(variety_contains(zero, a));
  CHECK_FALSE(variety_contains(a, zero));
  CHECK_THROWS_AS(VarietyIdeal(r1->h, {hpoly(r1, "chi1 + chi2^2")}), InputError);
  auto r3 = corpus::r3();
  CHECK_THROWS_AS(variety_equal(a, VarietyIdeal::full_space(r3->h)), InputError);
}

TEST_CASE("complexity estimates") {
  CHECK(complexity({1, 2, 3, 4, 5, 6, 7, 8, 9}) == 2);
  CHECK(complexity({1, 1, 1, 1, 1, 1, 1}) == 1);
  CHECK(complexity({1, 0, 0, 0, 0, 0}) == 0);
  CHECK(complexity({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66}) == 3);
  CHECK(complexity({2, 1, 2, 1, 2, 1, 2, 1}) == 1);
  auto r1 = corpus::r1();
  CHECK(complexity(residue_field(r1), 8) == 2);
  CHECK(complexity(quotient(r1, {"x"}), 8) == 1);
  CHECK(complexity(free_module(r1, {0}), 8) == 0);
}

TEST_CASE("monotone windows") {
  auto r1 = corpus::r1();
  for (const auto& m : {residue_field(r1), quotient(r1, {"x"}), quotient(r1, {"x + y"})}) {
    auto res = resolve_min(m, 14);
    auto e = ext_k_module(res, eisenbud_operators(res));
    for (int n : {8, 10}) {
      auto small = annihilator_window(e.truncated(n), n / 2, r1->h);
      auto big = annihilator_window(e.truncated(n + 2), (n + 2) / 2, r1->h);
      for (const auto& g : big.gens()) CHECK(ideal_membership(g, small.gens()));
    }
  }
}
