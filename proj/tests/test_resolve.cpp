#include "civar/errors.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace civar;
using corpus::poly;
using corpus::quotient;

namespace {

void check_complex(const Resolution& res) {
  const RingSpec& spec = *res.ring();
  for (int i = 1; i <= res.length(); ++i) {
    CHECK(res.d(i).constant_part().is_zero());
    CHECK(res.d(i).rows() == res.rank(i - 1));
    CHECK(res.d(i).cols() == res.rank(i));
    if (i < res.length()) CHECK((res.d(i) * res.d(i + 1)).reduced(spec).is_zero());
  }
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

}  // namespace

TEST_CASE("ring specs are validated") {
  CHECK_NOTHROW(corpus::r1());
  CHECK(corpus::r1()->dim == 0);
  CHECK(corpus::r4()->dim == 1);
  CHECK_THROWS_AS(make_ring_spec(101, {"x", "y"}, {"x^2", "x*y"}), InputError);
  CHECK_THROWS_AS(make_ring_spec(101, {"x", "y"}, {"x"}), InputError);
  CHECK_THROWS_AS(make_ring_spec(101, {"x", "y"}, {"x^2 + y"}), InputError);
  CHECK_THROWS_AS(make_ring_spec(100, {"x"}, {"x^2"}), InputError);
}

TEST_CASE("present_module examples") {
  auto r2 = corpus::r2();
  auto k = present_module(r2, {0}, std::vector<std::vector<std::string>>{{"x"}});
  CHECK(k.num_gens() == 1);
  CHECK(k.relations(0, 0) == poly(r2, "x"));

  auto r1 = corpus::r1();
  auto m1 = present_module(r1, {0}, std::vector<std::vector<std::string>>{{"x"}});
  CHECK(m1.relation_degrees == std::vector<int>{1});

  CHECK_THROWS_AS(present_module(r1, {0, 1}, std::vector<std::vector<std::string>>{{"x"}, {"y"}}),
                  InputError);
  try {
    present_module(r1, {0, 1}, std::vector<std::vector<std::string>>{{"x", "x"}, {"1", "y"}});
  } catch (const InputError& e) {
    CHECK(e.reason() == "inhomogeneous");
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
  // Entries are stored in normal form; columns vanishing mod f are dropped.
  auto m = present_module(r1, {0}, std::vector<std::vector<std::string>>{{"x^2"}, });
  CHECK(m.num_relations() == 0);
}

TEST_CASE("module files round-trip") {
  auto r1 = corpus::r1();
  const char* text = R"(# A/(x) plus a free summand
gens: [0, 1]
relations: [["x", "x*y"], [0, y]]
)";
  auto m = parse_module(text, r1);
  CHECK(m.num_gens() == 2);
  CHECK(m.num_relations() == 2);
  auto again = parse_module(format_module(m), r1);
  CHECK(again.gen_degrees == m.gen_degrees);
  CHECK(again.relations == m.relations);
  CHECK(format_module(again) == format_module(m));

  auto empty = parse_module("gens: []\nrelations: []", r1);
  CHECK(empty.num_gens() == 0);
  CHECK(parse_module(format_module(empty), r1).num_gens() == 0);
  auto free2 = parse_module("gens: [0, 0]\nrelations: [[], []]", r1);
  CHECK(free2.num_relations() == 0);
  CHECK(parse_module(format_module(free2), r1).num_gens() == 2);

  CHECK_THROWS_AS(parse_module("gens: [0\nrelations: []", r1), InputError);
  CHECK_THROWS_AS(parse_module("relations: [[x]]", r1), InputError);
  CHECK_THROWS_AS(parse_module("gens: [0]\nrelations: [[w]]", r1), InputError);
}

TEST_CASE("resolution of k over F101[x]/(x^2)") {
  auto r2 = corpus::r2();
  auto res = resolve_min(residue_field(r2), 5);
  CHECK(res.betti() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  for (int i = 1; i <= 5; ++i) CHECK(res.d(i)(0, 0) == poly(r2, "x"));
  check_complex(res);
}

TEST_CASE("resolution of k over R1 against the brute-force oracle") {
  auto r1 = corpus::r1();
  auto res = resolve_min(residue_field(r1), 6);
  CHECK(res.betti() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  PrimeField f(101);
  CHECK(oracle::betti_squares(f, 2, oracle::cyclic_squares(f, 2, {0, 1}), 6) == res.betti());
  check_complex(res);
}

TEST_CASE("Betti numbers agree with the oracle on R3 modules") {
  auto r3 = corpus::r3();
  PrimeField f(101);
  auto res_k = resolve_min(residue_field(r3), 5);
  CHECK(res_k.betti() == oracle::betti_squares(f, 3, oracle::cyclic_squares(f, 3, {0, 1, 2}), 5));
  auto res_x = resolve_min(quotient(r3, {"x"}), 5);
  CHECK(res_x.betti() == oracle::betti_squares(f, 3, oracle::cyclic_squares(f, 3, {0}), 5));
  auto res_xy = resolve_min(quotient(r3, {"x", "y"}), 5);
  CHECK(res_xy.betti() == oracle::betti_squares(f, 3, oracle::cyclic_squares(f, 3, {0, 1}), 5));
  check_complex(res_k);
  check_complex(res_xy);
}

TEST_CASE("free modules resolve themselves") {
  auto r1 = corpus::r1();
  auto res = resolve_min(free_module(r1, {0}), 4);
  CHECK(res.betti() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  auto res2 = resolve_min(free_module(r1, {0, 3}), 2);
  CHECK(res2.betti() == std::vector<std::size_t>{2, 0, 0});
}

TEST_CASE("Betti numbers do not depend on the presentation") {
  auto r1 = corpus::r1();
  // k on generators e0 (degree 0), e1 (degree 1) with e1 = x e0 and e1 = 0.
  auto k2 = present_module(r1, {0, 1},
                           std::vector<std::vector<std::string>>{{"x", "y", "0", "x*y"},
                                                                 {"-1", "0", "1", "0"}});
  auto a = resolve_min(k2, 5);
  auto b = resolve_min(residue_field(r1), 5);
  CHECK(a.betti() == b.betti());
  CHECK(a.degrees(3) == b.degrees(3));
  auto mp = minimal_presentation(k2);
  CHECK(mp.num_gens() == 1);
  CHECK(mp.num_relations() == 2);
}

TEST_CASE("finite projective dimension over R4") {
  auto r4 = corpus::r4();
  auto res = resolve_min(quotient(r4, {"y"}), 4);
  CHECK(res.betti() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  auto resk = resolve_min(residue_field(r4), 4);
  CHECK(resk.betti() == std::vector<std::size_t>{1, 2, 2, 2, 2});
  check_complex(resk);
}

TEST_CASE("syzygy modules") {
  auto r2 = corpus::r2();
  auto k = residue_field(r2);
  auto o0 = syzygy_module(k, 0);
  CHECK(o0.gen_degrees == k.gen_degrees);
  CHECK(o0.relations == k.relations);
  auto o1 = syzygy_module(k, 1);
  CHECK(o1.num_gens() == 1);
  CHECK(o1.gen_degrees == std::vector<int>{1});
  REQUIRE(o1.num_relations() == 1);
  CHECK(o1.relations(0, 0) == poly(r2, "x"));

  auto r1 = corpus::r1();
  auto m1 = quotient(r1, {"x"});
  auto s1 = syzygy_module(m1, 1);
  CHECK(s1.gen_degrees == std::vector<int>{1});
  REQUIRE(s1.num_relations() == 1);
  CHECK(s1.relations(0, 0) == poly(r1, "x"));
}

TEST_CASE("syzygy Betti numbers are the tail (property)") {
  auto r1 = corpus::r1();
  for (const auto& m : {residue_field(r1), quotient(r1, {"x"}), quotient(r1, {"x + y"}),
                        direct_sum(quotient(r1, {"x"}), quotient(r1, {"y"}))}) {
    auto full = resolve_min(m, 6).betti();
    for (int n = 1; n <= 3; ++n) {
      auto tail = resolve_min(syzygy_module(m, n), 6 - n).betti();
      CHECK(tail == std::vector<std::size_t>(full.begin() + n, full.end()));
    }
  }
}

TEST_CASE("MCM test") {
  auto r1 = corpus::r1();
  CHECK(is_mcm(residue_field(r1)));
  CHECK(is_mcm(quotient(r1, {"x"})));
  auto r4 = corpus::r4();
  CHECK_FALSE(is_mcm(residue_field(r4)));
  CHECK(is_mcm(syzygy_module(residue_field(r4), 1)));
  CHECK(is_mcm(free_module(r4, {0})));
  CHECK(is_mcm(quotient(r4, {"x"})));
  CHECK_FALSE(is_mcm(quotient(r4, {"y"})));
}

TEST_CASE("vector models") {
  auto r1 = corpus::r1();
  auto vk = vector_model(residue_field(r1));
  CHECK(vk.dim() == 1);
  for (const auto& a : vk.actions) CHECK(a.is_zero());

  auto vm = vector_model(quotient(r1, {"x"}));
  CHECK(vm.dim() == 2);
  CHECK(vm.actions[0].is_zero());
  CHECK(rank(vm.actions[1]) == 1);
  CHECK((vm.actions[1] * vm.actions[1]).is_zero());

  CHECK_THROWS_AS(vector_model(free_module(corpus::r4(), {0})), InputError);
  CHECK(vector_model(quotient(corpus::r4(), {"y"})).dim() == 2);
}

TEST_CASE("vector model invariants on corpus modules (property)") {
  auto r3 = corpus::r3();
  PrimeField f(101);
  for (const auto& m : {residue_field(r3), quotient(r3, {"x"}), quotient(r3, {"x + y", "z"}),
                        free_module(r3, {0, 1}), syzygy_module(residue_field(r3), 2)}) {
    auto vm = vector_model(m);
    for (std::size_t a = 0; a < vm.actions.size(); ++a) {
      CHECK((vm.actions[a] * vm.actions[a]).is_zero());
      for (std::size_t b = a + 1; b < vm.actions.size(); ++b)
        CHECK(commute(vm.actions[a], vm.actions[b]));
    }
    // Re-presenting the whole space preserves the Betti numbers.
    std::vector<FpVector> all;
    for (std::size_t k = 0; k < vm.dim(); ++k) {
      FpVector e(vm.dim(), 0);
      e[k] = 1;
      all.push_back(e);
    }
    auto p = present_subspace(vm, all);
    CHECK(vector_model(p).dim() == vm.dim());
    CHECK(resolve_min(p, 3).betti() == resolve_min(m, 3).betti());
    CHECK(oracle::betti_squares(f, 3, oracle::FinModule{vm.dim(), vm.actions}, 3) ==
          resolve_min(m, 3).betti());
  }
}

TEST_CASE("Hilbert function consistency on finite-length modules") {
  auto r1 = corpus::r1();
  // Hilbert function of Q = k[x,y]/(x^2,y^2): 1, 2, 1.
  auto hq = [](int t) { return t == 0 ? 1 : t == 1 ? 2 : t == 2 ? 1 : 0; };
  for (const auto& m : {residue_field(r1), quotient(r1, {"x"}), quotient(r1, {"x + y"})}) {
    auto res = resolve_min(m, 4);
    auto vm = vector_model(m);
    for (int t = 0; t <= 2; ++t) {
      long alt = 0;
      for (int i = 0; i <= res.length(); ++i)
        for (int d : res.degrees(i)) alt += (i % 2 ? -1 : 1) * hq(t - d);
      long direct = 0;
      for (int d : vm.degrees) direct += d == t;
      CHECK(alt == direct);
    }
  }
}
