#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

#include "sgtop/builders.hpp"
#include "sgtop/classifier.hpp"
#include "sgtop/quotients.hpp"

namespace sgtop {

  using test::a;
  using test::finite_view;
  using test::one;
  using test::zero;

  namespace {

    // every set partition of {0..n-1} as a restricted growth string,
    // filtered by the definition of a congruence
    std::vector<std::vector<std::size_t>> oracle_congruences(FiniteSemigroup const& s) {
      std::size_t const                     n = s.size();
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              rgs(n, 0);
      auto                                  ok = [&] {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            if (rgs[x] != rgs[y]) {
              continue;
            }
            for (Element z = 0; z < n; ++z) {
              if (rgs[s.product(z, x)] != rgs[s.product(z, y)]
                  || rgs[s.product(x, z)] != rgs[s.product(y, z)]) {
                return false;
              }
            }
          }
        }
        return true;
      };
      auto rec = [&](auto&& self, std::size_t k, std::size_t m) -> void {
        if (k == n) {
          if (ok()) {
            out.push_back(rgs);
          }
          return;
        }
        for (std::size_t c = 0; c <= m; ++c) {
          rgs[k] = c;
          self(self, k + 1, std::max(m, c + 1));
        }
      };
      rec(rec, 0, 0);
      return out;
    }

    FiniteSemigroup fin(std::string const& spec) {
      return build(spec).finite();
    }

  }  // namespace

  TEST_CASE("ideals", "[quotients][quick]") {
    auto const m = m3();
    REQUIRE(is_ideal(m, {a, zero}).is_ideal);
    auto const r = is_ideal(m, {one});
    REQUIRE(!r.is_ideal);
    REQUIRE(r.pair == std::make_pair(one, a));
    REQUIRE(r.product == a);
    REQUIRE(r.left_factor);
    REQUIRE(is_ideal(m, {}).is_ideal);
    REQUIRE(is_ideal(cyclic_group(3), {}).is_ideal);
    REQUIRE(!is_ideal(cyclic_group(3), {0}).is_ideal);
  }

  TEST_CASE("Rees quotients", "[quotients][quick]") {
    auto const m = m3();
    auto const q = rees_quotient(m, {a, zero});
    REQUIRE(q.semigroup.size() == 2);
    REQUIRE(q.map == std::vector<Element>{0, 1, 1});
    REQUIRE(q.semigroup.label(1) == "{a,0}");
    for (Element x = 0; x < 2; ++x) {
      REQUIRE(q.semigroup.product(1, x) == 1);
      REQUIRE(q.semigroup.product(x, 1) == 1);
    }
    REQUIRE(is_homomorphism(m, q.semigroup, q.map));

    auto const same = rees_quotient(m, {});
    REQUIRE(same.semigroup.table() == m.table());

    auto const c = rees_quotient(chain_semilattice(3), {0});
    REQUIRE(c.semigroup.size() == 3);
    auto const c2 = rees_quotient(chain_semilattice(3), {0, 1});
    REQUIRE(c2.semigroup.table() == chain_semilattice(2).table());

    REQUIRE_THROWS_AS(rees_quotient(m, {one}), NotAnIdeal);
  }

  TEST_CASE("congruence closure", "[quotients][quick]") {
    auto const m = m3();
    REQUIRE(congruence_closure(m, {}) == Congruence::identity(3));
    auto const c = congruence_closure(m, {{a, zero}});
    REQUIRE(c.classes() == std::vector<ElementList>{{one}, {a, zero}});
    REQUIRE(quotient(m, c).semigroup.table() == rees_quotient(m, {a, zero}).semigroup.table());
    auto const g = cyclic_group(2);
    REQUIRE(congruence_closure(g, {{0, 1}}) == Congruence::universal(2));
    REQUIRE(Congruence({5, 5, 2}).class_map() == std::vector<std::size_t>{0, 0, 1});
    REQUIRE_THROWS_AS(Congruence({}), BadParameter);
  }

  TEST_CASE("congruence enumeration", "[quotients][quick]") {
    REQUIRE(enumerate_congruences(cyclic_group(2)).size() == 2);
    REQUIRE(enumerate_congruences(cyclic_group(1)).size() == 1);
    // frozen from the partition oracle
    REQUIRE(enumerate_congruences(chain_semilattice(3)).size() == 4);
    // one per subgroup
    REQUIRE(enumerate_congruences(cyclic_group(6)).size() == 4);
    // every equivalence is compatible
    REQUIRE(enumerate_congruences(left_zero(3)).size() == 5);
    REQUIRE(enumerate_congruences(zero_semigroup(4)).size() == 15);
    REQUIRE_THROWS_AS(enumerate_congruences(cyclic_group(7)), SizeCapExceeded);
    REQUIRE(enumerate_congruences(cyclic_group(7), 7).size() == 2);
  }

  TEST_CASE("enumeration agrees with the partition oracle",
            "[quotients][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = fin(spec);
      if (s.size() > 6) {
        continue;
      }
      INFO(spec);
      auto const got  = enumerate_congruences(s);
      auto const want = oracle_congruences(s);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].class_map() == want[i]);
        REQUIRE(is_congruence(s, got[i]));
        auto const q = quotient(s, got[i]);
        REQUIRE(is_homomorphism(s, q.semigroup, q.map));
      }
    }
  }

  TEST_CASE("Rees quotient is the ideal congruence quotient",
            "[quotients][property]") {
    std::mt19937_64 rng(7);
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = fin(spec);
      INFO(spec);
      for (int t = 0; t < 16; ++t) {
        auto const sub = test::random_subset(rng, s.size());
        auto const c   = ideal_congruence(s, sub);
        if (!is_ideal(s, sub).is_ideal) {
          REQUIRE_THROWS_AS(rees_quotient(s, sub), NotAnIdeal);
          if (sub.size() > 1) {
            continue;
          }
        }
        if (is_ideal(s, sub).is_ideal) {
          REQUIRE(is_congruence(s, c));
          auto const r = rees_quotient(s, sub);
          REQUIRE(r.map == quotient(s, c).map);
          REQUIRE(is_homomorphism(s, r.semigroup, r.map));
          REQUIRE(r.semigroup.size()
                  == s.size() + 1 - std::max<std::size_t>(sub.size(), 1));
        }
      }
    }
  }

  TEST_CASE("quotients", "[quotients][quick]") {
    auto const m = m3();
    REQUIRE(quotient(m, Congruence::identity(3)).semigroup.table() == m.table());
    REQUIRE(quotient(m, Congruence::universal(3)).semigroup.size() == 1);
    REQUIRE_THROWS_AS(quotient(m, Congruence({0, 0, 1})), IllDefined);
    REQUIRE_THROWS_AS(quotient(m, Congruence::identity(2)), IllDefined);
  }

  TEST_CASE("subsemigroup closure", "[quotients][quick]") {
    auto const m = m3();
    REQUIRE(subsemigroup_closure(m, {a}) == ElementList{a, zero});
    REQUIRE(subsemigroup_closure(m, {}) == ElementList{});
    REQUIRE(subsemigroup_closure(cyclic_group(4), {1}) == ElementList{0, 1, 2, 3});
    REQUIRE(subsemigroup_closure(cyclic_group(4), {2}) == ElementList{0, 2});
  }

  TEST_CASE("closure is least", "[quotients][property]") {
    std::mt19937_64 rng(11);
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = fin(spec);
      for (int t = 0; t < 8; ++t) {
        auto const seed = test::random_subset(rng, s.size());
        auto const c    = subsemigroup_closure(s, seed);
        std::vector<bool> in(s.size(), false);
        for (Element x : c) {
          in[x] = true;
        }
        for (Element x : seed) {
          REQUIRE(in[x]);
        }
        for (Element x : c) {
          for (Element y : c) {
            REQUIRE(in[s.product(x, y)]);
          }
        }
        // every member is a product of seeds
        std::vector<bool> reach(s.size(), false);
        ElementList       frontier = seed;
        for (Element x : seed) {
          reach[x] = true;
        }
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          for (Element y : seed) {
            Element const p = s.product(frontier[i], y);
            if (!reach[p]) {
              reach[p] = true;
              frontier.push_back(p);
            }
          }
        }
        REQUIRE(test::sorted(frontier) == c);
      }
    }
  }

  TEST_CASE("quotients of finite commutative semigroups stay C-closed",
            "[quotients][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = fin(spec);
      if (s.size() > 6) {
        continue;
      }
      auto const r = classify(spec, finite_view(s));
      if (r.suite.at("commutative").status != Status::holds) {
        continue;
      }
      REQUIRE(r.theorems.at("ideally_projectively").verdict.status
              == Status::holds);
      for (auto const& c : enumerate_congruences(s)) {
        auto const q = quotient(s, c).semigroup;
        INFO(spec);
        REQUIRE(classify_C_closed(evaluate_suite(finite_view(q))).verdict.status
                == Status::holds);
      }
    }
  }

}  // namespace sgtop
