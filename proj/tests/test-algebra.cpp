#include <cstddef>  // for size_t
#include <random>   // for mt19937_64
#include <set>      // for set

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

#include "sgtop/algebra.hpp"
#include "sgtop/builders.hpp"
#include "sgtop/finite_semigroup.hpp"

namespace sgtop {

  using test::a;
  using test::finite_view;
  using test::one;
  using test::sorted;
  using test::zero;

  namespace {

    // Brute force: the largest subset G containing e that is closed under
    // multiplication, has e as identity and inverses for every element.
    ElementList brute_force_maximal_subgroup(FiniteSemigroup const& s,
                                             Element                e) {
      std::size_t const n = s.size();
      ElementList       best;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        if (!(mask >> e & 1)) {
          continue;
        }
        ElementList g;
        for (Element x = 0; x < n; ++x) {
          if (mask >> x & 1) {
            g.push_back(x);
          }
        }
        bool ok = true;
        for (Element x : g) {
          ok = ok && s.product(e, x) == x && s.product(x, e) == x;
          bool inv = false;
          for (Element y : g) {
            ok  = ok && (mask >> s.product(x, y) & 1);
            inv = inv || (s.product(x, y) == e && s.product(y, x) == e);
          }
          ok = ok && inv;
        }
        if (ok && g.size() > best.size()) {
          best = g;
        }
      }
      return best;
    }

  }  // namespace

  TEST_CASE("FiniteSemigroup validation", "[algebra][quick]") {
    REQUIRE_NOTHROW(chain_semilattice(3));
    REQUIRE(chain_semilattice(3).is_commutative());
    // all 27 triples of M3 checked against the definition
    auto m = m3();
    for (Element x = 0; x < 3; ++x) {
      for (Element y = 0; y < 3; ++y) {
        for (Element z = 0; z < 3; ++z) {
          REQUIRE(m.product(m.product(x, y), z) == m.product(x, m.product(y, z)));
        }
      }
    }
    REQUIRE_THROWS_AS(FiniteSemigroup::build({{0, 3}, {1, 0}}), MalformedTable);
    REQUIRE_THROWS_AS(FiniteSemigroup::build({{0, 1}, {1}}), MalformedTable);
    REQUIRE_THROWS_AS(FiniteSemigroup::build({}), MalformedTable);
    REQUIRE_THROWS_AS(FiniteSemigroup::build({{0}}, {"a", "b"}), MalformedTable);
    // xy = 1 - x: (00)0 = 0 but 0(00) = 1
    try {
      FiniteSemigroup::build({{1, 1}, {0, 0}});
      FAIL("expected NonAssociative");
    } catch (NonAssociative const& e) {
      auto s = std::vector<std::vector<std::size_t>>{{1, 1}, {0, 0}};
      REQUIRE(s[s[e.x][e.y]][e.z] != s[e.x][s[e.y][e.z]]);
    }
  }

  TEST_CASE("idempotents", "[algebra][quick]") {
    REQUIRE(idempotents(finite_view(chain_semilattice(3))).elements
            == ElementList{0, 1, 2});
    REQUIRE(idempotents(finite_view(cyclic_group(2))).elements
            == ElementList{0});
    REQUIRE(idempotents(finite_view(m3())).elements == ElementList{one, zero});
    auto const e = idempotents(View(flat_stream(), Budget{16, 64}));
    REQUIRE(!e.exact);
    REQUIRE(e.elements.size() == 16);
  }

  TEST_CASE("natural order", "[algebra][quick]") {
    View const s(Semigroup(chain_semilattice(3)));
    auto const p = natural_order(s, {0, 1, 2});
    REQUIRE(p.leq(0, 1));
    REQUIRE(p.leq(1, 2));
    REQUIRE(p.leq(0, 2));
    REQUIRE(!p.leq(2, 1));
    REQUIRE(p.longest_chain() == ElementList{0, 1, 2});
    REQUIRE(p.down(1) == ElementList{0, 1});
    REQUIRE(p.up(1) == ElementList{1, 2});

    View const m = finite_view(m3());
    auto const q = natural_order(m, {one, zero});
    REQUIRE(q.leq(zero, one));
    REQUIRE(!q.leq(one, zero));
    REQUIRE_THROWS_AS(natural_order(m, {a}), NotIdempotent);

    View const f(flat_stream(), Budget{8, 16});
    auto const r = natural_order(f, f.carrier());
    for (Element x = 1; x < 8; ++x) {
      REQUIRE(r.leq(0, x));
      for (Element y = 1; y < 8; ++y) {
        REQUIRE(r.leq(x, y) == (x == y));
      }
    }
  }

  TEST_CASE("natural order is a partial order", "[algebra][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      View const v(build(spec));
      auto const p = natural_order(v, idempotents(v).elements);
      for (Element x : p.elements()) {
        REQUIRE(p.leq(x, x));
        for (Element y : p.elements()) {
          if (x != y) {
            REQUIRE(!(p.leq(x, y) && p.leq(y, x)));
          }
          for (Element z : p.elements()) {
            if (p.leq(x, y) && p.leq(y, z)) {
              REQUIRE(p.leq(x, z));
            }
          }
        }
      }
    }
  }

  TEST_CASE("center and central semilattice", "[algebra][quick]") {
    View const lz = finite_view(left_zero(3));
    REQUIRE(center(lz).elements.empty());
    REQUIRE(central_semilattice(lz).elements.empty());
    REQUIRE(center(finite_view(m3())).elements == ElementList{one, a, zero});
    REQUIRE(central_semilattice(finite_view(m3())).elements
            == ElementList{one, zero});
    REQUIRE(central_semilattice(finite_view(chain_semilattice(3))).elements
            == ElementList{0, 1, 2});
    for (auto const& spec : test::finite_corpus_specs()) {
      View const v(build(spec));
      auto const z = center_view(v);
      // EZ(X) = E(Z(X))
      REQUIRE(central_semilattice(v).elements == idempotents(z).elements);
      if (v.semigroup().finite().is_commutative()) {
        REQUIRE(center(v).elements == v.carrier());
      }
    }
  }

  TEST_CASE("center of a stream", "[algebra][quick]") {
    Semigroup const s = build("natmin*one+left_zero:2");
    View const      v(s, Budget{32, 64});
    auto const      z = center(v);
    REQUIRE(!z.exact);
    REQUIRE(!z.elements.empty());
    for (Element x : z.elements) {
      REQUIRE(x % 3 == 2);
    }
    View const zv = center_view(v);
    REQUIRE(zv.fact("finite") == false);
    REQUIRE(zv.fact("chain_finite") == false);
  }

  TEST_CASE("h_class", "[algebra][quick]") {
    REQUIRE(h_class(finite_view(cyclic_group(2)), 0).elements
            == ElementList{0, 1});
    View const m = finite_view(m3());
    REQUIRE(h_class(m, a).elements == ElementList{a});
    REQUIRE(h_class(m, zero).elements == ElementList{zero});
    REQUIRE(h_class(m, one).elements == ElementList{one});
  }

  TEST_CASE("h_class agrees with the maximal subgroup oracle",
            "[algebra][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      View const v(build(spec));
      auto const& s = v.semigroup().finite();
      if (s.size() > 12) {
        continue;
      }
      for (Element e : idempotents(v).elements) {
        INFO(spec << " e = " << e);
        REQUIRE(h_class(v, e).elements == brute_force_maximal_subgroup(s, e));
      }
    }
  }

  TEST_CASE("h_class does not depend on an existing identity",
            "[algebra][quick]") {
    // X already has an identity; the fresh one of X¹ changes nothing
    for (auto const& spec : {"cyclic:3", "m3", "one+left_zero:2", "chain:4"}) {
      View const v(build(spec));
      auto const& s  = v.semigroup().finite();
      auto const  s1 = adjoin_identity(s);
      View const  w  = finite_view(s1);
      ElementList all;
      for (Element x = 0; x < s.size(); ++x) {
        all.push_back(x);
      }
      View const sub = View::subsemigroup(
          w, [n = s.size()](Element x) { return x < n; }, all, all, true, {});
      for (Element x = 0; x < s.size(); ++x) {
        REQUIRE(h_class(v, x).elements == h_class(sub, x).elements);
      }
    }
  }

  TEST_CASE("clifford_parts", "[algebra][quick]") {
    auto c2 = clifford_parts(finite_view(cyclic_group(2)));
    REQUIRE(c2.clifford_part == ElementList{0, 1});
    REQUIRE(c2.residue.empty());
    auto m = clifford_parts(finite_view(m3()));
    REQUIRE(m.clifford_part == ElementList{one, zero});
    REQUIRE(m.residue == ElementList{a});
    REQUIRE(m.central_clifford_part == ElementList{one, zero});
    auto s = clifford_parts(finite_view(chain_semilattice(3)));
    REQUIRE(s.clifford_part == ElementList{0, 1, 2});
    for (auto const& [e, h] : s.classes) {
      REQUIRE(h == ElementList{e});
    }
    // distinct idempotents have disjoint maximal subgroups
    for (auto const& spec : test::finite_corpus_specs()) {
      auto             d = clifford_parts(View(build(spec)));
      std::set<Element> seen;
      for (auto const& [e, h] : d.classes) {
        for (Element x : h) {
          REQUIRE(seen.insert(x).second);
        }
      }
    }
  }

  TEST_CASE("clifford_parts on streams", "[algebra][quick]") {
    auto d = clifford_parts(View(integers_stream(), Budget{32, 128}));
    REQUIRE(d.clifford_part.size() == 32);
    REQUIRE(d.classes.at(0).size() == 32);
    auto n = clifford_parts(View(nil_stream(), Budget{32, 128}));
    REQUIRE(n.clifford_part == ElementList{0, 1});
    REQUIRE(n.residue.size() == 30);
    auto p = clifford_parts(View(natplus_stream(), Budget{32, 128}));
    REQUIRE(p.clifford_part.empty());
    REQUIRE(p.undetermined.size() == 32);
  }

  TEST_CASE("group_inverse", "[algebra][quick]") {
    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(group_inverse(c2, 0) == 0);
    REQUIRE(group_inverse(c2, 1) == 1);
    View const c6 = finite_view(cyclic_group(6));
    for (Element x = 0; x < 6; ++x) {
      REQUIRE(group_inverse(c6, x) == (6 - x) % 6);
    }
    View const m = finite_view(m3());
    REQUIRE(group_inverse(m, zero) == zero);
    REQUIRE_THROWS_AS(group_inverse(m, a), NotInCliffordPart);
    View const z = View(integers_stream(), Budget{16, 64});
    Element const x = 5;  // the integer -3
    REQUIRE(z.product(x, group_inverse(z, x)) == 0);
  }

  TEST_CASE("pi", "[algebra][quick]") {
    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(pi(c2, 1).kind == PiResult::Kind::defined);
    REQUIRE(pi(c2, 1).idempotent == 0);
    View const m = finite_view(m3());
    REQUIRE(pi(m, a).idempotent == zero);
    REQUIRE(pi(m, one).idempotent == one);
    auto const p = pi(View(natplus_stream(), Budget{64, 64}), 1);
    REQUIRE(p.kind == PiResult::Kind::undefined_at_bound);
    REQUIRE(p.explored == 64);
    // an infinite group: pi is found through the inverse search
    auto const q = pi(View(integers_stream(), Budget{16, 64}), 3);
    REQUIRE(q.kind == PiResult::Kind::defined);
    REQUIRE(q.idempotent == 0);
  }

  TEST_CASE("roots", "[algebra][quick]") {
    View const m = finite_view(m3());
    REQUIRE(roots(m, {zero}, std::nullopt).elements == ElementList{a, zero});
    REQUIRE(roots(m, {one, a, zero}, 3).elements == ElementList{one, a, zero});
    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(roots(c2, {0}, 2).elements == ElementList{0, 1});
    REQUIRE(roots(c2, {0}, 1).elements == ElementList{0});
    REQUIRE_THROWS_AS(roots(c2, {0}, 0), BadParameter);
  }

  TEST_CASE("adjoin_identity", "[algebra][quick]") {
    auto const m  = m3();
    auto const m1 = adjoin_identity(m);
    REQUIRE(m1.size() == 4);
    REQUIRE(m1.label(3) == "1'");
    for (Element x = 0; x < 4; ++x) {
      REQUIRE(m1.product(3, x) == x);
      REQUIRE(m1.product(x, 3) == x);
    }
    // the table is re-validated by build; products of M3 are unchanged
    for (Element x = 0; x < 3; ++x) {
      for (Element y = 0; y < 3; ++y) {
        REQUIRE(m1.product(x, y) == m.product(x, y));
      }
    }
    Semigroup const s = adjoin_identity(natplus_stream());
    REQUIRE(s.product(0, 5) == 5);
    REQUIRE(s.product(3, 4) == 6);  // 2 + 3 = 5, code 6
    REQUIRE(s.label(0) == "1");
  }

  TEST_CASE("algebraic lemmas on the corpus", "[algebra][property]") {
    std::mt19937_64 rng(0);
    for (auto const& spec : test::finite_corpus_specs()) {
      View const  v(build(spec));
      auto const& s = v.semigroup().finite();
      std::size_t const n = s.size();
      INFO(spec);
      auto const d = clifford_parts(v);
      std::set<Element> const h(d.clifford_part.begin(), d.clifford_part.end());
      std::set<Element> const hz(d.central_clifford_part.begin(),
                                 d.central_clifford_part.end());
      // H_Z(X) is a subsemigroup
      for (Element x : hz) {
        for (Element y : hz) {
          REQUIRE(hz.count(s.product(x, y)));
        }
      }
      // commuting elements of H(X): (xy)^-1 = x^-1 y^-1
      for (Element x : h) {
        for (Element y : h) {
          if (s.product(x, y) == s.product(y, x)) {
            REQUIRE(h.count(s.product(x, y)));
            REQUIRE(group_inverse(v, s.product(x, y))
                    == s.product(group_inverse(v, x), group_inverse(v, y)));
          }
        }
      }
      for (auto const& [e, he] : d.classes) {
        std::set<Element> const hs(he.begin(), he.end());
        // ∞√H_e · H_e and H_e · ∞√H_e lie in H_e
        auto const r = roots(v, he, std::nullopt).elements;
        for (Element x : r) {
          for (Element y : he) {
            REQUIRE(hs.count(s.product(x, y)));
            REQUIRE(hs.count(s.product(y, x)));
          }
        }
      }
      for (Element x = 0; x < n; ++x) {
        auto const p = pi(v, x);
        REQUIRE(p.kind == PiResult::Kind::defined);
        auto const& he = d.classes.at(p.idempotent);
        for (std::uint64_t m = p.exponent; m <= p.exponent + n; ++m) {
          REQUIRE(std::find(he.begin(), he.end(), v.power(x, m)) != he.end());
        }
      }
      if (s.is_commutative()) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            REQUIRE(pi(v, s.product(x, y)).idempotent
                    == s.product(pi(v, x).idempotent, pi(v, y).idempotent));
          }
        }
      }
    }
  }

}  // namespace sgtop
