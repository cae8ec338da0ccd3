#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

#include "sgtop/algebra.hpp"
#include "sgtop/builders.hpp"
#include "sgtop/predicates.hpp"

namespace sgtop {

  using test::finite_view;

  TEST_CASE("chain_finite", "[predicates][quick]") {
    View const m = finite_view(m3());
    auto const r = chain_finite(m);
    REQUIRE(r.status == Status::holds);
    REQUIRE(r.source == Source::finite_exhaustion);
    REQUIRE(r.witness->elements == ElementList{2, 0});
    REQUIRE(replay(m, "chain_finite", r));

    View const n(natmin_stream(), Budget{32, 4096});
    auto const c = chain_finite(n);
    REQUIRE(c.status == Status::fails);
    REQUIRE(c.source == Source::search);
    REQUIRE(test::sorted(c.witness->elements).size() == 32);
    REQUIRE(c.witness->elements.front() == 0);
    REQUIRE(c.witness->elements.back() == 31);
    REQUIRE(replay(n, "chain_finite", c));

    View const f(flat_stream(), Budget{32, 4096});
    REQUIRE(search("chain_finite", f).status == Status::unknown);
    auto const d = chain_finite(f);
    REQUIRE(d.status == Status::holds);
    REQUIRE(d.source == Source::declared_fact);
    REQUIRE(replay(f, "chain_finite", d));
  }

  TEST_CASE("periodic and bounded", "[predicates][quick]") {
    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(bounded(c2).witness->value == 2);
    REQUIRE(bounded(finite_view(chain_semilattice(3))).witness->value == 1);
    // index 3, period 2: x^4 is the least uniform exponent
    REQUIRE(bounded(finite_view(monogenic_semigroup(3, 2))).witness->value == 4);
    // periods 2 and 3 force 6
    REQUIRE(bounded(View(build("cyclic:2*cyclic:3"))).witness->value == 6);

    View const p(natplus_stream(), Budget{64, 64});
    REQUIRE(search("periodic", p).status == Status::unknown);
    auto const r = periodic(p);
    REQUIRE(r.status == Status::fails);
    REQUIRE(r.source == Source::declared_fact);
  }

  TEST_CASE("bounded exponent is at most twice the order",
            "[predicates][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      View const v(build(spec));
      auto const r = bounded(v);
      REQUIRE(r.status == Status::holds);
      REQUIRE(r.witness->value <= 2 * v.carrier().size());
      REQUIRE(replay(v, "bounded", r));
    }
  }

  TEST_CASE("group predicates", "[predicates][quick]") {
    REQUIRE(group_finite(finite_view(m3())).status == Status::holds);
    REQUIRE(group_bounded(finite_view(m3())).status == Status::holds);
    View const f(flat_stream(), Budget{32, 256});
    REQUIRE(group_finite(f).status == Status::holds);
    auto const h = clifford_parts(f);
    for (auto const& [e, g] : h.classes) {
      REQUIRE(g == ElementList{e});
    }
    View const z(integers_stream(), Budget{32, 256});
    auto const r = group_finite(z);
    REQUIRE(r.status == Status::fails);
    REQUIRE(r.source == Source::search);
    REQUIRE(replay(z, "group_finite", r));
    REQUIRE(group_bounded(z).status == Status::fails);
  }

  TEST_CASE("nonsingular", "[predicates][quick]") {
    REQUIRE(nonsingular(finite_view(m3())).status == Status::holds);
    View const n(null_stream(), Budget{32, 4096});
    auto const r = nonsingular(n);
    REQUIRE(r.status == Status::fails);
    REQUIRE(r.witness->value == 0);
    REQUIRE(r.witness->elements.size() == 32);
    REQUIRE(r.witness->elements.front() == 1);
    REQUIRE(r.witness->elements.back() == 32);
    REQUIRE(replay(n, "nonsingular", r));

    View const f(flat_stream(), Budget{32, 4096});
    REQUIRE(search("nonsingular", f).status == Status::unknown);
    REQUIRE(nonsingular(f).status == Status::holds);

    View const g(nil_stream(), Budget{32, 4096});
    REQUIRE(search("nonsingular", g).status == Status::fails);
  }

  TEST_CASE("clifford predicates", "[predicates][quick]") {
    View const m = finite_view(m3());
    REQUIRE(clifford_finite(m).status == Status::holds);
    REQUIRE(clifford_plus_finite(m).status == Status::holds);
    REQUIRE(clifford_plus_finite(m).witness->elements == ElementList{1});
    REQUIRE(clifford(m).status == Status::fails);
    REQUIRE(replay(m, "clifford", clifford(m)));
    REQUIRE(clifford_singular(m).status == Status::fails);

    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(clifford(c2).status == Status::holds);
    REQUIRE(clifford_finite(c2).status == Status::holds);

    View const n(nil_stream(), Budget{32, 256});
    auto const s = clifford_singular(n);
    REQUIRE(s.status == Status::holds);
    REQUIRE(s.source == Source::search);
    REQUIRE(replay(n, "clifford_singular", s));
    auto const p = clifford_plus_finite(n);
    REQUIRE(p.status == Status::fails);
    REQUIRE(replay(n, "clifford_plus_finite", p));

    View const f(flat_stream(), Budget{32, 256});
    auto const c = clifford_finite(f);
    REQUIRE(c.status == Status::fails);
    REQUIRE(replay(f, "clifford_finite", c));
  }

  TEST_CASE("eventually_clifford, unipotent, commutative",
            "[predicates][quick]") {
    View const c2 = finite_view(cyclic_group(2));
    REQUIRE(eventually_clifford(c2).status == Status::holds);
    REQUIRE(unipotent(c2).status == Status::holds);
    REQUIRE(commutative(c2).status == Status::holds);
    View const m = finite_view(m3());
    REQUIRE(eventually_clifford(m).status == Status::holds);
    auto const u = unipotent(m);
    REQUIRE(u.status == Status::fails);
    REQUIRE(u.witness->elements == ElementList{0, 2});
    View const lz = finite_view(left_zero(3));
    auto const c  = commutative(lz);
    REQUIRE(c.status == Status::fails);
    REQUIRE(c.witness->elements == ElementList{0, 1});
    REQUIRE(replay(lz, "commutative", c));
    // no idempotents at all
    REQUIRE(unipotent(View(natplus_stream(), Budget{16, 64})).status
            == Status::fails);
  }

  TEST_CASE("suite closures on the corpus", "[predicates][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      View const v(build(spec));
      auto const suite = evaluate_suite(v);
      INFO(spec);
      REQUIRE(closure_violations(suite).empty());
      REQUIRE(suite.at("chain_finite").status == Status::holds);
      REQUIRE(suite.at("nonsingular").status == Status::holds);
      for (auto const& [name, verdict] : suite) {
        INFO(name);
        REQUIRE(verdict.status != Status::unknown);
        REQUIRE(replay(v, name, verdict));
      }
    }
    for (auto const& spec :
         {"natmin", "natplus", "flat", "null", "nil", "ints", "zero+natplus"}) {
      View const v(build(spec), Budget{32, 512});
      auto const suite = evaluate_suite(v);
      INFO(spec);
      REQUIRE(closure_violations(suite).empty());
      for (auto const& [name, verdict] : suite) {
        INFO(name);
        REQUIRE(replay(v, name, verdict));
      }
    }
  }

  TEST_CASE("declared facts are reproducible", "[predicates][quick]") {
    for (auto const& spec : {"natmin", "natplus", "flat", "null", "nil", "ints",
                             "natmin*one+left_zero:2"}) {
      INFO(spec);
      REQUIRE(spot_check_declared(build(spec)).empty());
    }
  }

  TEST_CASE("contradicting declared facts", "[predicates][quick]") {
    StreamSemigroup::Spec s;
    s.name       = "liar";
    s.multiply   = [](Element x, Element y) { return std::min(x, y); };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.facts      = {{"chain_finite", true}};
    View const v(Semigroup(StreamSemigroup(std::move(s))), Budget{16, 64});
    REQUIRE_THROWS_AS(chain_finite(v), CorpusIntegrityError);
  }

  TEST_CASE("tampered witnesses do not replay", "[predicates][quick]") {
    View const n(natmin_stream(), Budget{16, 64});
    auto       c = chain_finite(n);
    c.witness->elements.pop_back();
    REQUIRE(!replay(n, "chain_finite", c));
    View const lz = finite_view(left_zero(3));
    auto       p  = commutative(lz);
    p.witness->elements = {0, 0};
    REQUIRE(!replay(lz, "commutative", p));
  }

}  // namespace sgtop
