#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

#include "sgtop/algebra.hpp"
#include "sgtop/builders.hpp"
#include "sgtop/classifier.hpp"
#include "sgtop/quotients.hpp"

namespace sgtop {

  using test::finite_view;

  namespace {
    Budget const small{32, 512};

    ClassificationReport report(std::string const& spec) {
      Semigroup const s = build(spec);
      return classify(spec, s.is_finite() ? View(s) : View(s, small));
    }

    Status theorem(ClassificationReport const& r, std::string const& name) {
      return r.theorems.at(name).verdict.status;
    }
  }  // namespace

  TEST_CASE("three-valued conjunction", "[classifier][quick]") {
    using enum Status;
    REQUIRE(conjunction({}) == holds);
    REQUIRE(conjunction({holds, holds}) == holds);
    REQUIRE(conjunction({holds, unknown}) == unknown);
    REQUIRE(conjunction({unknown, fails}) == fails);
    REQUIRE(conjunction({fails, holds}) == fails);
  }

  TEST_CASE("C-closed", "[classifier][quick]") {
    auto const smin = evaluate_suite(finite_view(chain_semilattice(3)));
    auto const c    = classify_C_closed(smin);
    REQUIRE(c.verdict.status == Status::holds);
    REQUIRE(c.applicable);
    REQUIRE(c.verdict.source == Source::finite_exhaustion);
    REQUIRE(c.rule == "chain_finite & nonsingular & periodic & group_bounded");

    auto const nat = classify_C_closed(evaluate_suite(View(natmin_stream(), small)));
    REQUIRE(nat.verdict.status == Status::fails);
    REQUIRE(nat.decisive == "chain_finite");
    REQUIRE(nat.verdict.source == Source::search);
    REQUIRE(nat.verdict.witness->kind == "chain");

    auto const plus
        = classify_C_closed(evaluate_suite(View(natplus_stream(), small)));
    REQUIRE(plus.verdict.status == Status::fails);
    REQUIRE(plus.decisive == "periodic");
    REQUIRE(plus.verdict.source == Source::declared_fact);
  }

  TEST_CASE("ideally and projectively closed", "[classifier][quick]") {
    REQUIRE(classify_ideally_projectively(evaluate_suite(finite_view(m3())))
                .verdict.status
            == Status::holds);
    REQUIRE(classify_ideally_projectively(
                evaluate_suite(View(natmin_stream(), small)))
                .decisive
            == "chain_finite");
    // every idempotent, no residue
    REQUIRE(classify_ideally_projectively(
                evaluate_suite(View(flat_stream(), small)))
                .verdict.status
            == Status::holds);
    auto const n
        = classify_ideally_projectively(evaluate_suite(View(null_stream(), small)));
    REQUIRE(n.verdict.status == Status::fails);
    REQUIRE(n.decisive == "clifford_plus_finite");
  }

  TEST_CASE("injectively T1S-closed", "[classifier][quick]") {
    REQUIRE(classify_injective_T1S(evaluate_suite(finite_view(cyclic_group(2))))
                .verdict.status
            == Status::holds);
    auto const f
        = classify_injective_T1S(evaluate_suite(View(flat_stream(), small)));
    REQUIRE(f.verdict.status == Status::fails);
    REQUIRE(f.decisive == "clifford_finite");
    auto const n
        = classify_injective_T1S(evaluate_suite(View(null_stream(), small)));
    REQUIRE(n.verdict.status == Status::fails);
    REQUIRE(n.decisive == "nonsingular");
  }

  TEST_CASE("absolutely T1S-closed", "[classifier][quick]") {
    REQUIRE(classify_absolute_T1S(evaluate_suite(finite_view(m3()))).verdict.status
            == Status::holds);
    REQUIRE(classify_absolute_T1S(evaluate_suite(View(flat_stream(), small)))
                .verdict.status
            == Status::fails);

    View const x(build("natmin*one+left_zero:2"), small);
    auto const s = evaluate_suite(x);
    auto const z = evaluate_suite(center_view(x));
    REQUIRE(s.at("commutative").status == Status::fails);
    REQUIRE(z.at("finite").status == Status::fails);
    auto const a = classify_absolute_T1S(s, z);
    REQUIRE(!a.applicable);
    REQUIRE(a.verdict.status == Status::fails);
    // without center evidence nothing is forced
    REQUIRE(classify_absolute_T1S(s).verdict.status == Status::unknown);
  }

  TEST_CASE("injectively T2S-closed", "[classifier][quick]") {
    REQUIRE(classify_injective_T2S(evaluate_suite(finite_view(cyclic_group(2))))
                .verdict.status
            == Status::holds);
    auto const suite = evaluate_suite(View(nil_stream(), small));
    REQUIRE(suite.at("clifford_singular").status == Status::holds);
    REQUIRE(suite.at("clifford_singular").witness->kind == "nilpotent");
    auto const n = classify_injective_T2S(suite);
    REQUIRE(n.verdict.status == Status::fails);
    // the squares of the atoms all vanish, so nonsingularity fails first
    REQUIRE(n.decisive == "nonsingular");
    auto without = suite;
    without.erase("nonsingular");
    auto const m = classify_injective_T2S(without);
    REQUIRE(m.verdict.status == Status::fails);
    REQUIRE(m.decisive == "clifford_singular");
    REQUIRE(m.verdict.witness->kind == "nilpotent");
    REQUIRE(classify_injective_T2S(evaluate_suite(View(natmin_stream(), small)))
                .decisive
            == "chain_finite");
  }

  TEST_CASE("noncommutative input is not classified by the commutative rules",
            "[classifier][quick]") {
    auto const lz = evaluate_suite(finite_view(left_zero(3)));
    for (auto const& tv : {classify_C_closed(lz),
                           classify_ideally_projectively(lz),
                           classify_injective_T1S(lz),
                           classify_injective_T2S(lz),
                           classify_unipotent_C_closed(lz),
                           classify_unipotent_injective(lz)}) {
      REQUIRE(!tv.applicable);
      // finite, so every closedness property holds
      REQUIRE(tv.verdict.status == Status::holds);
    }
  }

  TEST_CASE("center necessary conditions", "[classifier][quick]") {
    auto const r = report("natmin*one+left_zero:2");
    REQUIRE(r.center.closed.verdict.status == Status::fails);
    REQUIRE(r.center.closed.decisive == "chain_finite");
    REQUIRE(r.conditions.at("TzS_closed") == Status::fails);
    REQUIRE(r.conditions.at("iT1.2") == Status::fails);
    REQUIRE(theorem(r, "C_closed") == Status::fails);
    REQUIRE(theorem(r, "injective_T1S") == Status::fails);
    REQUIRE(r.violations.empty());

    auto const c = report("cyclic:2");
    REQUIRE(c.center.closed.verdict.status == Status::holds);
    REQUIRE(c.center.injective_or_discrete.verdict.status == Status::holds);
    REQUIRE(c.center.ideally.verdict.status == Status::holds);
    REQUIRE(c.theorems.at("unipotent_injective").applicable);
    REQUIRE(theorem(c, "unipotent_injective") == Status::holds);
  }

  TEST_CASE("condition network", "[classifier][quick]") {
    ConditionNetwork net(false, false);
    net.set("aT1.1", Status::holds, "finite");
    for (int k = 1; k <= 9; ++k) {
      REQUIRE(net.status("aT1." + std::to_string(k)) == Status::holds);
    }
    REQUIRE(net.status("iT1.2") == Status::holds);
    REQUIRE(net.status("iT1.7") == Status::holds);
    REQUIRE(net.status("center.closed") == Status::holds);
    // a noncommutative finite X need not satisfy the commutative condition
    REQUIRE(net.status("iT1.1") == Status::unknown);
    REQUIRE(net.violations().empty());
    net.set("aT1.8", Status::fails, "contradiction");
    REQUIRE(net.violations().size() == 1);
    REQUIRE(net.status("aT1.8") == Status::holds);

    ConditionNetwork back(false, false);
    back.set("center.closed", Status::fails, "z");
    for (auto const& n : {"TzS_closed", "T1S_closed", "iT1.2", "iT1.5",
                          "ideal_TzS", "aT1.1", "aT1.7"}) {
      INFO(n);
      REQUIRE(back.status(n) == Status::fails);
    }
    REQUIRE(back.status("iT1.6") == Status::unknown);
    REQUIRE(back.check().empty());

    ConditionNetwork comm(true, false);
    comm.set("iT1.7", Status::holds, "z");
    REQUIRE(comm.status("iT1.1") == Status::holds);
    REQUIRE_THROWS_AS(comm.status("nope"), BadParameter);
  }

  TEST_CASE("commutative finite corpus", "[classifier][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const r = report(spec);
      INFO(spec);
      REQUIRE(r.violations.empty());
      if (r.suite.at("commutative").status != Status::holds) {
        continue;
      }
      REQUIRE(theorem(r, "absolute_T1S") == Status::holds);
      REQUIRE(theorem(r, "injective_T1S") == Status::holds);
      REQUIRE(r.center.closed.verdict.status == Status::holds);
      REQUIRE(r.center.injective_or_discrete.verdict.status == Status::holds);
      REQUIRE(r.center.ideally.verdict.status == Status::holds);
      for (auto const& [node, s] : r.conditions) {
        INFO(node);
        REQUIRE(s == Status::holds);
      }
    }
  }

  TEST_CASE("cross-rule consistency", "[classifier][property]") {
    std::vector<std::string> specs = test::finite_corpus_specs();
    for (auto const* s : {"natmin", "natplus", "flat", "null", "nil", "ints",
                          "zero+natplus", "natmin*one+left_zero:2",
                          "one+natmin", "natmin*cyclic:2"}) {
      specs.emplace_back(s);
    }
    for (auto const& spec : specs) {
      auto const r = report(spec);
      INFO(spec);
      REQUIRE(r.violations.empty());
      auto const ip = theorem(r, "ideally_projectively");
      auto const cc = theorem(r, "C_closed");
      auto const inj = theorem(r, "injective_T1S");
      auto const t2 = theorem(r, "injective_T2S");
      auto const ab = theorem(r, "absolute_T1S");
      if (ip == Status::holds) {
        REQUIRE(cc != Status::fails);
      }
      if (ab == Status::holds) {
        REQUIRE(inj != Status::fails);
        REQUIRE(ip != Status::fails);
      }
      if (inj == Status::holds) {
        REQUIRE(t2 != Status::fails);
        REQUIRE(cc != Status::fails);
      }
      if (r.suite.at("commutative").status == Status::holds
          && r.suite.at("unipotent").status == Status::holds) {
        auto const& u = r.theorems.at("unipotent_C_closed");
        REQUIRE(u.applicable);
        if (cc != Status::unknown && u.verdict.status != Status::unknown) {
          REQUIRE(u.verdict.status == cc);
        }
      }
    }
  }

  TEST_CASE("subsemigroups of injectively closed commutative semigroups",
            "[classifier][property]") {
    std::mt19937_64 rng(20261014);
    for (auto const& spec : test::finite_corpus_specs()) {
      Semigroup const s = build(spec);
      auto const      r = classify(spec, View(s));
      if (r.suite.at("commutative").status != Status::holds
          || theorem(r, "injective_T1S") != Status::holds) {
        continue;
      }
      for (int trial = 0; trial < 8; ++trial) {
        auto const seed = test::random_subset(rng, s.finite().size());
        if (seed.empty()) {
          continue;
        }
        auto const sub
            = FiniteSemigroup::restrict_to(s.finite(),
                                           subsemigroup_closure(s.finite(), seed));
        auto const q = classify(spec + "/sub", finite_view(sub));
        INFO(spec);
        REQUIRE(theorem(q, "injective_T1S") == Status::holds);
        REQUIRE(theorem(q, "absolute_T1S") == Status::holds);
        REQUIRE(theorem(q, "C_closed") == Status::holds);
      }
    }
  }

  TEST_CASE("reports are deterministic", "[classifier][quick]") {
    REQUIRE(report("natmin*one+left_zero:2") == report("natmin*one+left_zero:2"));
    REQUIRE(theorem_names().size() == 7);
    REQUIRE(report("m3").theorems.size() == theorem_names().size());
  }

}  // namespace sgtop
