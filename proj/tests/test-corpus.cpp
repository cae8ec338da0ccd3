#include <cstdio>  // for remove
#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

#include "sgtop/builders.hpp"
#include "sgtop/classifier.hpp"
#include "sgtop/corpus.hpp"
#include "sgtop/enumerate.hpp"
#include "sgtop/report.hpp"

namespace sgtop {

  namespace {

    std::string fixture(std::string const& name) {
      return std::string(SGTOP_FIXTURES) + "/" + name;
    }

    using Flat = std::vector<std::size_t>;

    Flat flat_of(FiniteSemigroup const& s) {
      Flat out;
      for (Element x = 0; x < s.size(); ++x) {
        for (Element y = 0; y < s.size(); ++y) {
          out.push_back(s.product(x, y));
        }
      }
      return out;
    }

    bool associative(Flat const& t, std::size_t n) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    // every table in lexicographic order, filtered
    std::vector<Flat> naive(std::size_t n, bool commutative_only) {
      std::vector<Flat> out;
      Flat              t(n * n, 0);
      while (true) {
        bool com = true;
        for (std::size_t x = 0; x < n && com; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            com = com && t[x * n + y] == t[y * n + x];
          }
        }
        if (associative(t, n) && (com || !commutative_only)) {
          out.push_back(t);
        }
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] == n - 1) {
          t[--i] = 0;
        }
        if (i == 0) {
          return out;
        }
        ++t[i - 1];
      }
    }

    FiniteSemigroup relabel(FiniteSemigroup const& s, std::vector<std::size_t> const& p) {
      std::size_t const      n = s.size();
      FiniteSemigroup::Table t(n, std::vector<std::size_t>(n));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          t[p[x]][p[y]] = p[s.product(x, y)];
        }
      }
      return FiniteSemigroup::build(t);
    }

  }  // namespace

  TEST_CASE("Cayley fixtures", "[corpus][quick]") {
    auto const m = read_cayley(fixture("m3.cayley"));
    REQUIRE(m == m3());
    REQUIRE(read_cayley(fixture("c2.cayley")).table() == cyclic_group(2).table());
    REQUIRE(read_cayley(fixture("chain3.cayley")).table()
            == chain_semilattice(3).table());
    REQUIRE(read_cayley(fixture("flat3.cayley")) == flat_semilattice(3));
    REQUIRE_THROWS_AS(read_cayley(fixture("missing.cayley")), IoError);

    try {
      read_cayley(fixture("bad-ragged.cayley"));
      FAIL("ragged row accepted");
    } catch (ParseError const& e) {
      REQUIRE(e.line == 3);
      REQUIRE(e.column == 4);
    }
    try {
      read_cayley(fixture("bad-nonassoc.cayley"));
      FAIL("non-associative table accepted");
    } catch (NonAssociative const& e) {
      REQUIRE(e.x == 0);
      REQUIRE(e.y == 0);
      REQUIRE(e.z == 0);
    }
  }

  TEST_CASE("Cayley parse errors", "[corpus][quick]") {
    auto line_col = [](std::string const& text) {
      try {
        parse_cayley(text);
      } catch (ParseError const& e) {
        return std::make_pair(e.line, e.column);
      }
      return std::make_pair(std::size_t(0), std::size_t(0));
    };
    REQUIRE(line_col("") == std::make_pair(std::size_t(1), std::size_t(1)));
    REQUIRE(line_col("x\n") == std::make_pair(std::size_t(1), std::size_t(1)));
    REQUIRE(line_col("2 3\n") == std::make_pair(std::size_t(1), std::size_t(3)));
    REQUIRE(line_col("2\na\n") == std::make_pair(std::size_t(2), std::size_t(2)));
    REQUIRE(line_col("2\na a\n0 0\n0 0\n") == std::make_pair(std::size_t(2), std::size_t(3)));
    REQUIRE(line_col("2\na b\n0 2\n0 0\n") == std::make_pair(std::size_t(3), std::size_t(3)));
    REQUIRE(line_col("2\na b\n0 0\n") == std::make_pair(std::size_t(4), std::size_t(1)));
    REQUIRE(line_col("2\na b\n0 0\n0 0\n0\n") == std::make_pair(std::size_t(5), std::size_t(1)));
    REQUIRE(line_col("2\na b\n0 0 # ok\n  0   -1\n") == std::make_pair(std::size_t(4), std::size_t(7)));
    // comments and blank lines
    auto const s = parse_cayley("# zero semigroup\n\n2   # order\nz w\n0 0\n\n0 0\n");
    REQUIRE(s.table() == zero_semigroup(2).table());
    REQUIRE(s.label(1) == "w");
  }

  TEST_CASE("non-associative 2x2 tables", "[corpus][quick]") {
    // brute force over all 16 tables
    std::size_t bad = 0;
    for (std::size_t code = 0; code < 16; ++code) {
      Flat t{code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
      std::string const text = "2\nu v\n" + std::to_string(t[0]) + " " + std::to_string(t[1])
                               + "\n" + std::to_string(t[2]) + " " + std::to_string(t[3]) + "\n";
      if (associative(t, 2)) {
        REQUIRE(flat_of(parse_cayley(text)) == t);
        continue;
      }
      ++bad;
      try {
        parse_cayley(text);
        FAIL("accepted");
      } catch (NonAssociative const& e) {
        REQUIRE(t[t[e.x * 2 + e.y] * 2 + e.z] != t[e.x * 2 + t[e.y * 2 + e.z]]);
      }
    }
    REQUIRE(bad == 8);
  }

  TEST_CASE("Cayley text round-trips", "[corpus][property]") {
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = build(spec).finite();
      INFO(spec);
      REQUIRE(parse_cayley(format_cayley(s)) == s);
    }
  }

  TEST_CASE("builder examples", "[corpus][quick]") {
    REQUIRE(cyclic_group(2).table() == FiniteSemigroup::Table{{0, 1}, {1, 0}});
    REQUIRE(flat_semilattice(3).table()
            == FiniteSemigroup::Table{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
    auto const p = direct_product(cyclic_group(2), chain_semilattice(3));
    REQUIRE(p.size() == 6);
    REQUIRE(p.is_commutative());
    for (auto const& spec : test::finite_corpus_specs()) {
      auto const s = build(spec).finite();
      REQUIRE(associative(flat_of(s), s.size()));
    }
  }

  TEST_CASE("corpus entries", "[corpus][quick]") {
    auto const f = entry_from_file(fixture("m3.cayley"));
    REQUIRE(f.source == EntrySource::file);
    REQUIRE(f.semigroup.is_finite());
    auto const b = entry_from_builder("flat");
    REQUIRE(b.tags == std::vector<std::string>{"stream"});
    REQUIRE(b.facts().at("ez_infinite"));
    auto const e = entry_from_enumeration(cyclic_group(2), 3);
    REQUIRE(e.id == "enum:2:3");
    REQUIRE_NOTHROW(validate_corpus({f, b, e}));
    REQUIRE_THROWS_AS(validate_corpus({b, b}), BadParameter);
    REQUIRE_THROWS_AS(entry_from_builder("nosuch"), BadParameter);
    for (auto const& spec : {"natmin", "natplus", "flat", "null", "nil", "ints",
                             "zero+natplus", "one+natmin"}) {
      REQUIRE_NOTHROW(validate_corpus({entry_from_builder(spec)}));
    }
    REQUIRE(entry_source_from_string(to_string(EntrySource::enumerator))
            == EntrySource::enumerator);
  }

  TEST_CASE("enumeration matches the naive filter", "[corpus][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (bool com : {false, true}) {
        auto const       want = naive(n, com);
        EnumerateOptions o;
        o.commutative_only = com;
        auto const got     = enumerate_finite(n, o);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          REQUIRE(flat_of(got[i]) == want[i]);
        }
        REQUIRE(got.size() == frozen_labeled_count(n, com));
      }
    }
  }

  TEST_CASE("enumeration of order 4", "[corpus][quick]") {
    auto const all = enumerate_finite(4);
    REQUIRE(all.size() == frozen_labeled_count(4, false));
    REQUIRE(all.size() == 3492);
    for (std::size_t i = 1; i < all.size(); ++i) {
      REQUIRE(flat_of(all[i - 1]) < flat_of(all[i]));
    }
    EnumerateOptions o;
    o.commutative_only = true;
    REQUIRE(enumerate_finite(4, o).size() == 1140);
    o.threads = 1;
    REQUIRE(enumerate_finite(4, o).size() == 1140);

    std::uint64_t seen = 0;
    std::uint64_t const n = for_each_finite(4, false, [&](FiniteSemigroup const& s) {
      REQUIRE(flat_of(s) == flat_of(all[seen]));
      ++seen;
    });
    REQUIRE(n == 3492);

    REQUIRE_THROWS_AS(enumerate_finite(5), SizeCapExceeded);
    REQUIRE_THROWS_AS(enumerate_finite(0), BadParameter);
  }

  TEST_CASE("isomorphism classes", "[corpus][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (bool com : {false, true}) {
        EnumerateOptions o;
        o.commutative_only = com;
        o.dedupe_iso       = true;
        auto const classes = enumerate_finite(n, o);
        REQUIRE(classes.size() == frozen_class_count(n, com));
        for (auto const& c : classes) {
          REQUIRE(canonical_form(c) == c);
        }
      }
    }
    // relabelings share a canonical form
    std::mt19937_64 rng(3);
    for (auto const& s : enumerate_finite(3)) {
      std::vector<std::size_t> p{0, 1, 2};
      std::shuffle(p.begin(), p.end(), rng);
      REQUIRE(canonical_form(relabel(s, p)) == canonical_form(s));
    }
    REQUIRE_THROWS_AS(canonical_form(cyclic_group(5)), SizeCapExceeded);
  }

  TEST_CASE("reports", "[corpus][quick]") {
    ReportDocument empty;
    auto const     text = serialize_report(empty);
    REQUIRE(parse_report(text) == empty);
    REQUIRE(text.find("\"schema\": \"sgtop-report\"") != std::string::npos);
    REQUIRE(text.find("\"version\": 1") != std::string::npos);

    ReportDocument doc;
    doc.seed = 7;
    ReportEntry e;
    e.id             = "m3";
    e.order          = 3;
    e.classification = classify("m3", test::finite_view(m3()));
    REQUIRE(e.classification.theorems.at("absolute_T1S").verdict.status == Status::holds);
    doc.entries.push_back(e);
    ReportEntry t;
    t.id             = "flat";
    t.classification = classify("flat", View(flat_stream(), Budget{32, 512}));
    t.topology       = TopologySummary{};
    t.topology->nonisolated = {0};
    doc.entries.push_back(t);
    auto const s = serialize_report(doc);
    REQUIRE(parse_report(s) == doc);
    REQUIRE(serialize_report(parse_report(s)) == s);

    // tampering
    auto tampered = s;
    auto const at = tampered.find("\"Holds\"");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 7, "\"Fails\"");
    REQUIRE_THROWS_AS(parse_report(tampered), SchemaMismatch);
    auto wrong = s;
    wrong.replace(wrong.find("\"version\": 1"), 12, "\"version\": 2");
    REQUIRE_THROWS_AS(parse_report(wrong), SchemaMismatch);
    REQUIRE_THROWS_AS(parse_report("{"), SchemaMismatch);
    REQUIRE_THROWS_AS(parse_report("{}"), SchemaMismatch);

    std::string const path = "test-corpus-report.json";
    write_report(doc, path);
    REQUIRE(read_report(path) == doc);
    std::remove(path.c_str());
    REQUIRE_THROWS_AS(write_report(doc, "/nonexistent/dir/x.json"), IoError);
    REQUIRE_THROWS_AS(read_report("/nonexistent/x.json"), IoError);
  }

  TEST_CASE("digest", "[corpus][quick]") {
    // FNV-1a reference values
    REQUIRE(fnv1a_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a_hex("a") == "af63dc4c8601ec8c");
  }

}  // namespace sgtop
