#include "sgtop/commands.hpp"

#include <algorithm>  // for sort, min
#include <fstream>    // for ofstream
#include <future>     // for async
#include <map>        // for map
#include <ostream>    // for ostream
#include <thread>     // for thread

#include "CLI11.hpp"
#include "json.hpp"

#include "sgtop/algebra.hpp"     // for is_central
#include "sgtop/builders.hpp"    // for build, catalog_text
#include "sgtop/classifier.hpp"  // for classify
#include "sgtop/enumerate.hpp"   // for enumerate_finite
#include "sgtop/predicates.hpp"  // for evaluate_suite

namespace sgtop {

  namespace {

    // results in the order of `inputs`, whatever the completion order
    template <typename T, typename F>
    std::vector<T> parallel_map(std::size_t count, F&& f) {
      std::size_t const threads = std::max(1u, std::thread::hardware_concurrency());
      std::vector<T>    out;
      out.reserve(count);
      for (std::size_t begin = 0; begin < count; begin += threads) {
        std::vector<std::future<T>> running;
        for (std::size_t i = begin; i < std::min(count, begin + threads); ++i) {
          running.push_back(std::async(std::launch::async, f, i));
        }
        for (auto& r : running) {
          out.push_back(r.get());
        }
      }
      return out;
    }

    View view_of(CorpusEntry const& e, Budget const& b) {
      return View(e.semigroup, b);
    }

    std::string element_text(Semigroup const& s, Element x) {
      std::string const l = s.label(x);
      return l == std::to_string(x) ? l : std::to_string(x) + " (" + l + ")";
    }

    void emit(ReportDocument const& doc, CliConfig const& config, std::ostream& out) {
      if (config.out.empty()) {
        out << serialize_report(doc);
      } else {
        write_report(doc, config.out);
      }
    }

    // known failures map onto the exit-code contract
    template <typename F>
    int guarded(std::ostream& err, F&& body) {
      try {
        return body();
      } catch (CertificationFailed const& e) {
        err << "certification failed: " << e.what() << '\n';
        return exit_integrity;
      } catch (CorpusIntegrityError const& e) {
        err << "corpus integrity error: " << e.what() << '\n';
        return exit_integrity;
      } catch (NotFound const& e) {
        err << "not found: " << e.what() << '\n';
        return exit_not_found;
      } catch (SizeCapExceeded const& e) {
        err << "size cap exceeded: " << e.what() << '\n';
        return exit_size_cap;
      } catch (ParseError const& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
      }
    }

    std::optional<Element> least_central_idempotent(View const& v) {
      for (Element x : v.carrier()) {
        if (v.product(x, x) == x && is_central(v, x)) {
          return x;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::vector<CorpusEntry> load_corpus(CliConfig const& config) {
    std::vector<CorpusEntry> out;
    for (auto const& f : config.files) {
      out.push_back(entry_from_file(f));
    }
    for (auto const& b : config.builders) {
      out.push_back(entry_from_builder(b));
    }
    validate_corpus(out);
    return out;
  }

  ReportDocument classify_corpus(std::vector<CorpusEntry> const& entries,
                                 CliConfig const&                config) {
    ReportDocument doc;
    doc.budget = config.budget;
    doc.seed   = config.seed;
    doc.entries
        = parallel_map<ReportEntry>(entries.size(), [&](std::size_t i) {
            CorpusEntry const& e = entries[i];
            ReportEntry        r;
            r.id             = e.id;
            r.source         = e.source;
            r.order          = e.semigroup.is_finite() ? e.semigroup.finite().size() : 0;
            r.classification = classify(e.id, view_of(e, config.budget));
            return r;
          });
    std::stable_sort(doc.entries.begin(), doc.entries.end(),
                     [](auto const& a, auto const& b) { return a.id < b.id; });
    return doc;
  }

  int cmd_classify(CliConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      if (config.files.empty() && config.builders.empty()) {
        err << "classify: no inputs; give Cayley files or --builder specs\n";
        return int(exit_usage);
      }
      auto const     entries = load_corpus(config);
      ReportDocument doc     = classify_corpus(entries, config);
      int            code    = exit_ok;
      for (auto const& e : doc.entries) {
        if (!e.classification.violations.empty()) {
          err << e.id << ": condition network violated: "
              << e.classification.violations.front() << '\n';
          code = exit_integrity;
        }
      }
      emit(doc, config, out);
      if (!config.out.empty()) {
        for (auto const& e : doc.entries) {
          out << e.id;
          for (auto const& [name, t] : e.classification.theorems) {
            out << ' ' << name << '=' << to_string(t.verdict.status);
          }
          out << '\n';
        }
      }
      return code;
    });
  }

  int cmd_topology(CliConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      if (config.builders.size() + config.files.size() != 1) {
        err << "topology: give exactly one --builder spec or Cayley file\n";
        return int(exit_usage);
      }
      CorpusEntry const entry = load_corpus(config).front();
      View const        v     = view_of(entry, config.budget);
      Semigroup const&  s     = v.semigroup();

      Topologizability t;
      Element          e = 0;
      if (config.e) {
        e = *config.e;
      } else if (v.exact()) {
        auto const least = least_central_idempotent(v);
        if (!least) {
          throw NotFound("no central idempotent");
        }
        e = *least;
      } else {
        e = find_nonisolated_idempotent(v, config.seed).e;
      }
      t = topologizability_verdict(v);

      EBaseFamily const base(v, e, config.kind);
      CertifyOptions    options;
      options.seed      = config.seed;
      auto const cert   = certify_topology(base, options);
      auto const replay = replay_certificate(base, cert);
      if (!replay.empty()) {
        err << "certificate does not replay: " << replay.front() << '\n';
        return int(exit_integrity);
      }
      TopologySummary sum = summarize(cert);
      sum.topologizable   = t.verdict;
      sum.note            = t.note;

      out << "entry: " << entry.id << '\n'
          << "e: " << element_text(s, e) << '\n'
          << "kind: " << to_string(config.kind) << '\n'
          << "topologizable: " << to_string(t.verdict.status) << " (" << t.note << ")\n"
          << "ground: " << sum.ground << '\n'
          << "isolated: " << sum.isolated << '\n'
          << "non-isolated:";
      for (Element x : sum.nonisolated) {
        out << ' ' << element_text(s, x);
      }
      out << '\n'
          << "discrete: " << (sum.nonisolated.empty() ? "yes" : "no") << '\n'
          << "separations: " << sum.separations << " (" << sum.exact_separations
          << " exact)\n"
          << "continuity: " << sum.continuity << '\n'
          << "regularity: " << sum.regular << " of " << sum.regularity_checked << '\n'
          << "clopen: " << sum.clopen << '\n';
      // a few basic neighbourhoods of e
      std::vector<EBaseParameter> params{EBaseParameter{}};
      if (!base.admissible().empty()) {
        EBaseParameter p;
        p.F = {base.admissible().front()};
        params.push_back(p);
      }
      if (auto l = base.least()) {
        params.push_back(*l);
      }
      for (auto const& p : params) {
        ShiftNeighborhood const N(v, e, e, base.member(p), true);
        out << "neighbourhood F={";
        for (std::size_t i = 0; i < p.F.size(); ++i) {
          out << (i ? "," : "") << p.F[i];
        }
        out << "} n=" << p.n << ":";
        auto const pts = N.enumerate(8);
        for (auto const& q : pts) {
          out << ' ' << q.x;
        }
        out << (N.exact() && pts.size() < 8 ? "\n" : " ...\n");
      }

      if (!config.out.empty()) {
        ReportDocument doc;
        doc.budget = config.budget;
        doc.seed   = config.seed;
        ReportEntry r;
        r.id             = entry.id;
        r.source         = entry.source;
        r.order          = s.is_finite() ? s.finite().size() : 0;
        r.classification = classify(entry.id, v);
        r.topology       = sum;
        doc.entries.push_back(std::move(r));
        write_report(doc, config.out);
      }
      return int(exit_ok);
    });
  }

  int cmd_enumerate(std::size_t n, CliConfig const& config, std::ostream& out,
                    std::ostream& err) {
    return guarded(err, [&] {
      EnumerateOptions o;
      o.commutative_only = config.commutative_only;
      o.dedupe_iso       = config.dedupe_iso;
      auto const all     = enumerate_finite(n, o);
      std::uint64_t const frozen = config.dedupe_iso
                                       ? frozen_class_count(n, config.commutative_only)
                                       : frozen_labeled_count(n, config.commutative_only);
      bool const match = all.size() == frozen;
      out << "order: " << n << '\n'
          << "commutative-only: " << (config.commutative_only ? "yes" : "no") << '\n'
          << "dedupe-iso: " << (config.dedupe_iso ? "yes" : "no") << '\n'
          << "count: " << all.size() << '\n'
          << "frozen: " << frozen << (match ? " (match)" : " (MISMATCH)") << '\n';

      auto const suites = parallel_map<PredicateSuite>(all.size(), [&](std::size_t i) {
        return evaluate_suite(View(Semigroup(all[i])));
      });
      std::map<std::string, std::map<Status, std::size_t>> tally;
      for (auto const& s : suites) {
        for (auto const& [name, v] : s) {
          ++tally[name][v.status];
        }
      }
      for (auto const& [name, counts] : tally) {
        out << name;
        for (Status st : {Status::holds, Status::fails, Status::unknown}) {
          auto const it = counts.find(st);
          out << ' ' << to_string(st) << '=' << (it == counts.end() ? 0 : it->second);
        }
        out << '\n';
      }
      if (!config.out.empty()) {
        std::vector<CorpusEntry> entries;
        for (std::size_t i = 0; i < all.size(); ++i) {
          entries.push_back(entry_from_enumeration(all[i], i));
        }
        write_report(classify_corpus(entries, config), config.out);
      }
      if (!match) {
        err << "enumeration count differs from the frozen constant\n";
        return int(exit_integrity);
      }
      return int(exit_ok);
    });
  }

  int cmd_predicates(CliConfig const& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
      if (config.files.empty() && config.builders.empty()) {
        err << "predicates: no inputs; give Cayley files or --builder specs\n";
        return int(exit_usage);
      }
      auto const     entries = load_corpus(config);
      ReportDocument doc     = classify_corpus(entries, config);
      nlohmann::json j       = nlohmann::json::object();
      auto const     parsed  = nlohmann::json::parse(serialize_report(doc));
      for (auto const& e : parsed.at("body").at("entries")) {
        j[e.at("id").get<std::string>()] = e.at("classification").at("suite");
      }
      std::string const text = j.dump(2) + "\n";
      if (config.out.empty()) {
        out << text;
      } else {
        std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
        if (!(f << text)) {
          throw IoError("cannot write " + config.out);
        }
      }
      return int(exit_ok);
    });
  }

  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structural invariants and topologies of semigroups", "sgtop"};
    app.require_subcommand(1);
    CliConfig   config;
    std::string kind = "E";
    std::optional<std::uint64_t> e;
    std::size_t order = 0;

    auto common = [&](CLI::App* c) {
      c->add_option("--budget-elems,--budget", config.budget.elements,
                    "Elements inspected on streams")
          ->check(CLI::PositiveNumber);
      c->add_option("--budget-steps", config.budget.steps, "Search steps on streams")
          ->check(CLI::PositiveNumber);
      c->add_option("--seed", config.seed, "Seed for randomised sampling");
      c->add_option("--out", config.out, "Write the report here instead of stdout");
    };
    auto inputs = [&](CLI::App* c) {
      c->add_option("files", config.files, "Cayley table files");
      c->add_option("--builder", config.builders, "Builder spec, e.g. cyclic:2")
          ->take_all();
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classify semigroups");
    common(classify_cmd);
    inputs(classify_cmd);

    auto* topology_cmd = app.add_subcommand("topology", "Certify a semigroup topology");
    common(topology_cmd);
    inputs(topology_cmd);
    topology_cmd->add_option("--kind", kind, "e-base kind")
        ->check(CLI::IsMember({"E", "H", "Z"}));
    topology_cmd->add_option("--e", e, "Central idempotent (element code)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate small semigroups");
    common(enumerate_cmd);
    enumerate_cmd->add_option("n", order, "Order")->required();
    enumerate_cmd->add_flag("--commutative-only", config.commutative_only,
                            "Only commutative tables");
    enumerate_cmd->add_flag("--dedupe-iso", config.dedupe_iso,
                            "One table per isomorphism class");

    auto* predicates_cmd = app.add_subcommand("predicates", "Dump predicate suites");
    common(predicates_cmd);
    inputs(predicates_cmd);

    app.footer("Builders:\n" + catalog_text());

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& ex) {
      int const code = app.exit(ex, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }
    config.kind = ebase_kind_from_string(kind);
    if (e) {
      config.e = *e;
    }
    if (*classify_cmd) {
      return cmd_classify(config, out, err);
    }
    if (*topology_cmd) {
      return cmd_topology(config, out, err);
    }
    if (*enumerate_cmd) {
      return cmd_enumerate(order, config, out, err);
    }
    return cmd_predicates(config, out, err);
  }

}  // namespace sgtop
