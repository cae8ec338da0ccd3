#include "sgtop/report.hpp"

#include <cstdio>   // for snprintf
#include <fstream>  // for ifstream, ofstream
#include <sstream>  // for ostringstream

#include "json.hpp"

namespace sgtop {

  using nlohmann::json;

  namespace {

    json to_json(Budget const& b) {
      return {{"elements", b.elements}, {"steps", b.steps}};
    }

    Budget budget_of(json const& j) {
      return {j.at("elements").get<std::size_t>(), j.at("steps").get<std::size_t>()};
    }

    json to_json(Verdict const& v) {
      json j = {{"status", to_string(v.status)},
                {"source", to_string(v.source)},
                {"bound", to_json(v.bound)},
                {"witness", nullptr}};
      if (v.witness) {
        j["witness"] = {{"kind", v.witness->kind},
                        {"elements", v.witness->elements},
                        {"partners", v.witness->partners},
                        {"value", v.witness->value}};
      }
      return j;
    }

    Verdict verdict_of(json const& j) {
      Verdict v;
      v.status = status_from_string(j.at("status").get<std::string>());
      v.source = source_from_string(j.at("source").get<std::string>());
      v.bound  = budget_of(j.at("bound"));
      if (auto const& w = j.at("witness"); !w.is_null()) {
        v.witness = Witness{w.at("kind").get<std::string>(),
                            w.at("elements").get<ElementList>(),
                            w.at("partners").get<ElementList>(),
                            w.at("value").get<std::uint64_t>()};
      }
      return v;
    }

    json to_json(PredicateSuite const& s) {
      json j = json::object();
      for (auto const& [name, v] : s) {
        j[name] = to_json(v);
      }
      return j;
    }

    PredicateSuite suite_of(json const& j) {
      PredicateSuite s;
      for (auto const& [name, v] : j.items()) {
        s.emplace(name, verdict_of(v));
      }
      return s;
    }

    json to_json(TheoremVerdict const& t) {
      return {{"verdict", to_json(t.verdict)},
              {"applicable", t.applicable},
              {"rule", t.rule},
              {"decisive", t.decisive}};
    }

    TheoremVerdict theorem_of(json const& j) {
      return {verdict_of(j.at("verdict")), j.at("applicable").get<bool>(),
              j.at("rule").get<std::string>(), j.at("decisive").get<std::string>()};
    }

    json to_json(ClassificationReport const& r) {
      json theorems = json::object();
      for (auto const& [name, t] : r.theorems) {
        theorems[name] = to_json(t);
      }
      json conditions = json::object();
      for (auto const& [name, s] : r.conditions) {
        conditions[name] = to_string(s);
      }
      return {{"id", r.id},
              {"suite", to_json(r.suite)},
              {"center_suite", to_json(r.center_suite)},
              {"theorems", theorems},
              {"center",
               {{"closed", to_json(r.center.closed)},
                {"injective_or_discrete", to_json(r.center.injective_or_discrete)},
                {"ideally", to_json(r.center.ideally)}}},
              {"conditions", conditions},
              {"violations", r.violations}};
    }

    ClassificationReport classification_of(json const& j) {
      ClassificationReport r;
      r.id           = j.at("id").get<std::string>();
      r.suite        = suite_of(j.at("suite"));
      r.center_suite = suite_of(j.at("center_suite"));
      for (auto const& [name, t] : j.at("theorems").items()) {
        r.theorems.emplace(name, theorem_of(t));
      }
      auto const& c                   = j.at("center");
      r.center.closed                 = theorem_of(c.at("closed"));
      r.center.injective_or_discrete  = theorem_of(c.at("injective_or_discrete"));
      r.center.ideally                = theorem_of(c.at("ideally"));
      for (auto const& [name, s] : j.at("conditions").items()) {
        r.conditions.emplace(name, status_from_string(s.get<std::string>()));
      }
      r.violations = j.at("violations").get<std::vector<std::string>>();
      return r;
    }

    json to_json(TopologySummary const& t) {
      return {{"e", t.e},
              {"kind", to_string(t.kind)},
              {"ground", t.ground},
              {"separations", t.separations},
              {"exact_separations", t.exact_separations},
              {"continuity", t.continuity},
              {"regular", t.regular},
              {"regularity_checked", t.regularity_checked},
              {"clopen", t.clopen},
              {"isolated", t.isolated},
              {"nonisolated", t.nonisolated},
              {"min_neighbours", t.min_neighbours},
              {"discreteness", t.discreteness},
              {"topologizable", to_json(t.topologizable)},
              {"note", t.note}};
    }

    TopologySummary topology_of(json const& j) {
      TopologySummary t;
      t.e                  = j.at("e").get<Element>();
      t.kind               = ebase_kind_from_string(j.at("kind").get<std::string>());
      t.ground             = j.at("ground").get<std::size_t>();
      t.separations        = j.at("separations").get<std::size_t>();
      t.exact_separations  = j.at("exact_separations").get<std::size_t>();
      t.continuity         = j.at("continuity").get<std::size_t>();
      t.regular            = j.at("regular").get<std::size_t>();
      t.regularity_checked = j.at("regularity_checked").get<std::size_t>();
      t.clopen             = j.at("clopen").get<std::size_t>();
      t.isolated           = j.at("isolated").get<std::size_t>();
      t.nonisolated        = j.at("nonisolated").get<ElementList>();
      t.min_neighbours     = j.at("min_neighbours").get<std::size_t>();
      t.discreteness       = j.at("discreteness").get<std::size_t>();
      t.topologizable      = verdict_of(j.at("topologizable"));
      t.note               = j.at("note").get<std::string>();
      return t;
    }

    json body_of(ReportDocument const& d) {
      json entries = json::array();
      for (auto const& e : d.entries) {
        entries.push_back({{"id", e.id},
                           {"source", to_string(e.source)},
                           {"order", e.order},
                           {"classification", to_json(e.classification)},
                           {"topology", e.topology ? to_json(*e.topology) : json()}});
      }
      return {{"tool", d.tool},
              {"budget", to_json(d.budget)},
              {"seed", d.seed},
              {"entries", entries}};
    }

    ReportDocument document_of(json const& body) {
      ReportDocument d;
      d.tool   = body.at("tool").get<std::string>();
      d.budget = budget_of(body.at("budget"));
      d.seed   = body.at("seed").get<std::uint64_t>();
      for (auto const& e : body.at("entries")) {
        ReportEntry r;
        r.id             = e.at("id").get<std::string>();
        r.source         = entry_source_from_string(e.at("source").get<std::string>());
        r.order          = e.at("order").get<std::size_t>();
        r.classification = classification_of(e.at("classification"));
        if (auto const& t = e.at("topology"); !t.is_null()) {
          r.topology = topology_of(t);
        }
        d.entries.push_back(std::move(r));
      }
      return d;
    }

  }  // namespace

  std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  TopologySummary summarize(TopologyCertificate const& c) {
    TopologySummary t;
    t.e      = c.e;
    t.kind   = c.kind;
    t.ground = c.ground.size();
    t.separations = c.separations.size();
    for (auto const& s : c.separations) {
      t.exact_separations += s.exact ? 1 : 0;
    }
    t.continuity         = c.continuity.size();
    t.regularity_checked = c.regularity.size();
    for (auto const& r : c.regularity) {
      t.regular += r.verdict.status == Status::holds ? 1 : 0;
    }
    t.clopen = c.clopen.size();
    bool first = true;
    for (auto const& r : c.isolation) {
      if (r.isolated) {
        ++t.isolated;
      } else {
        t.nonisolated.push_back(r.x);
        t.min_neighbours = first ? r.neighbours : std::min(t.min_neighbours, r.neighbours);
        first            = false;
      }
    }
    t.discreteness = c.discreteness.size();
    return t;
  }

  std::string serialize_report(ReportDocument const& doc) {
    json const body = body_of(doc);
    json const top  = {{"schema", report_schema},
                       {"version", report_version},
                       {"digest", fnv1a_hex(body.dump())},
                       {"body", body}};
    return top.dump(2) + "\n";
  }

  ReportDocument parse_report(std::string_view text) {
    json top;
    try {
      top = json::parse(text);
    } catch (json::exception const& e) {
      throw SchemaMismatch(std::string("not a report document: ") + e.what());
    }
    try {
      if (top.at("schema").get<std::string>() != report_schema) {
        throw SchemaMismatch("unknown schema \"" + top.at("schema").get<std::string>()
                             + "\"");
      }
      int const version = top.at("version").get<int>();
      if (version != report_version) {
        throw SchemaMismatch("report version " + std::to_string(version)
                             + ", expected " + std::to_string(report_version));
      }
      json const& body = top.at("body");
      if (fnv1a_hex(body.dump()) != top.at("digest").get<std::string>()) {
        throw SchemaMismatch("digest mismatch: the document was modified");
      }
      return document_of(body);
    } catch (json::exception const& e) {
      throw SchemaMismatch(std::string("malformed report: ") + e.what());
    } catch (BadParameter const& e) {
      throw SchemaMismatch(std::string("malformed report: ") + e.what());
    }
  }

  void write_report(ReportDocument const& doc, std::string const& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + path);
    }
    out << serialize_report(doc);
    if (!out) {
      throw IoError("write to " + path + " failed");
    }
  }

  ReportDocument read_report(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_report(ss.str());
  }

}  // namespace sgtop
