#include "sgtop/classifier.hpp"

#include <deque>    // for deque
#include <utility>  // for pair

#include "sgtop/algebra.hpp"  // for center_view

namespace sgtop {

  namespace {

    struct Conjunct {
      std::string name;
      bool        negated = false;
    };

    Status status_of(PredicateSuite const& suite, std::string_view name) {
      auto it = suite.find(name);
      return it == suite.end() ? Status::unknown : it->second.status;
    }

    Status negate(Status s) {
      switch (s) {
        case Status::holds: return Status::fails;
        case Status::fails: return Status::holds;
        default: return Status::unknown;
      }
    }

    std::string rule_text(std::vector<Conjunct> const& cs) {
      std::string out;
      for (auto const& c : cs) {
        out += (out.empty() ? "" : " & ") + std::string(c.negated ? "!" : "")
               + c.name;
      }
      return out;
    }

    Budget bound_of(PredicateSuite const& suite) {
      return suite.empty() ? Budget{} : suite.begin()->second.bound;
    }

    TheoremVerdict conjoin(PredicateSuite const&        suite,
                           std::vector<Conjunct> const& cs) {
      TheoremVerdict tv;
      tv.rule         = rule_text(cs);
      tv.verdict.bound = bound_of(suite);
      std::vector<Status> ss;
      bool                any_declared = false, all_finite = true;
      for (auto const& c : cs) {
        auto it = suite.find(c.name);
        if (it == suite.end()) {
          ss.push_back(Status::unknown);
          all_finite = false;
          continue;
        }
        Verdict const& v = it->second;
        Status const   s = c.negated ? negate(v.status) : v.status;
        ss.push_back(s);
        any_declared = any_declared || v.source == Source::declared_fact;
        all_finite   = all_finite && v.source == Source::finite_exhaustion;
        if (s == Status::fails && tv.decisive.empty()) {
          tv.decisive       = c.name;
          tv.verdict.source = v.source;
          tv.verdict.witness = v.witness;
        }
      }
      tv.verdict.status = conjunction(ss);
      if (tv.verdict.status != Status::fails) {
        tv.verdict.source = any_declared ? Source::declared_fact
                            : all_finite ? Source::finite_exhaustion
                                         : Source::search;
      }
      return tv;
    }

    bool is_commutative(PredicateSuite const& suite) {
      return status_of(suite, "commutative") == Status::holds;
    }

    bool is_unipotent(PredicateSuite const& suite) {
      return status_of(suite, "unipotent") == Status::holds;
    }

    Source overall_source(PredicateSuite const& suite) {
      bool any_declared = false, all_finite = !suite.empty();
      for (auto const& [name, v] : suite) {
        any_declared = any_declared || v.source == Source::declared_fact;
        all_finite   = all_finite && v.source == Source::finite_exhaustion;
      }
      return any_declared ? Source::declared_fact
             : all_finite ? Source::finite_exhaustion
                          : Source::search;
    }

    std::vector<Conjunct> const& c_closed_rule() {
      static std::vector<Conjunct> const r
          = {{"chain_finite"}, {"nonsingular"}, {"periodic"}, {"group_bounded"}};
      return r;
    }
    std::vector<Conjunct> const& unipotent_c_rule() {
      static std::vector<Conjunct> const r = {{"bounded"}, {"nonsingular"}};
      return r;
    }
    std::vector<Conjunct> const& ideal_rule() {
      static std::vector<Conjunct> const r
          = {{"chain_finite"}, {"group_bounded"}, {"clifford_plus_finite"}};
      return r;
    }
    std::vector<Conjunct> const& injective_rule() {
      static std::vector<Conjunct> const r
          = {{"bounded"}, {"nonsingular"}, {"clifford_finite"}};
      return r;
    }
    std::vector<Conjunct> const& unipotent_inj_rule() {
      static std::vector<Conjunct> const r
          = {{"bounded"}, {"nonsingular"}, {"group_finite"}};
      return r;
    }
    std::vector<Conjunct> const& t2_rule() {
      static std::vector<Conjunct> const r = {{"chain_finite"},
                                              {"group_finite"},
                                              {"bounded"},
                                              {"nonsingular"},
                                              {"clifford_singular", true}};
      return r;
    }

    ConditionNetwork build_network(PredicateSuite const& suite,
                                   PredicateSuite const& center) {
      bool const       comm = is_commutative(suite);
      bool const       uni  = comm && is_unipotent(suite);
      ConditionNetwork net(comm, uni);

      auto seed = [&](std::string const& node, TheoremVerdict const& tv,
                      std::string const& what) {
        net.set(node, tv.verdict.status, what + ": " + tv.rule);
      };
      auto seed_one = [&](std::string const& node, PredicateSuite const& s,
                          std::string const& name, std::string const& what) {
        net.set(node, status_of(s, name), what + ": " + name);
      };

      std::vector<Conjunct> first = {{"commutative"}};
      first.insert(first.end(), injective_rule().begin(), injective_rule().end());
      seed("iT1.1", conjoin(suite, first), "X");
      seed("iT1.6", conjoin(center, injective_rule()), "Z(X)");
      seed("iT1.7", conjoin(center, injective_rule()), "Z(X)");
      seed_one("aT1.1", suite, "finite", "X");
      seed_one("aT1.8", center, "finite", "Z(X)");
      seed_one("aT1.9", center, "finite", "Z(X)");
      seed("center.closed",
           conjoin(center, {{"chain_finite"}, {"periodic"}, {"nonsingular"}}),
           "Z(X)");
      seed_one("center.group_finite", center, "group_finite", "Z(X)");
      seed_one("center.group_bounded", center, "group_bounded", "Z(X)");
      if (comm) {
        seed("T1S_closed", conjoin(suite, c_closed_rule()), "X");
        seed("ideal_TzS", conjoin(suite, ideal_rule()), "X");
        seed("inj_T2S", conjoin(suite, t2_rule()), "X");
      }
      if (uni) {
        seed("iT1.2", conjoin(suite, unipotent_inj_rule()), "X");
        seed("T1S_closed", conjoin(suite, unipotent_c_rule()), "X");
      }
      return net;
    }

    // Holds read from `holds_node`, Fails from `fails_node`
    TheoremVerdict derived(ConditionNetwork const& net,
                           PredicateSuite const&   suite,
                           std::string const&      holds_node,
                           std::string const&      fails_node) {
      TheoremVerdict tv;
      tv.applicable    = false;
      tv.verdict.bound = bound_of(suite);
      if (net.status(fails_node) == Status::fails) {
        tv.verdict.status = Status::fails;
        tv.rule           = "derived from " + fails_node;
        tv.decisive       = fails_node;
      } else if (net.status(holds_node) == Status::holds) {
        tv.verdict.status = Status::holds;
        tv.rule           = "derived from " + holds_node;
      } else {
        tv.rule = "derived from " + holds_node;
      }
      if (tv.verdict.status != Status::unknown) {
        tv.verdict.source = overall_source(suite);
      }
      return tv;
    }

    TheoremVerdict commutative_or(PredicateSuite const&        suite,
                                  std::vector<Conjunct> const& rule,
                                  TheoremVerdict               fallback) {
      if (is_commutative(suite)) {
        return conjoin(suite, rule);
      }
      return fallback;
    }

  }  // namespace

  Status conjunction(std::vector<Status> const& statuses) {
    bool all = true;
    for (Status s : statuses) {
      if (s == Status::fails) {
        return Status::fails;
      }
      all = all && s == Status::holds;
    }
    return all ? Status::holds : Status::unknown;
  }

  TheoremVerdict classify_C_closed(PredicateSuite const& suite) {
    return commutative_or(
        suite,
        c_closed_rule(),
        derived(build_network(suite, {}), suite, "T1S_closed", "TzS_closed"));
  }

  TheoremVerdict classify_unipotent_C_closed(PredicateSuite const& suite) {
    if (is_commutative(suite) && is_unipotent(suite)) {
      return conjoin(suite, unipotent_c_rule());
    }
    return derived(build_network(suite, {}), suite, "T1S_closed", "TzS_closed");
  }

  TheoremVerdict classify_ideally_projectively(PredicateSuite const& suite) {
    return commutative_or(
        suite,
        ideal_rule(),
        derived(build_network(suite, {}), suite, "aT1.2", "ideal_TzS"));
  }

  TheoremVerdict classify_injective_T1S(PredicateSuite const& suite,
                                        PredicateSuite const& center_suite) {
    return commutative_or(
        suite,
        injective_rule(),
        derived(build_network(suite, center_suite), suite, "iT1.2", "iT1.2"));
  }

  TheoremVerdict classify_unipotent_injective(PredicateSuite const& suite) {
    if (is_commutative(suite) && is_unipotent(suite)) {
      return conjoin(suite, unipotent_inj_rule());
    }
    return derived(build_network(suite, {}), suite, "iT1.2", "iT1.2");
  }

  TheoremVerdict classify_absolute_T1S(PredicateSuite const& suite,
                                       PredicateSuite const& center_suite) {
    return commutative_or(
        suite,
        {{"finite"}},
        derived(build_network(suite, center_suite), suite, "aT1.2", "aT1.2"));
  }

  TheoremVerdict classify_injective_T2S(PredicateSuite const& suite) {
    return commutative_or(
        suite,
        t2_rule(),
        derived(build_network(suite, {}), suite, "iT1.2", "inj_T2S"));
  }

  CenterConditions center_necessary_conditions(PredicateSuite const& center) {
    return {conjoin(center, {{"chain_finite"}, {"periodic"}, {"nonsingular"}}),
            conjoin(center, {{"group_finite"}}),
            conjoin(center, {{"group_bounded"}})};
  }

  ////////////////////////////////////////////////////////////////////////
  // Condition network
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const& condition_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (int k = 1; k <= 7; ++k) {
        out.push_back("iT1." + std::to_string(k));
      }
      for (int k = 1; k <= 9; ++k) {
        out.push_back("aT1." + std::to_string(k));
      }
      for (char const* n : {"T1S_closed",
                            "TzS_closed",
                            "inj_T2S",
                            "inj_TzS",
                            "ideal_TzS",
                            "center.closed",
                            "center.group_finite",
                            "center.group_bounded"}) {
        out.emplace_back(n);
      }
      return out;
    }();
    return names;
  }

  ConditionNetwork::ConditionNetwork(bool commutative, bool unipotent) {
    for (auto const& n : condition_names()) {
      _status.emplace(n, Status::unknown);
    }
    auto i = [](int k) { return "iT1." + std::to_string(k); };
    auto a = [](int k) { return "aT1." + std::to_string(k); };

    add(i(1), i(2));
    equiv(i(2), i(3));
    add(i(3), i(4));
    add(i(4), i(5));
    add(i(5), i(6));
    equiv(i(6), i(7));

    add(a(1), a(2));
    equiv(a(2), a(3));
    add(a(3), a(4));
    equiv(a(4), a(5));
    add(a(5), a(6));
    add(a(6), a(7));
    add(a(7), a(8));
    equiv(a(8), a(9));

    // absolute implies injective, conjunct by conjunct
    add(a(2), i(2));
    add(a(4), i(2));
    add(a(5), i(3));
    add(a(6), i(4));
    add(a(7), i(5));

    add(i(3), "T1S_closed");
    add("T1S_closed", "TzS_closed");
    add(i(4), "TzS_closed");
    add(i(5), "TzS_closed");
    add("TzS_closed", "center.closed");

    add(i(2), "inj_T2S");
    add("inj_T2S", "inj_TzS");
    add("inj_TzS", "center.group_finite");
    add(i(4), "center.group_finite");

    add(a(6), "ideal_TzS");
    add(a(7), "ideal_TzS");
    add("ideal_TzS", "TzS_closed");
    add("ideal_TzS", "center.group_bounded");

    if (commutative) {
      for (int k = 2; k <= 7; ++k) {
        add(i(k), i(1));
      }
      for (int k = 2; k <= 9; ++k) {
        add(a(k), a(1));
      }
      add("TzS_closed", "T1S_closed");
    }
    (void) unipotent;
  }

  void ConditionNetwork::add(std::string const& p, std::string const& q) {
    _edges.emplace_back(p, q);
  }

  void ConditionNetwork::equiv(std::string const& p, std::string const& q) {
    add(p, q);
    add(q, p);
  }

  Status ConditionNetwork::status(std::string const& node) const {
    auto it = _status.find(node);
    if (it == _status.end()) {
      throw BadParameter("unknown condition " + node);
    }
    return it->second;
  }

  void ConditionNetwork::set(std::string const& node,
                             Status             s,
                             std::string const& reason) {
    if (s == Status::unknown) {
      return;
    }
    struct Item {
      std::string node;
      Status      status;
      std::string reason;
    };
    std::deque<Item> todo{{node, s, reason}};
    while (!todo.empty()) {
      Item it = std::move(todo.front());
      todo.pop_front();
      Status& cur = _status.at(it.node);
      if (cur == it.status) {
        continue;
      }
      if (cur != Status::unknown) {
        _violations.push_back(it.node + " is " + std::string(to_string(cur))
                              + " but " + it.reason + " gives "
                              + std::string(to_string(it.status)));
        continue;
      }
      cur = it.status;
      for (auto const& [p, q] : _edges) {
        if (it.status == Status::holds && p == it.node) {
          todo.push_back({q, Status::holds, it.node + " holds"});
        } else if (it.status == Status::fails && q == it.node) {
          todo.push_back({p, Status::fails, it.node + " fails"});
        }
      }
    }
  }

  std::vector<std::string> ConditionNetwork::check() const {
    std::vector<std::string> out;
    for (auto const& [p, q] : _edges) {
      if (_status.at(p) == Status::holds && _status.at(q) == Status::fails) {
        out.push_back(p + " => " + q);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const& theorem_names() {
    static std::vector<std::string> const names = {"C_closed",
                                                   "absolute_T1S",
                                                   "ideally_projectively",
                                                   "injective_T1S",
                                                   "injective_T2S",
                                                   "unipotent_C_closed",
                                                   "unipotent_injective"};
    return names;
  }

  ClassificationReport classify(std::string           id,
                                PredicateSuite const& suite,
                                PredicateSuite const& center_suite) {
    ClassificationReport r;
    r.id           = std::move(id);
    r.suite        = suite;
    r.center_suite = center_suite;

    ConditionNetwork const net  = build_network(suite, center_suite);
    bool const             comm = is_commutative(suite);
    bool const             uni  = comm && is_unipotent(suite);

    auto pick = [&](std::vector<Conjunct> const& rule,
                    bool                         applicable,
                    std::string const&           holds_node,
                    std::string const&           fails_node) {
      return applicable ? conjoin(suite, rule)
                        : derived(net, suite, holds_node, fails_node);
    };
    r.theorems["C_closed"]
        = pick(c_closed_rule(), comm, "T1S_closed", "TzS_closed");
    r.theorems["ideally_projectively"]
        = pick(ideal_rule(), comm, "aT1.2", "ideal_TzS");
    r.theorems["injective_T1S"] = pick(injective_rule(), comm, "iT1.2", "iT1.2");
    r.theorems["absolute_T1S"]  = pick({{"finite"}}, comm, "aT1.2", "aT1.2");
    r.theorems["injective_T2S"] = pick(t2_rule(), comm, "iT1.2", "inj_T2S");
    r.theorems["unipotent_C_closed"]
        = pick(unipotent_c_rule(), uni, "T1S_closed", "TzS_closed");
    r.theorems["unipotent_injective"]
        = pick(unipotent_inj_rule(), uni, "iT1.2", "iT1.2");

    r.center     = center_necessary_conditions(center_suite);
    r.conditions = net.statuses();
    r.violations = net.violations();
    for (auto& v : net.check()) {
      r.violations.push_back(std::move(v));
    }
    return r;
  }

  ClassificationReport classify(std::string id, View const& v) {
    return classify(std::move(id), evaluate_suite(v), evaluate_suite(center_view(v)));
  }

}  // namespace sgtop
