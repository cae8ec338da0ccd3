#include "sgtop/predicates.hpp"

#include <algorithm>      // for find, min
#include <functional>     // for function
#include <numeric>        // for lcm
#include <optional>       // for optional
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move

#include "sgtop/algebra.hpp"

namespace sgtop {

  std::string_view to_string(Status s) {
    switch (s) {
      case Status::holds:
        return "Holds";
      case Status::fails:
        return "Fails";
      default:
        return "Unknown";
    }
  }

  std::string_view to_string(Source s) {
    switch (s) {
      case Source::declared_fact:
        return "DeclaredFact";
      case Source::finite_exhaustion:
        return "FiniteExhaustion";
      default:
        return "Search";
    }
  }

  Status status_from_string(std::string_view s) {
    if (s == "Holds") {
      return Status::holds;
    } else if (s == "Fails") {
      return Status::fails;
    } else if (s == "Unknown") {
      return Status::unknown;
    }
    throw SchemaMismatch("unknown status \"" + std::string(s) + "\"");
  }

  Source source_from_string(std::string_view s) {
    if (s == "Search") {
      return Source::search;
    } else if (s == "DeclaredFact") {
      return Source::declared_fact;
    } else if (s == "FiniteExhaustion") {
      return Source::finite_exhaustion;
    }
    throw SchemaMismatch("unknown source \"" + std::string(s) + "\"");
  }

  std::vector<std::string> const& predicate_names() {
    static std::vector<std::string> const names
        = {"bounded",         "chain_finite",        "clifford",
           "clifford_finite", "clifford_plus_finite", "clifford_singular",
           "commutative",     "e_well_founded",       "eventually_clifford",
           "ez_chain_finite", "ez_infinite",          "ez_well_founded",
           "finite",          "group_bounded",        "group_finite",
           "nonsingular",     "periodic",             "unipotent"};
    return names;
  }

  namespace {

    // Shared, lazily computed data for one view.
    class Context {
     public:
      explicit Context(View const& v) : _v(v) {}

      View const& view() const noexcept {
        return _v;
      }

      HClassDecomposition const& parts() {
        if (!_parts) {
          _parts = clifford_parts(_v);
        }
        return *_parts;
      }

     private:
      View const&                        _v;
      std::optional<HClassDecomposition> _parts;
    };

    Verdict make(View const&            v,
                 Status                 status,
                 std::optional<Witness> w = std::nullopt) {
      Verdict r;
      r.status  = status;
      r.source  = v.exact() ? Source::finite_exhaustion : Source::search;
      r.witness = std::move(w);
      r.bound   = v.budget();
      return r;
    }

    Verdict unknown(View const& v) {
      Verdict r;
      r.bound = v.budget();
      return r;
    }

    Witness finite_witness(View const& v, ElementList elements = {}) {
      return Witness{"finite", std::move(elements), {}, v.carrier().size()};
    }

    std::size_t target(View const& v) {
      return std::max<std::size_t>(v.budget().elements, 1);
    }

    // Greedy growth of C with xy in {x, y} for all x, y in C, from each seed.
    ElementList find_chain(View const& v, ElementList const& candidates) {
      std::size_t const goal = target(v);
      ElementList       best;
      for (Element seed : v.carrier()) {
        if (std::find(candidates.begin(), candidates.end(), seed)
            == candidates.end()) {
          continue;
        }
        ElementList c{seed};
        for (Element y : candidates) {
          if (c.size() >= goal) {
            break;
          }
          if (y == seed) {
            continue;
          }
          bool ok = true;
          for (Element x : c) {
            Element const xy = v.product(x, y), yx = v.product(y, x);
            if ((xy != x && xy != y) || (yx != x && yx != y)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            c.push_back(y);
          }
        }
        if (c.size() > best.size()) {
          best = std::move(c);
        }
        if (best.size() >= goal) {
          break;
        }
      }
      return best;
    }

    ElementList pool_idempotents(View const& v, bool central) {
      ElementList out;
      for (Element x : v.pool()) {
        if (is_idempotent(v, x) && (!central || is_central(v, x))) {
          out.push_back(x);
        }
      }
      return out;
    }

    Verdict search_chain_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        auto const e = idempotents(v).elements;
        return make(
            v, Status::holds, finite_witness(v, natural_order(v, e).longest_chain()));
      }
      // xx in {x} forces every member of a chain to be idempotent
      ElementList c = find_chain(v, pool_idempotents(v, false));
      if (c.size() >= target(v)) {
        c.resize(target(v));
        return make(v, Status::fails, Witness{"chain", std::move(c), {}, 0});
      }
      return unknown(v);
    }

    Verdict search_ez_chain_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        auto const ez = central_semilattice(v).elements;
        return make(
            v, Status::holds, finite_witness(v, natural_order(v, ez).longest_chain()));
      }
      ElementList c = find_chain(v, pool_idempotents(v, true));
      if (c.size() >= target(v)) {
        c.resize(target(v));
        return make(v, Status::fails, Witness{"chain", std::move(c), {}, 0});
      }
      return unknown(v);
    }

    Verdict search_ez_infinite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        auto ez = central_semilattice(v).elements;
        return make(v,
                    Status::fails,
                    Witness{"finite", std::move(ez), {}, v.carrier().size()});
      }
      ElementList ez;
      for (Element x : v.pool()) {
        if (ez.size() >= target(v)) {
          break;
        }
        if (is_idempotent(v, x) && is_central(v, x)) {
          ez.push_back(x);
        }
      }
      if (ez.size() >= target(v)) {
        return make(
            v, Status::holds, Witness{"central_idempotents", std::move(ez), {}, 0});
      }
      return unknown(v);
    }

    Verdict search_exact_only(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      return unknown(v);
    }

    // least m >= max index with every period dividing m
    std::optional<std::uint64_t> uniform_exponent(View const& v) {
      std::uint64_t max_index = 1, l = 1;
      for (Element x : v.carrier()) {
        MonogenicData const md = monogenic(v, x);
        if (!md.index) {
          return std::nullopt;
        }
        max_index = std::max(max_index, *md.index);
        l         = std::lcm(l, *md.period);
      }
      return ((max_index + l - 1) / l) * l;
    }

    Verdict search_bounded(Context& ctx) {
      View const& v = ctx.view();
      if (!v.exact()) {
        return unknown(v);
      }
      std::uint64_t const n = *uniform_exponent(v);
      return make(v, Status::holds, Witness{"exponent", {}, {}, n});
    }

    Verdict search_periodic(Context& ctx) {
      View const& v = ctx.view();
      if (!v.exact()) {
        return unknown(v);
      }
      std::uint64_t const n = *uniform_exponent(v);
      return make(v, Status::holds, Witness{"exponent", {}, {}, n});
    }

    Verdict search_group_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      for (Element e : v.carrier()) {
        if (!is_idempotent(v, e)) {
          continue;
        }
        Witness w{"group", {}, {}, e};
        for (Element x : v.pool()) {
          Element inv;
          if (in_group_of(v, x, e, &inv) == Tri::yes) {
            w.elements.push_back(x);
            w.partners.push_back(inv);
            if (w.elements.size() >= target(v)) {
              return make(v, Status::fails, std::move(w));
            }
          }
        }
      }
      return unknown(v);
    }

    Verdict search_nonsingular(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      std::size_t const goal = target(v);
      // c -> { y in pool : yy = c }, candidates in order of first appearance
      std::unordered_map<Element, ElementList> roots_of;
      ElementList                              order;
      for (Element y : v.pool()) {
        Element const c  = v.product(y, y);
        auto [it, fresh] = roots_of.try_emplace(c);
        it->second.push_back(y);
        if (fresh) {
          order.push_back(c);
        }
      }
      std::size_t constexpr restarts = 16;
      for (Element c : order) {
        ElementList const& ys = roots_of[c];
        if (ys.size() < goal) {
          continue;
        }
        for (std::size_t s = 0, seeds = 0; s < ys.size() && seeds < restarts;
             ++s) {
          if (ys[s] == c) {
            continue;
          }
          ++seeds;
          ElementList a;
          auto        grow = [&](Element y) {
            for (Element x : a) {
              if (v.product(x, y) != c || v.product(y, x) != c) {
                return;
              }
            }
            a.push_back(y);
          };
          grow(ys[s]);
          for (std::size_t i = 0; i < ys.size() && a.size() < goal; ++i) {
            if (i != s && ys[i] != c) {
              grow(ys[i]);
            }
          }
          if (a.size() < goal && std::find(ys.begin(), ys.end(), c) != ys.end()) {
            grow(c);
          }
          if (a.size() >= goal) {
            return make(v, Status::fails, Witness{"singular", std::move(a), {}, c});
          }
        }
      }
      return unknown(v);
    }

    Verdict search_clifford(Context& ctx) {
      View const& v = ctx.view();
      auto const& d = ctx.parts();
      if (!d.residue.empty()) {
        return make(v, Status::fails, Witness{"residue", {d.residue.front()}, {}, 0});
      }
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      return unknown(v);
    }

    Verdict search_clifford_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v, ctx.parts().clifford_part));
      }
      Witness w{"clifford", {}, {}, 0};
      for (Element x : v.pool()) {
        Element e, inv;
        if (in_clifford_part(v, x, &e) == Tri::yes
            && in_group_of(v, x, e, &inv) == Tri::yes) {
          w.elements.push_back(x);
          w.partners.push_back(e);
          w.partners.push_back(inv);
          if (w.elements.size() >= target(v)) {
            return make(v, Status::fails, std::move(w));
          }
        }
      }
      return unknown(v);
    }

    // certified members of X \ H(X) in the pool, at most `limit`
    ElementList pool_residue(View const& v, std::size_t limit) {
      ElementList out;
      for (Element x : v.pool()) {
        if (out.size() >= limit) {
          break;
        }
        if (in_clifford_part(v, x) == Tri::no) {
          out.push_back(x);
        }
      }
      return out;
    }

    Verdict search_clifford_plus_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v, ctx.parts().residue));
      }
      ElementList r = pool_residue(v, target(v));
      if (r.size() >= target(v)) {
        return make(v, Status::fails, Witness{"residue", std::move(r), {}, 0});
      }
      return unknown(v);
    }

    Verdict search_clifford_singular(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::fails, finite_witness(v));
      }
      std::unordered_map<Element, bool> in_h;
      auto                              member = [&](Element x) {
        auto it = in_h.find(x);
        if (it == in_h.end()) {
          it = in_h.emplace(x, in_clifford_part(v, x) == Tri::yes).first;
        }
        return it->second;
      };
      ElementList a;
      for (Element r : pool_residue(v, v.pool().size())) {
        if (a.size() >= target(v)) {
          break;
        }
        bool ok = member(v.product(r, r));
        for (std::size_t i = 0; ok && i < a.size(); ++i) {
          ok = member(v.product(r, a[i])) && member(v.product(a[i], r));
        }
        if (ok) {
          a.push_back(r);
        }
      }
      if (a.size() >= target(v)) {
        return make(v, Status::holds, Witness{"nilpotent", std::move(a), {}, 0});
      }
      return unknown(v);
    }

    Verdict search_eventually_clifford(Context& ctx) {
      View const& v = ctx.view();
      for (Element x : v.carrier()) {
        if (pi(v, x).kind == PiResult::Kind::undefined) {
          return make(v, Status::fails, Witness{"residue", {x}, {}, 0});
        }
      }
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      return unknown(v);
    }

    Verdict search_unipotent(Context& ctx) {
      View const& v = ctx.view();
      ElementList e;
      for (Element x : v.carrier()) {
        if (is_idempotent(v, x)) {
          e.push_back(x);
          if (e.size() == 2) {
            return make(v, Status::fails, Witness{"idempotents", e, {}, 0});
          }
        }
      }
      if (v.exact()) {
        return make(v,
                    e.size() == 1 ? Status::holds : Status::fails,
                    Witness{"idempotents", e, {}, e.size()});
      }
      return unknown(v);
    }

    Verdict search_commutative(Context& ctx) {
      View const& v = ctx.view();
      auto const& c = v.carrier();
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          if (v.product(c[i], c[j]) != v.product(c[j], c[i])) {
            return make(v, Status::fails, Witness{"pair", {c[i], c[j]}, {}, 0});
          }
        }
      }
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      return unknown(v);
    }

    Verdict search_finite(Context& ctx) {
      View const& v = ctx.view();
      if (v.exact()) {
        return make(v, Status::holds, finite_witness(v));
      }
      std::unordered_set<Element> const distinct(v.carrier().begin(),
                                                 v.carrier().end());
      if (distinct.size() >= target(v)) {
        return make(v, Status::fails, Witness{"enumerated", {}, {}, distinct.size()});
      }
      return unknown(v);
    }

    using SearchFn = Verdict (*)(Context&);

    SearchFn search_function(std::string_view name) {
      static std::map<std::string, SearchFn, std::less<>> const table = {
          {"bounded", &search_bounded},
          {"chain_finite", &search_chain_finite},
          {"clifford", &search_clifford},
          {"clifford_finite", &search_clifford_finite},
          {"clifford_plus_finite", &search_clifford_plus_finite},
          {"clifford_singular", &search_clifford_singular},
          {"commutative", &search_commutative},
          {"e_well_founded", &search_exact_only},
          {"eventually_clifford", &search_eventually_clifford},
          {"ez_chain_finite", &search_ez_chain_finite},
          {"ez_infinite", &search_ez_infinite},
          {"ez_well_founded", &search_exact_only},
          {"finite", &search_finite},
          {"group_bounded", &search_exact_only},
          {"group_finite", &search_group_finite},
          {"nonsingular", &search_nonsingular},
          {"periodic", &search_periodic},
          {"unipotent", &search_unipotent}};
      auto it = table.find(name);
      if (it == table.end()) {
        throw BadParameter("unknown predicate \"" + std::string(name) + "\"");
      }
      return it->second;
    }

    Verdict resolve(View const& v, std::string_view name, Verdict found) {
      std::optional<bool> const fact = v.fact(name);
      if (!fact) {
        return found;
      }
      Status const declared = *fact ? Status::holds : Status::fails;
      if (found.status != Status::unknown) {
        if (found.status != declared) {
          throw CorpusIntegrityError(
              v.semigroup().name() + ": declared fact " + std::string(name)
              + " = " + (*fact ? "true" : "false")
              + " contradicts a search witness of kind "
              + (found.witness ? found.witness->kind : std::string("?")));
        }
        return found;
      }
      Verdict r;
      r.status  = declared;
      r.source  = Source::declared_fact;
      r.witness = Witness{"declared", {}, {}, *fact ? 1u : 0u};
      r.bound   = v.budget();
      return r;
    }

    Verdict evaluate_in(Context& ctx, std::string_view name) {
      return resolve(ctx.view(), name, search_function(name)(ctx));
    }

  }  // namespace

  Verdict search(std::string_view name, View const& v) {
    Context ctx(v);
    return search_function(name)(ctx);
  }

  Verdict evaluate(std::string_view name, View const& v) {
    Context ctx(v);
    return evaluate_in(ctx, name);
  }

  PredicateSuite evaluate_suite(View const& v) {
    Context        ctx(v);
    PredicateSuite suite;
    for (auto const& name : predicate_names()) {
      suite.emplace(name, evaluate_in(ctx, name));
    }
    return suite;
  }

  Verdict chain_finite(View const& v) {
    return evaluate("chain_finite", v);
  }
  Verdict periodic(View const& v) {
    return evaluate("periodic", v);
  }
  Verdict bounded(View const& v) {
    return evaluate("bounded", v);
  }
  Verdict group_finite(View const& v) {
    return evaluate("group_finite", v);
  }
  Verdict group_bounded(View const& v) {
    return evaluate("group_bounded", v);
  }
  Verdict nonsingular(View const& v) {
    return evaluate("nonsingular", v);
  }
  Verdict clifford(View const& v) {
    return evaluate("clifford", v);
  }
  Verdict clifford_finite(View const& v) {
    return evaluate("clifford_finite", v);
  }
  Verdict clifford_plus_finite(View const& v) {
    return evaluate("clifford_plus_finite", v);
  }
  Verdict clifford_singular(View const& v) {
    return evaluate("clifford_singular", v);
  }
  Verdict eventually_clifford(View const& v) {
    return evaluate("eventually_clifford", v);
  }
  Verdict unipotent(View const& v) {
    return evaluate("unipotent", v);
  }
  Verdict commutative(View const& v) {
    return evaluate("commutative", v);
  }
  Verdict finite(View const& v) {
    return evaluate("finite", v);
  }
  Verdict ez_chain_finite(View const& v) {
    return evaluate("ez_chain_finite", v);
  }
  Verdict ez_infinite(View const& v) {
    return evaluate("ez_infinite", v);
  }
  Verdict e_well_founded(View const& v) {
    return evaluate("e_well_founded", v);
  }
  Verdict ez_well_founded(View const& v) {
    return evaluate("ez_well_founded", v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool distinct(ElementList const& xs) {
      std::unordered_set<Element> const s(xs.begin(), xs.end());
      return s.size() == xs.size();
    }

    bool outside_clifford_part(View const& v, Element x) {
      // x^k = f idempotent with xf != x or fx != x
      MonogenicData const md = monogenic(v, x);
      if (!md.idempotent) {
        return false;
      }
      Element const f = *md.idempotent;
      return v.product(x, f) != x || v.product(f, x) != x;
    }

    bool replay_witness(View const&      v,
                        std::string_view name,
                        Status           status,
                        Witness const&   w) {
      std::size_t const goal = target(v);
      auto const&       k    = w.kind;
      if (k == "declared") {
        auto const fact = v.fact(name);
        return fact && *fact == (w.value == 1)
               && (status == Status::holds) == *fact;
      }
      if (k == "finite") {
        if (!v.exact() || w.value != v.carrier().size()) {
          return false;
        }
        if (name == "chain_finite" || name == "ez_chain_finite") {
          for (Element x : w.elements) {
            for (Element y : w.elements) {
              Element const xy = v.product(x, y);
              if (xy != x && xy != y) {
                return false;
              }
            }
          }
        }
        return true;
      }
      if (k == "exponent") {
        if (!v.exact() || w.value == 0) {
          return false;
        }
        auto uniform = [&v](std::uint64_t n) {
          for (Element x : v.carrier()) {
            if (!is_idempotent(v, v.power(x, n))) {
              return false;
            }
          }
          return true;
        };
        if (!uniform(w.value)) {
          return false;
        }
        if (name == "bounded") {
          for (std::uint64_t m = 1; m < w.value; ++m) {
            if (uniform(m)) {
              return false;
            }
          }
        }
        return true;
      }
      if (k == "chain") {
        if (w.elements.size() < goal || !distinct(w.elements)) {
          return false;
        }
        for (Element x : w.elements) {
          for (Element y : w.elements) {
            Element const xy = v.product(x, y);
            if (xy != x && xy != y) {
              return false;
            }
            if (name == "ez_chain_finite"
                && (xy != v.product(y, x) || !is_central(v, x))) {
              return false;
            }
          }
        }
        return true;
      }
      if (k == "singular") {
        if (w.elements.size() < goal || !distinct(w.elements)) {
          return false;
        }
        for (Element x : w.elements) {
          for (Element y : w.elements) {
            if (v.product(x, y) != w.value) {
              return false;
            }
          }
        }
        return true;
      }
      if (k == "pair") {
        return w.elements.size() == 2
               && v.product(w.elements[0], w.elements[1])
                      != v.product(w.elements[1], w.elements[0]);
      }
      if (k == "idempotents") {
        if (!distinct(w.elements)) {
          return false;
        }
        for (Element x : w.elements) {
          if (!is_idempotent(v, x)) {
            return false;
          }
        }
        if (status == Status::fails && w.elements.size() == 2) {
          return true;
        }
        return v.exact() && w.value == w.elements.size()
               && idempotents(v).elements.size() == w.value
               && (status == Status::holds) == (w.value == 1);
      }
      if (k == "group") {
        Element const e = w.value;
        if (!is_idempotent(v, e) || w.elements.size() < goal
            || w.partners.size() != w.elements.size() || !distinct(w.elements)) {
          return false;
        }
        for (std::size_t i = 0; i < w.elements.size(); ++i) {
          Element const x = w.elements[i], y = w.partners[i];
          if (v.product(e, x) != x || v.product(x, e) != x
              || v.product(x, y) != e || v.product(y, x) != e) {
            return false;
          }
        }
        return true;
      }
      if (k == "clifford") {
        if (w.elements.size() < goal || w.partners.size() != 2 * w.elements.size()
            || !distinct(w.elements)) {
          return false;
        }
        for (std::size_t i = 0; i < w.elements.size(); ++i) {
          Element const x = w.elements[i], e = w.partners[2 * i],
                        y = w.partners[2 * i + 1];
          if (!is_idempotent(v, e) || v.product(e, x) != x
              || v.product(x, e) != x || v.product(x, y) != e
              || v.product(y, x) != e) {
            return false;
          }
        }
        return true;
      }
      if (k == "residue") {
        if (w.elements.empty() || !distinct(w.elements)) {
          return false;
        }
        if (name == "clifford_plus_finite" && w.elements.size() < goal) {
          return false;
        }
        for (Element x : w.elements) {
          if (!outside_clifford_part(v, x)) {
            return false;
          }
        }
        return true;
      }
      if (k == "nilpotent") {
        if (w.elements.size() < goal || !distinct(w.elements)) {
          return false;
        }
        for (Element x : w.elements) {
          if (!outside_clifford_part(v, x)) {
            return false;
          }
          for (Element y : w.elements) {
            if (in_clifford_part(v, v.product(x, y)) != Tri::yes) {
              return false;
            }
          }
        }
        return true;
      }
      if (k == "central_idempotents") {
        if (w.elements.size() < goal || !distinct(w.elements)) {
          return false;
        }
        for (Element x : w.elements) {
          if (!is_idempotent(v, x) || !is_central(v, x)) {
            return false;
          }
        }
        return true;
      }
      if (k == "enumerated") {
        std::unordered_set<Element> const d(v.carrier().begin(),
                                            v.carrier().end());
        return !v.exact() && d.size() >= w.value && w.value >= goal;
      }
      return false;
    }

  }  // namespace

  bool replay(View const& v, std::string_view name, Verdict const& verdict) {
    if (verdict.status == Status::unknown) {
      return !verdict.witness.has_value();
    }
    return verdict.witness
           && replay_witness(v, name, verdict.status, *verdict.witness);
  }

  std::vector<std::string> closure_violations(PredicateSuite const& suite) {
    static std::vector<std::pair<char const*, char const*>> const rules
        = {{"bounded", "periodic"},
           {"clifford", "eventually_clifford"},
           {"finite", "chain_finite"},
           {"finite", "nonsingular"},
           {"finite", "clifford_finite"},
           {"finite", "clifford_plus_finite"},
           {"finite", "group_finite"},
           {"group_finite", "group_bounded"},
           {"chain_finite", "ez_chain_finite"}};
    std::vector<std::string> out;
    for (auto const& [p, q] : rules) {
      auto ip = suite.find(p), iq = suite.find(q);
      if (ip != suite.end() && iq != suite.end()
          && ip->second.status == Status::holds
          && iq->second.status == Status::fails) {
        out.push_back(std::string(p) + " => " + q);
      }
    }
    return out;
  }

  std::vector<std::string> spot_check_declared(Semigroup const& s,
                                               Budget           budget) {
    // (predicate, value whose evidence a bounded search can exhibit)
    static std::vector<std::pair<char const*, bool>> const searchable
        = {{"chain_finite", false},
           {"nonsingular", false},
           {"clifford_finite", false},
           {"commutative", false},
           {"finite", false},
           {"group_finite", false},
           {"clifford_singular", true}};
    View const               v(s, budget);
    std::vector<std::string> missed;
    for (auto const& [name, value] : searchable) {
      auto const fact = s.fact(name);
      if (!fact || *fact != value) {
        continue;
      }
      Verdict const r = search(name, v);
      Status const  want = value ? Status::holds : Status::fails;
      if (r.status != want || !replay(v, name, r)) {
        missed.push_back(name);
      }
    }
    return missed;
  }

}  // namespace sgtop
