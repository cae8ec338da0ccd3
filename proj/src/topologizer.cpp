#include "sgtop/topologizer.hpp"

#include <algorithm>      // for sort, binary_search, set_union
#include <numeric>        // for lcm
#include <random>         // for mt19937_64, uniform_int_distribution
#include <unordered_set>  // for unordered_set

#include "sgtop/algebra.hpp"  // for is_central, pi, in_clifford_part, monogenic

namespace sgtop {

  namespace {

    // x <= y in the natural order; both idempotent
    bool leq(Semigroup const& s, Element x, Element y) {
      return s.product(x, y) == x && s.product(y, x) == x;
    }

    bool above_some(Semigroup const& s, ElementList const& F, Element x) {
      for (Element f : F) {
        if (leq(s, f, x)) {
          return true;
        }
      }
      return false;
    }

    ElementList normalised(ElementList F) {
      std::sort(F.begin(), F.end());
      F.erase(std::unique(F.begin(), F.end()), F.end());
      return F;
    }

    std::string tuple_text(std::initializer_list<Element> xs) {
      std::string out = "(";
      bool        first = true;
      for (Element x : xs) {
        out += (first ? "" : ", ") + std::to_string(x);
        first = false;
      }
      return out + ")";
    }

    // Shared state of the members of one family: the view and the
    // carrier-level caches that every membership test needs.
    struct Context {
      std::shared_ptr<View const> v;
      Element                     e = 0;
      std::unordered_set<Element> carrier;
      std::unordered_set<Element> central;

      Context(std::shared_ptr<View const> view, Element ee)
          : v(std::move(view)), e(ee) {
        Semigroup const& s = v->semigroup();
        if (s.product(e, e) != e) {
          throw BadParameter(std::to_string(e) + " is not an idempotent");
        }
        for (Element x : v->carrier()) {
          carrier.insert(x);
          if (sgtop::is_central(*v, x)) {
            central.insert(x);
          }
        }
        if (!is_central(e)) {
          throw BadParameter(std::to_string(e) + " is not central");
        }
      }

      bool is_central(Element x) const {
        if (carrier.count(x) != 0) {
          return central.count(x) != 0;
        }
        return sgtop::is_central(*v, x);
      }

      bool is_idempotent(Element x) const {
        return v->product(x, x) == x;
      }

      // F ⊆ E(X) \ ↓e, central when `central_only`
      void check_F(ElementList const& F, bool central_only) const {
        for (Element f : F) {
          if (!is_idempotent(f)) {
            throw BadParameter("F contains the non-idempotent "
                               + std::to_string(f));
          }
          if (central_only && !is_central(f)) {
            throw BadParameter("F contains the non-central idempotent "
                               + std::to_string(f));
          }
          if (leq(v->semigroup(), f, e)) {
            throw BadParameter("F meets the down-set of e at "
                               + std::to_string(f));
          }
        }
      }

      LazySet filter(std::function<bool(Element)> member) const {
        LazySet out;
        for (Element x : v->carrier()) {
          if (member(x)) {
            out.elements.push_back(x);
          }
        }
        out.member   = std::move(member);
        out.complete = v->exact();
        return out;
      }
    };

    using ContextPtr = std::shared_ptr<Context const>;

    ContextPtr make_context(View const& v, Element e) {
      return std::make_shared<Context const>(std::make_shared<View const>(v), e);
    }

    LazySet member_E(ContextPtr const& c, ElementList F) {
      F = normalised(std::move(F));
      c->check_F(F, true);
      return c->filter([c, F](Element x) {
        Semigroup const& s = c->v->semigroup();
        return s.product(x, c->e) == c->e && s.product(x, x) == x
               && c->is_central(x) && !above_some(s, F, x);
      });
    }

    LazySet member_H(ContextPtr const& c, ElementList F) {
      F = normalised(std::move(F));
      c->check_F(F, true);
      return c->filter([c, F](Element x) {
        Semigroup const& s = c->v->semigroup();
        if (s.product(x, c->e) != c->e || !c->is_central(x)) {
          return false;
        }
        Element id = 0;
        return in_clifford_part(*c->v, x, &id) == Tri::yes
               && !above_some(s, F, id);
      });
    }

    // z in e/e ∩ Z(X) ∩ π⁻¹[EZ(X) \ ↑F]
    bool z_generator(Context const& c, ElementList const& F, Element z) {
      Semigroup const& s = c.v->semigroup();
      if (s.product(z, c.e) != c.e || !c.is_central(z)) {
        return false;
      }
      PiResult const p = pi(*c.v, z);
      return p.kind == PiResult::Kind::defined && c.is_central(p.idempotent)
             && !above_some(s, F, p.idempotent);
    }

    LazySet member_Z(ContextPtr const& c, std::uint64_t n, ElementList F) {
      if (n == 0) {
        throw BadParameter("the exponent of a power member must be positive");
      }
      F = normalised(std::move(F));
      c->check_F(F, false);
      // roots are searched in the carrier
      auto gens = std::make_shared<ElementList>();
      for (Element z : c->v->carrier()) {
        if (z_generator(*c, F, z)) {
          gens->push_back(z);
        }
      }
      LazySet out;
      std::unordered_set<Element> seen;
      for (Element z : *gens) {
        Element const p = c->v->power(z, n);
        if (seen.insert(p).second) {
          out.elements.push_back(p);
        }
      }
      out.complete = c->v->exact();
      out.member   = [c, gens, n](Element x) {
        for (Element z : *gens) {
          if (c->v->power(z, n) == x) {
            return true;
          }
        }
        return false;
      };
      return out;
    }

    LazySet ee_set(View const& v, Element e) {
      LazySet out;
      for (Element x : v.carrier()) {
        if (v.product(x, e) == e) {
          out.elements.push_back(x);
        }
      }
      out.complete = v.exact();
      out.member   = [s = v.semigroup(), e](Element x) {
        return s.product(x, e) == e;
      };
      return out;
    }

    // least m >= every index, divisible by every period, over the carrier
    std::uint64_t uniform_exponent(View const& v) {
      std::uint64_t index = 1, period = 1;
      for (Element x : v.carrier()) {
        MonogenicData const md = monogenic(v, x);
        if (!md.index || !md.period) {
          return 0;
        }
        index  = std::max(index, *md.index);
        period = std::lcm(period, *md.period);
      }
      return ((index + period - 1) / period) * period;
    }

    // y·v = b with y in q, v in V, within the scanned prefixes
    std::optional<std::pair<Element, Element>>
    factor_through(View const&            v,
                   LeftQuotientSet const& q,
                   LazySet const&         V,
                   Element                b,
                   std::size_t            scan) {
      ElementList ys{b};
      for (std::size_t i = 0; i < q.elements.size() && i < scan; ++i) {
        ys.push_back(q.elements[i]);
      }
      for (Element y : ys) {
        if (v.product(y, q.e) != q.b) {
          continue;
        }
        for (std::size_t i = 0; i < V.elements.size() && i < scan; ++i) {
          if (v.product(y, V.elements[i]) == b) {
            return std::make_pair(y, V.elements[i]);
          }
        }
      }
      return std::nullopt;
    }

    std::size_t scan_limit(View const& v) {
      return v.exact() ? std::size_t(-1) : v.budget().elements;
    }

    bool scanned_all(View const&            v,
                     LeftQuotientSet const& q,
                     LazySet const&         V) {
      std::size_t const s = scan_limit(v);
      return q.complete && V.complete && q.elements.size() <= s
             && V.elements.size() <= s;
    }

    // b outside (be/e)·V: yes, no (with the factors) or unknown
    Tri excludes(View const& v, Element e, Element b, LazySet const& V,
                 std::pair<Element, Element>* factors = nullptr) {
      Element const         be = v.product(b, e);
      LeftQuotientSet const q  = left_quotient(v, be, e);
      auto const            f  = factor_through(v, q, V, b, scan_limit(v));
      if (f) {
        if (factors != nullptr) {
          *factors = *f;
        }
        return Tri::no;
      }
      return scanned_all(v, q, V) ? Tri::yes : Tri::unknown;
    }

    Witness regular_witness(EBaseParameter const& p, EBaseKind kind) {
      Witness w;
      w.kind     = "regular";
      w.elements = p.F;
      w.value    = kind == EBaseKind::custom ? p.index : p.n;
      return w;
    }

    EBaseParameter parameter_of(Witness const& w, EBaseKind kind) {
      EBaseParameter p;
      if (kind == EBaseKind::custom) {
        p.index = w.value;
      } else {
        p.F = w.elements;
        p.n = std::max<std::uint64_t>(w.value, 1);
      }
      return p;
    }

    EBaseParameter default_parameter() {
      return {};
    }

    EBaseParameter random_parameter(EBaseFamily const& base,
                                    std::mt19937_64&   rng,
                                    std::size_t        max_F = 3) {
      EBaseParameter p;
      if (base.kind() == EBaseKind::custom) {
        p.index = rng() % base.custom_size();
        return p;
      }
      auto const& adm = base.admissible();
      if (!adm.empty()) {
        std::size_t const k = rng() % (std::min(max_F, adm.size()) + 1);
        for (std::size_t i = 0; i < k; ++i) {
          p.F.push_back(adm[rng() % adm.size()]);
        }
      }
      p.F = normalised(p.F);
      if (base.kind() == EBaseKind::Z) {
        p.n = 1 + rng() % 3;
      }
      return p;
    }

  }  // namespace

  LazySet LazySet::of(ElementList xs) {
    LazySet out;
    out.elements = xs;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    out.member = [sorted = std::move(xs)](Element x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    out.complete = true;
    return out;
  }

  LeftQuotientSet left_quotient(View const& v, Element b, Element e) {
    if (v.product(e, e) != e) {
      throw NotIdempotent(e);
    }
    LeftQuotientSet q;
    q.b = b;
    q.e = e;
    Semigroup const& s = v.semigroup();
    if (v.exact()) {
      for (Element x : v.carrier()) {
        if (v.product(x, e) == b) {
          q.elements.push_back(x);
        }
      }
      q.complete = true;
    } else if (s.has_left_division()) {
      DivisionResult r = s.stream()->left_division(b, e, v.budget().steps);
      for (Element x : r.elements) {
        if (v.is_member(x)) {
          q.elements.push_back(x);
        }
      }
      q.complete = r.complete;
    } else {
      for (Element x : v.pool()) {
        if (v.product(x, e) == b) {
          q.elements.push_back(x);
        }
      }
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // ShiftNeighborhood
  ////////////////////////////////////////////////////////////////////////

  ShiftNeighborhood::ShiftNeighborhood(View const& v,
                                       Element     e,
                                       Element     b,
                                       LazySet     generators,
                                       bool        inside_ee)
      : _s(v.semigroup()),
        _e(e),
        _b(b),
        _u(std::move(generators)),
        _q(left_quotient(v, b, e)),
        _inside_ee(inside_ee),
        _scan(scan_limit(v)) {}

  Tri ShiftNeighborhood::contains(Element x) const {
    if (x == _b) {
      return Tri::yes;
    }
    if (_inside_ee && _s.product(x, _e) != _s.product(_b, _e)) {
      return Tri::no;
    }
    if (_q.complete && _q.elements.empty()) {
      return Tri::no;
    }
    auto in_q = [&](Element y) { return _s.product(y, _e) == _b; };
    ElementList us{x, _e};
    for (std::size_t i = 0; i < _u.elements.size() && i < _scan; ++i) {
      us.push_back(_u.elements[i]);
    }
    std::vector<bool> in_u(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) {
      in_u[i] = _u.contains(us[i]);
    }
    auto hit = [&](Element y) {
      for (std::size_t i = 0; i < us.size(); ++i) {
        if (in_u[i] && _s.product(y, us[i]) == x) {
          return true;
        }
      }
      return false;
    };
    if (in_q(x) && hit(x)) {
      return Tri::yes;
    }
    // u = x or u = e first, then everything
    for (std::size_t i = 0; i < _q.elements.size() && i < _scan; ++i) {
      Element const y = _q.elements[i];
      if ((in_u[0] && _s.product(y, x) == x) || (in_u[1] && _s.product(y, _e) == x)) {
        return Tri::yes;
      }
    }
    for (std::size_t i = 0; i < _q.elements.size() && i < _scan; ++i) {
      if (hit(_q.elements[i])) {
        return Tri::yes;
      }
    }
    bool const all = _q.complete && _u.complete && _q.elements.size() <= _scan
                     && _u.elements.size() <= _scan;
    return all ? Tri::no : Tri::unknown;
  }

  std::vector<ShiftNeighborhood::Point>
  ShiftNeighborhood::enumerate(std::size_t limit) const {
    std::vector<Point> out;
    if (limit == 0) {
      return out;
    }
    out.push_back({_b, _b, _b, true});
    std::unordered_set<Element> seen{_b};
    std::size_t const           qs = std::min(_q.elements.size(), _scan);
    std::size_t const           us = std::min(_u.elements.size(), _scan);
    for (std::size_t i = 0; i < qs && out.size() < limit; ++i) {
      for (std::size_t j = 0; j < us && out.size() < limit; ++j) {
        Element const y = _q.elements[i], u = _u.elements[j];
        Element const p = _s.product(y, u);
        if (seen.insert(p).second) {
          out.push_back({p, y, u, false});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // e-bases
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(EBaseKind k) {
    switch (k) {
      case EBaseKind::E: return "E";
      case EBaseKind::H: return "H";
      case EBaseKind::Z: return "Z";
      default: return "custom";
    }
  }

  EBaseKind ebase_kind_from_string(std::string_view s) {
    if (s == "E") {
      return EBaseKind::E;
    }
    if (s == "H") {
      return EBaseKind::H;
    }
    if (s == "Z") {
      return EBaseKind::Z;
    }
    throw BadParameter("unknown e-base kind \"" + std::string(s)
                       + "\", expected E, H or Z");
  }

  LazySet ebase_E(View const& v, Element e, ElementList const& F) {
    return member_E(make_context(v, e), F);
  }

  LazySet ebase_H(View const& v, Element e, ElementList const& F) {
    return member_H(make_context(v, e), F);
  }

  LazySet ebase_Z(View const& v, Element e, std::uint64_t n, ElementList const& F) {
    return member_Z(make_context(v, e), n, F);
  }

  // The context is kept in a type-erased holder so the header stays free of
  // it; EBaseFamily stores the view and rebuilds members through it.
  namespace {
    std::shared_ptr<Context const> context_for(std::shared_ptr<View const> const& v,
                                               Element e) {
      static thread_local std::weak_ptr<View const>      last_view;
      static thread_local Element                        last_e = 0;
      static thread_local std::shared_ptr<Context const> last;
      if (last && last_view.lock() == v && last_e == e) {
        return last;
      }
      last      = std::make_shared<Context const>(v, e);
      last_view = v;
      last_e    = e;
      return last;
    }
  }  // namespace

  EBaseFamily::EBaseFamily(View v, Element e, EBaseKind kind)
      : _v(std::make_shared<View const>(std::move(v))), _e(e), _kind(kind) {
    if (kind == EBaseKind::custom) {
      throw BadParameter("custom families need explicit members");
    }
    auto const       c = context_for(_v, e);
    Semigroup const& s = _v->semigroup();
    for (Element f : _v->carrier()) {
      if (c->is_idempotent(f) && !leq(s, f, e)
          && (kind == EBaseKind::Z || c->is_central(f))) {
        _admissible.push_back(f);
      }
    }
  }

  EBaseFamily::EBaseFamily(View v, Element e, std::vector<LazySet> members)
      : _v(std::make_shared<View const>(std::move(v))),
        _e(e),
        _kind(EBaseKind::custom),
        _custom(std::move(members)) {
    context_for(_v, e);
    if (_custom.empty()) {
      throw BadParameter("an e-base needs at least one member");
    }
  }

  LazySet EBaseFamily::member(EBaseParameter const& p) const {
    switch (_kind) {
      case EBaseKind::E: return member_E(context_for(_v, _e), p.F);
      case EBaseKind::H: return member_H(context_for(_v, _e), p.F);
      case EBaseKind::Z: return member_Z(context_for(_v, _e), p.n, p.F);
      default: break;
    }
    if (p.index >= _custom.size()) {
      throw BadParameter("member index " + std::to_string(p.index)
                         + " out of range");
    }
    return _custom[p.index];
  }

  std::optional<EBaseParameter> EBaseFamily::meet(EBaseParameter const& a,
                                                  EBaseParameter const& b) const {
    if (_kind != EBaseKind::custom) {
      EBaseParameter out;
      std::set_union(a.F.begin(), a.F.end(), b.F.begin(), b.F.end(),
                     std::back_inserter(out.F));
      out.n = _kind == EBaseKind::Z ? a.n * b.n : 1;
      return out;
    }
    LazySet const& A = member(a);
    LazySet const& B = member(b);
    for (std::size_t i = 0; i < _custom.size(); ++i) {
      bool inside = true;
      for (Element x : _custom[i].elements) {
        if (!A.contains(x) || !B.contains(x)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        EBaseParameter p;
        p.index = i;
        return p;
      }
    }
    return std::nullopt;
  }

  std::optional<EBaseParameter> EBaseFamily::least() const {
    if (!_v->exact() || _kind == EBaseKind::custom) {
      return std::nullopt;
    }
    EBaseParameter p;
    p.F = _admissible;
    if (_kind == EBaseKind::Z) {
      p.n = std::max<std::uint64_t>(uniform_exponent(*_v), 1);
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Remote bases
  ////////////////////////////////////////////////////////////////////////

  RemoteBase constant_base(std::vector<LazySet> members) {
    return [m = std::move(members)](Element) { return m; };
  }

  RemoteBaseReport validate_remote_base(View const&        v,
                                        Element            e,
                                        RemoteBase const&  phi,
                                        ElementList const& points,
                                        std::size_t        enumeration) {
    RemoteBaseReport r;
    auto cut = [&](LazySet const& s) {
      ElementList out(s.elements.begin(),
                      s.elements.begin()
                          + std::min(s.elements.size(), enumeration));
      return out;
    };
    for (Element x : points) {
      auto const members = phi(x);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
          ++r.checked_directed;
          LazySet const& A = members[i];
          LazySet const& B = members[j];
          for (Element y : cut(A)) {
            if (B.contains(y) && v.product(y, e) != e) {
              r.violations.push_back({1, x, 0, {i, j}, y,
                                      "intersection leaves e/e"});
            }
          }
          bool found = false;
          for (auto const& C : members) {
            bool inside = true;
            for (Element y : cut(C)) {
              if (!A.contains(y) || !B.contains(y)) {
                inside = false;
                break;
              }
            }
            if (inside) {
              found = true;
              break;
            }
          }
          if (!found) {
            r.violations.push_back(
                {1, x, 0, {i, j}, std::nullopt,
                 "no member inside the intersection"});
          }
        }
      }
    }

    // V ⊆ W, Uy ⊆ yW and UbV ⊆ bW for b in y/e
    auto in_yW = [&](Element y, Element p, LazySet const& W) {
      for (Element w : cut(W)) {
        if (v.product(y, w) == p) {
          return true;
        }
      }
      return false;
    };
    for (Element x : points) {
      for (Element y : points) {
        auto const Ux = phi(x);
        auto const Vy = phi(y);
        auto const Wxy = phi(v.product(x, y));
        LeftQuotientSet const q   = left_quotient(v, y, e);
        ElementList const     bs  = [&] {
          ElementList out;
          for (std::size_t i = 0; i < q.elements.size() && i < enumeration; ++i) {
            out.push_back(q.elements[i]);
          }
          return out;
        }();
        for (std::size_t w = 0; w < Wxy.size(); ++w) {
          ++r.checked_translation;
          LazySet const& W     = Wxy[w];
          bool           found = false;
          for (auto const& U : Ux) {
            for (auto const& V : Vy) {
              bool ok = true;
              for (Element t : cut(V)) {
                ok = ok && W.contains(t);
              }
              for (Element u : cut(U)) {
                ok = ok && in_yW(y, v.product(u, y), W);
              }
              for (Element b : bs) {
                for (Element u : cut(U)) {
                  for (Element t : cut(V)) {
                    if (!ok) {
                      break;
                    }
                    ok = in_yW(b, v.product(v.product(u, b), t), W);
                  }
                }
              }
              if (ok) {
                found = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
          if (!found) {
            r.violations.push_back({2, x, y, {w}, std::nullopt,
                                    "no compatible pair of members"});
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regularity
  ////////////////////////////////////////////////////////////////////////

  Verdict is_regular(EBaseFamily const& base, Element b) {
    View const&      v  = base.view();
    Element const    e  = base.e();
    Element const    be = v.product(b, e);
    Semigroup const& s  = v.semigroup();
    if (be == b) {
      throw Inapplicable("b = be for b = " + std::to_string(b));
    }
    std::vector<EBaseParameter> candidates;
    if (base.kind() == EBaseKind::custom) {
      for (std::size_t i = 0; i < base.custom_size(); ++i) {
        EBaseParameter p;
        p.index = i;
        candidates.push_back(p);
      }
    } else {
      // idempotents s with bs = b; the least one is excluded first
      ElementList fixing;
      for (Element f : base.admissible()) {
        if (s.product(b, f) == b) {
          fixing.push_back(f);
        }
      }
      std::vector<ElementList> Fs;
      for (Element f : fixing) {
        bool least = true;
        for (Element g : fixing) {
          least = least && leq(s, f, g);
        }
        if (least) {
          Fs.push_back({f});
        }
      }
      Fs.push_back(fixing);
      Fs.push_back({});
      if (v.exact()) {
        Fs.push_back(base.admissible());
      }
      std::vector<std::uint64_t> ns{1};
      if (base.kind() == EBaseKind::Z) {
        ns = {1, 2, 3, 4, 6, 8, 12};
        if (auto l = base.least()) {
          ns.push_back(l->n);
        }
      }
      for (auto const& F : Fs) {
        for (std::uint64_t n : ns) {
          EBaseParameter p;
          p.F = normalised(F);
          p.n = n;
          if (std::find(candidates.begin(), candidates.end(), p)
              == candidates.end()) {
            candidates.push_back(p);
          }
        }
      }
    }

    Verdict out;
    out.bound = v.budget();
    std::optional<std::pair<Element, Element>> least_factors;
    auto const                                 least = base.least();
    for (auto const& p : candidates) {
      std::pair<Element, Element> f;
      Tri const t = excludes(v, e, b, base.member(p), &f);
      if (t == Tri::no) {
        if (least && p == *least) {
          least_factors = f;
        }
        continue;
      }
      out.status  = Status::holds;
      out.source  = t == Tri::yes ? Source::finite_exhaustion : Source::search;
      out.witness = regular_witness(p, base.kind());
      return out;
    }
    if (least_factors && base.kind() != EBaseKind::Z) {
      out.status          = Status::fails;
      out.source          = Source::finite_exhaustion;
      out.witness         = regular_witness(*least, base.kind());
      out.witness->partners = {least_factors->first, least_factors->second};
    }
    return out;
  }

  RegularityReport sufficient_regularity(EBaseFamily const& base,
                                         RegularityMode     mode,
                                         ElementList const& points,
                                         std::uint64_t      seed) {
    View const&      v = base.view();
    Element const    e = base.e();
    Semigroup const& s = v.semigroup();
    RegularityReport r;
    r.mode = mode;

    std::vector<std::string> hyps;
    if (mode == RegularityMode::Z) {
      hyps = {"nonsingular", "eventually_clifford", "e_well_founded"};
    } else {
      hyps = {"ez_well_founded"};
    }
    for (auto const& h : hyps) {
      (evaluate(h, v).status == Status::holds ? r.confirmed : r.unconfirmed)
          .push_back(h);
    }

    auto const  ctx = context_for(std::make_shared<View const>(v), e);
    ElementList domain;
    for (Element f : v.carrier()) {
      if (ctx->is_idempotent(f) && !leq(s, f, e)
          && (mode == RegularityMode::Z || ctx->is_central(f))) {
        domain.push_back(f);
      }
    }

    // target sets of the two sufficient conditions
    auto inside_HZ = [&](ElementList const& F, Element x) {
      Element id = 0;
      return ctx->is_central(x) && in_clifford_part(v, x, &id) == Tri::yes
             && ctx->is_central(id) && !above_some(s, F, id);
    };
    auto inside_powers = [&](ElementList const& F, std::uint64_t n, Element x) {
      for (Element z : v.carrier()) {
        if (!z_generator(*ctx, F, z)) {
          continue;
        }
        Element p = v.power(z, n);
        for (std::uint64_t m = n; m < n + 64; ++m) {
          if (p == x) {
            return true;
          }
          p = v.product(p, z);
        }
      }
      return false;
    };

    std::mt19937_64 rng(seed);
    for (Element b : points) {
      if (v.product(b, e) == b) {
        continue;
      }
      std::vector<ElementList> Fs{{}};
      for (int t = 0; t < 3 && !domain.empty(); ++t) {
        ElementList F;
        std::size_t const k = 1 + rng() % std::min<std::size_t>(3, domain.size());
        for (std::size_t i = 0; i < k; ++i) {
          F.push_back(domain[rng() % domain.size()]);
        }
        Fs.push_back(normalised(F));
      }
      std::vector<std::uint64_t> ns{1};
      if (mode == RegularityMode::Z) {
        ns = {1, 2, 3};
      }
      for (auto const& F : Fs) {
        for (std::uint64_t n : ns) {
          std::vector<EBaseParameter> cands;
          if (base.kind() == EBaseKind::custom) {
            for (std::size_t i = 0; i < base.custom_size(); ++i) {
              EBaseParameter p;
              p.index = i;
              cands.push_back(p);
            }
          } else {
            EBaseParameter p;
            // restricted to the family's own parameter domain
            for (Element f : F) {
              if (std::find(base.admissible().begin(), base.admissible().end(), f)
                  != base.admissible().end()) {
                p.F.push_back(f);
              }
            }
            p.n = base.kind() == EBaseKind::Z ? n : 1;
            cands.push_back(p);
          }
          bool found = false;
          for (auto const& p : cands) {
            LazySet const V  = base.member(p);
            bool          ok = true;
            for (Element x : V.elements) {
              ok = mode == RegularityMode::Z ? inside_powers(F, n, x)
                                             : inside_HZ(F, x);
              if (!ok) {
                break;
              }
            }
            if (ok) {
              found = true;
              break;
            }
          }
          if (found) {
            ++r.checked;
          } else {
            EBaseParameter p;
            p.F = F;
            p.n = n;
            r.failures.emplace_back(b, p);
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  namespace {

    ShiftNeighborhood basic(EBaseFamily const&    base,
                            Element               x,
                            EBaseParameter const& p) {
      return ShiftNeighborhood(base.view(), base.e(), x, base.member(p), true);
    }

    // every product of the enumerations lies in Λ(ab; W)
    bool continuity_holds(EBaseFamily const&    base,
                          Element               a,
                          Element               b,
                          EBaseParameter const& pw,
                          EBaseParameter const& pu,
                          EBaseParameter const& pv,
                          std::size_t           limit,
                          std::size_t*          products,
                          std::optional<Element>* definite_miss) {
      View const&             v  = base.view();
      Element const           e  = base.e();
      Element const           ab = v.product(a, b);
      LazySet const           W  = base.member(pw);
      ShiftNeighborhood const target(v, e, ab, W, true);
      auto const              A = basic(base, a, pu).enumerate(limit);
      auto const              B = basic(base, b, pv).enumerate(limit);
      std::size_t             count = 0;
      for (auto const& P : A) {
        for (auto const& Q : B) {
          ++count;
          Element const p = v.product(P.x, Q.x);
          if (p == ab) {
            continue;
          }
          // p = c·w with c in ab/e and w in W, as in the proof
          Element const c = v.product(P.base ? a : P.y, Q.base ? b : Q.y);
          std::optional<Element> w;
          if (P.base) {
            w = Q.u;
          } else if (Q.base) {
            w = P.u;
          } else {
            w = v.product(P.u, Q.u);
          }
          if (v.product(c, *w) == p && v.product(c, e) == ab && W.contains(*w)) {
            continue;
          }
          Tri const t = target.contains(p);
          if (t == Tri::yes) {
            continue;
          }
          if (t == Tri::no && definite_miss != nullptr) {
            *definite_miss = p;
          }
          return false;
        }
      }
      if (products != nullptr) {
        *products = count;
      }
      return true;
    }

    bool disjoint_from(EBaseFamily const&       base,
                       Element                  a,
                       EBaseParameter const&    p,
                       ShiftNeighborhood const& B,
                       std::size_t              limit,
                       bool*                    exact) {
      ShiftNeighborhood const A = basic(base, a, p);
      bool                    all_no = true;
      for (auto const& P : A.enumerate(limit)) {
        Tri const t = B.contains(P.x);
        if (t == Tri::yes) {
          return false;
        }
        all_no = all_no && t == Tri::no;
      }
      if (exact != nullptr) {
        *exact = all_no && A.exact() && A.enumerate(std::size_t(-1)).size() <= limit;
      }
      return true;
    }

    std::vector<EBaseParameter> separating_candidates(EBaseFamily const& base,
                                                      Element            other) {
      std::vector<EBaseParameter> out{default_parameter()};
      if (base.kind() == EBaseKind::custom) {
        for (std::size_t i = 1; i < base.custom_size(); ++i) {
          EBaseParameter p;
          p.index = i;
          out.push_back(p);
        }
        return out;
      }
      auto const& adm = base.admissible();
      if (std::find(adm.begin(), adm.end(), other) != adm.end()) {
        EBaseParameter p;
        p.F = {other};
        out.push_back(p);
      }
      View const& v = base.view();
      if (v.product(other, base.e()) != other) {
        Verdict const r = is_regular(base, other);
        if (r.status == Status::holds) {
          out.push_back(parameter_of(*r.witness, base.kind()));
        }
      }
      if (auto l = base.least()) {
        out.push_back(*l);
      }
      return out;
    }

  }  // namespace

  TopologyCertificate certify_topology(EBaseFamily const&    base,
                                       CertifyOptions const& options) {
    View const&   v = base.view();
    Element const e = base.e();
    TopologyCertificate c;
    c.e    = e;
    c.kind = base.kind();
    for (std::size_t i = 0; i < v.carrier().size() && i < options.ground; ++i) {
      c.ground.push_back(v.carrier()[i]);
    }
    std::mt19937_64 rng(options.seed);
    std::size_t const L = options.enumeration;

    std::vector<EBaseParameter> samples{default_parameter()};
    for (int i = 0; i < 8; ++i) {
      samples.push_back(random_parameter(base, rng));
    }
    if (auto l = base.least()) {
      samples.push_back(*l);
    }

    // isolation and discreteness of the non-isolated points
    for (Element x : c.ground) {
      if (v.product(x, e) != x) {
        c.isolation.push_back({x, true, true, 0});
        continue;
      }
      std::size_t fewest = std::size_t(-1);
      bool        exact  = false;
      if (auto l = base.least()) {
        auto const pts = basic(base, x, *l).enumerate(std::size_t(-1));
        fewest         = pts.size() - 1;
        exact          = true;
      } else {
        for (auto const& p : samples) {
          ShiftNeighborhood const N     = basic(base, x, p);
          std::size_t             count = 0;
          for (Element y : v.carrier()) {
            if (y != x && N.contains(y) == Tri::yes) {
              ++count;
            }
          }
          fewest = std::min(fewest, count);
        }
      }
      c.isolation.push_back({x, fewest == 0, exact, fewest});
      if (fewest != 0) {
        ShiftNeighborhood const N(v, e, x, ee_set(v, e));
        std::size_t             checked = 0;
        for (auto const& P : N.enumerate(std::max<std::size_t>(L, 64))) {
          if (P.base) {
            continue;
          }
          if (v.product(P.x, e) == P.x) {
            throw CertificationFailed("discreteness", tuple_text({x, P.x}));
          }
          ++checked;
        }
        c.discreteness.push_back({x, checked});
      }
    }

    // T0
    std::vector<std::pair<Element, Element>> pairs;
    std::size_t const                        g = c.ground.size();
    if (g >= 2) {
      if (g * (g - 1) / 2 <= options.pairs) {
        for (std::size_t i = 0; i < g; ++i) {
          for (std::size_t j = i + 1; j < g; ++j) {
            pairs.emplace_back(c.ground[i], c.ground[j]);
          }
        }
      } else {
        while (pairs.size() < options.pairs) {
          Element const x = c.ground[rng() % g], y = c.ground[rng() % g];
          if (x != y) {
            pairs.emplace_back(x, y);
          }
        }
      }
    }
    for (auto const& [x, y] : pairs) {
      std::optional<SeparationRecord> loose;
      bool                            done = false;
      for (auto [center, other] : {std::pair{x, y}, std::pair{y, x}}) {
        for (auto const& p : separating_candidates(base, other)) {
          Tri const t = basic(base, center, p).contains(other);
          if (t == Tri::no) {
            c.separations.push_back({x, y, center, p, true});
            done = true;
            break;
          }
          if (t == Tri::unknown && !loose) {
            loose = SeparationRecord{x, y, center, p, false};
          }
        }
        if (done) {
          break;
        }
      }
      if (!done) {
        if (!loose) {
          throw CertificationFailed("T0", tuple_text({x, y}));
        }
        c.separations.push_back(*loose);
      }
    }

    // regularity
    bool regular = true;
    for (Element b : c.ground) {
      if (v.product(b, e) == b) {
        continue;
      }
      Verdict const r = is_regular(base, b);
      if (r.status == Status::fails && base.kind() != EBaseKind::custom) {
        throw CertificationFailed("regularity", tuple_text({b}));
      }
      regular = regular && r.status == Status::holds;
      c.regularity.push_back({b, r});
    }

    // continuity, with U = V = W first
    if (!c.ground.empty()) {
      for (std::size_t t = 0; t < options.triples; ++t) {
        Element const        a = c.ground[rng() % g], b = c.ground[rng() % g];
        EBaseParameter const w = samples[rng() % samples.size()];
        std::vector<EBaseParameter> tries{w};
        if (auto m = base.meet(w, random_parameter(base, rng))) {
          tries.push_back(*m);
        }
        if (auto l = base.least()) {
          tries.push_back(*l);
        }
        bool                   done = false;
        std::optional<Element> miss;
        for (auto const& u : tries) {
          std::size_t products = 0;
          if (continuity_holds(base, a, b, w, u, u, L, &products, &miss)) {
            c.continuity.push_back({a, b, w, u, u, products});
            done = true;
            break;
          }
        }
        if (!done && miss) {
          throw CertificationFailed("continuity", tuple_text({a, b, *miss}));
        }
      }
    }

    // complements of basic sets are open
    if (regular && !c.ground.empty()) {
      std::size_t const sets = std::max<std::size_t>(1, options.pairs / 4);
      for (std::size_t t = 0; t < sets; ++t) {
        Element const           x = c.ground[rng() % g];
        EBaseParameter const    p = samples[rng() % samples.size()];
        ShiftNeighborhood const B = basic(base, x, p);
        for (std::size_t k = 0; k < 4; ++k) {
          Element const a  = c.ground[rng() % g];
          Tri const     in = B.contains(a);
          if (in == Tri::yes) {
            continue;
          }
          bool found = false;
          for (auto const& q : separating_candidates(base, x)) {
            bool exact = false;
            if (disjoint_from(base, a, q, B, L, &exact)) {
              c.clopen.push_back({x, p, a, q, exact && in == Tri::no});
              found = true;
              break;
            }
          }
          if (!found && in == Tri::no && B.exact()) {
            throw CertificationFailed("clopen", tuple_text({x, a}));
          }
        }
      }
    }
    return c;
  }

  std::vector<std::string> replay_certificate(EBaseFamily const&         base,
                                              TopologyCertificate const& c) {
    View const&              v = base.view();
    Element const            e = base.e();
    std::vector<std::string> bad;
    if (c.e != e || c.kind != base.kind()) {
      bad.push_back("certificate belongs to another family");
      return bad;
    }
    for (auto const& r : c.separations) {
      Element const other = r.center == r.x ? r.y : r.x;
      Tri const     t     = basic(base, r.center, r.parameter).contains(other);
      if (t == Tri::yes || (r.exact && t != Tri::no)) {
        bad.push_back("separation " + tuple_text({r.x, r.y}));
      }
    }
    for (auto const& r : c.continuity) {
      std::size_t products = 0;
      if (!continuity_holds(base, r.a, r.b, r.w, r.u, r.v, 16, &products, nullptr)) {
        bad.push_back("continuity " + tuple_text({r.a, r.b}));
      }
    }
    for (auto const& r : c.regularity) {
      if (r.verdict.status != Status::holds) {
        continue;
      }
      EBaseParameter const p = parameter_of(*r.verdict.witness, base.kind());
      Tri const            t = excludes(v, e, r.b, base.member(p));
      if (t == Tri::no
          || (r.verdict.source == Source::finite_exhaustion && t != Tri::yes)) {
        bad.push_back("regularity " + tuple_text({r.b}));
      }
    }
    for (auto const& r : c.clopen) {
      ShiftNeighborhood const B = basic(base, r.center, r.parameter);
      if (B.contains(r.outside) == Tri::yes
          || !disjoint_from(base, r.outside, r.separating, B, 16, nullptr)) {
        bad.push_back("clopen " + tuple_text({r.center, r.outside}));
      }
    }
    for (auto const& r : c.isolation) {
      if (r.isolated && r.exact && v.product(r.x, e) == r.x) {
        if (auto l = base.least()) {
          if (basic(base, r.x, *l).enumerate(2).size() != 1) {
            bad.push_back("isolation " + tuple_text({r.x}));
          }
        } else {
          bad.push_back("isolation " + tuple_text({r.x}));
        }
      }
      if (!r.isolated) {
        ShiftNeighborhood const N     = basic(base, r.x, default_parameter());
        std::size_t             count = 0;
        for (Element y : v.carrier()) {
          if (y != r.x && N.contains(y) == Tri::yes) {
            ++count;
          }
        }
        if (count < r.neighbours) {
          bad.push_back("non-isolation " + tuple_text({r.x}));
        }
      }
    }
    for (auto const& r : c.discreteness) {
      ShiftNeighborhood const N(v, e, r.x, ee_set(v, e));
      for (auto const& P : N.enumerate(std::max<std::size_t>(r.checked + 1, 2))) {
        if (!P.base && v.product(P.x, e) == P.x) {
          bad.push_back("discreteness " + tuple_text({r.x, P.x}));
        }
      }
    }
    return bad;
  }

  ////////////////////////////////////////////////////////////////////////
  // Topologizability
  ////////////////////////////////////////////////////////////////////////

  NonIsolatedIdempotent find_nonisolated_idempotent(View const&   v,
                                                    std::uint64_t seed) {
    if (v.exact()) {
      throw NotFound("the central semilattice is finite");
    }
    Semigroup const&  s  = v.semigroup();
    ElementList const ez = central_semilattice(v).elements;
    std::size_t const threshold = (v.budget().elements + 1) / 2;

    NonIsolatedIdempotent out;
    for (Element f : ez) {
      std::size_t up = 0;
      for (Element g : ez) {
        up += leq(s, f, g) ? 1 : 0;
      }
      if (up >= threshold) {
        out.candidates.push_back(f);
      }
    }
    if (out.candidates.empty()) {
      throw NotFound("no central idempotent has an infinite up-set at the bound");
    }
    ElementList sorted = out.candidates;
    std::sort(sorted.begin(), sorted.end());
    std::optional<Element> pick;
    for (Element f : sorted) {
      bool maximal = true;
      for (Element g : out.candidates) {
        if (g != f && leq(s, f, g)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        pick = f;
        break;
      }
    }
    if (!pick) {
      throw NotFound("no maximal candidate at the bound");
    }
    out.e = *pick;

    auto const  ctx = make_context(v, out.e);
    ElementList adm;
    for (Element f : ez) {
      if (!leq(s, f, out.e)) {
        adm.push_back(f);
      }
    }
    std::mt19937_64          rng(seed);
    std::vector<ElementList> Fs{{}};
    for (int t = 0; t < 8 && !adm.empty(); ++t) {
      ElementList       F;
      std::size_t const k = 1 + rng() % std::min<std::size_t>(32, adm.size());
      for (std::size_t i = 0; i < k; ++i) {
        F.push_back(adm[rng() % adm.size()]);
      }
      Fs.push_back(normalised(F));
    }
    for (auto const& F : Fs) {
      LazySet const U     = member_E(ctx, F);
      std::size_t   count = 0;
      for (Element x : U.elements) {
        count += x != out.e ? 1 : 0;
      }
      EBaseParameter p;
      p.F = F;
      out.evidence.emplace_back(p, count);
    }
    if (out.evidence.front().second == 0) {
      throw NotFound("the selected idempotent is isolated at the bound");
    }
    return out;
  }

  Topologizability topologizability_verdict(View const& v) {
    Topologizability out;
    out.verdict.bound  = v.budget();
    Verdict const cf   = evaluate("ez_chain_finite", v);
    Verdict const inf  = evaluate("ez_infinite", v);
    if (inf.status == Status::fails) {
      out.note = "the central semilattice is finite";
      return out;
    }
    if (cf.status == Status::fails) {
      out.note = "the central semilattice is not chain-finite";
      return out;
    }
    if (cf.status != Status::holds || inf.status != Status::holds) {
      out.note = "chain-finiteness or infinitude of the central semilattice "
                 "is undetermined";
      return out;
    }
    try {
      auto const n = find_nonisolated_idempotent(v);
      out.e              = n.e;
      out.verdict.status = Status::holds;
      out.verdict.source = cf.source == Source::declared_fact
                                   || inf.source == Source::declared_fact
                               ? Source::declared_fact
                               : Source::search;
      Witness w;
      w.kind     = "topology";
      w.elements = {n.e};
      w.partners = n.candidates;
      out.verdict.witness = w;
      out.note = "non-isolated idempotent found";
    } catch (NotFound const& err) {
      out.note = err.what();
    }
    return out;
  }

}  // namespace sgtop
