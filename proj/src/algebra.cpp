#include "sgtop/algebra.hpp"

#include <algorithm>      // for find, sort, max
#include <limits>         // for numeric_limits
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move

namespace sgtop {

  bool ElementSet::contains(Element x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and the natural partial order
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(View const& v, Element x) {
    return v.product(x, x) == x;
  }

  ElementSet idempotents(View const& v) {
    ElementSet out{{}, v.exact()};
    for (Element x : v.carrier()) {
      if (is_idempotent(v, x)) {
        out.elements.push_back(x);
      }
    }
    return out;
  }

  IdempotentPoset::IdempotentPoset(View const& v, ElementList elements)
      : _elements(std::move(elements)), _leq() {
    std::size_t const n = _elements.size();
    for (Element x : _elements) {
      if (!is_idempotent(v, x)) {
        throw NotIdempotent(x);
      }
    }
    _leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element const x = _elements[i], y = _elements[j];
        _leq[i][j]      = v.product(x, y) == x && v.product(y, x) == x;
      }
    }
  }

  std::size_t IdempotentPoset::index(Element x) const {
    auto it = std::find(_elements.begin(), _elements.end(), x);
    if (it == _elements.end()) {
      throw BadParameter("element " + std::to_string(x)
                         + " is not in the poset");
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  bool IdempotentPoset::contains(Element x) const {
    return std::find(_elements.begin(), _elements.end(), x) != _elements.end();
  }

  bool IdempotentPoset::leq(Element x, Element y) const {
    return _leq[index(x)][index(y)];
  }

  ElementList IdempotentPoset::down(Element a) const {
    return down(ElementList{a});
  }

  ElementList IdempotentPoset::up(Element a) const {
    return up(ElementList{a});
  }

  ElementList IdempotentPoset::down(ElementList const& as) const {
    std::vector<std::size_t> idx;
    for (Element a : as) {
      idx.push_back(index(a));
    }
    ElementList out;
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      for (std::size_t j : idx) {
        if (_leq[i][j]) {
          out.push_back(_elements[i]);
          break;
        }
      }
    }
    return out;
  }

  ElementList IdempotentPoset::up(ElementList const& as) const {
    std::vector<std::size_t> idx;
    for (Element a : as) {
      idx.push_back(index(a));
    }
    ElementList out;
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      for (std::size_t j : idx) {
        if (_leq[j][i]) {
          out.push_back(_elements[i]);
          break;
        }
      }
    }
    return out;
  }

  ElementList IdempotentPoset::longest_chain() const {
    std::size_t const n = _elements.size();
    if (n == 0) {
      return {};
    }
    // order indices by the size of their down-set; x < y implies
    // |down x| < |down y|
    std::vector<std::size_t> order(n), below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < n; ++j) {
        below[i] += _leq[j][i];
      }
    }
    std::sort(order.begin(), order.end(), [&below](auto a, auto b) {
      return below[a] < below[b] || (below[a] == below[b] && a < b);
    });
    std::vector<std::size_t> length(n, 1), previous(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t const i = order[p];
      for (std::size_t q = 0; q < p; ++q) {
        std::size_t const j = order[q];
        if (_leq[j][i] && j != i && length[j] + 1 > length[i]) {
          length[i]   = length[j] + 1;
          previous[i] = j;
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (length[i] > length[best]) {
        best = i;
      }
    }
    ElementList chain;
    for (std::size_t i = best; i != n; i = previous[i]) {
      chain.push_back(_elements[i]);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  IdempotentPoset natural_order(View const& v, ElementList const& e) {
    return IdempotentPoset(v, e);
  }

  ////////////////////////////////////////////////////////////////////////
  // Center
  ////////////////////////////////////////////////////////////////////////

  bool is_central(View const& v, Element x) {
    for (Element y : v.carrier()) {
      if (v.product(x, y) != v.product(y, x)) {
        return false;
      }
    }
    return true;
  }

  ElementSet center(View const& v) {
    ElementSet out{{}, v.exact()};
    for (Element x : v.carrier()) {
      if (is_central(v, x)) {
        out.elements.push_back(x);
      }
    }
    return out;
  }

  ElementSet central_semilattice(View const& v) {
    ElementSet out{{}, v.exact()};
    for (Element x : v.carrier()) {
      if (is_idempotent(v, x) && is_central(v, x)) {
        out.elements.push_back(x);
      }
    }
    return out;
  }

  View center_view(View const& v) {
    DeclaredFacts facts;
    for (auto const& [key, value] : v.facts()) {
      if (key.starts_with("center.")) {
        facts.emplace(key.substr(7), value);
      }
    }
    // Z(X) = X
    if (v.fact("commutative") == std::optional<bool>(true)) {
      for (auto const& [key, value] : v.facts()) {
        if (!key.starts_with("center.")) {
          facts.emplace(key, value);
        }
      }
    }
    ElementList pool;
    for (Element x : v.pool()) {
      if (is_central(v, x)) {
        pool.push_back(x);
      }
    }
    ElementList carrier;
    if (v.exact()) {
      carrier = pool;
    } else {
      std::size_t const k = std::min(pool.size(), v.budget().elements);
      carrier.assign(pool.begin(), pool.begin() + k);
    }
    // the predicate only reads the parent carrier, captured by value
    auto member = [outer = ElementList(v.carrier()),
                   s     = v.semigroup()](Element x) {
      for (Element y : outer) {
        if (s.product(x, y) != s.product(y, x)) {
          return false;
        }
      }
      return true;
    };
    return View::subsemigroup(v,
                              std::move(member),
                              std::move(carrier),
                              std::move(pool),
                              v.exact(),
                              std::move(facts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Monogenic subsemigroups and H-classes
  ////////////////////////////////////////////////////////////////////////

  MonogenicData monogenic(View const& v, Element x) {
    MonogenicData md;
    md.base = x;
    std::size_t const limit
        = v.exact() ? v.carrier().size() + 1
                    : std::max<std::size_t>(v.budget().steps, 1);
    std::unordered_map<Element, std::uint64_t> seen;
    Element                                    p = x;
    for (std::uint64_t k = 1; k <= limit; ++k) {
      auto it = seen.find(p);
      if (it != seen.end()) {
        md.index  = it->second;
        md.period = k - it->second;
        break;
      }
      seen.emplace(p, k);
      md.powers.push_back(p);
      if (!md.idempotent && v.product(p, p) == p) {
        md.idempotent          = p;
        md.idempotent_exponent = k;
      }
      if (k == limit) {
        break;
      }
      p = v.product(p, x);
    }
    return md;
  }

  Tri in_group_of(View const& v, Element x, Element e, Element* inverse) {
    if (v.product(e, x) != x || v.product(x, e) != x) {
      return Tri::no;
    }
    MonogenicData const md = monogenic(v, x);
    if (md.idempotent) {
      if (*md.idempotent != e) {
        return Tri::no;
      }
      if (inverse != nullptr) {
        std::uint64_t const k = *md.idempotent_exponent;
        // x e = x and x^k = e make x^(k-1) the inverse when k >= 2
        *inverse = k == 1 ? x : md.powers[k - 2];
      }
      return Tri::yes;
    }
    for (Element y : v.pool()) {
      if (v.product(x, y) == e && v.product(y, x) == e) {
        if (inverse != nullptr) {
          *inverse = v.product(v.product(e, y), e);
        }
        return Tri::yes;
      }
    }
    return v.exact() ? Tri::no : Tri::unknown;
  }

  Tri in_clifford_part(View const& v, Element x, Element* identity) {
    MonogenicData const md = monogenic(v, x);
    if (md.idempotent) {
      Element const f = *md.idempotent;
      if (v.product(x, f) == x && v.product(f, x) == x) {
        if (identity != nullptr) {
          *identity = f;
        }
        return Tri::yes;
      }
      return Tri::no;
    }
    for (Element e : v.carrier()) {
      if (is_idempotent(v, e) && in_group_of(v, x, e) == Tri::yes) {
        if (identity != nullptr) {
          *identity = e;
        }
        return Tri::yes;
      }
    }
    return v.exact() ? Tri::no : Tri::unknown;
  }

  namespace {

    std::vector<std::vector<bool>> principal_right_ideals(FiniteSemigroup const& t) {
      std::size_t const              n = t.size();
      std::vector<std::vector<bool>> rows(n, std::vector<bool>(n, false));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          rows[x][t.product(x, y)] = true;
        }
      }
      return rows;
    }

    std::vector<std::vector<bool>> principal_left_ideals(FiniteSemigroup const& t) {
      std::size_t const              n = t.size();
      std::vector<std::vector<bool>> cols(n, std::vector<bool>(n, false));
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          cols[x][t.product(y, x)] = true;
        }
      }
      return cols;
    }

    ElementList sorted_set(ElementList xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      return xs;
    }

    bool factor_in(View const& v, Element a, Element x, bool right) {
      // x ∈ aX¹ (right) or x ∈ X¹a (left), searched in the pool
      if (x == a) {
        return true;
      }
      for (Element y : v.pool()) {
        if ((right ? v.product(a, y) : v.product(y, a)) == x) {
          return true;
        }
      }
      return false;
    }

    void verify_group(View const& v, Element e, ElementList const& h) {
      std::unordered_set<Element> const in(h.begin(), h.end());
      if (!in.count(e)) {
        throw InvariantViolation("H_e does not contain e");
      }
      for (Element x : h) {
        if (v.product(e, x) != x || v.product(x, e) != x) {
          throw InvariantViolation("e is not an identity of H_e");
        }
        bool has_inverse = false;
        for (Element y : h) {
          if (!in.count(v.product(x, y))) {
            throw InvariantViolation("H_e is not closed under products");
          }
          has_inverse = has_inverse
                        || (v.product(x, y) == e && v.product(y, x) == e);
        }
        if (!has_inverse) {
          throw InvariantViolation("an element of H_e has no inverse");
        }
      }
    }

  }  // namespace

  ElementSet h_class(View const& v, Element a) {
    ElementSet out{{}, v.exact()};
    if (v.exact() && v.is_whole()) {
      FiniteSemigroup const& s = v.semigroup().finite();
      FiniteSemigroup const  t = adjoin_identity(s);
      auto const             r = principal_right_ideals(t);
      auto const             l = principal_left_ideals(t);
      for (Element x = 0; x < s.size(); ++x) {
        if (r[x] == r[a] && l[x] == l[a]) {
          out.elements.push_back(x);
        }
      }
    } else if (v.exact()) {
      auto right = [&v](Element x) {
        ElementList xs{x};
        for (Element y : v.carrier()) {
          xs.push_back(v.product(x, y));
        }
        return sorted_set(std::move(xs));
      };
      auto left = [&v](Element x) {
        ElementList xs{x};
        for (Element y : v.carrier()) {
          xs.push_back(v.product(y, x));
        }
        return sorted_set(std::move(xs));
      };
      ElementList const ra = right(a), la = left(a);
      for (Element x : v.carrier()) {
        if (right(x) == ra && left(x) == la) {
          out.elements.push_back(x);
        }
      }
    } else {
      for (Element x : v.carrier()) {
        if (factor_in(v, a, x, true) && factor_in(v, x, a, true)
            && factor_in(v, a, x, false) && factor_in(v, x, a, false)) {
          out.elements.push_back(x);
        }
      }
    }
    if (v.exact() && is_idempotent(v, a)) {
      verify_group(v, a, out.elements);
    }
    return out;
  }

  HClassDecomposition clifford_parts(View const& v) {
    HClassDecomposition d;
    d.exact = v.exact();
    std::unordered_map<Element, Element> identity_of;

    ElementList const es = idempotents(v).elements;
    for (Element e : es) {
      ElementList h;
      if (v.exact()) {
        h = h_class(v, e).elements;
      } else {
        for (Element x : v.carrier()) {
          if (in_group_of(v, x, e) == Tri::yes) {
            h.push_back(x);
          }
        }
      }
      for (Element x : h) {
        identity_of[x] = e;
      }
      d.classes.emplace(e, std::move(h));
    }
    for (Element x : v.carrier()) {
      if (identity_of.count(x)) {
        d.clifford_part.push_back(x);
        continue;
      }
      Element     e;
      Tri const   t = in_clifford_part(v, x, &e);
      if (t == Tri::yes) {
        identity_of[x] = e;
        d.clifford_part.push_back(x);
      } else if (t == Tri::no) {
        d.residue.push_back(x);
      } else {
        d.undetermined.push_back(x);
      }
    }
    std::unordered_map<Element, bool> central;
    auto is_c = [&](Element e) {
      auto it = central.find(e);
      if (it == central.end()) {
        it = central.emplace(e, is_central(v, e)).first;
      }
      return it->second;
    };
    for (Element x : d.clifford_part) {
      if (is_c(identity_of.at(x))) {
        d.central_clifford_part.push_back(x);
      }
    }

    // H_Z(X) is a subsemigroup: xy lies in H_{ef}
    std::size_t const limit = v.exact() ? d.central_clifford_part.size()
                                        : std::min<std::size_t>(
                                            d.central_clifford_part.size(), 32);
    for (std::size_t i = 0; i < limit; ++i) {
      for (std::size_t j = 0; j < limit; ++j) {
        Element const x = d.central_clifford_part[i];
        Element const y = d.central_clifford_part[j];
        Element const ef
            = v.product(identity_of.at(x), identity_of.at(y));
        Tri const t = in_group_of(v, v.product(x, y), ef);
        if (t == Tri::no || (v.exact() && t != Tri::yes)) {
          throw InvariantViolation("central Clifford part is not closed at ("
                                   + std::to_string(x) + ", "
                                   + std::to_string(y) + ")");
        }
      }
    }

    // H_e ∩ Z(X) is a subgroup, and is empty unless e is central
    for (auto const& [e, h] : d.classes) {
      ElementList zh;
      for (Element x : h) {
        if (is_central(v, x)) {
          zh.push_back(x);
        }
      }
      if (zh.empty()) {
        continue;
      }
      if (!is_c(e)) {
        throw InvariantViolation("H_e meets Z(X) for a non-central e");
      }
      std::unordered_set<Element> const in(zh.begin(), zh.end());
      std::size_t const lim = v.exact() ? zh.size()
                                        : std::min<std::size_t>(zh.size(), 32);
      for (std::size_t i = 0; i < lim; ++i) {
        Element inv;
        if (in_group_of(v, zh[i], e, &inv) != Tri::yes
            || (v.exact() && !in.count(inv))) {
          throw InvariantViolation("H_e ∩ Z(X) is not closed under inverse");
        }
        for (std::size_t j = 0; j < lim; ++j) {
          if (v.exact() && !in.count(v.product(zh[i], zh[j]))) {
            throw InvariantViolation("H_e ∩ Z(X) is not closed");
          }
        }
      }
    }
    return d;
  }

  Element group_inverse(View const& v, Element x) {
    Element e;
    if (in_clifford_part(v, x, &e) != Tri::yes) {
      throw NotInCliffordPart(x);
    }
    Element inv = x;
    in_group_of(v, x, e, &inv);
    return inv;
  }

  PiResult pi(View const& v, Element x) {
    PiResult            r;
    MonogenicData const md = monogenic(v, x);
    r.explored             = md.powers.size();
    if (md.idempotent) {
      r.kind       = PiResult::Kind::defined;
      r.idempotent = *md.idempotent;
      r.exponent   = *md.idempotent_exponent;
      return r;
    }
    if (v.exact()) {
      r.kind = PiResult::Kind::undefined;
      return r;
    }
    // a power may lie in an infinite maximal subgroup
    std::size_t const tries = std::min<std::size_t>(md.powers.size(), 4);
    for (std::size_t k = 0; k < tries; ++k) {
      Element e;
      if (in_clifford_part(v, md.powers[k], &e) == Tri::yes) {
        r.kind       = PiResult::Kind::defined;
        r.idempotent = e;
        r.exponent   = k + 1;
        return r;
      }
    }
    r.kind = PiResult::Kind::undefined_at_bound;
    return r;
  }

  ElementSet roots(View const&                  v,
                   ElementList const&           a,
                   std::optional<std::uint64_t> n) {
    if (n && *n == 0) {
      throw BadParameter("root exponent must be positive");
    }
    std::unordered_set<Element> const in(a.begin(), a.end());
    ElementSet                        out{{}, v.exact()};
    for (Element x : v.carrier()) {
      bool hit = false;
      if (n) {
        hit = in.count(v.power(x, *n)) > 0;
      } else {
        for (Element p : monogenic(v, x).powers) {
          if (in.count(p)) {
            hit = true;
            break;
          }
        }
      }
      if (hit) {
        out.elements.push_back(x);
      }
    }
    return out;
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    std::string       one = "1";
    auto const&       labels = s.labels();
    while (std::find(labels.begin(), labels.end(), one) != labels.end()) {
      one += "'";
    }
    FiniteSemigroup::Table t(n + 1, std::vector<std::size_t>(n + 1));
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t y = 0; y <= n; ++y) {
        t[x][y] = x == n ? y : y == n ? x : s.product(x, y);
      }
    }
    std::vector<std::string> new_labels = labels;
    new_labels.push_back(one);
    return FiniteSemigroup::build(t, std::move(new_labels));
  }

  Semigroup adjoin_identity(Semigroup const& s) {
    if (s.is_finite()) {
      return Semigroup(adjoin_identity(s.finite()), "one+" + s.name());
    }
    StreamSemigroup const& inner = *s.stream();
    auto                   ptr = std::make_shared<StreamSemigroup const>(inner);
    constexpr Element      top = std::numeric_limits<Element>::max();
    StreamSemigroup::Spec  spec;
    spec.name     = "one+" + inner.name();
    spec.multiply = [ptr](Element x, Element y) -> Element {
      if (x == 0) {
        return y;
      }
      if (y == 0) {
        return x;
      }
      return ptr->product(x - 1, y - 1) + 1;
    };
    spec.element_at = [ptr](std::uint64_t i) -> Element {
      if (i == 0) {
        return 0;
      }
      Element const x = ptr->element_at(i - 1);
      if (x == top) {
        throw BudgetExhausted("element code overflow in adjoin_identity");
      }
      return x + 1;
    };
    spec.decode = [ptr](Element x) {
      return x == 0 ? std::string("1") : ptr->decode(x - 1);
    };
    if (inner.has_left_division()) {
      spec.left_division = [ptr](Element b, Element e, std::size_t limit) {
        if (e == 0) {
          return DivisionResult{{b}, true};
        }
        if (b == 0) {
          return DivisionResult{{}, true};
        }
        DivisionResult r = ptr->left_division(b - 1, e - 1, limit);
        for (Element& x : r.elements) {
          x += 1;
        }
        if (b == e) {
          r.elements.insert(r.elements.begin(), 0);
        }
        return r;
      };
    }
    for (auto const& key : {"commutative", "finite"}) {
      if (auto f = s.fact(key)) {
        spec.facts.emplace(key, *f);
      }
    }
    return Semigroup(StreamSemigroup(std::move(spec)));
  }

}  // namespace sgtop
