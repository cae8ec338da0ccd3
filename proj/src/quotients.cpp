#include "sgtop/quotients.hpp"

#include <algorithm>  // for sort, unique
#include <numeric>    // for iota
#include <string>     // for string

namespace sgtop {

  namespace {

    // relabel so that classes are numbered by least element
    std::vector<std::size_t> normalise(std::vector<std::size_t> const& raw) {
      std::vector<std::size_t> out(raw.size());
      std::vector<std::size_t> seen;
      for (std::size_t x = 0; x < raw.size(); ++x) {
        auto it = std::find(seen.begin(), seen.end(), raw[x]);
        if (it == seen.end()) {
          out[x] = seen.size();
          seen.push_back(raw[x]);
        } else {
          out[x] = static_cast<std::size_t>(it - seen.begin());
        }
      }
      return out;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    std::string class_label(FiniteSemigroup const& s, ElementList const& cls) {
      if (cls.size() == 1) {
        return s.label(cls[0]);
      }
      std::string out = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out += (i ? "," : "") + s.label(cls[i]);
      }
      return out + "}";
    }

  }  // namespace

  Congruence::Congruence(std::vector<std::size_t> class_of)
      : _class_of(normalise(class_of)), _number_of_classes(0) {
    if (_class_of.empty()) {
      throw BadParameter("a congruence needs a nonempty carrier");
    }
    _number_of_classes
        = *std::max_element(_class_of.begin(), _class_of.end()) + 1;
  }

  Congruence Congruence::identity(std::size_t n) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), 0);
    return Congruence(c);
  }

  Congruence Congruence::universal(std::size_t n) {
    return Congruence(std::vector<std::size_t>(n, 0));
  }

  std::vector<ElementList> Congruence::classes() const {
    std::vector<ElementList> out(_number_of_classes);
    for (Element x = 0; x < _class_of.size(); ++x) {
      out[_class_of[x]].push_back(x);
    }
    return out;
  }

  bool is_congruence(FiniteSemigroup const& s, Congruence const& c) {
    std::size_t const n = s.size();
    if (c.size() != n) {
      return false;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (c.class_of(x) != c.class_of(y)) {
          continue;
        }
        for (Element a = 0; a < n; ++a) {
          if (c.class_of(s.product(a, x)) != c.class_of(s.product(a, y))
              || c.class_of(s.product(x, a)) != c.class_of(s.product(y, a))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  IdealCheck is_ideal(FiniteSemigroup const& s, ElementList const& ideal) {
    std::vector<bool> in(s.size(), false);
    for (Element i : ideal) {
      in.at(i) = true;
    }
    IdealCheck r;
    for (Element i : ideal) {
      for (Element x = 0; x < s.size(); ++x) {
        if (!in[s.product(i, x)]) {
          return {false, std::make_pair(i, x), s.product(i, x), true};
        }
        if (!in[s.product(x, i)]) {
          return {false, std::make_pair(i, x), s.product(x, i), false};
        }
      }
    }
    return r;
  }

  Congruence ideal_congruence(FiniteSemigroup const& s,
                              ElementList const&     ideal) {
    std::vector<std::size_t> c(s.size());
    std::iota(c.begin(), c.end(), 0);
    if (!ideal.empty()) {
      Element const m = *std::min_element(ideal.begin(), ideal.end());
      for (Element i : ideal) {
        c.at(i) = m;
      }
    }
    return Congruence(c);
  }

  Congruence
  congruence_closure(FiniteSemigroup const&                          s,
                     std::vector<std::pair<Element, Element>> const& pairs) {
    std::size_t const n = s.size();
    UnionFind         uf(n);
    for (auto const& [x, y] : pairs) {
      uf.unite(x, y);
    }
    // x ≈ root(x) generate the equivalence; closing these under
    // translations closes everything
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element x = 0; x < n; ++x) {
        Element const r = uf.find(x);
        if (r == x) {
          continue;
        }
        for (Element a = 0; a < n; ++a) {
          changed = uf.unite(s.product(a, x), s.product(a, r)) || changed;
          changed = uf.unite(s.product(x, a), s.product(r, a)) || changed;
        }
      }
    }
    std::vector<std::size_t> c(n);
    for (Element x = 0; x < n; ++x) {
      c[x] = uf.find(x);
    }
    return Congruence(c);
  }

  std::vector<Congruence> enumerate_congruences(FiniteSemigroup const& s,
                                                std::size_t            cap) {
    std::size_t const n = s.size();
    if (n > cap) {
      throw SizeCapExceeded("congruence enumeration is capped at order "
                            + std::to_string(cap) + ", got "
                            + std::to_string(n));
    }
    std::vector<Congruence>  out;
    std::vector<std::size_t> rgs(n, 0);

    // pairs among the first k assigned elements whose translates are
    // also assigned must stay related
    auto compatible = [&](std::size_t k) {
      Element const y = k - 1;
      for (Element x = 0; x < y; ++x) {
        if (rgs[x] != rgs[y]) {
          continue;
        }
        for (Element a = 0; a < n; ++a) {
          Element const p = s.product(a, x), q = s.product(a, y);
          if (p < k && q < k && rgs[p] != rgs[q]) {
            return false;
          }
          Element const u = s.product(x, a), w = s.product(y, a);
          if (u < k && w < k && rgs[u] != rgs[w]) {
            return false;
          }
        }
      }
      return true;
    };

    auto recurse = [&](auto&& self, std::size_t k, std::size_t classes) -> void {
      if (k == n) {
        Congruence c(rgs);
        if (is_congruence(s, c)) {
          out.push_back(std::move(c));
        }
        return;
      }
      for (std::size_t label = 0; label <= classes; ++label) {
        rgs[k] = label;
        if (compatible(k + 1)) {
          self(self, k + 1, std::max(classes, label + 1));
        }
      }
    };
    recurse(recurse, 0, 0);
    return out;
  }

  Quotient quotient(FiniteSemigroup const& s, Congruence const& c) {
    if (c.size() != s.size()) {
      throw IllDefined("partition size does not match the semigroup");
    }
    auto const        cls = c.classes();
    std::size_t const m   = cls.size();
    FiniteSemigroup::Table t(m, std::vector<std::size_t>(m));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(class_label(s, cls[i]));
      for (std::size_t j = 0; j < m; ++j) {
        t[i][j] = c.class_of(s.product(cls[i][0], cls[j][0]));
        for (Element x : cls[i]) {
          for (Element y : cls[j]) {
            if (c.class_of(s.product(x, y)) != t[i][j]) {
              throw IllDefined("class product depends on representatives at ("
                               + std::to_string(x) + ", " + std::to_string(y)
                               + ")");
            }
          }
        }
      }
    }
    std::vector<Element> map(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      map[x] = c.class_of(x);
    }
    return {FiniteSemigroup::build(t, labels), std::move(map)};
  }

  Quotient rees_quotient(FiniteSemigroup const& s, ElementList const& ideal) {
    if (!is_ideal(s, ideal).is_ideal) {
      throw NotAnIdeal("the given subset is not an ideal");
    }
    return quotient(s, ideal_congruence(s, ideal));
  }

  bool is_homomorphism(FiniteSemigroup const&      s,
                       FiniteSemigroup const&      t,
                       std::vector<Element> const& map) {
    if (map.size() != s.size()) {
      return false;
    }
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (t.product(map[x], map[y]) != map[s.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  ElementList subsemigroup_closure(FiniteSemigroup const& s,
                                   ElementList const&     seed) {
    std::vector<bool> in(s.size(), false);
    ElementList       out;
    for (Element x : seed) {
      if (!in.at(x)) {
        in[x] = true;
        out.push_back(x);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element p : {s.product(out[i], out[j]), s.product(out[j], out[i])}) {
          if (!in[p]) {
            in[p] = true;
            out.push_back(p);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace sgtop
