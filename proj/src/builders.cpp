#include "sgtop/builders.hpp"

#include <algorithm>  // for find
#include <charconv>   // for from_chars
#include <cctype>     // for isspace
#include <cmath>      // for sqrt
#include <memory>     // for make_shared
#include <utility>    // for move

#include "sgtop/algebra.hpp"  // for adjoin_identity, is_idempotent, is_central

namespace sgtop {

  namespace {

    using Table = FiniteSemigroup::Table;

    Table square(std::size_t n) {
      return Table(n, std::vector<std::size_t>(n, 0));
    }

    void require_positive(std::size_t n, char const* what) {
      if (n == 0) {
        throw BadParameter(std::string(what) + " needs a positive size");
      }
    }

    std::string fresh_label(std::vector<std::string> const& labels,
                            std::string                     base) {
      while (std::find(labels.begin(), labels.end(), base) != labels.end()) {
        base += "'";
      }
      return base;
    }

    ElementList prefix(StreamSemigroup const& s, std::size_t limit) {
      ElementList out;
      auto        en = s.enumerate();
      for (std::size_t i = 0; i < limit; ++i) {
        out.push_back(en.next());
      }
      return out;
    }

    // codes 0, 1, 2, ... as a prefix of length `limit`, skipping `skip`
    ElementList naturals(std::size_t limit,
                         Element     from = 0,
                         Element     skip = ~Element(0)) {
      ElementList out;
      for (Element x = from; out.size() < limit; ++x) {
        if (x != skip) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::int64_t unzigzag(Element x) {
      return (x & 1) ? -static_cast<std::int64_t>((x + 1) / 2)
                     : static_cast<std::int64_t>(x / 2);
    }

    Element zigzag(std::int64_t v) {
      return v < 0 ? static_cast<Element>(-v) * 2 - 1
                   : static_cast<Element>(v) * 2;
    }

    Element cantor_pair(Element x, Element y) {
      return (x + y) * (x + y + 1) / 2 + y;
    }

    void cantor_unpair(Element z, Element& x, Element& y) {
      auto w = static_cast<Element>(
          (std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
      while (w * (w + 1) / 2 > z) {
        --w;
      }
      while ((w + 1) * (w + 2) / 2 <= z) {
        ++w;
      }
      y = z - w * (w + 1) / 2;
      x = w - y;
    }

    std::optional<bool> commutative_of(Semigroup const& s) {
      if (s.is_finite()) {
        return s.finite().is_commutative();
      }
      return s.fact("commutative");
    }

    // Facts that hold for X as soon as X contains a copy of S.
    constexpr char const* inherited_negative[]
        = {"chain_finite", "periodic", "bounded", "nonsingular", "group_finite",
           "group_bounded"};

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Finite families
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup cyclic_group(std::size_t n) {
    require_positive(n, "cyclic");
    Table                    t = square(n);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
      labels.push_back(x == 0 ? "e" : x == 1 ? "g" : "g^" + std::to_string(x));
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = (x + y) % n;
      }
    }
    return FiniteSemigroup::build(t, labels);
  }

  FiniteSemigroup zero_semigroup(std::size_t n) {
    require_positive(n, "zero");
    return FiniteSemigroup::build(square(n));
  }

  FiniteSemigroup left_zero(std::size_t n) {
    require_positive(n, "left_zero");
    Table t = square(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = x;
      }
    }
    return FiniteSemigroup::build(t);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    require_positive(n, "right_zero");
    Table t = square(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = y;
      }
    }
    return FiniteSemigroup::build(t);
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    require_positive(n, "chain");
    Table t = square(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = std::min(x, y);
      }
    }
    return FiniteSemigroup::build(t);
  }

  FiniteSemigroup flat_semilattice(std::size_t k) {
    Table                    t = square(k + 1);
    std::vector<std::string> labels{"0"};
    for (std::size_t x = 1; x <= k; ++x) {
      labels.push_back("a" + std::to_string(x));
      t[x][x] = x;
    }
    return FiniteSemigroup::build(t, labels);
  }

  FiniteSemigroup m3() {
    return FiniteSemigroup::build({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
                                  {"1", "a", "0"});
  }

  FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      throw BadParameter("monogenic needs a positive index and period");
    }
    std::size_t const n = index + period - 1;
    Table             t = square(n);
    std::vector<std::string> labels;
    for (std::size_t a = 1; a <= n; ++a) {
      labels.push_back(a == 1 ? "x" : "x^" + std::to_string(a));
      for (std::size_t b = 1; b <= n; ++b) {
        std::size_t s = a + b;
        if (s > n) {
          s = index + (s - index) % period;
        }
        t[a - 1][b - 1] = s - 1;
      }
    }
    return FiniteSemigroup::build(t, labels);
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& a,
                                 FiniteSemigroup const& b) {
    std::size_t const        m = a.size(), n = b.size();
    Table                    t = square(m * n);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < m * n; ++x) {
      labels.push_back("(" + a.label(x / n) + "," + b.label(x % n) + ")");
      for (std::size_t y = 0; y < m * n; ++y) {
        t[x][y] = a.product(x / n, y / n) * n + b.product(x % n, y % n);
      }
    }
    return FiniteSemigroup::build(t, labels);
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    Table             t = square(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t y = 0; y <= n; ++y) {
        t[x][y] = (x == n || y == n) ? n : s.product(x, y);
      }
    }
    auto labels = s.labels();
    labels.push_back(fresh_label(labels, "0"));
    return FiniteSemigroup::build(t, labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Stream families
  ////////////////////////////////////////////////////////////////////////

  Semigroup natmin_stream() {
    StreamSemigroup::Spec s;
    s.name       = "natmin";
    s.multiply   = [](Element x, Element y) { return std::min(x, y); };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.left_division
        = [](Element b, Element e, std::size_t limit) -> DivisionResult {
      if (b < e) {
        return {{b}, true};
      }
      if (b == e) {
        return {naturals(limit, e), false};
      }
      return {{}, true};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", false},
               {"periodic", true},
               {"bounded", true},
               {"nonsingular", true},
               {"group_finite", true},
               {"group_bounded", true},
               {"clifford", true},
               {"clifford_finite", false},
               {"clifford_plus_finite", true},
               {"clifford_singular", false},
               {"eventually_clifford", true},
               {"unipotent", false},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", false},
               {"ez_infinite", true}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup natplus_stream() {
    StreamSemigroup::Spec s;
    s.name       = "natplus";
    s.multiply   = [](Element x, Element y) { return x + y; };
    s.element_at = [](std::uint64_t i) { return Element(i + 1); };
    s.left_division
        = [](Element b, Element e, std::size_t) -> DivisionResult {
      if (b > e) {
        return {{b - e}, true};
      }
      return {{}, true};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", true},
               {"periodic", false},
               {"bounded", false},
               {"nonsingular", true},
               {"group_finite", true},
               {"group_bounded", true},
               {"clifford", false},
               {"clifford_finite", true},
               {"clifford_plus_finite", false},
               {"clifford_singular", false},
               {"eventually_clifford", false},
               {"unipotent", false},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", true},
               {"ez_infinite", false}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup flat_stream() {
    StreamSemigroup::Spec s;
    s.name     = "flat";
    s.multiply = [](Element x, Element y) { return x == y ? x : Element(0); };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.decode     = [](Element x) {
      return x == 0 ? std::string("0") : "a" + std::to_string(x);
    };
    s.left_division
        = [](Element b, Element e, std::size_t limit) -> DivisionResult {
      if (e == 0) {
        if (b == 0) {
          return {naturals(limit), false};
        }
        return {{}, true};
      }
      if (b == e) {
        return {{e}, true};
      }
      if (b == 0) {
        return {naturals(limit, 0, e), false};
      }
      return {{}, true};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", true},
               {"periodic", true},
               {"bounded", true},
               {"nonsingular", true},
               {"group_finite", true},
               {"group_bounded", true},
               {"clifford", true},
               {"clifford_finite", false},
               {"clifford_plus_finite", true},
               {"clifford_singular", false},
               {"eventually_clifford", true},
               {"unipotent", false},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", true},
               {"ez_infinite", true}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup null_stream() {
    StreamSemigroup::Spec s;
    s.name       = "null";
    s.multiply   = [](Element, Element) { return Element(0); };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.left_division
        = [](Element b, Element, std::size_t limit) -> DivisionResult {
      if (b == 0) {
        return {naturals(limit), false};
      }
      return {{}, true};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", true},
               {"periodic", true},
               {"bounded", true},
               {"nonsingular", false},
               {"group_finite", true},
               {"group_bounded", true},
               {"clifford", false},
               {"clifford_finite", true},
               {"clifford_plus_finite", false},
               {"clifford_singular", true},
               {"eventually_clifford", true},
               {"unipotent", true},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", true},
               {"ez_infinite", false}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup nil_stream() {
    // f(x) in {0, 1} is the image in the group; the product is f(x) xor f(y)
    auto f = [](Element x) { return x == 1 ? Element(1) : Element(0); };
    StreamSemigroup::Spec s;
    s.name       = "nil";
    s.multiply   = [f](Element x, Element y) { return f(x) ^ f(y); };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.decode     = [](Element x) {
      return x == 0   ? std::string("e")
             : x == 1 ? std::string("g")
                      : "a" + std::to_string(x - 1);
    };
    s.left_division
        = [f](Element b, Element e, std::size_t limit) -> DivisionResult {
      if (b > 1) {
        return {{}, true};
      }
      Element const t = b ^ f(e);
      if (t == 1) {
        return {{1}, true};
      }
      return {naturals(limit, 0, 1), false};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", true},
               {"periodic", true},
               {"bounded", true},
               {"nonsingular", false},
               {"group_finite", true},
               {"group_bounded", true},
               {"clifford", false},
               {"clifford_finite", true},
               {"clifford_plus_finite", false},
               {"clifford_singular", true},
               {"eventually_clifford", true},
               {"unipotent", true},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", true},
               {"ez_infinite", false}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup integers_stream() {
    StreamSemigroup::Spec s;
    s.name     = "ints";
    s.multiply = [](Element x, Element y) {
      return zigzag(unzigzag(x) + unzigzag(y));
    };
    s.element_at = [](std::uint64_t i) { return Element(i); };
    s.decode     = [](Element x) { return std::to_string(unzigzag(x)); };
    s.left_division
        = [](Element b, Element e, std::size_t) -> DivisionResult {
      return {{zigzag(unzigzag(b) - unzigzag(e))}, true};
    };
    s.facts = {{"commutative", true},
               {"finite", false},
               {"chain_finite", true},
               {"periodic", false},
               {"bounded", false},
               {"nonsingular", true},
               {"group_finite", false},
               {"group_bounded", false},
               {"clifford", true},
               {"clifford_finite", false},
               {"clifford_plus_finite", true},
               {"clifford_singular", false},
               {"eventually_clifford", true},
               {"unipotent", true},
               {"e_well_founded", true},
               {"ez_well_founded", true},
               {"ez_chain_finite", true},
               {"ez_infinite", false}};
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup direct_product(Semigroup const& a, Semigroup const& b) {
    std::string const name = a.name() + "*" + b.name();
    if (a.is_finite() && b.is_finite()) {
      return Semigroup(direct_product(a.finite(), b.finite()), name);
    }
    StreamSemigroup::Spec s;
    s.name = name;
    if (a.is_finite() || b.is_finite()) {
      // code = stream code * m + finite index
      bool const left_finite = a.is_finite();
      auto const fin = std::make_shared<FiniteSemigroup const>(
          left_finite ? a.finite() : b.finite());
      auto const str = std::make_shared<StreamSemigroup const>(
          left_finite ? *b.stream() : *a.stream());
      Element const m = fin->size();
      s.multiply      = [fin, str, m](Element x, Element y) {
        return str->product(x / m, y / m) * m + fin->product(x % m, y % m);
      };
      s.element_at = [fin, str, m](std::uint64_t i) {
        return str->element_at(i / m) * m + i % m;
      };
      s.decode = [fin, str, m, left_finite](Element x) {
        std::string const u = str->decode(x / m), v = fin->label(x % m);
        return "(" + (left_finite ? v : u) + "," + (left_finite ? u : v) + ")";
      };

      // a copy of the stream factor sits at every idempotent of the finite
      // one; inside the center when that idempotent is central
      View const   fv{Semigroup(*fin)};
      bool         has_idem = false, has_central_idem = false;
      for (Element z = 0; z < fin->size(); ++z) {
        if (is_idempotent(fv, z)) {
          has_idem         = true;
          has_central_idem = has_central_idem || is_central(fv, z);
        }
      }
      auto const& sf = str->facts();
      for (auto const* key : inherited_negative) {
        auto it = sf.find(key);
        if (it != sf.end() && !it->second) {
          if (has_idem) {
            s.facts[key] = false;
          }
          if (has_central_idem && sf.count("commutative")
              && sf.at("commutative")) {
            s.facts[std::string("center.") + key] = false;
          }
        }
      }
      if (has_idem && sf.count("ez_infinite") && sf.at("ez_infinite")
          && has_central_idem) {
        s.facts["ez_infinite"] = true;
      }
      if (has_central_idem) {
        s.facts["center.finite"] = false;
      }
    } else {
      auto const sa = std::make_shared<StreamSemigroup const>(*a.stream());
      auto const sb = std::make_shared<StreamSemigroup const>(*b.stream());
      s.multiply    = [sa, sb](Element x, Element y) {
        Element x1, x2, y1, y2;
        cantor_unpair(x, x1, x2);
        cantor_unpair(y, y1, y2);
        return cantor_pair(sa->product(x1, y1), sb->product(x2, y2));
      };
      s.element_at = [sa, sb](std::uint64_t i) {
        Element j, k;
        cantor_unpair(i, j, k);
        return cantor_pair(sa->element_at(j), sb->element_at(k));
      };
      s.decode = [sa, sb](Element x) {
        Element u, v;
        cantor_unpair(x, u, v);
        return "(" + sa->decode(u) + "," + sb->decode(v) + ")";
      };
    }
    auto ca = commutative_of(a), cb = commutative_of(b);
    if ((ca && !*ca) || (cb && !*cb)) {
      s.facts["commutative"] = false;
    } else if (ca && cb) {
      s.facts["commutative"] = true;
    }
    s.facts["finite"] = false;
    return Semigroup(StreamSemigroup(std::move(s)));
  }

  Semigroup adjoin_zero(Semigroup const& s) {
    if (s.is_finite()) {
      return Semigroup(adjoin_zero(s.finite()), "zero+" + s.name());
    }
    auto const            inner = std::make_shared<StreamSemigroup const>(*s.stream());
    StreamSemigroup::Spec spec;
    spec.name     = "zero+" + s.name();
    spec.multiply = [inner](Element x, Element y) -> Element {
      if (x == 0 || y == 0) {
        return 0;
      }
      return inner->product(x - 1, y - 1) + 1;
    };
    spec.element_at = [inner](std::uint64_t i) -> Element {
      return i == 0 ? 0 : inner->element_at(i - 1) + 1;
    };
    spec.decode = [inner](Element x) {
      return x == 0 ? std::string("z") : inner->decode(x - 1);
    };
    if (inner->has_left_division()) {
      spec.left_division = [inner](Element b, Element e, std::size_t limit) {
        if (e == 0) {
          if (b == 0) {
            ElementList all{0};
            for (Element x : prefix(*inner, limit > 0 ? limit - 1 : 0)) {
              all.push_back(x + 1);
            }
            return DivisionResult{std::move(all), false};
          }
          return DivisionResult{{}, true};
        }
        if (b == 0) {
          return DivisionResult{{0}, true};
        }
        DivisionResult r = inner->left_division(b - 1, e - 1, limit);
        for (Element& x : r.elements) {
          x += 1;
        }
        return r;
      };
    }
    // X^0 has the same predicate values as X apart from unipotence
    for (auto const& [key, value] : s.facts()) {
      if (key != "unipotent" && key != "center.unipotent") {
        spec.facts.emplace(key, value);
      }
    }
    return Semigroup(StreamSemigroup(std::move(spec)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  std::vector<BuilderInfo> const& builder_catalog() {
    static std::vector<BuilderInfo> const catalog = {
        {"cyclic", "n", "cyclic group of order n"},
        {"zero", "n", "n elements, every product is the first"},
        {"left_zero", "n", "xy = x"},
        {"right_zero", "n", "xy = y"},
        {"chain", "n", "{0..n-1} under min"},
        {"flat", "[k]", "zero plus k atoms; infinitely many without k"},
        {"m3", "", "{1, a, 0} with aa = 0"},
        {"monogenic", "i,p", "x^(i+p) = x^i"},
        {"natmin", "", "(N, min)"},
        {"natplus", "", "(N \\ {0}, +)"},
        {"null", "", "infinite semigroup with xy = 0"},
        {"nil", "", "atoms whose products fall into a group of order 2"},
        {"ints", "", "(Z, +)"},
    };
    return catalog;
  }

  std::string catalog_text() {
    std::string out;
    for (auto const& b : builder_catalog()) {
      std::string head = b.name;
      if (!b.parameters.empty()) {
        head += ":" + b.parameters;
      }
      head.resize(std::max<std::size_t>(head.size() + 1, 16), ' ');
      out += "  " + head + b.description + "\n";
    }
    out += "  a*b            direct product\n";
    out += "  zero+s, one+s  adjoin a zero / an identity\n";
    return out;
  }

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    [[noreturn]] void unknown(std::string_view name) {
      throw BadParameter("unknown builder \"" + std::string(name)
                         + "\"; available:\n" + catalog_text());
    }

    std::vector<std::size_t> parameters(std::string_view text,
                                        std::string_view name) {
      std::vector<std::size_t> out;
      while (!text.empty()) {
        auto const       comma = text.find(',');
        std::string_view piece = trim(text.substr(0, comma));
        std::size_t      value = 0;
        auto [ptr, ec]
            = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc()
            || ptr != piece.data() + piece.size()) {
          throw BadParameter("bad parameter \"" + std::string(piece)
                             + "\" for builder " + std::string(name));
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
          break;
        }
        text.remove_prefix(comma + 1);
      }
      return out;
    }

    Semigroup atom(std::string_view text) {
      text                  = trim(text);
      auto const       colon = text.find(':');
      std::string_view name  = trim(text.substr(0, colon));
      std::vector<std::size_t> p;
      if (colon != std::string_view::npos) {
        p = parameters(text.substr(colon + 1), name);
      }
      std::string const label(text);
      auto              arity = [&](std::size_t k) {
        if (p.size() != k) {
          throw BadParameter("builder " + std::string(name) + " takes "
                             + std::to_string(k) + " parameter(s)");
        }
      };
      auto finite = [&](FiniteSemigroup s) {
        return Semigroup(std::move(s), label);
      };
      if (name == "cyclic") {
        arity(1);
        return finite(cyclic_group(p[0]));
      } else if (name == "zero") {
        arity(1);
        return finite(zero_semigroup(p[0]));
      } else if (name == "left_zero") {
        arity(1);
        return finite(left_zero(p[0]));
      } else if (name == "right_zero") {
        arity(1);
        return finite(right_zero(p[0]));
      } else if (name == "chain") {
        arity(1);
        return finite(chain_semilattice(p[0]));
      } else if (name == "flat") {
        if (p.empty()) {
          return flat_stream();
        }
        arity(1);
        return finite(flat_semilattice(p[0]));
      } else if (name == "m3") {
        arity(0);
        return finite(m3());
      } else if (name == "monogenic") {
        arity(2);
        return finite(monogenic_semigroup(p[0], p[1]));
      }
      arity(0);
      if (name == "natmin") {
        return natmin_stream();
      } else if (name == "natplus") {
        return natplus_stream();
      } else if (name == "null" || name == "nullstream") {
        return null_stream();
      } else if (name == "nil" || name == "nilstream") {
        return nil_stream();
      } else if (name == "ints") {
        return integers_stream();
      }
      unknown(name);
    }

    Semigroup factor(std::string_view text) {
      text = trim(text);
      if (text.starts_with("zero+")) {
        return adjoin_zero(factor(text.substr(5)));
      }
      if (text.starts_with("one+")) {
        return adjoin_identity(factor(text.substr(4)));
      }
      return atom(text);
    }

  }  // namespace

  Semigroup build(std::string_view spec) {
    spec = trim(spec);
    if (spec.empty()) {
      throw BadParameter("empty builder spec; available:\n" + catalog_text());
    }
    auto const star = spec.find('*');
    if (star == std::string_view::npos) {
      return factor(spec);
    }
    return direct_product(factor(spec.substr(0, star)),
                          build(spec.substr(star + 1)));
  }

}  // namespace sgtop
