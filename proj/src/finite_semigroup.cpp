#include "sgtop/finite_semigroup.hpp"

#include <utility>    // for move

namespace sgtop {

  bool find_non_associative(std::vector<Element> const& flat,
                            std::size_t                 n,
                            Element&                    x,
                            Element&                    y,
                            Element&                    z) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = flat[a * n + b];
        for (Element c = 0; c < n; ++c) {
          if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
            x = a;
            y = b;
            z = c;
            return true;
          }
        }
      }
    }
    return false;
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t              n,
                                   std::vector<Element>     flat,
                                   std::vector<std::string> labels)
      : _size(n),
        _table(std::move(flat)),
        _labels(std::move(labels)),
        _commutative(true) {
    if (_labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        _labels.push_back(std::to_string(i));
      }
    }
    for (Element x = 0; x < n && _commutative; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (product(x, y) != product(y, x)) {
          _commutative = false;
          break;
        }
      }
    }
  }

  FiniteSemigroup FiniteSemigroup::build(Table const&             table,
                                         std::vector<std::string> labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw MalformedTable("a semigroup table must have at least one row");
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (table[r].size() != n) {
        throw MalformedTable("row " + std::to_string(r) + " has "
                             + std::to_string(table[r].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (table[r][c] >= n) {
          throw MalformedTable("entry (" + std::to_string(r) + ", "
                               + std::to_string(c) + ") = "
                               + std::to_string(table[r][c])
                               + " is out of range");
        }
        flat.push_back(table[r][c]);
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw MalformedTable("expected " + std::to_string(n) + " labels, got "
                           + std::to_string(labels.size()));
    }
    Element x, y, z;
    if (find_non_associative(flat, n, x, y, z)) {
      throw NonAssociative(x, y, z);
    }
    return FiniteSemigroup(n, std::move(flat), std::move(labels));
  }

  FiniteSemigroup FiniteSemigroup::restrict_to(FiniteSemigroup const& parent,
                                               ElementList const&     subset) {
    std::size_t const        m = subset.size();
    std::vector<std::size_t> index(parent.size(), m);
    for (std::size_t i = 0; i < m; ++i) {
      index.at(subset[i]) = i;
    }
    std::vector<Element>     flat(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(parent.label(subset[i]));
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t const k = index[parent.product(subset[i], subset[j])];
        if (k == m) {
          throw BadParameter("subset is not closed under multiplication");
        }
        flat[i * m + j] = k;
      }
    }
    return FiniteSemigroup(m, std::move(flat), std::move(labels));
  }

  FiniteSemigroup::Table FiniteSemigroup::table() const {
    Table t(_size, std::vector<std::size_t>(_size));
    for (std::size_t r = 0; r < _size; ++r) {
      for (std::size_t c = 0; c < _size; ++c) {
        t[r][c] = _table[r * _size + c];
      }
    }
    return t;
  }

}  // namespace sgtop
