//
// sgtop - structural invariants and topologies of semigroups
//

#ifndef SGTOP_FINITE_SEMIGROUP_HPP_
#define SGTOP_FINITE_SEMIGROUP_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "types.hpp"  // for Element, ElementList

namespace sgtop {

  //! A semigroup given by its Cayley table. Entry (x, y) of the table is
  //! the product x·y. Instances are immutable and validated on construction.
  class FiniteSemigroup {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    //! Validates that `table` is square with in-range entries and is
    //! associative. Throws MalformedTable or NonAssociative (with the first
    //! offending triple in lexicographic order).
    static FiniteSemigroup build(Table const&              table,
                                 std::vector<std::string> labels = {});

    //! The subsemigroup on `subset`, relabelled densely in the order given.
    //! The subset must be closed under multiplication; it may be empty.
    static FiniteSemigroup restrict_to(FiniteSemigroup const& parent,
                                       ElementList const&     subset);

    std::size_t size() const noexcept {
      return _size;
    }

    Element product(Element x, Element y) const noexcept {
      return _table[x * _size + y];
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }

    std::string const& label(Element x) const {
      return _labels.at(x);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    Table table() const;

    bool operator==(FiniteSemigroup const& that) const {
      return _size == that._size && _table == that._table
             && _labels == that._labels;
    }

   private:
    FiniteSemigroup(std::size_t              n,
                    std::vector<Element>     flat,
                    std::vector<std::string> labels);

    std::size_t              _size;
    std::vector<Element>     _table;
    std::vector<std::string> _labels;
    bool                     _commutative;
  };

  //! First non-associative triple of a flat row-major table, if any.
  bool find_non_associative(std::vector<Element> const& flat,
                            std::size_t                 n,
                            Element&                    x,
                            Element&                    y,
                            Element&                    z);

}  // namespace sgtop

#endif  // SGTOP_FINITE_SEMIGROUP_HPP_
