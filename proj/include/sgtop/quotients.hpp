//
// sgtop - structural invariants and topologies of semigroups
//
// Ideals, congruences and quotients of finite semigroups.

#ifndef SGTOP_QUOTIENTS_HPP_
#define SGTOP_QUOTIENTS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "finite_semigroup.hpp"  // for FiniteSemigroup
#include "types.hpp"             // for Element

namespace sgtop {

  //! A partition of {0, ..., n-1}. Classes are numbered in order of their
  //! least element.
  class Congruence {
   public:
    //! Throws BadParameter if `class_of` is empty.
    explicit Congruence(std::vector<std::size_t> class_of);

    static Congruence identity(std::size_t n);
    static Congruence universal(std::size_t n);

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t number_of_classes() const noexcept {
      return _number_of_classes;
    }
    std::size_t class_of(Element x) const {
      return _class_of.at(x);
    }
    std::vector<std::size_t> const& class_map() const noexcept {
      return _class_of;
    }
    std::vector<ElementList> classes() const;

    bool operator==(Congruence const&) const = default;

   private:
    std::vector<std::size_t> _class_of;
    std::size_t              _number_of_classes;
  };

  //! True if x ≈ y implies ax ≈ ay and xa ≈ ya for all a.
  bool is_congruence(FiniteSemigroup const& s, Congruence const& c);

  struct IdealCheck {
    bool is_ideal = true;
    //! When not an ideal: (i, x, product) with i in I, x in S and the
    //! product i·x (left_factor == true) or x·i outside I.
    std::optional<std::pair<Element, Element>> pair;
    Element                                    product     = 0;
    bool                                       left_factor = true;
  };

  //! IX ∪ XI ⊆ I. The empty set is an ideal.
  IdealCheck is_ideal(FiniteSemigroup const& s, ElementList const& ideal);

  //! (I × I) ∪ Δ.
  Congruence ideal_congruence(FiniteSemigroup const& s, ElementList const& ideal);

  //! The least congruence containing `pairs`.
  Congruence congruence_closure(FiniteSemigroup const&                    s,
                                std::vector<std::pair<Element, Element>> const& pairs);

  //! Every congruence of `s`, in the order of their class maps as restricted
  //! growth strings. Throws SizeCapExceeded when `s.size() > cap`.
  std::vector<Congruence> enumerate_congruences(FiniteSemigroup const& s,
                                                std::size_t            cap = 6);

  struct Quotient {
    FiniteSemigroup semigroup;
    //! The quotient map: element of S -> element of the quotient.
    std::vector<Element> map;
  };

  //! S/≈. Throws IllDefined if `c` is not a congruence of `s`.
  Quotient quotient(FiniteSemigroup const& s, Congruence const& c);

  //! S/I; S itself when I is empty. Throws NotAnIdeal.
  Quotient rees_quotient(FiniteSemigroup const& s, ElementList const& ideal);

  //! True if map(x)map(y) = map(xy) for all x, y.
  bool is_homomorphism(FiniteSemigroup const&      s,
                       FiniteSemigroup const&      t,
                       std::vector<Element> const& map);

  //! The least subset containing `seed` closed under multiplication, sorted.
  ElementList subsemigroup_closure(FiniteSemigroup const& s,
                                   ElementList const&     seed);

}  // namespace sgtop

#endif  // SGTOP_QUOTIENTS_HPP_
