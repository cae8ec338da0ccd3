//
// sgtop - structural invariants and topologies of semigroups
//
// Idempotents and their natural order, the center, H-classes and Clifford
// parts, group inverses, roots and the projection pi onto E(X).
//
// Every function takes a View. On an exact view (a finite semigroup or a
// finite subsemigroup of one) the results are exact. On a stream the results
// describe the inspected prefix only and carry `exact == false`; positive
// memberships are still certified by explicit factorisations.

#ifndef SGTOP_ALGEBRA_HPP_
#define SGTOP_ALGEBRA_HPP_

#include <cstdint>   // for uint64_t
#include <map>       // for map
#include <optional>  // for optional
#include <vector>    // for vector

#include "semigroup.hpp"  // for View, Semigroup
#include "types.hpp"      // for Element, Tri

namespace sgtop {

  struct ElementSet {
    ElementList elements;
    //! False when `elements` only covers the inspected prefix.
    bool exact = true;

    bool contains(Element x) const;
  };

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and the natural partial order
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(View const& v, Element x);

  //! E(X) restricted to the carrier of the view.
  ElementSet idempotents(View const& v);

  //! The poset (E, <=) with x <= y iff xy = yx = x.
  class IdempotentPoset {
   public:
    //! Throws NotIdempotent if some element of `elements` is not idempotent.
    IdempotentPoset(View const& v, ElementList elements);

    ElementList const& elements() const noexcept {
      return _elements;
    }
    bool contains(Element x) const;
    bool leq(Element x, Element y) const;

    ElementList down(Element a) const;
    ElementList up(Element a) const;
    ElementList down(ElementList const& as) const;
    ElementList up(ElementList const& as) const;

    //! A longest chain (computed by dynamic programming over <).
    ElementList longest_chain() const;

   private:
    std::size_t                    index(Element x) const;
    ElementList                    _elements;
    std::vector<std::vector<bool>> _leq;
  };

  IdempotentPoset natural_order(View const& v, ElementList const& idempotents);

  ////////////////////////////////////////////////////////////////////////
  // Center
  ////////////////////////////////////////////////////////////////////////

  //! True if x commutes with every carrier element of the view.
  bool is_central(View const& v, Element x);

  //! Z(X); on streams, elements that commute with the inspected prefix.
  ElementSet center(View const& v);

  //! EZ(X) = E(X) ∩ Z(X).
  ElementSet central_semilattice(View const& v);

  //! Z(X) as a view of its own. Declared facts prefixed "center." in the
  //! parent become the facts of the result.
  View center_view(View const& v);

  ////////////////////////////////////////////////////////////////////////
  // Monogenic subsemigroups and H-classes
  ////////////////////////////////////////////////////////////////////////

  struct MonogenicData {
    Element     base;
    //! x^1, x^2, ... as far as explored.
    ElementList powers;
    //! x^(index + period) = x^index, when a repetition was found.
    std::optional<std::uint64_t> index, period;
    //! The least m with x^m idempotent, and that idempotent.
    std::optional<std::uint64_t> idempotent_exponent;
    std::optional<Element>       idempotent;

    bool diverged() const noexcept {
      return !idempotent.has_value();
    }
  };

  //! Explores x^N up to `budget().steps` powers; exact views explore until
  //! the orbit cycles.
  MonogenicData monogenic(View const& v, Element x);

  //! Membership of x in H_e for an idempotent e. When the answer is yes and
  //! `inverse` is non-null, the group inverse of x in H_e is stored there.
  Tri in_group_of(View const& v, Element x, Element e, Element* inverse = nullptr);

  //! Membership of x in H(X). When the answer is yes and `identity` is
  //! non-null, the idempotent e with x in H_e is stored there.
  Tri in_clifford_part(View const& v, Element x, Element* identity = nullptr);

  //! H_a = { x : xX¹ = aX¹ and X¹x = X¹a }. On a whole finite semigroup this
  //! compares principal one-sided ideals in X¹; for an idempotent the result
  //! is verified to be a group. On streams only certified members of the
  //! inspected prefix are returned.
  ElementSet h_class(View const& v, Element a);

  struct HClassDecomposition {
    //! H_e for every idempotent e of the carrier.
    std::map<Element, ElementList> classes;
    ElementList                    clifford_part;          // H(X)
    ElementList                    central_clifford_part;  // H_Z(X)
    ElementList                    residue;                // X \ H(X)
    ElementList                    undetermined;           // streams only
    bool                           exact = true;
  };

  //! H(X), H_Z(X) and the residue. Verifies that H_Z(X) is closed under
  //! multiplication and that H_e ∩ Z(X) is a subgroup for central e; throws
  //! InvariantViolation otherwise.
  HClassDecomposition clifford_parts(View const& v);

  //! The inverse of x in its maximal subgroup. Throws NotInCliffordPart.
  Element group_inverse(View const& v, Element x);

  struct PiResult {
    enum class Kind {
      defined,             // some power of x lies in H_idempotent
      undefined,           // certified: no power of x lies in H(X)
      undefined_at_bound   // nothing found within the step budget
    };
    Kind          kind = Kind::undefined_at_bound;
    Element       idempotent = 0;
    //! The exponent n with x^n in H_idempotent that was found.
    std::uint64_t exponent = 0;
    //! Number of powers explored.
    std::uint64_t explored = 0;
  };

  PiResult pi(View const& v, Element x);

  //! The n-th root of A, or the infinite root when `n` is empty.
  ElementSet roots(View const&                  v,
                   ElementList const&           a,
                   std::optional<std::uint64_t> n);

  //! X¹: a fresh identity is always adjoined, as element `size()` with
  //! label "1" (primed until unique).
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);
  Semigroup       adjoin_identity(Semigroup const& s);

}  // namespace sgtop

#endif  // SGTOP_ALGEBRA_HPP_
