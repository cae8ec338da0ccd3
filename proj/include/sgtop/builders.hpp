//
// sgtop - structural invariants and topologies of semigroups
//
// Families of finite and countable semigroups, and the "name:param,param"
// spec syntax used to select them.
//
// Spec grammar:
//
//   spec    := factor ('*' factor)*          direct product
//   factor  := ('zero+' | 'one+')* atom      adjoin a zero / an identity
//   atom    := name (':' integer (',' integer)*)?
//
// Stream families carry declared facts and, where the set {x : xe = b} can be
// described, a left division oracle.

#ifndef SGTOP_BUILDERS_HPP_
#define SGTOP_BUILDERS_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "finite_semigroup.hpp"  // for FiniteSemigroup
#include "semigroup.hpp"         // for Semigroup

namespace sgtop {

  ////////////////////////////////////////////////////////////////////////
  // Finite families
  ////////////////////////////////////////////////////////////////////////

  //! Z/nZ under addition; element k is labelled "g^k" and 0 is "e".
  FiniteSemigroup cyclic_group(std::size_t n);
  //! n elements with every product equal to element 0.
  FiniteSemigroup zero_semigroup(std::size_t n);
  //! xy = x.
  FiniteSemigroup left_zero(std::size_t n);
  //! xy = y.
  FiniteSemigroup right_zero(std::size_t n);
  //! {0, ..., n-1} under min.
  FiniteSemigroup chain_semilattice(std::size_t n);
  //! A zero 0 and k atoms with a_i a_i = a_i and a_i a_j = 0 for i != j.
  FiniteSemigroup flat_semilattice(std::size_t k);
  //! {1, a, 0} with a a = 0; elements in that order.
  FiniteSemigroup m3();
  //! <x | x^(index + period) = x^index>; element k - 1 is x^k.
  FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period);

  FiniteSemigroup direct_product(FiniteSemigroup const& a,
                                 FiniteSemigroup const& b);
  //! Adjoins a fresh zero as element size(), labelled "0" (primed until
  //! unique).
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Stream families
  ////////////////////////////////////////////////////////////////////////

  //! (N, min) with codes 0, 1, 2, ...
  Semigroup natmin_stream();
  //! (N \ {0}, +); element i has code i + 1.
  Semigroup natplus_stream();
  //! The flat semilattice: code 0 is the zero, code i >= 1 the atom a_i.
  Semigroup flat_stream();
  //! xy = 0 for all x, y; code 0 is the zero.
  Semigroup null_stream();
  //! The group {e, g} of order two (codes 0, 1) together with atoms (codes
  //! i >= 2); xy = f(x) f(y) where f maps every atom to e.
  Semigroup nil_stream();
  //! (Z, +) with the zigzag code 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
  Semigroup integers_stream();

  Semigroup direct_product(Semigroup const& a, Semigroup const& b);
  Semigroup adjoin_zero(Semigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  struct BuilderInfo {
    std::string name;
    std::string parameters;
    std::string description;
  };

  std::vector<BuilderInfo> const& builder_catalog();

  //! The catalog as text, one builder per line.
  std::string catalog_text();

  //! Builds the semigroup described by `spec`. Throws BadParameter for
  //! unknown names (listing the catalog) and malformed parameters.
  Semigroup build(std::string_view spec);

}  // namespace sgtop

#endif  // SGTOP_BUILDERS_HPP_
