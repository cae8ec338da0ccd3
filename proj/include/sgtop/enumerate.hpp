//
// sgtop - structural invariants and topologies of semigroups
//
// All semigroups on {0, ..., n-1} for n <= 4, by backtracking over the
// Cayley table in row-major order with associativity checked on every triple
// whose products are already determined.

#ifndef SGTOP_ENUMERATE_HPP_
#define SGTOP_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <vector>      // for vector

#include "finite_semigroup.hpp"  // for FiniteSemigroup

namespace sgtop {

  inline constexpr std::size_t max_enumeration_order = 4;

  struct EnumerateOptions {
    bool commutative_only = false;
    //! Keep one table per isomorphism class: the least one over relabelings.
    bool dedupe_iso = false;
    //! 0 picks the hardware concurrency.
    std::size_t threads = 0;
  };

  //! Labeled semigroups in lexicographic order of their tables. Throws
  //! SizeCapExceeded when n > 4 and BadParameter when n = 0.
  std::vector<FiniteSemigroup> enumerate_finite(std::size_t             n,
                                                EnumerateOptions const& options = {});

  //! The same tables without storing them, in the same order, on one thread.
  std::uint64_t for_each_finite(std::size_t                                   n,
                                bool                                          commutative_only,
                                std::function<void(FiniteSemigroup const&)> const& f);

  //! The lexicographically least table among the relabelings of `s`, with
  //! default labels. Throws SizeCapExceeded when size() > 4.
  FiniteSemigroup canonical_form(FiniteSemigroup const& s);

  //! Canonical forms of the isomorphism classes met, in order of first
  //! appearance.
  std::vector<FiniteSemigroup> dedupe_isomorphic(std::vector<FiniteSemigroup> const& xs);

  //! Frozen counts of labeled semigroups of order n (1 <= n <= 4).
  std::uint64_t frozen_labeled_count(std::size_t n, bool commutative_only);
  //! Frozen counts of isomorphism classes of order n (1 <= n <= 4).
  std::uint64_t frozen_class_count(std::size_t n, bool commutative_only);

}  // namespace sgtop

#endif  // SGTOP_ENUMERATE_HPP_
