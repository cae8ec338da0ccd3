//
// sgtop - structural invariants and topologies of semigroups
//
// Structural predicates as three-valued verdicts. On exact views every
// predicate is decided. On streams a bounded search looks for a witness of
// the infinite side (a long chain, a large singular set, ...); when the search
// is inconclusive the declared fact of the family, if any, decides. A
// declared fact that contradicts a definite search result raises
// CorpusIntegrityError.

#ifndef SGTOP_PREDICATES_HPP_
#define SGTOP_PREDICATES_HPP_

#include <cstdint>      // for uint64_t
#include <map>          // for map
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "semigroup.hpp"  // for View, Semigroup
#include "types.hpp"      // for Element, Budget

namespace sgtop {

  enum class Status { holds, fails, unknown };
  enum class Source { search, declared_fact, finite_exhaustion };

  std::string_view to_string(Status s);
  std::string_view to_string(Source s);
  Status           status_from_string(std::string_view s);
  Source           source_from_string(std::string_view s);

  //! Evidence attached to a definite verdict.
  //!
  //! kind         elements                  partners        value
  //! finite       longest idempotent chain  -               size
  //! exponent     -                         -               exponent
  //! chain        the chain                 -               -
  //! singular     the set A                 -               the product
  //! pair         x, y with xy != yx        -               -
  //! idempotents  two distinct idempotents  -               -
  //! group        members of H_e            their inverses  e
  //! clifford     members of H(X)           e, inverse      -
  //! residue      elements outside H(X)     -               -
  //! nilpotent    A outside H(X), AA in H   -               -
  //! enumerated   -                         -               distinct codes
  //! declared     -                         -               fact (0 or 1)
  struct Witness {
    std::string   kind;
    ElementList   elements;
    ElementList   partners;
    std::uint64_t value = 0;

    bool operator==(Witness const&) const = default;
  };

  struct Verdict {
    Status                 status = Status::unknown;
    Source                 source = Source::search;
    std::optional<Witness> witness;
    Budget                 bound;

    bool operator==(Verdict const&) const = default;
  };

  using PredicateSuite = std::map<std::string, Verdict, std::less<>>;

  //! Every predicate evaluated by `evaluate`, in suite order.
  std::vector<std::string> const& predicate_names();

  //! The bounded search alone; never consults declared facts.
  Verdict search(std::string_view name, View const& v);

  //! The search, falling back on the declared fact when it is inconclusive.
  Verdict evaluate(std::string_view name, View const& v);

  //! All predicates of `predicate_names`.
  PredicateSuite evaluate_suite(View const& v);

  Verdict chain_finite(View const& v);
  Verdict periodic(View const& v);
  Verdict bounded(View const& v);
  Verdict group_finite(View const& v);
  Verdict group_bounded(View const& v);
  Verdict nonsingular(View const& v);
  Verdict clifford(View const& v);
  Verdict clifford_finite(View const& v);
  Verdict clifford_plus_finite(View const& v);
  Verdict clifford_singular(View const& v);
  Verdict eventually_clifford(View const& v);
  Verdict unipotent(View const& v);
  Verdict commutative(View const& v);
  Verdict finite(View const& v);
  //! EZ(X) contains no infinite chain.
  Verdict ez_chain_finite(View const& v);
  //! EZ(X) is infinite; on streams Holds once `budget().elements` central
  //! idempotents are found in the pool.
  Verdict ez_infinite(View const& v);
  Verdict e_well_founded(View const& v);
  Verdict ez_well_founded(View const& v);

  //! Re-verifies the witness of a definite verdict from raw products.
  //! Unknown verdicts replay trivially.
  bool replay(View const& v, std::string_view name, Verdict const& verdict);

  //! Pairs of predicates (p, q) with p => q that `suite` violates among
  //! definite verdicts.
  std::vector<std::string> closure_violations(PredicateSuite const& suite);

  //! The declared facts of `s` whose negative side must be reproducible by
  //! search at `budget`; returns the names that were not reproduced.
  std::vector<std::string> spot_check_declared(Semigroup const& s,
                                               Budget           budget = {});

}  // namespace sgtop

#endif  // SGTOP_PREDICATES_HPP_
