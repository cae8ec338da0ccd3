//
// sgtop - structural invariants and topologies of semigroups
//
// Closedness verdicts from predicate suites.
//
// Two layers. The rule functions (classify_*) evaluate one algebraic
// characterisation as a three-valued conjunction. The condition network
// links the algebraic conditions with the topological ones they are known
// to imply or be implied by, propagates definite values along those
// implications, and records any contradiction as a violation.

#ifndef SGTOP_CLASSIFIER_HPP_
#define SGTOP_CLASSIFIER_HPP_

#include <map>     // for map
#include <string>  // for string
#include <vector>  // for vector

#include "predicates.hpp"  // for Verdict, PredicateSuite, Status
#include "semigroup.hpp"   // for View

namespace sgtop {

  struct TheoremVerdict {
    Verdict verdict;
    //! False when the rule's hypotheses (commutativity, unipotence) fail or
    //! are unknown; `verdict` is then whatever the condition network forces,
    //! often Unknown.
    bool applicable = true;
    //! The predicate conjunction, or the condition it was derived from.
    std::string rule;
    //! The first failing conjunct, when the verdict is Fails.
    std::string decisive;

    bool operator==(TheoremVerdict const&) const = default;
  };

  //! Three-valued conjunction: any Fails gives Fails, all Holds gives Holds,
  //! otherwise Unknown.
  Status conjunction(std::vector<Status> const& statuses);

  //! chain_finite & nonsingular & periodic & group_bounded; commutative only.
  TheoremVerdict classify_C_closed(PredicateSuite const& suite);
  //! bounded & nonsingular; commutative unipotent only.
  TheoremVerdict classify_unipotent_C_closed(PredicateSuite const& suite);
  //! chain_finite & group_bounded & clifford_plus_finite; commutative only.
  TheoremVerdict classify_ideally_projectively(PredicateSuite const& suite);
  //! Commutative: bounded & nonsingular & clifford_finite. Otherwise the
  //! value forced through the condition network by the suites (Fails from
  //! center evidence, Holds for finite X, Unknown otherwise).
  TheoremVerdict classify_injective_T1S(PredicateSuite const& suite,
                                        PredicateSuite const& center_suite = {});
  //! bounded & nonsingular & group_finite; commutative unipotent only.
  TheoremVerdict classify_unipotent_injective(PredicateSuite const& suite);
  //! Commutative: finite. Otherwise the value forced through the condition
  //! network: Fails when Z(X) is infinite, Holds for finite X.
  TheoremVerdict classify_absolute_T1S(PredicateSuite const& suite,
                                       PredicateSuite const& center_suite = {});
  //! chain_finite & group_finite & bounded & nonsingular & not
  //! clifford_singular; commutative only.
  TheoremVerdict classify_injective_T2S(PredicateSuite const& suite);

  //! Necessary conditions read off the center.
  struct CenterConditions {
    //! Z(X) chain-finite, periodic and nonsingular; Fails means X is not
    //! closed in the class of zero-dimensional Tychonoff semigroups.
    TheoremVerdict closed;
    //! Z(X) group-finite; Fails means X is neither injectively closed nor
    //! nontopologizable in that class.
    TheoremVerdict injective_or_discrete;
    //! Z(X) group-bounded; Fails means X is not ideally closed there.
    TheoremVerdict ideally;

    bool operator==(CenterConditions const&) const = default;
  };

  CenterConditions center_necessary_conditions(PredicateSuite const& center_suite);

  ////////////////////////////////////////////////////////////////////////
  // Condition network
  ////////////////////////////////////////////////////////////////////////

  //! Node names. "iT1.k" and "aT1.k" are the conditions of the injective and
  //! absolute characterisations; the remaining nodes are auxiliary.
  std::vector<std::string> const& condition_names();

  class ConditionNetwork {
   public:
    //! Builds the implications valid for every semigroup, plus the
    //! equivalences valid for commutative ones when `commutative`, plus the
    //! unipotent rules when also `unipotent`.
    ConditionNetwork(bool commutative, bool unipotent);

    //! Asserts a definite value and propagates it. A clash with an existing
    //! value is recorded as a violation and the existing value is kept.
    void set(std::string const& node, Status s, std::string const& reason);

    Status status(std::string const& node) const;
    std::map<std::string, Status> const& statuses() const noexcept {
      return _status;
    }
    std::vector<std::string> const& violations() const noexcept {
      return _violations;
    }
    //! Implications p => q with p Holds and q Fails.
    std::vector<std::string> check() const;

   private:
    void add(std::string const& p, std::string const& q);
    void equiv(std::string const& p, std::string const& q);

    std::map<std::string, Status>                           _status;
    std::vector<std::pair<std::string, std::string>>        _edges;
    std::vector<std::string>                                _violations;
  };

  struct ClassificationReport {
    std::string                           id;
    PredicateSuite                        suite;
    PredicateSuite                        center_suite;
    std::map<std::string, TheoremVerdict> theorems;
    CenterConditions                      center;
    std::map<std::string, Status>         conditions;
    std::vector<std::string>              violations;

    bool operator==(ClassificationReport const&) const = default;
  };

  //! Names used as keys of ClassificationReport::theorems.
  std::vector<std::string> const& theorem_names();

  //! Evaluates both suites, every rule and the condition network.
  ClassificationReport classify(std::string id, View const& v);

  //! Same, from precomputed suites.
  ClassificationReport classify(std::string           id,
                                PredicateSuite const& suite,
                                PredicateSuite const& center_suite);

}  // namespace sgtop

#endif  // SGTOP_CLASSIFIER_HPP_
