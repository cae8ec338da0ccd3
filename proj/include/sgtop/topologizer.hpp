//
// sgtop - structural invariants and topologies of semigroups
//
// Shifts of subsets, e-bases and the semigroup topologies they generate.
//
// Fix a central idempotent e. For b in X and U ⊆ X the e-to-b shift is
//
//   Λ(b; U) = {b} ∪ (b/e)·U,   b/e = {x : xe = b}.
//
// An e-base is a directed family of subsemigroups of Z(X) ∩ e/e; the sets
// Λ(x; U) with U in the family form a neighbourhood base at x of a T0
// semigroup topology. All sets here are lazy: exact membership plus a bounded
// enumeration. Claims about infinite sets are checked on those enumerations
// only, and every record says whether its evidence was exhaustive.

#ifndef SGTOP_TOPOLOGIZER_HPP_
#define SGTOP_TOPOLOGIZER_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <memory>      // for shared_ptr
#include <optional>    // for optional
#include <string>      // for string
#include <string_view> // for string_view
#include <utility>     // for pair
#include <vector>      // for vector

#include "predicates.hpp"  // for Verdict
#include "semigroup.hpp"   // for View
#include "types.hpp"       // for Element, Tri

namespace sgtop {

  //! A possibly infinite set: exact membership plus a bounded enumeration.
  struct LazySet {
    std::function<bool(Element)> member;
    ElementList                  elements;
    //! True when `elements` is the whole set.
    bool complete = false;

    bool contains(Element x) const {
      return member(x);
    }

    //! The finite set `xs`, complete.
    static LazySet of(ElementList xs);
  };

  //! b/e = {x : xe = b}.
  struct LeftQuotientSet {
    Element     b = 0, e = 0;
    ElementList elements;
    bool        complete = false;
  };

  //! Exact on finite semigroups; on streams uses the division oracle, or a
  //! scan of the pool when there is none. Throws NotIdempotent.
  LeftQuotientSet left_quotient(View const& v, Element b, Element e);

  //! Λ(b; U), evaluated lazily.
  class ShiftNeighborhood {
   public:
    //! x = b, or x = y·u with y in b/e and u in U.
    struct Point {
      Element x;
      Element y;
      Element u;
      bool    base;

      bool operator==(Point const&) const = default;
    };

    //! `inside_ee` asserts U ⊆ e/e, which makes xe != be a proof that x is
    //! outside. Throws NotIdempotent.
    ShiftNeighborhood(View const& v,
                      Element     e,
                      Element     b,
                      LazySet     generators,
                      bool        inside_ee = false);

    Element e() const noexcept {
      return _e;
    }
    Element b() const noexcept {
      return _b;
    }
    LazySet const& generators() const noexcept {
      return _u;
    }
    LeftQuotientSet const& quotient() const noexcept {
      return _q;
    }
    //! True when the enumerations of b/e and U are complete.
    bool exact() const noexcept {
      return _q.complete && _u.complete;
    }

    //! Yes with a decomposition found, No when provably outside, Unknown
    //! when nothing was found on incomplete enumerations.
    Tri contains(Element x) const;

    //! b first, then the distinct products y·u of the enumerations, at most
    //! `limit` points.
    std::vector<Point> enumerate(std::size_t limit) const;

   private:
    Semigroup       _s;
    Element         _e, _b;
    LazySet         _u;
    LeftQuotientSet _q;
    bool            _inside_ee;
    std::size_t     _scan;
  };

  ////////////////////////////////////////////////////////////////////////
  // e-bases
  ////////////////////////////////////////////////////////////////////////

  enum class EBaseKind { E, H, Z, custom };

  std::string_view to_string(EBaseKind k);
  //! "E", "H", "Z"; throws BadParameter otherwise.
  EBaseKind ebase_kind_from_string(std::string_view s);

  struct EBaseParameter {
    //! Sorted, without repeats.
    ElementList   F;
    std::uint64_t n = 1;
    //! Member index of a custom family.
    std::size_t index = 0;

    bool operator==(EBaseParameter const&) const = default;
  };

  //! e/e ∩ E(X) ∩ Z(X) minus ↑F, for F ⊆ EZ(X) \ ↓e.
  LazySet ebase_E(View const& v, Element e, ElementList const& F);
  //! e/e ∩ H(X) ∩ Z(X) minus π⁻¹[↑F], for F ⊆ EZ(X) \ ↓e.
  LazySet ebase_H(View const& v, Element e, ElementList const& F);
  //! { z^n : z in e/e ∩ Z(X) ∩ π⁻¹[EZ(X) \ ↑F] }, for F ⊆ E(X) \ ↓e and
  //! n >= 1.
  LazySet ebase_Z(View const& v, Element e, std::uint64_t n, ElementList const& F);

  class EBaseFamily {
   public:
    //! A built-in family. Throws BadParameter unless e is a central
    //! idempotent and `kind` is not custom.
    EBaseFamily(View v, Element e, EBaseKind kind);
    //! Explicit members, indexed by EBaseParameter::index. Throws
    //! BadParameter unless e is a central idempotent and `members` is
    //! nonempty.
    EBaseFamily(View v, Element e, std::vector<LazySet> members);

    View const& view() const noexcept {
      return *_v;
    }
    Element e() const noexcept {
      return _e;
    }
    EBaseKind kind() const noexcept {
      return _kind;
    }
    std::size_t custom_size() const noexcept {
      return _custom.size();
    }

    //! Throws BadParameter when F leaves the parameter domain, n = 0 or the
    //! custom index is out of range.
    LazySet member(EBaseParameter const& p) const;

    //! Parameters of a member inside both: F₁ ∪ F₂ and n₁·n₂ for the
    //! built-in kinds; for custom families the first member contained in
    //! both on their enumerations.
    std::optional<EBaseParameter> meet(EBaseParameter const& a,
                                       EBaseParameter const& b) const;

    //! Carrier idempotents allowed in F: EZ(X) \ ↓e for E and H, E(X) \ ↓e
    //! for Z; empty for custom families.
    ElementList const& admissible() const noexcept {
      return _admissible;
    }

    //! The smallest member when the carrier is exact and the kind is
    //! built-in.
    std::optional<EBaseParameter> least() const;

   private:
    std::shared_ptr<View const> _v;
    Element                     _e;
    EBaseKind                   _kind;
    std::vector<LazySet>        _custom;
    ElementList                 _admissible;
  };

  ////////////////////////////////////////////////////////////////////////
  // Remote bases
  ////////////////////////////////////////////////////////////////////////

  //! Φ_x for every x, as finitely many members.
  using RemoteBase = std::function<std::vector<LazySet>(Element)>;

  //! x ↦ members for every x.
  RemoteBase constant_base(std::vector<LazySet> members);

  struct RemoteBaseViolation {
    //! 1: members not directed or not inside e/e; 2: no compatible U, V.
    int                      condition = 1;
    Element                  x = 0, y = 0;
    std::vector<std::size_t> members;
    std::optional<Element>   element;
    std::string              detail;
  };

  struct RemoteBaseReport {
    std::size_t                      checked_directed    = 0;
    std::size_t                      checked_translation = 0;
    std::vector<RemoteBaseViolation> violations;

    bool valid() const noexcept {
      return violations.empty();
    }
  };

  //! Checks both conditions at the sampled points, with pairs (x, y) drawn
  //! from `points` and enumerations cut at `enumeration` elements.
  RemoteBaseReport validate_remote_base(View const&        v,
                                        Element            e,
                                        RemoteBase const&  phi,
                                        ElementList const& points,
                                        std::size_t        enumeration = 16);

  ////////////////////////////////////////////////////////////////////////
  // Regularity
  ////////////////////////////////////////////////////////////////////////

  //! Searches for a member V with b outside (be/e)·V. The witness has kind
  //! "regular", F in `elements`, n in `value` (the index for custom
  //! families) and, for Fails, the offending (y, v) in `partners`.
  //! Throws Inapplicable when b = be.
  Verdict is_regular(EBaseFamily const& base, Element b);

  enum class RegularityMode { E, H, Z };

  struct RegularityReport {
    RegularityMode           mode = RegularityMode::E;
    std::vector<std::string> confirmed;
    std::vector<std::string> unconfirmed;
    //! (b, F) pairs for which a suitable member was found.
    std::size_t checked = 0;
    //! (b, F) pairs for which none was.
    std::vector<std::pair<Element, EBaseParameter>> failures;

    bool hypotheses_confirmed() const noexcept {
      return unconfirmed.empty() && failures.empty();
    }
  };

  //! Checks the hypotheses of the two sufficient conditions for regularity
  //! at the sampled points: well-foundedness evidence plus, for each b and
  //! sampled F (and n), a member inside H_Z(X) \ π⁻¹[↑F] (mode E or H) or
  //! inside { z^m : z in Z(X) ∩ e/e \ π⁻¹[↑F], m >= n } (mode Z).
  RegularityReport sufficient_regularity(EBaseFamily const& base,
                                         RegularityMode     mode,
                                         ElementList const& points,
                                         std::uint64_t      seed = 0);

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  struct CertifyOptions {
    std::size_t   ground      = 64;
    std::size_t   pairs       = 100;
    std::size_t   triples     = 100;
    std::size_t   enumeration = 16;
    std::uint64_t seed        = 0;
  };

  //! Λ(center; U) contains exactly one of x, y.
  struct SeparationRecord {
    Element        x, y, center;
    EBaseParameter parameter;
    bool           exact;
  };

  //! Λ(a; U)·Λ(b; V) ⊆ Λ(ab; W) on the enumerations.
  struct ContinuityRecord {
    Element        a, b;
    EBaseParameter w, u, v;
    std::size_t    products;
  };

  struct RegularityRecord {
    Element b;
    Verdict verdict;
  };

  //! Λ(outside; separating) misses Λ(center; parameter).
  struct ClopenRecord {
    Element        center;
    EBaseParameter parameter;
    Element        outside;
    EBaseParameter separating;
    bool           exact;
  };

  struct IsolationRecord {
    Element x;
    bool    isolated;
    bool    exact;
    //! For non-isolated points: the fewest carrier points other than x
    //! found in any sampled basic neighbourhood.
    std::size_t neighbours = 0;
  };

  //! The points of Λ(x; e/e) \ {x} found, all isolated.
  struct DiscretenessRecord {
    Element     x;
    std::size_t checked;
  };

  struct TopologyCertificate {
    Element                         e = 0;
    EBaseKind                       kind = EBaseKind::E;
    ElementList                     ground;
    std::vector<SeparationRecord>   separations;
    std::vector<ContinuityRecord>   continuity;
    std::vector<RegularityRecord>   regularity;
    std::vector<ClopenRecord>       clopen;
    std::vector<IsolationRecord>    isolation;
    std::vector<DiscretenessRecord> discreteness;
  };

  //! Samples the claims of the generated topology. Throws
  //! CertificationFailed when a guaranteed claim has a definite
  //! counterexample.
  TopologyCertificate certify_topology(EBaseFamily const&    base,
                                       CertifyOptions const& options = {});

  //! Re-checks every record against raw products and membership; returns
  //! descriptions of the records that do not replay.
  std::vector<std::string> replay_certificate(EBaseFamily const&         base,
                                              TopologyCertificate const& c);

  ////////////////////////////////////////////////////////////////////////
  // Topologizability
  ////////////////////////////////////////////////////////////////////////

  struct NonIsolatedIdempotent {
    Element e;
    //! Idempotents e' in EZ(X) with ↑e' ∩ EZ(X) infinite at the bound.
    ElementList candidates;
    //! For each sampled F, the points of EZ(X) \ {e} found in the E-member.
    std::vector<std::pair<EBaseParameter, std::size_t>> evidence;
  };

  //! e in EZ(X) with ↑e ∩ EZ(X) infinite and maximal with that property,
  //! least code first. ↑e ∩ EZ(X) counts as infinite when at least half
  //! the carrier belongs to it. Throws NotFound.
  NonIsolatedIdempotent find_nonisolated_idempotent(View const&   v,
                                                    std::uint64_t seed = 0);

  struct Topologizability {
    //! Holds with witness kind "topology" (e in `elements`), or Unknown.
    Verdict                 verdict;
    std::optional<Element>  e;
    EBaseKind               kind = EBaseKind::E;
    std::string             note;
  };

  //! Holds when EZ(X) is chain-finite and infinite; never Fails.
  Topologizability topologizability_verdict(View const& v);

}  // namespace sgtop

#endif  // SGTOP_TOPOLOGIZER_HPP_
