//
// sgtop - structural invariants and topologies of semigroups
//

#ifndef SGTOP_STREAM_SEMIGROUP_HPP_
#define SGTOP_STREAM_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <functional>   // for function
#include <map>          // for map
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "types.hpp"  // for Element, ElementList

namespace sgtop {

  //! Ground-truth predicate values supplied by a family builder. Keys are
  //! predicate names (see `known_fact_names`), optionally prefixed with
  //! "center." for facts about the center Z(X).
  using DeclaredFacts = std::map<std::string, bool, std::less<>>;

  //! The predicate names accepted as declared facts.
  std::vector<std::string> const& known_fact_names();

  //! Throws BadParameter if some key is not a known fact name.
  void validate_facts(DeclaredFacts const& facts);

  //! A bounded enumeration of { x : x·e = b }.
  struct DivisionResult {
    ElementList elements;
    //! True when `elements` is the whole set.
    bool complete = false;
  };

  using LeftDivisionOracle
      = std::function<DivisionResult(Element b, Element e, std::size_t limit)>;

  //! A countable semigroup given by an injective enumeration of element codes
  //! and a multiplication on codes.
  class StreamSemigroup {
   public:
    struct Spec {
      std::string                                name;
      std::function<Element(Element, Element)>   multiply;
      std::function<Element(std::uint64_t)>      element_at;
      std::function<std::string(Element)>        decode;
      LeftDivisionOracle                         left_division;
      DeclaredFacts                              facts;
    };

    //! Single-consumer cursor over the carrier.
    class Enumerator {
     public:
      explicit Enumerator(StreamSemigroup const& s) : _s(&s) {}
      Element next() {
        return _s->element_at(_index++);
      }
      std::uint64_t position() const noexcept {
        return _index;
      }

     private:
      StreamSemigroup const* _s;
      std::uint64_t          _index = 0;
    };

    //! Validates associativity on `sampled_triples` random triples drawn
    //! from the first 512 elements and injectivity of the first 1024 codes.
    explicit StreamSemigroup(Spec          spec,
                             std::size_t   sampled_triples = 10000,
                             std::uint64_t seed            = 0);

    std::string const& name() const noexcept {
      return _spec.name;
    }
    Element product(Element x, Element y) const {
      return _spec.multiply(x, y);
    }
    Element element_at(std::uint64_t i) const {
      return _spec.element_at(i);
    }
    Enumerator enumerate() const {
      return Enumerator(*this);
    }
    std::string decode(Element x) const {
      return _spec.decode ? _spec.decode(x) : std::to_string(x);
    }
    bool has_left_division() const noexcept {
      return static_cast<bool>(_spec.left_division);
    }
    DivisionResult left_division(Element b, Element e, std::size_t limit) const;

    DeclaredFacts const& facts() const noexcept {
      return _spec.facts;
    }
    Spec const& spec() const noexcept {
      return _spec;
    }

   private:
    Spec _spec;
  };

}  // namespace sgtop

#endif  // SGTOP_STREAM_SEMIGROUP_HPP_
