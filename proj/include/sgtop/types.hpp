//
// sgtop - structural invariants and topologies of semigroups
//
// Basic vocabulary shared by every module: element codes, search budgets,
// three-valued membership and the exception hierarchy.

#ifndef SGTOP_TYPES_HPP_
#define SGTOP_TYPES_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace sgtop {

  //! Canonical integer code of an element. Finite semigroups use the dense
  //! range [0, size); stream families define their own injective encoding.
  using Element = std::uint64_t;

  using ElementList = std::vector<Element>;

  //! Limits for every bounded search.
  //!
  //! `elements` is the length of the inspected carrier prefix and also the
  //! size at which a growing witness counts as evidence of an infinite set.
  //! `steps` bounds exponents in power orbits and the pool scanned when
  //! searching for witnesses (inverses, factors, witness growth).
  struct Budget {
    std::size_t elements = 256;
    std::size_t steps    = 4096;

    bool operator==(Budget const&) const = default;
  };

  //! Three-valued membership answer.
  enum class Tri { no, yes, unknown };

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  class NonAssociative : public Error {
   public:
    NonAssociative(Element x, Element y, Element z);
    Element x, y, z;
  };

  class BudgetExhausted : public Error {
   public:
    using Error::Error;
  };

  class NotIdempotent : public Error {
   public:
    explicit NotIdempotent(Element x);
    Element element;
  };

  class NotInCliffordPart : public Error {
   public:
    explicit NotInCliffordPart(Element x);
    Element element;
  };

  class NoDivisionOracle : public Error {
   public:
    using Error::Error;
  };

  class BadParameter : public Error {
   public:
    using Error::Error;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class IllDefined : public Error {
   public:
    using Error::Error;
  };

  //! A precondition on the input element fails, e.g. b = be for a
  //! regularity query.
  class Inapplicable : public Error {
   public:
    using Error::Error;
  };

  //! A search found nothing at the bound.
  class NotFound : public Error {
   public:
    using Error::Error;
  };

  class SizeCapExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);
    std::size_t line, column;
  };

  class SchemaMismatch : public Error {
   public:
    using Error::Error;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

  //! A declared fact contradicts a replayable search witness.
  class CorpusIntegrityError : public Error {
   public:
    using Error::Error;
  };

  //! A topological claim guaranteed by the theory could not be certified.
  //! Always indicates a defect in an oracle or in this library.
  class CertificationFailed : public Error {
   public:
    CertificationFailed(std::string claim, std::string tuple);
    std::string claim, tuple;
  };

  //! An internal structural invariant (lemma-level) was violated.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace sgtop

#endif  // SGTOP_TYPES_HPP_
