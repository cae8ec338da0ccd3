#include "sgtop/types.hpp"

#include <utility>  // for move

namespace sgtop {

  namespace {
    std::string triple(Element x, Element y, Element z) {
      return "(" + std::to_string(x) + ", " + std::to_string(y) + ", "
             + std::to_string(z) + ")";
    }
  }  // namespace

  NonAssociative::NonAssociative(Element xx, Element yy, Element zz)
      : Error("non-associative triple " + triple(xx, yy, zz)),
        x(xx),
        y(yy),
        z(zz) {}

  NotIdempotent::NotIdempotent(Element x)
      : Error("element " + std::to_string(x) + " is not an idempotent"),
        element(x) {}

  NotInCliffordPart::NotInCliffordPart(Element x)
      : Error("element " + std::to_string(x)
              + " does not belong to the Clifford part"),
        element(x) {}

  ParseError::ParseError(std::size_t l, std::size_t c, std::string const& what)
      : Error("line " + std::to_string(l) + ", column " + std::to_string(c)
              + ": " + what),
        line(l),
        column(c) {}

  CertificationFailed::CertificationFailed(std::string c, std::string t)
      : Error("certification failed for " + c + " at " + t),
        claim(std::move(c)),
        tuple(std::move(t)) {}

}  // namespace sgtop
