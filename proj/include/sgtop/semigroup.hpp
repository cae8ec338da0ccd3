//
// sgtop - structural invariants and topologies of semigroups
//
// Semigroup is a cheap-to-copy handle over either a FiniteSemigroup or a
// StreamSemigroup. View fixes a budget and the inspected part of the carrier,
// and is what the bounded algorithms operate on.

#ifndef SGTOP_SEMIGROUP_HPP_
#define SGTOP_SEMIGROUP_HPP_

#include <functional>   // for function
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "finite_semigroup.hpp"  // for FiniteSemigroup
#include "stream_semigroup.hpp"  // for StreamSemigroup, DeclaredFacts
#include "types.hpp"             // for Element, Budget

namespace sgtop {

  class Semigroup {
   public:
    Semigroup(FiniteSemigroup s, std::string name = "finite");
    Semigroup(StreamSemigroup s);  // NOLINT(runtime/explicit)

    bool is_finite() const noexcept {
      return _finite != nullptr;
    }

    //! Throws BadParameter when the handle holds a stream.
    FiniteSemigroup const& finite() const;
    //! nullptr when the handle holds a finite semigroup.
    StreamSemigroup const* stream() const noexcept {
      return _stream.get();
    }

    Element product(Element x, Element y) const {
      return _finite ? _finite->product(x, y) : _stream->product(x, y);
    }

    //! All elements of a finite semigroup, or the first `count` codes of a
    //! stream.
    ElementList carrier(std::size_t count) const;

    std::string label(Element x) const;
    std::string const& name() const noexcept {
      return _name;
    }
    DeclaredFacts const& facts() const noexcept;
    std::optional<bool> fact(std::string_view key) const;

    bool has_left_division() const noexcept;

   private:
    std::shared_ptr<FiniteSemigroup const> _finite;
    std::shared_ptr<StreamSemigroup const> _stream;
    std::string                            _name;
  };

  //! The part of a semigroup (or of a subsemigroup of it) that bounded
  //! algorithms inspect.
  class View {
   public:
    //! The whole semigroup at the given budget. For a finite semigroup the
    //! carrier is exact and the budget is irrelevant.
    View(Semigroup s, Budget budget = {});

    //! A subsemigroup of `parent` with membership predicate `member`.
    //! `carrier` and `pool` must consist of members.
    static View subsemigroup(View const&                  parent,
                             std::function<bool(Element)> member,
                             ElementList                  carrier,
                             ElementList                  pool,
                             bool                         exact,
                             DeclaredFacts                facts);

    Semigroup const& semigroup() const noexcept {
      return _s;
    }
    Element product(Element x, Element y) const {
      return _s.product(x, y);
    }
    Element power(Element x, std::uint64_t n) const;

    //! Inspected elements; the whole carrier when `exact()`.
    ElementList const& carrier() const noexcept {
      return _carrier;
    }
    //! Elements scanned when searching for factors and witnesses.
    ElementList const& pool() const noexcept {
      return _pool;
    }
    bool exact() const noexcept {
      return _exact;
    }
    bool is_member(Element x) const {
      return !_member || _member(x);
    }
    bool is_whole() const noexcept {
      return !_member;
    }
    DeclaredFacts const& facts() const noexcept {
      return _facts;
    }
    std::optional<bool> fact(std::string_view key) const;
    Budget const& budget() const noexcept {
      return _budget;
    }

   private:
    Semigroup                    _s;
    std::function<bool(Element)> _member;
    ElementList                  _carrier;
    ElementList                  _pool;
    bool                         _exact = false;
    DeclaredFacts                _facts;
    Budget                       _budget;
  };

}  // namespace sgtop

#endif  // SGTOP_SEMIGROUP_HPP_
