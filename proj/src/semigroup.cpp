#include "sgtop/semigroup.hpp"

#include <algorithm>  // for max
#include <utility>    // for move

namespace sgtop {

  Semigroup::Semigroup(FiniteSemigroup s, std::string name)
      : _finite(std::make_shared<FiniteSemigroup const>(std::move(s))),
        _stream(),
        _name(std::move(name)) {}

  Semigroup::Semigroup(StreamSemigroup s)
      : _finite(),
        _stream(std::make_shared<StreamSemigroup const>(std::move(s))),
        _name(_stream->name()) {}

  FiniteSemigroup const& Semigroup::finite() const {
    if (!_finite) {
      throw BadParameter(_name + " is not a finite semigroup");
    }
    return *_finite;
  }

  ElementList Semigroup::carrier(std::size_t count) const {
    ElementList out;
    if (_finite) {
      out.reserve(_finite->size());
      for (Element x = 0; x < _finite->size(); ++x) {
        out.push_back(x);
      }
      return out;
    }
    out.reserve(count);
    auto en = _stream->enumerate();
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(en.next());
    }
    return out;
  }

  std::string Semigroup::label(Element x) const {
    return _finite ? _finite->label(x) : _stream->decode(x);
  }

  DeclaredFacts const& Semigroup::facts() const noexcept {
    static DeclaredFacts const none;
    return _stream ? _stream->facts() : none;
  }

  std::optional<bool> Semigroup::fact(std::string_view key) const {
    auto const& f  = facts();
    auto        it = f.find(key);
    if (it == f.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool Semigroup::has_left_division() const noexcept {
    return _finite || _stream->has_left_division();
  }

  View::View(Semigroup s, Budget budget)
      : _s(std::move(s)),
        _member(),
        _carrier(_s.carrier(budget.elements)),
        _pool(),
        _exact(_s.is_finite()),
        _facts(_s.facts()),
        _budget(budget) {
    _pool = _exact ? _carrier
                   : _s.carrier(std::max(budget.elements, budget.steps));
  }

  View View::subsemigroup(View const&                  parent,
                          std::function<bool(Element)> member,
                          ElementList                  carrier,
                          ElementList                  pool,
                          bool                         exact,
                          DeclaredFacts                facts) {
    View v(parent);
    v._member  = [outer = parent._member, inner = std::move(member)](
                    Element x) { return (!outer || outer(x)) && inner(x); };
    v._carrier = std::move(carrier);
    v._pool    = std::move(pool);
    v._exact   = exact;
    v._facts   = std::move(facts);
    return v;
  }

  Element View::power(Element x, std::uint64_t n) const {
    // square-and-multiply; n >= 1
    Element result = x;
    Element base   = x;
    bool    first  = true;
    while (n > 0) {
      if (n & 1) {
        result = first ? base : product(result, base);
        first  = false;
      }
      n >>= 1;
      if (n > 0) {
        base = product(base, base);
      }
    }
    return result;
  }

  std::optional<bool> View::fact(std::string_view key) const {
    auto it = _facts.find(key);
    if (it == _facts.end()) {
      return std::nullopt;
    }
    return it->second;
  }

}  // namespace sgtop
